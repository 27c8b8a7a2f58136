#pragma once

#include <string_view>

#include "graph.hpp"
#include "numbers.hpp"

namespace qspectra {

// Graph expression language used by the CLI:
//   expr   := INT '*' expr | 'union' '(' expr ',' expr ')'
//           | 'join' '(' expr ',' expr ')' | atom
//   atom   := 'K' '(' ints ')' | 'P' | 'C' | 'S' | 'E' '(' INT ')'
//           | 'Gn' '(' INT ')' | 'Gs' '(' INT ')' '[' ints ']'
//           | 'Kminus' '(' INT ')' | 'proof' '(' NAME ')' | 'g6:' TOKEN
// Whitespace-insensitive. Syntax errors carry the byte offset and the
// expected-token set; size/arity violations carry the path to the offending
// node.
Graph parse_graph_expr(std::string_view text);

// Interval endpoint for `count`: an integer, a rational "p/q", or one of the
// symbols d1..dn (k-th largest degree), dn (minimum degree), dmax, 2n-2,
// resolved against the degree sequence of g.
Rat parse_bound(std::string_view text, const Graph& g);

}  // namespace qspectra
