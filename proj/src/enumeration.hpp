#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "graph.hpp"

namespace qspectra {

inline constexpr int kMaxEnumerationOrder = 9;

enum class GraphFilter { All, Connected, Disconnected };

// Standard graph6, single-byte size form (n <= 62): size byte n+63, then the
// upper triangle in column-major order packed 6 bits per byte, each +63.
std::string graph6_encode(const Graph& g);
Graph graph6_decode(std::string_view text);  // parse errors carry the byte offset

// One canonical graph6 string per isomorphism class of order n, sorted
// ascending. Built by extending every (n-1)-vertex representative with one
// vertex over all neighbor bitmasks and keeping the canonical representative
// of each class. Cached for the life of the process; thread-safe.
const std::vector<std::string>& canonical_level(int n);

class GraphStream {
 public:
  GraphStream(int n, GraphFilter filter);
  std::optional<Graph> next();
  int order() const { return n_; }

 private:
  int n_;
  GraphFilter filter_;
  const std::vector<std::string>* level_;
  size_t pos_ = 0;
};

GraphStream enumerate_graphs(int n, GraphFilter filter = GraphFilter::All);
std::vector<Graph> all_graphs(int n, GraphFilter filter = GraphFilter::All);

}  // namespace qspectra
