#include "expr.hpp"

#include <cctype>
#include <string>
#include <vector>

#include "enumeration.hpp"
#include "families.hpp"

namespace qspectra {

namespace {

struct Parser {
  std::string_view src;
  size_t pos = 0;
  std::vector<std::string> path;  // breadcrumb for semantic errors

  [[noreturn]] void syntax_error(const std::string& expected) {
    fail(ErrorCode::Parse, "syntax error at byte " + std::to_string(pos) + ": expected " +
                               expected);
  }

  [[noreturn]] void semantic_error(const std::string& what) {
    std::string at;
    for (const auto& seg : path) at += (at.empty() ? "" : ".") + seg;
    fail(ErrorCode::InvalidParameter, "at " + (at.empty() ? "expr" : at) + ": " + what);
  }

  void skip_ws() {
    while (pos < src.size() && std::isspace((unsigned char)src[pos])) ++pos;
  }

  bool peek_is(char c) {
    skip_ws();
    return pos < src.size() && src[pos] == c;
  }

  void expect(char c) {
    skip_ws();
    if (pos >= src.size() || src[pos] != c) syntax_error(std::string("'") + c + "'");
    ++pos;
  }

  bool at_digit() {
    skip_ws();
    return pos < src.size() && std::isdigit((unsigned char)src[pos]);
  }

  long parse_int() {
    skip_ws();
    if (!at_digit()) syntax_error("an integer");
    long v = 0;
    while (pos < src.size() && std::isdigit((unsigned char)src[pos])) {
      v = v * 10 + (src[pos] - '0');
      if (v > 1000000) semantic_error("integer too large");
      ++pos;
    }
    return v;
  }

  std::string parse_name() {
    skip_ws();
    size_t start = pos;
    while (pos < src.size() &&
           (std::isalnum((unsigned char)src[pos]) || src[pos] == '-' || src[pos] == '_'))
      ++pos;
    if (pos == start) syntax_error("a name");
    return std::string(src.substr(start, pos - start));
  }

  std::vector<int> parse_int_list(char close) {
    std::vector<int> out;
    out.push_back((int)parse_int());
    while (peek_is(',')) {
      ++pos;
      out.push_back((int)parse_int());
    }
    expect(close);
    return out;
  }

  Graph parse_expr() {
    if (at_digit()) {  // k * expr
      size_t mark = pos;
      long k = parse_int();
      skip_ws();
      if (pos >= src.size() || src[pos] != '*') {
        pos = mark;
        syntax_error("'*' after a copy count");
      }
      ++pos;
      path.push_back(std::to_string(k) + "*");
      if (k < 1) semantic_error("copy count must be >= 1");
      Graph part = parse_expr();
      if ((long)part.order() * k > kMaxOrder) semantic_error("total order exceeds 64");
      Graph out = part;
      for (long i = 1; i < k; ++i) out = disjoint_union(out, part);
      path.pop_back();
      return out;
    }

    skip_ws();
    size_t word_start = pos;
    std::string word;
    while (pos < src.size() && std::isalnum((unsigned char)src[pos])) word += src[pos++];
    if (word.empty())
      syntax_error("a family name, 'union', 'join', 'g6:', or an integer copy count");

    auto guarded = [&](const char* tag, auto&& make) -> Graph {
      path.push_back(tag);
      Graph g = make();
      path.pop_back();
      return g;
    };

    try {
      if (word == "union" || word == "join") {
        expect('(');
        path.push_back(word);
        Graph a = parse_expr();
        expect(',');
        Graph b = parse_expr();
        expect(')');
        if (a.order() + b.order() > kMaxOrder) semantic_error("total order exceeds 64");
        path.pop_back();
        return word == "union" ? disjoint_union(a, b) : join_graphs(a, b);
      }
      if (word == "g6") {
        expect(':');
        skip_ws();
        size_t start = pos;
        while (pos < src.size() && (unsigned char)src[pos] >= 63 && (unsigned char)src[pos] <= 126)
          ++pos;
        if (pos == start) syntax_error("a graph6 token after 'g6:'");
        return graph6_decode(src.substr(start, pos - start));
      }
      if (word == "K") {
        expect('(');
        std::vector<int> sizes = parse_int_list(')');
        if (sizes.size() == 1) return guarded("K", [&] { return complete(sizes[0]); });
        return guarded("K", [&] { return complete_multipartite(sizes); });
      }
      if (word == "P" || word == "C" || word == "S" || word == "E") {
        expect('(');
        long n = parse_int();
        expect(')');
        return guarded(word.c_str(), [&]() -> Graph {
          if (word == "P") return path_family(n);
          if (word == "C") return cycle((int)n);
          if (word == "S") return star((int)n);
          return edgeless((int)n);
        });
      }
      if (word == "Gn") {
        expect('(');
        long n = parse_int();
        expect(')');
        return guarded("Gn", [&] { return build_gn((int)n); });
      }
      if (word == "Gs") {
        expect('(');
        long s = parse_int();
        expect(')');
        expect('[');
        std::vector<int> t = parse_int_list(']');
        return guarded("Gs", [&] { return gs_replacement((int)s, t); });
      }
      if (word == "Kminus") {
        expect('(');
        long n = parse_int();
        expect(')');
        return guarded("Kminus", [&]() -> Graph {
          if (n < 2) semantic_error("Kminus requires n >= 2");
          return delete_edge(complete((int)n), 0, 1);
        });
      }
      if (word == "proof") {
        expect('(');
        std::string name = parse_name();
        expect(')');
        return guarded("proof", [&] { return proof_graph(name); });
      }
    } catch (const Error& e) {
      std::string msg = e.what();
      bool annotated = msg.rfind("at ", 0) == 0;
      if (!annotated &&
          (e.code() == ErrorCode::InvalidParameter || e.code() == ErrorCode::Construction)) {
        std::string at;
        for (const auto& seg : path) at += (at.empty() ? "" : ".") + seg;
        fail(e.code(), "at " + (at.empty() ? word : at + "." + word) + ": " + msg);
      }
      throw;
    }

    pos = word_start;
    syntax_error("one of K, P, C, S, E, Gn, Gs, Kminus, proof, g6:, union, join");
  }

  // path() collides with the member name tracker
  Graph path_family(long n) { return qspectra::path((int)n); }

  Graph run() {
    Graph g = parse_expr();
    skip_ws();
    if (pos != src.size()) syntax_error("end of input");
    return g;
  }
};

}  // namespace

Graph parse_graph_expr(std::string_view text) {
  Parser p{text, 0, {}};
  return p.run();
}

Rat parse_bound(std::string_view text, const Graph& g) {
  std::string s;
  for (char c : text)
    if (!std::isspace((unsigned char)c)) s += c;
  if (s.empty()) fail(ErrorCode::InvalidParameter, "empty interval endpoint");

  const int n = g.order();
  if (s == "2n-2") return Rat(2 * n - 2);
  if (s == "dn") return Rat(degree_k(g, n));
  if (s == "dmax") return Rat(degree_k(g, 1));
  if (s[0] == 'd' && s.size() > 1 && std::isdigit((unsigned char)s[1])) {
    int k = 0;
    for (size_t i = 1; i < s.size(); ++i) {
      if (!std::isdigit((unsigned char)s[i]))
        fail(ErrorCode::InvalidParameter, "bad degree symbol: " + s);
      k = k * 10 + (s[i] - '0');
    }
    return Rat(degree_k(g, k));
  }
  // integer or rational p/q, optionally negative
  try {
    size_t slash = s.find('/');
    if (slash == std::string::npos) return Rat(Int(s));
    Int num(s.substr(0, slash));
    Int den(s.substr(slash + 1));
    if (den == 0) fail(ErrorCode::InvalidParameter, "zero denominator");
    return Rat(num, den);
  } catch (const Error&) {
    throw;
  } catch (...) {
    fail(ErrorCode::InvalidParameter, "bad interval endpoint: " + s);
  }
}

}  // namespace qspectra
