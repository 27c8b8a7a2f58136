#include "enumeration.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <set>

namespace qspectra {

std::string graph6_encode(const Graph& g) {
  const int n = g.order();
  if (n > 62) fail(ErrorCode::InvalidParameter, "graph6 single-byte form requires n <= 62");
  std::string out;
  out.push_back(char(n + 63));
  int bit = 5;
  unsigned cur = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) {
      if (g.has_edge(i, j)) cur |= 1u << bit;
      if (--bit < 0) {
        out.push_back(char(cur + 63));
        cur = 0;
        bit = 5;
      }
    }
  if (bit != 5) out.push_back(char(cur + 63));
  return out;
}

namespace {

[[noreturn]] void parse_fail(size_t offset, const std::string& what) {
  fail(ErrorCode::Parse, "graph6: " + what + " at byte " + std::to_string(offset));
}

}  // namespace

Graph graph6_decode(std::string_view text) {
  if (text.empty()) parse_fail(0, "empty input");
  for (size_t i = 0; i < text.size(); ++i) {
    unsigned char c = text[i];
    if (c < 63 || c > 126) parse_fail(i, "character outside 63..126");
  }
  unsigned char size = text[0];
  if (size == 126) parse_fail(0, "multi-byte size form not supported");
  int n = size - 63;
  if (n < 1 || n > 62) parse_fail(0, "order out of 1..62");
  int bits = n * (n - 1) / 2;
  size_t want = 1 + (bits + 5) / 6;
  if (text.size() < want) parse_fail(text.size(), "input truncated");
  if (text.size() > want) parse_fail(want, "trailing bytes");

  Graph g(n);
  size_t pos = 1;
  int bit = 5;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) {
      if (((unsigned char)text[pos] - 63) >> bit & 1) g.add_edge(i, j);
      if (--bit < 0) {
        bit = 5;
        ++pos;
      }
    }
  if (bit != 5) {  // padding bits must be zero
    unsigned rem = ((unsigned char)text[pos] - 63) & ((1u << (bit + 1)) - 1);
    if (rem != 0) parse_fail(pos, "nonzero padding bits");
  }
  return g;
}

namespace {

Graph extend(const Graph& parent, uint64_t neighbors) {
  const int n = parent.order() + 1;
  Graph g(n);
  for (int i = 0; i < parent.order(); ++i)
    for (int j = i + 1; j < parent.order(); ++j)
      if (parent.has_edge(i, j)) g.add_edge(i, j);
  for (uint64_t m = neighbors; m;) {
    int v = std::countr_zero(m);
    m &= m - 1;
    g.add_edge(v, n - 1);
  }
  return g;
}

std::mutex level_mutex;
std::map<int, std::unique_ptr<std::vector<std::string>>> level_cache;

const std::vector<std::string>& level_locked(int n) {
  auto it = level_cache.find(n);
  if (it != level_cache.end()) return *it->second;

  auto out = std::make_unique<std::vector<std::string>>();
  if (n == 1) {
    out->push_back(canonical_form(Graph(1)));
  } else {
    const std::vector<std::string>& parents = level_locked(n - 1);
    std::set<std::string> classes;
    for (const std::string& ps : parents) {
      Graph parent = from_packed(ps);
      for (uint64_t mask = 0; mask < (uint64_t{1} << (n - 1)); ++mask)
        classes.insert(canonical_form(extend(parent, mask)));
    }
    out->assign(classes.begin(), classes.end());
  }
  return *level_cache.emplace(n, std::move(out)).first->second;
}

}  // namespace

const std::vector<std::string>& canonical_level(int n) {
  if (n < 1 || n > kMaxEnumerationOrder)
    fail(ErrorCode::InvalidParameter, "enumeration order must be in 1..9");
  std::lock_guard<std::mutex> lock(level_mutex);
  return level_locked(n);
}

GraphStream::GraphStream(int n, GraphFilter filter)
    : n_(n), filter_(filter), level_(&canonical_level(n)) {}

std::optional<Graph> GraphStream::next() {
  while (pos_ < level_->size()) {
    Graph g = from_packed((*level_)[pos_++]);
    if (filter_ == GraphFilter::All) return g;
    bool conn = is_connected(g);
    if ((filter_ == GraphFilter::Connected) == conn) return g;
  }
  return std::nullopt;
}

GraphStream enumerate_graphs(int n, GraphFilter filter) { return GraphStream(n, filter); }

std::vector<Graph> all_graphs(int n, GraphFilter filter) {
  GraphStream s(n, filter);
  std::vector<Graph> out;
  while (auto g = s.next()) out.push_back(std::move(*g));
  return out;
}

}  // namespace qspectra
