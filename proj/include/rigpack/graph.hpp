#pragma once

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdint>
#include <initializer_list>
#include <numeric>
#include <span>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "rigpack/error.hpp"

namespace rigpack {

using VertexId = std::int32_t;
using EdgeId = std::int32_t;

/// Sorted, duplicate-free vertex list.
using VertexSet = std::vector<VertexId>;

struct Edge {
  VertexId u;
  VertexId v;

  VertexId other(VertexId w) const noexcept { return w == u ? v : u; }
  friend bool operator==(const Edge&, const Edge&) = default;
};

/// A set of edge ids of one graph, kept sorted and duplicate-free.
class EdgeSet {
 public:
  EdgeSet() = default;
  EdgeSet(std::initializer_list<EdgeId> ids) : ids_(ids) { normalize(); }
  explicit EdgeSet(std::vector<EdgeId> ids) : ids_(std::move(ids)) { normalize(); }

  static EdgeSet range(EdgeId count) {
    std::vector<EdgeId> ids(static_cast<std::size_t>(count));
    std::iota(ids.begin(), ids.end(), 0);
    EdgeSet s;
    s.ids_ = std::move(ids);
    return s;
  }

  std::size_t size() const noexcept { return ids_.size(); }
  bool empty() const noexcept { return ids_.empty(); }
  auto begin() const noexcept { return ids_.begin(); }
  auto end() const noexcept { return ids_.end(); }
  EdgeId operator[](std::size_t i) const { return ids_[i]; }
  const std::vector<EdgeId>& ids() const noexcept { return ids_; }

  bool contains(EdgeId e) const { return std::binary_search(ids_.begin(), ids_.end(), e); }

  /// Membership mask indexed by edge id, sized to `edge_count`.
  std::vector<char> mask(std::size_t edge_count) const {
    std::vector<char> m(edge_count, 0);
    for (EdgeId e : ids_) m[static_cast<std::size_t>(e)] = 1;
    return m;
  }

  friend bool operator==(const EdgeSet&, const EdgeSet&) = default;

  friend EdgeSet set_union(const EdgeSet& a, const EdgeSet& b) {
    EdgeSet r;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(r.ids_));
    return r;
  }
  friend EdgeSet set_difference(const EdgeSet& a, const EdgeSet& b) {
    EdgeSet r;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(r.ids_));
    return r;
  }
  friend EdgeSet set_intersection(const EdgeSet& a, const EdgeSet& b) {
    EdgeSet r;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(r.ids_));
    return r;
  }

 private:
  void normalize() {
    std::sort(ids_.begin(), ids_.end());
    ids_.erase(std::unique(ids_.begin(), ids_.end()), ids_.end());
  }

  std::vector<EdgeId> ids_;
};

/// Undirected loopless multigraph on vertices [0, n). Edge ids are positions
/// in the edge list and never change. Immutable after construction.
class Graph {
 public:
  Graph() = default;

  explicit Graph(VertexId n, std::vector<Edge> edges = {}) : n_(n), edges_(std::move(edges)) {
    if (n_ < 0) throw Error(Errc::invalid_argument, "negative vertex count");
    incident_.resize(static_cast<std::size_t>(n_));
    for (std::size_t i = 0; i < edges_.size(); ++i) {
      const Edge& e = edges_[i];
      if (e.u < 0 || e.v < 0 || e.u >= n_ || e.v >= n_)
        throw Error(Errc::vertex_out_of_range, "edge " + std::to_string(i) + " has an endpoint outside [0, n)");
      if (e.u == e.v) throw Error(Errc::loop_edge, "edge " + std::to_string(i) + " is a loop");
      incident_[static_cast<std::size_t>(e.u)].push_back(static_cast<EdgeId>(i));
      incident_[static_cast<std::size_t>(e.v)].push_back(static_cast<EdgeId>(i));
    }
  }

  VertexId vertex_count() const noexcept { return n_; }
  EdgeId edge_count() const noexcept { return static_cast<EdgeId>(edges_.size()); }
  const Edge& edge(EdgeId e) const { return edges_.at(static_cast<std::size_t>(e)); }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  EdgeSet all_edges() const { return EdgeSet::range(edge_count()); }

  /// Edge ids incident to v, ascending.
  std::span<const EdgeId> incident(VertexId v) const { return incident_.at(static_cast<std::size_t>(v)); }
  int degree(VertexId v) const { return static_cast<int>(incident(v).size()); }

  bool is_simple() const {
    std::vector<std::pair<VertexId, VertexId>> keys;
    keys.reserve(edges_.size());
    for (const Edge& e : edges_) keys.emplace_back(std::min(e.u, e.v), std::max(e.u, e.v));
    std::sort(keys.begin(), keys.end());
    return std::adjacent_find(keys.begin(), keys.end()) == keys.end();
  }

  void check_vertex(VertexId v) const {
    if (v < 0 || v >= n_) throw Error(Errc::vertex_out_of_range, "vertex " + std::to_string(v) + " out of range");
  }

  void check_edges(const EdgeSet& f) const {
    for (EdgeId e : f)
      if (e < 0 || e >= edge_count())
        throw Error(Errc::edge_out_of_range, "edge id " + std::to_string(e) + " out of range");
  }

 private:
  VertexId n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<EdgeId>> incident_;
};

/// G_F as a standalone graph on the same vertex set. `original[i]` is the id
/// in the parent graph of edge i of `graph`.
struct Subgraph {
  Graph graph;
  std::vector<EdgeId> original;
};

inline Subgraph spanning_subgraph(const Graph& g, const EdgeSet& f) {
  g.check_edges(f);
  std::vector<Edge> edges;
  edges.reserve(f.size());
  for (EdgeId e : f) edges.push_back(g.edge(e));
  return {Graph(g.vertex_count(), std::move(edges)), f.ids()};
}

/// Vertex set normalized to ascending order without repeats; validates ids.
inline VertexSet make_vertex_set(const Graph& g, std::span<const VertexId> xs) {
  VertexSet s(xs.begin(), xs.end());
  for (VertexId v : s) g.check_vertex(v);
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  return s;
}

inline std::vector<char> vertex_mask(const Graph& g, std::span<const VertexId> xs) {
  std::vector<char> m(static_cast<std::size_t>(g.vertex_count()), 0);
  for (VertexId v : xs) {
    g.check_vertex(v);
    m[static_cast<std::size_t>(v)] = 1;
  }
  return m;
}

/// E(X): edges with both endpoints in x.
inline EdgeSet induced_edges(const Graph& g, std::span<const VertexId> x) {
  const auto in = vertex_mask(g, x);
  std::vector<EdgeId> out;
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const Edge& ed = g.edge(e);
    if (in[static_cast<std::size_t>(ed.u)] && in[static_cast<std::size_t>(ed.v)]) out.push_back(e);
  }
  return EdgeSet(std::move(out));
}

/// Degree of v in G_F.
inline int degree_in(const Graph& g, const EdgeSet& f, VertexId v) {
  g.check_vertex(v);
  int d = 0;
  for (EdgeId e : g.incident(v)) d += f.contains(e) ? 1 : 0;
  return d;
}

namespace detail {

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n), size_(n, 1) { std::iota(parent_.begin(), parent_.end(), 0); }

  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (size_[a] < size_[b]) std::swap(a, b);
    parent_[b] = a;
    size_[a] += size_[b];
    return true;
  }

 private:
  std::vector<std::size_t> parent_;
  std::vector<std::size_t> size_;
};

}  // namespace detail

/// Connected components of G_F; isolated vertices are singletons. Each part is
/// ascending and parts are ordered by their smallest vertex.
inline std::vector<VertexSet> components(const Graph& g, const EdgeSet& f) {
  g.check_edges(f);
  const auto n = static_cast<std::size_t>(g.vertex_count());
  detail::DisjointSets ds(n);
  for (EdgeId e : f) ds.unite(static_cast<std::size_t>(g.edge(e).u), static_cast<std::size_t>(g.edge(e).v));
  std::vector<int> slot(n, -1);
  std::vector<VertexSet> parts;
  for (std::size_t v = 0; v < n; ++v) {
    const std::size_t r = ds.find(v);
    if (slot[r] < 0) {
      slot[r] = static_cast<int>(parts.size());
      parts.emplace_back();
    }
    parts[static_cast<std::size_t>(slot[r])].push_back(static_cast<VertexId>(v));
  }
  return parts;
}

inline int component_count(const Graph& g, const EdgeSet& f) { return static_cast<int>(components(g, f).size()); }

inline bool is_connected(const Graph& g) { return component_count(g, g.all_edges()) <= 1; }

/// d_{G-X}(Y): edges with exactly one endpoint in y and none in x.
inline int cut_degree(const Graph& g, std::span<const VertexId> x, std::span<const VertexId> y) {
  if (y.empty()) throw Error(Errc::empty_set, "cut side Y is empty");
  const auto in_x = vertex_mask(g, x);
  const auto in_y = vertex_mask(g, y);
  std::size_t covered = 0;
  for (std::size_t v = 0; v < in_x.size(); ++v) {
    if (in_x[v] && in_y[v]) throw Error(Errc::overlapping_sets, "X and Y intersect");
    covered += (in_x[v] || in_y[v]) ? 1U : 0U;
  }
  if (covered == in_x.size()) throw Error(Errc::sets_cover_all, "X and Y together cover V");
  int d = 0;
  for (const Edge& e : g.edges()) {
    const auto u = static_cast<std::size_t>(e.u), v = static_cast<std::size_t>(e.v);
    if (in_x[u] || in_x[v]) continue;
    if (in_y[u] != in_y[v]) ++d;
  }
  return d;
}

/// A direction for every edge of `base`. Edge e runs u -> v unless
/// `reversed[e]` is set.
struct Orientation {
  Graph base;
  std::vector<char> reversed;

  Orientation() = default;
  explicit Orientation(Graph g) : base(std::move(g)), reversed(static_cast<std::size_t>(base.edge_count()), 0) {}

  VertexId tail(EdgeId e) const { return reversed.at(static_cast<std::size_t>(e)) ? base.edge(e).v : base.edge(e).u; }
  VertexId head(EdgeId e) const { return reversed.at(static_cast<std::size_t>(e)) ? base.edge(e).u : base.edge(e).v; }
  void flip(EdgeId e) { reversed.at(static_cast<std::size_t>(e)) ^= 1; }
  void set_tail(EdgeId e, VertexId t) {
    const Edge& ed = base.edge(e);
    if (t != ed.u && t != ed.v) throw Error(Errc::invalid_argument, "tail is not an endpoint of edge " + std::to_string(e));
    reversed.at(static_cast<std::size_t>(e)) = static_cast<char>(t == ed.v);
  }

  int out_degree(VertexId v) const {
    int d = 0;
    for (EdgeId e : base.incident(v)) d += tail(e) == v ? 1 : 0;
    return d;
  }
  int in_degree(VertexId v) const { return base.degree(v) - out_degree(v); }
};

/// Parses the edge-list format: first non-comment line is n, then one "u v"
/// per line. '#' starts a comment line; blank lines are skipped.
inline Graph parse_edge_list(std::string_view text) {
  std::vector<Edge> edges;
  long long n = -1;
  std::size_t line_no = 0;
  auto parse_int = [&](std::string_view tok) {
    long long value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc() || ptr != tok.data() + tok.size())
      throw ParseError(Errc::parse, line_no, "not an integer: '" + std::string(tok) + "'");
    return value;
  };
  while (!text.empty()) {
    ++line_no;
    const auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);

    std::vector<std::string_view> tokens;
    std::size_t i = 0;
    while (i < line.size()) {
      while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
      std::size_t j = i;
      while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
      if (j > i) tokens.push_back(line.substr(i, j - i));
      i = j;
    }
    if (tokens.empty() || tokens.front().front() == '#') continue;

    if (n < 0) {
      if (tokens.size() != 1) throw ParseError(Errc::parse, line_no, "expected vertex count");
      n = parse_int(tokens[0]);
      if (n < 0 || n > INT32_MAX) throw ParseError(Errc::parse, line_no, "invalid vertex count");
      continue;
    }
    if (tokens.size() != 2) throw ParseError(Errc::parse, line_no, "expected 'u v'");
    const long long u = parse_int(tokens[0]), v = parse_int(tokens[1]);
    if (u < 0 || v < 0 || u >= n || v >= n)
      throw ParseError(Errc::vertex_out_of_range, line_no, "vertex id outside [0, " + std::to_string(n) + ")");
    if (u == v) throw ParseError(Errc::loop_edge, line_no, "loop edge");
    edges.push_back({static_cast<VertexId>(u), static_cast<VertexId>(v)});
  }
  if (n < 0) throw ParseError(Errc::parse, line_no, "missing vertex count");
  return Graph(static_cast<VertexId>(n), std::move(edges));
}

inline std::string serialize(const Graph& g) {
  std::ostringstream os;
  os << g.vertex_count() << '\n';
  for (const Edge& e : g.edges()) os << e.u << ' ' << e.v << '\n';
  return os.str();
}

}  // namespace rigpack
