#pragma once

// Plain-text certificate files. Every format is line based; blank lines and
// lines starting with '#' are ignored.
//
//   cover m              packing k l           witness k l
//   <vertex ids>  x m    [removed <ids>]       [removed <ids>]
//                        rigid <edge ids>      edges <ids>
//                        tree <edge ids>       rigidity_rank r
//                                              circuit_rank c
//   orientation:                               outside o
//   <edge id> <tail> <head> per line           achieved a
//                                              full f
//                                              cover m
//                                              <vertex ids> x m

#include <algorithm>
#include <cctype>
#include <charconv>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "rigpack/graph.hpp"
#include "rigpack/matroid_union.hpp"
#include "rigpack/packing.hpp"
#include "rigpack/rigidity.hpp"

namespace rigpack::cert {

namespace detail {

struct Line {
  std::size_t number = 0;
  std::vector<std::string_view> tokens;
};

class Reader {
 public:
  explicit Reader(std::string_view text) {
    std::size_t number = 0;
    while (!text.empty()) {
      ++number;
      const auto nl = text.find('\n');
      std::string_view raw = text.substr(0, nl);
      text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
      Line line{number, {}};
      std::size_t i = 0;
      while (i < raw.size()) {
        while (i < raw.size() && std::isspace(static_cast<unsigned char>(raw[i]))) ++i;
        std::size_t j = i;
        while (j < raw.size() && !std::isspace(static_cast<unsigned char>(raw[j]))) ++j;
        if (j > i) line.tokens.push_back(raw.substr(i, j - i));
        i = j;
      }
      if (!line.tokens.empty() && line.tokens.front().front() != '#') lines_.push_back(std::move(line));
      last_ = number;
    }
  }

  bool done() const { return pos_ == lines_.size(); }
  const Line& peek() const {
    if (done()) throw ParseError(Errc::parse, last_, "unexpected end of certificate");
    return lines_[pos_];
  }
  const Line& next() {
    const Line& l = peek();
    ++pos_;
    return l;
  }

  /// Next line, which must start with `keyword`.
  const Line& expect(std::string_view keyword) {
    const Line& l = next();
    if (l.tokens.front() != keyword)
      throw ParseError(Errc::parse, l.number, "expected '" + std::string(keyword) + "'");
    return l;
  }

 private:
  std::vector<Line> lines_;
  std::size_t pos_ = 0;
  std::size_t last_ = 0;
};

inline int to_int(const Line& l, std::string_view tok) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc() || ptr != tok.data() + tok.size())
    throw ParseError(Errc::parse, l.number, "not an integer: '" + std::string(tok) + "'");
  return value;
}

inline std::vector<int> ints(const Line& l, std::size_t from) {
  std::vector<int> out;
  for (std::size_t i = from; i < l.tokens.size(); ++i) out.push_back(to_int(l, l.tokens[i]));
  return out;
}

inline int single(const Line& l) {
  if (l.tokens.size() != 2) throw ParseError(Errc::parse, l.number, "expected one value");
  return to_int(l, l.tokens[1]);
}

template <class Ids>
void write_ids(std::ostream& os, const Ids& ids) {
  for (auto x : ids) os << ' ' << x;
}

inline std::vector<VertexSet> read_sets(Reader& in, int count) {
  if (count < 0) throw ParseError(Errc::parse, in.peek().number, "negative set count");
  std::vector<VertexSet> sets;
  for (int i = 0; i < count; ++i) {
    const Line& l = in.next();
    auto ids = ints(l, 0);
    std::sort(ids.begin(), ids.end());
    ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
    sets.push_back(std::move(ids));
  }
  return sets;
}

inline EdgeSet read_removed(Reader& in) {
  if (!in.done() && in.peek().tokens.front() == "removed") return EdgeSet(ints(in.next(), 1));
  return {};
}

inline void trailing(const Reader& in) {
  if (!in.done()) throw ParseError(Errc::parse, in.peek().number, "unexpected trailing content");
}

}  // namespace detail

// --- cover -----------------------------------------------------------------

inline std::string write_cover(const Cover& h) {
  std::ostringstream os;
  os << "cover " << h.sets.size() << '\n';
  for (const auto& x : h.sets) {
    for (std::size_t i = 0; i < x.size(); ++i) os << (i ? " " : "") << x[i];
    os << '\n';
  }
  return os.str();
}

/// Cover sets only; the caller supplies the target edge set.
inline std::vector<VertexSet> read_cover_sets(std::string_view text) {
  detail::Reader in(text);
  const auto& head = in.expect("cover");
  auto sets = detail::read_sets(in, detail::single(head));
  detail::trailing(in);
  return sets;
}

// --- packing ---------------------------------------------------------------

struct PackingFile {
  int k = 0;
  int l = 0;
  EdgeSet removed;
  Packing packing;
};

inline std::string write_packing(const Packing& p, int k, int l, const EdgeSet& removed = {}) {
  std::ostringstream os;
  os << "packing " << k << ' ' << l << '\n';
  if (!removed.empty()) {
    os << "removed";
    detail::write_ids(os, removed);
    os << '\n';
  }
  for (const auto& f : p.rigid_subgraphs) {
    os << "rigid";
    detail::write_ids(os, f);
    os << '\n';
  }
  for (const auto& f : p.trees) {
    os << "tree";
    detail::write_ids(os, f);
    os << '\n';
  }
  return os.str();
}

/// Reads a packing certificate. An id repeated inside one part is a format
/// error; overlap between parts is left for verify_packing to report.
inline PackingFile read_packing(std::string_view text) {
  detail::Reader in(text);
  const auto& head = in.expect("packing");
  if (head.tokens.size() != 3) throw ParseError(Errc::parse, head.number, "expected 'packing k l'");
  PackingFile file;
  file.k = detail::to_int(head, head.tokens[1]);
  file.l = detail::to_int(head, head.tokens[2]);
  file.removed = detail::read_removed(in);
  while (!in.done()) {
    const auto& line = in.next();
    auto ids = detail::ints(line, 1);
    std::vector<EdgeId> sorted(ids.begin(), ids.end());
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      throw ParseError(Errc::parse, line.number, "edge listed twice in one part");
    if (line.tokens.front() == "rigid")
      file.packing.rigid_subgraphs.emplace_back(std::move(sorted));
    else if (line.tokens.front() == "tree")
      file.packing.trees.emplace_back(std::move(sorted));
    else
      throw ParseError(Errc::parse, line.number, "part kind must be 'rigid' or 'tree'");
  }
  return file;
}

// --- deficiency witness ----------------------------------------------------

struct WitnessFile {
  EdgeSet removed;
  DeficiencyWitness witness;
};

inline std::string write_witness(const DeficiencyWitness& w, const EdgeSet& removed = {}) {
  std::ostringstream os;
  os << "witness " << w.k << ' ' << w.l << '\n';
  if (!removed.empty()) {
    os << "removed";
    detail::write_ids(os, removed);
    os << '\n';
  }
  os << "edges";
  detail::write_ids(os, w.f);
  os << '\n';
  os << "rigidity_rank " << w.rigidity_rank_f << '\n';
  os << "circuit_rank " << w.circuit_rank_f << '\n';
  os << "outside " << w.outside << '\n';
  os << "achieved " << w.achieved_rank << '\n';
  os << "full " << w.full_rank << '\n';
  os << write_cover(w.cover);
  return os.str();
}

inline WitnessFile read_witness(std::string_view text) {
  detail::Reader in(text);
  const auto& head = in.expect("witness");
  if (head.tokens.size() != 3) throw ParseError(Errc::parse, head.number, "expected 'witness k l'");
  WitnessFile file;
  auto& w = file.witness;
  w.k = detail::to_int(head, head.tokens[1]);
  w.l = detail::to_int(head, head.tokens[2]);
  file.removed = detail::read_removed(in);
  w.f = EdgeSet(detail::ints(in.expect("edges"), 1));
  w.rigidity_rank_f = detail::single(in.expect("rigidity_rank"));
  w.circuit_rank_f = detail::single(in.expect("circuit_rank"));
  w.outside = detail::single(in.expect("outside"));
  w.achieved_rank = detail::single(in.expect("achieved"));
  w.full_rank = detail::single(in.expect("full"));
  const auto& cover = in.expect("cover");
  w.cover.sets = detail::read_sets(in, detail::single(cover));
  w.cover.target = w.f;
  detail::trailing(in);
  return file;
}

// --- orientation -----------------------------------------------------------

/// One "edge_id tail head" line per edge of the orientation's base graph.
/// `ids` maps base edge i to the id written (identity when empty).
inline std::string write_orientation(const Orientation& d, const std::vector<EdgeId>& ids = {}) {
  std::ostringstream os;
  for (EdgeId e = 0; e < d.base.edge_count(); ++e)
    os << (ids.empty() ? e : ids[static_cast<std::size_t>(e)]) << ' ' << d.tail(e) << ' ' << d.head(e) << '\n';
  return os.str();
}

/// Reads an orientation of every edge of g. Each edge must appear exactly
/// once with its own endpoints; violations are reported as Errc::parse.
inline Orientation read_orientation(const Graph& g, std::string_view text) {
  detail::Reader in(text);
  Orientation d(g);
  std::vector<char> seen(static_cast<std::size_t>(g.edge_count()), 0);
  std::size_t last = 0;
  while (!in.done()) {
    const auto& line = in.next();
    last = line.number;
    if (line.tokens.size() != 3) throw ParseError(Errc::parse, line.number, "expected 'edge_id tail head'");
    const auto v = detail::ints(line, 0);
    if (v[0] < 0 || v[0] >= g.edge_count())
      throw ParseError(Errc::edge_out_of_range, line.number, "edge id out of range");
    auto& s = seen[static_cast<std::size_t>(v[0])];
    if (s) throw ParseError(Errc::parse, line.number, "edge oriented twice");
    s = 1;
    const Edge& ed = g.edge(v[0]);
    if (!((v[1] == ed.u && v[2] == ed.v) || (v[1] == ed.v && v[2] == ed.u)))
      throw ParseError(Errc::parse, line.number, "tail/head do not match the edge's endpoints");
    d.set_tail(v[0], v[1]);
  }
  if (std::find(seen.begin(), seen.end(), 0) != seen.end())
    throw ParseError(Errc::parse, last, "some edges are not oriented");
  return d;
}

}  // namespace rigpack::cert
