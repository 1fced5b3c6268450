// rigpack command-line front end.
//
// Exit codes: 0 positive verdict, 1 negative verdict, 2 input or format
// error, 3 internal failure (a self-check inside the library tripped).

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "rigpack/rigpack.hpp"

namespace {

using namespace rigpack;

constexpr int kYes = 0;
constexpr int kNo = 1;
constexpr int kInputError = 2;
constexpr int kInternal = 3;

std::string slurp(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::parse, "cannot read '" + path + "'");
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

Graph load_graph(const std::string& path) { return parse_edge_list(slurp(path)); }

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty() || out_path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw Error(Errc::parse, "cannot write '" + out_path + "'");
  out << text;
}

std::string braces(const VertexSet& xs) {
  std::string s = "{";
  for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? "," : "") + std::to_string(xs[i]);
  return s + "}";
}

unsigned default_threads() {
  if (const char* env = std::getenv("RIGPACK_THREADS")) {
    const long v = std::strtol(env, nullptr, 10);
    if (v >= 1) return static_cast<unsigned>(v);
  }
  return 1;
}

int cmd_rank(const std::string& path) {
  const Graph g = load_graph(path);
  const EdgeSet all = g.all_edges();
  const int rank = rigidity_rank(g, all);
  const bool rigid = is_rigid(g);
  std::cout << "rank " << rank << " of max " << 2 * g.vertex_count() - 3 << "; " << (rigid ? "rigid" : "not rigid")
            << "; components: ";
  if (all.empty()) {
    std::cout << "none\n";
  } else {
    const Cover c = rigid_components(g, all);
    for (std::size_t i = 0; i < c.sets.size(); ++i) std::cout << (i ? "," : "") << braces(c.sets[i]);
    std::cout << '\n';
  }
  return kYes;
}

int cmd_connectivity(const std::string& path, int p, int q, PqOptions opts) {
  const Graph g = load_graph(path);
  const auto w = pq_violation(g, {p, q}, opts);
  if (!w) {
    std::cout << "yes\n";
    return kYes;
  }
  std::cout << "no: X=" << braces(w->deleted_vertices) << " Y=" << braces(w->cut_side) << " cut=" << w->cut_value
            << " required=" << w->required << '\n';
  return kNo;
}

EdgeSet parse_id_list(const std::string& csv, const Graph& g) {
  std::vector<EdgeId> ids;
  std::stringstream ss(csv);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.empty()) continue;
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(tok, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != tok.size()) throw Error(Errc::parse, "bad edge id '" + tok + "'");
    ids.push_back(v);
  }
  EdgeSet set(std::move(ids));
  g.check_edges(set);
  return set;
}

int cmd_pack(const std::string& path, int k, int l, const std::string& remove, const std::string& out) {
  const Graph g = load_graph(path);
  const EdgeSet removed = parse_id_list(remove, g);
  const auto result = pack_after_removal(g, k, l, removed);
  if (const auto* p = std::get_if<Packing>(&result)) {
    emit(cert::write_packing(*p, k, l, removed), out);
    return kYes;
  }
  const auto& w = std::get<DeficiencyWitness>(result);
  std::cerr << "no packing: union rank " << w.achieved_rank << " < " << w.full_rank << '\n';
  emit(cert::write_witness(w, removed), out);
  return kNo;
}

struct CertifyArgs {
  std::string cover, packing, witness, orientation;
  int k = -1;
  int l = -1;
};

int cmd_certify(const std::string& path, const CertifyArgs& a) {
  const Graph g = load_graph(path);
  const int chosen = !a.cover.empty() + !a.packing.empty() + !a.witness.empty() + !a.orientation.empty();
  if (chosen != 1) throw Error(Errc::invalid_argument, "give exactly one of --cover, --packing, --witness, --orientation");

  if (!a.cover.empty()) {
    const Cover h{cert::read_cover_sets(slurp(a.cover)), g.all_edges()};
    const long long bound = 2LL * g.vertex_count() - 3;
    long long value = 0;
    try {
      value = cover_value(g, h);
    } catch (const Error& e) {
      if (e.code() != Errc::invalid_cover) throw;
      std::cout << "invalid cover: " << e.what() << '\n';
      return kNo;
    }
    if (value < bound) {
      std::cout << "value " << value << " < " << bound << "; valid non-rigidity certificate\n";
      return kYes;
    }
    std::cout << "value " << value << " >= " << bound << "; cover does not certify non-rigidity\n";
    return kNo;
  }

  if (!a.packing.empty()) {
    const auto file = cert::read_packing(slurp(a.packing));
    if ((a.k >= 0 && a.k != file.k) || (a.l >= 0 && a.l != file.l)) {
      std::cout << "invalid packing: file is for k=" << file.k << " l=" << file.l << '\n';
      return kNo;
    }
    g.check_edges(file.removed);
    const auto check = verify_packing(g, file.packing, file.k, file.l, set_difference(g.all_edges(), file.removed));
    if (check.ok()) {
      std::cout << "valid packing: " << file.k << " rigid spanning, " << file.l << " spanning trees\n";
      return kYes;
    }
    std::cout << "invalid packing (" << to_string(check.clause) << "): " << check.detail << '\n';
    return kNo;
  }

  if (!a.witness.empty()) {
    const auto file = cert::read_witness(slurp(a.witness));
    if ((a.k >= 0 && a.k != file.witness.k) || (a.l >= 0 && a.l != file.witness.l)) {
      std::cout << "invalid witness: file is for k=" << file.witness.k << " l=" << file.witness.l << '\n';
      return kNo;
    }
    g.check_edges(file.removed);
    const auto bad = check_witness(g, file.witness, set_difference(g.all_edges(), file.removed));
    if (bad.empty()) {
      std::cout << "valid deficiency witness: rank " << file.witness.achieved_rank << " < " << file.witness.full_rank
                << '\n';
      return kYes;
    }
    std::cout << "invalid witness: " << bad << '\n';
    return kNo;
  }

  if (a.k < 1) throw Error(Errc::invalid_argument, "--orientation needs -k >= 1");
  if (g.vertex_count() < 3) throw Error(Errc::too_few_vertices, "vertex-robust check needs at least 3 vertices");
  const Orientation d = cert::read_orientation(g, slurp(a.orientation));
  if (const auto bad = robustness_violation(d, a.k)) {
    std::cout << "invalid orientation: D-" << bad->vertex << " has cut " << braces(bad->cut.side) << " with out-degree "
              << bad->cut.out_degree << " < " << a.k << '\n';
    return kNo;
  }
  std::cout << "valid orientation: D-v is " << a.k << "-arc-connected for every v\n";
  return kYes;
}

int cmd_orient(const std::string& path, int k, const SearchBudget& budget, const std::string& out) {
  const Graph g = load_graph(path);
  const auto result = orient_pipeline(g, k, budget);
  if (const auto* ok = std::get_if<PipelineSuccess>(&result)) {
    std::cerr << "seed " << ok->stats.seed << ", " << ok->stats.flips << " flips, " << ok->stats.restarts
              << " restarts" << (ok->stats.exhaustive ? ", exhaustive" : "") << '\n';
    emit(cert::write_orientation(ok->orientation), out);
    return kYes;
  }
  const auto& f = std::get<PipelineFailure>(result);
  std::cout << "failure stage=" << to_string(f.stage) << ": " << f.detail << '\n';
  if (f.search)
    std::cerr << "seed " << f.search->seed << ", " << f.search->flips << " flips, " << f.search->seconds
              << " s, " << f.search->restarts << " restarts\n";
  return kNo;
}

struct GenArgs {
  std::string family = "complete";
  int n = 0;
  int p = 1;
  int q = 1;
  std::uint64_t seed = 1;
  std::vector<int> offsets;
  double prob = 0.5;
  int attempts = 200;
};

int cmd_gen(const GenArgs& a) {
  std::optional<Graph> g;
  if (a.family == "complete") g = gen::complete(a.n);
  else if (a.family == "cycle") g = gen::cycle(a.n);
  else if (a.family == "path") g = gen::path(a.n);
  else if (a.family == "star") g = gen::star(a.n);
  else if (a.family == "wheel") g = gen::wheel(a.n);
  else if (a.family == "bowtie") g = gen::bowtie();
  else if (a.family == "circulant") g = gen::circulant(a.n, a.offsets);
  else if (a.family == "gnp") g = gen::gnp(a.n, a.prob, a.seed);
  else if (a.family == "random") {
    g = gen::random_pq_connected(a.n, {a.p, a.q}, a.seed, a.attempts);
    if (!g) {
      std::cerr << "no certified (" << a.p << "," << a.q << ")-connected graph on " << a.n << " vertices after "
                << a.attempts << " attempts\n";
      return kNo;
    }
  } else {
    throw Error(Errc::invalid_argument, "unknown family '" + a.family + "'");
  }
  std::cout << serialize(*g);
  return kYes;
}

int cmd_oracle(const std::string& which, const std::string& path, int k, int l, std::uint64_t seed) {
  const Graph g = load_graph(path);
  if (which == "laman") std::cout << oracle::laman_rank_bruteforce(g, g.all_edges()) << '\n';
  else if (which == "matrix") std::cout << oracle::matrix_rank_rigidity(g, g.all_edges(), seed) << '\n';
  else if (which == "union") std::cout << oracle::union_rank_bruteforce(g, k, l) << '\n';
  else throw Error(Errc::invalid_argument, "unknown oracle '" + which + "'");
  return kYes;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Rigidity-matroid ranks, (p,q)-connectivity, rigid/tree packings and robust orientations"};
  app.require_subcommand(1);
  unsigned threads = default_threads();
  app.add_option("--threads", threads, "worker threads (default: RIGPACK_THREADS or 1)")->check(CLI::PositiveNumber);

  std::string graph_path;
  auto graph_arg = [&](CLI::App* sub) {
    sub->add_option("graph", graph_path, "edge-list file, or - for stdin")->required();
  };

  auto* rank = app.add_subcommand("rank", "rigidity rank, verdict and rigid components");
  graph_arg(rank);

  int p = 1, q = 1;
  auto* conn = app.add_subcommand("connectivity", "check (p,q)-connectivity");
  graph_arg(conn);
  conn->add_option("--p", p)->required();
  conn->add_option("--q", q)->required();
  PqOptions pq_opts;
  conn->add_option("--max-subsets", pq_opts.max_subsets, "refuse to enumerate more deleted vertex sets than this")
      ->check(CLI::PositiveNumber);

  int k = 1, l = 0;
  std::string remove, out;
  auto* pk = app.add_subcommand("pack", "pack k rigid spanning subgraphs and l spanning trees");
  graph_arg(pk);
  pk->add_option("-k", k)->required();
  pk->add_option("-l", l)->required();
  pk->add_option("--remove", remove, "comma-separated edge ids to delete first");
  pk->add_option("-o,--output", out, "certificate file (default stdout)");

  CertifyArgs ca;
  auto* cf = app.add_subcommand("certify", "re-verify a certificate file");
  graph_arg(cf);
  cf->add_option("--cover", ca.cover);
  cf->add_option("--packing", ca.packing);
  cf->add_option("--witness", ca.witness);
  cf->add_option("--orientation", ca.orientation);
  cf->add_option("-k", ca.k);
  cf->add_option("-l", ca.l);

  SearchBudget budget;
  int ok_k = 1;
  std::string orient_out;
  auto* ori = app.add_subcommand("orient", "orientation with D-v k-arc-connected for every v");
  graph_arg(ori);
  ori->add_option("-k", ok_k)->required();
  ori->add_option("--seed", budget.seed);
  ori->add_option("--budget-seconds", budget.max_seconds);
  ori->add_option("--budget-flips", budget.max_flips);
  ori->add_option("-o,--output", orient_out);

  GenArgs ga;
  auto* gn = app.add_subcommand("gen", "emit a generated graph");
  gn->add_option("--family", ga.family, "complete|cycle|path|star|wheel|bowtie|circulant|gnp|random");
  gn->add_option("-n", ga.n);
  gn->add_option("--p", ga.p);
  gn->add_option("--q", ga.q);
  gn->add_option("--seed", ga.seed);
  gn->add_option("--offsets", ga.offsets)->delimiter(',');
  gn->add_option("--prob", ga.prob, "edge probability for gnp");
  gn->add_option("--attempts", ga.attempts);

  std::string which;
  int ok2 = 1, ol2 = 0;
  std::uint64_t oseed = 1;
  auto* orc = app.add_subcommand("oracle", "brute-force reference values");
  orc->add_option("which", which, "laman|matrix|union")->required();
  graph_arg(orc);
  orc->add_option("-k", ok2);
  orc->add_option("-l", ol2);
  orc->add_option("--seed", oseed);

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInputError;
  }

  try {
    if (*rank) return cmd_rank(graph_path);
    if (*conn) {
      pq_opts.threads = threads;
      return cmd_connectivity(graph_path, p, q, pq_opts);
    }
    if (*pk) return cmd_pack(graph_path, k, l, remove, out);
    if (*cf) return cmd_certify(graph_path, ca);
    if (*ori) return cmd_orient(graph_path, ok_k, budget, orient_out);
    if (*gn) return cmd_gen(ga);
    if (*orc) return cmd_oracle(which, graph_path, ok2, ol2, oseed);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const std::logic_error& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kInternal;
  }
  return kInputError;
}
