#include <CLI11.hpp>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "mcvc/bounds.hpp"
#include "mcvc/generators.hpp"
#include "mcvc/graph_io.hpp"
#include "mcvc/mcvc_enum.hpp"
#include "mcvc/oracle.hpp"
#include "mcvc/recognizers.hpp"
#include "mcvc/structure.hpp"

namespace {

using namespace mcvc;

constexpr int kExitViolation = 1;
constexpr int kExitBadInput = 2;
constexpr int kExitPrecondition = 3;
constexpr int kExitSizeGuard = 4;

// Raised for bad command-line values that CLI11 cannot check itself.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Guards {
  int chordality = kDefaultChordalityGuard;
  int oracle = kOracleGuard;
};

// MCVC_SIZE_GUARD replaces both limits on exhaustive computations.
Guards guards_from_env() {
  Guards g;
  if (const char* text = std::getenv("MCVC_SIZE_GUARD")) {
    try {
      std::size_t used = 0;
      const int value = std::stoi(text, &used);
      if (used != std::string(text).size() || value < 0) throw std::invalid_argument(text);
      g.chordality = value;
      g.oracle = std::min(value, 30);
    } catch (const std::exception&) {
      throw UsageError(std::string("MCVC_SIZE_GUARD: not a non-negative integer: ") + text);
    }
  }
  return g;
}

std::string read_input(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

Graph load_graph(const std::string& path, const std::string& format) {
  const std::string text = read_input(path);
  const GraphFormat f = format == "auto" ? detect_format(text) : format_from_name(format);
  return parse_graph(text, f);
}

void print_cover(std::ostream& out, const VertexSet& cover) { out << cover.to_string() << '\n'; }

GraphClass class_of(const std::string& algorithm) {
  if (algorithm == "chordal" || algorithm == "chord5" || algorithm == "dh" || algorithm == "split" ||
      algorithm == "cobipartite")
    return class_from_name(algorithm);
  return GraphClass::general;
}

struct EnumerateArgs {
  std::string input = "-";
  std::string format = "auto";
  std::string algo = "auto";
  bool count_only = false;
  bool assume_chordality5 = false;
  bool stats = false;
};

int cmd_enumerate(const EnumerateArgs& a) {
  const Guards guards = guards_from_env();
  const Graph g = load_graph(a.input, a.format);
  EnumOptions opts;
  opts.collect = !a.count_only;
  opts.assume_chordality5 = a.assume_chordality5;
  opts.size_guard = guards.chordality;
  const Algorithm algo = algorithm_from_name(a.algo);
  if (algo == Algorithm::oracle && g.n() > guards.oracle) {
    throw SizeGuardError("oracle: instance too large (n = " + std::to_string(g.n()) + ")");
  }
  const EnumerationReport r = enumerate_mcvc(g, algo, opts);
  if (a.count_only) {
    std::cout << r.count << '\n';
  } else {
    for (const auto& cover : r.covers) print_cover(std::cout, cover);
  }
  if (a.stats) {
    const double ms = std::chrono::duration<double, std::milli>(r.elapsed).count();
    std::cout << "algorithm " << r.algorithm << '\n'
              << "count " << r.count << '\n'
              << "nodes " << r.nodes << '\n'
              << "leaves " << r.leaves << '\n'
              << "elapsed_ms " << ms << '\n';
    if (g.n() > 0) std::cout << "class_bound " << class_bound(class_of(r.algorithm), g.n()) << '\n';
  }
  return 0;
}

struct GenerateArgs {
  std::string family;
  int k = 1;
  int n = 10;
  double p = 0.5;
  std::uint64_t seed = 0;
  std::string format = "graph6";
};

int cmd_generate(const GenerateArgs& a) {
  Graph g;
  if (a.family == "prop2") {
    g = gen_apex_triangles(a.k);
  } else if (a.family == "gk") {
    g = gen_block_chain(a.k);
  } else if (a.family == "triangles") {
    g = gen_triangles(a.k);
  } else if (a.family == "broom") {
    g = gen_broom_tree(a.k);
  } else {
    g = gen_random(a.n, a.p, a.seed);
  }
  std::string text = serialize_graph(g, format_from_name(a.format));
  if (text.empty() || text.back() != '\n') text += '\n';
  std::cout << text;
  return 0;
}

// Enumerators whose preconditions hold on g, general first.
std::vector<Algorithm> applicable(const Graph& g, int guard) {
  std::vector<Algorithm> out{Algorithm::general, Algorithm::automatic};
  VertexSet core(g.n());
  for (Vertex v = 0; v < g.n(); ++v)
    if (g.degree(v) > 0) core.insert(v);
  const Graph h = induced_subgraph(g, core).graph;
  if (h.n() < 2 || !is_connected(h)) return out;
  if (is_chordal(h)) out.push_back(Algorithm::chordal);
  if (h.n() <= guard && chordality(h, guard) <= 5) out.push_back(Algorithm::chord5);
  if (is_distance_hereditary(h)) out.push_back(Algorithm::dh);
  if (is_split(h)) out.push_back(Algorithm::split);
  if (is_cobipartite(h)) out.push_back(Algorithm::cobipartite);
  return out;
}

int suite_oracle(const Graph& g, const Guards& guards) {
  const auto truth = oracle_enum_cvc_minimal(g, guards.oracle);
  std::cout << "oracle " << truth.size() << '\n';
  EnumOptions opts;
  opts.size_guard = guards.chordality;
  bool ok = true;
  for (auto algo : applicable(g, guards.chordality)) {
    const auto r = enumerate_mcvc(g, algo, opts);
    const bool same = r.covers == truth;
    ok = ok && same;
    std::cout << algorithm_name(algo) << ' ' << r.count << ' ' << (same ? "ok" : "MISMATCH") << '\n';
  }
  return ok ? 0 : kExitViolation;
}

int suite_bounds(const Graph& g, const Guards& guards) {
  EnumOptions opts;
  opts.size_guard = guards.chordality;
  bool ok = true;
  for (auto algo : applicable(g, guards.chordality)) {
    if (algo == Algorithm::automatic) continue;
    const auto r = enumerate_mcvc(g, algo, opts);
    const int n = std::max(g.n(), 1);
    const double bound = class_bound(class_of(r.algorithm), n);
    const bool count_ok = static_cast<double>(r.count) <= bound * (1 + 1e-9);
    bool leaves_ok = true;
    if (r.algorithm == "general") {
      EnumerationReport binary = r;
      binary.leaves = r.branch_leaves;
      leaves_ok = verify_leaf_bound(r, kGeneralBase, n) && verify_leaf_bound(binary, kChord5Base, n);
    } else if (r.algorithm == "chord5") {
      leaves_ok = verify_leaf_bound(r, kChord5Base, n);
    }
    ok = ok && count_ok && leaves_ok;
    std::cout << r.algorithm << " count " << r.count << " bound " << bound << " leaves " << r.leaves << ' '
              << (count_ok && leaves_ok ? "ok" : "VIOLATION") << '\n';
  }
  return ok ? 0 : kExitViolation;
}

const char* flag(bool b) { return b ? "yes" : "no"; }

int suite_classes(const Graph& g, const Guards& guards) {
  const auto r = classify(g, guards.chordality);
  std::cout << "chordal " << flag(r.is_chordal) << '\n'
            << "chordal_bipartite " << flag(r.is_chordal_bipartite) << '\n'
            << "split " << flag(r.is_split) << '\n'
            << "cobipartite " << flag(r.is_cobipartite) << '\n'
            << "distance_hereditary " << flag(r.is_distance_hereditary) << '\n'
            << "chordality_le5 "
            << (r.chordality_le5 == Tristate::unverified ? "unverified" : flag(r.chordality_le5 == Tristate::yes))
            << '\n';
  return 0;
}

int cmd_verify(const std::string& input, const std::string& format, const std::string& suite) {
  const Guards guards = guards_from_env();
  const Graph g = load_graph(input, format);
  if (suite == "oracle") return suite_oracle(g, guards);
  if (suite == "bounds") return suite_bounds(g, guards);
  return suite_classes(g, guards);
}

int cmd_bounds() {
  std::cout.precision(10);
  const auto star = tradeoff_beta_star();
  std::cout << "branching_number(1,2) " << branching_number(BranchingVector({1, 2})) << '\n'
            << "branching_number(3,3,3) " << branching_number(BranchingVector({3, 3, 3})) << '\n'
            << "beta_star " << star.beta << '\n'
            << "beta_star_closed_form " << tradeoff_beta_closed_form() << '\n'
            << "f_beta_star " << star.f_value << '\n'
            << "dense_case_constant " << dense_case_constant() << '\n'
            << "entropy_crossover_alpha " << entropy_crossover_alpha() << '\n'
            << "general_base " << kGeneralBase << '\n'
            << "chord5_base " << kChord5Base << '\n';
  std::cout << "n general chord5 chordal dh split cobipartite\n";
  std::cout.precision(6);
  for (int n = 5; n <= 40; n += 5) {
    std::cout << n;
    for (auto c : {GraphClass::general, GraphClass::chord5, GraphClass::chordal, GraphClass::dh, GraphClass::split,
                   GraphClass::cobipartite})
      std::cout << ' ' << class_bound(c, n);
    std::cout << '\n';
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Enumerate minimal connected vertex covers"};
  app.require_subcommand(1);

  const std::vector<std::string> formats{"auto", "graph6", "edgelist"};

  EnumerateArgs ea;
  auto* enumerate = app.add_subcommand("enumerate", "List the minimal connected vertex covers of a graph");
  enumerate->add_option("input", ea.input, "Graph file, or - for standard input");
  enumerate->add_option("--format", ea.format, "Input format")->check(CLI::IsMember(formats));
  enumerate->add_option("--algo", ea.algo, "Enumerator")
      ->check(CLI::IsMember({"auto", "general", "chordal", "chord5", "dh", "split", "cobipartite", "oracle"}));
  enumerate->add_flag("--count-only", ea.count_only, "Print only the number of covers");
  enumerate->add_flag("--assume-chordality-5", ea.assume_chordality5, "Take chordality <= 5 as given");
  enumerate->add_flag("--stats", ea.stats, "Append search statistics");

  GenerateArgs ga;
  auto* generate = app.add_subcommand("generate", "Write a graph from one of the built-in families");
  generate->add_option("--family", ga.family, "Graph family")
      ->required()
      ->check(CLI::IsMember({"prop2", "gk", "triangles", "broom", "random"}));
  generate->add_option("--k", ga.k, "Family parameter");
  generate->add_option("--n", ga.n, "Vertices (random)");
  generate->add_option("--p", ga.p, "Edge probability (random)");
  generate->add_option("--seed", ga.seed, "Seed (random)");
  generate->add_option("--format", ga.format, "Output format")->check(CLI::IsMember({"graph6", "edgelist"}));

  std::string verify_input = "-";
  std::string verify_format = "auto";
  std::string suite = "oracle";
  auto* verify = app.add_subcommand("verify", "Check enumerators, bounds or class membership on a graph");
  verify->add_option("input", verify_input, "Graph file, or - for standard input");
  verify->add_option("--format", verify_format, "Input format")->check(CLI::IsMember(formats));
  verify->add_option("--suite", suite, "Suite to run")->check(CLI::IsMember({"oracle", "bounds", "classes"}));

  auto* bounds = app.add_subcommand("bounds", "Print the numeric constants and class bounds");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitBadInput;
  }

  try {
    if (*enumerate) return cmd_enumerate(ea);
    if (*generate) return cmd_generate(ga);
    if (*verify) return cmd_verify(verify_input, verify_format, suite);
    if (*bounds) return cmd_bounds();
  } catch (const ParseError& e) {
    std::cerr << "mcvc: " << e.what() << '\n';
    return kExitBadInput;
  } catch (const UsageError& e) {
    std::cerr << "mcvc: " << e.what() << '\n';
    return kExitBadInput;
  } catch (const PreconditionError& e) {
    std::cerr << "mcvc: " << e.what() << '\n';
    return kExitPrecondition;
  } catch (const SizeGuardError& e) {
    std::cerr << "mcvc: " << e.what() << '\n';
    return kExitSizeGuard;
  } catch (const std::invalid_argument& e) {
    std::cerr << "mcvc: " << e.what() << '\n';
    return kExitBadInput;
  } catch (const std::out_of_range& e) {
    std::cerr << "mcvc: " << e.what() << '\n';
    return kExitBadInput;
  }
  return 0;
}
