#include <algorithm>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "borelkit/constructions.hpp"
#include "borelkit/dimension.hpp"
#include "borelkit/errors.hpp"
#include "borelkit/figures.hpp"
#include "borelkit/morphism_io.hpp"
#include "borelkit/order.hpp"

using namespace borelkit;

namespace {

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kInputError = 2;

std::string weights_str(const std::vector<int>& d) {
  std::string out = "(";
  for (std::size_t k = 0; k < d.size(); ++k) out += (k ? "," : "") + std::to_string(d[k]);
  return out + ")";
}

std::vector<Involution> hasse_nodes(int n, std::optional<int> rank, bool dp) {
  if (dp) return enumerate_dp(n);
  return enumerate_involutions(n, rank);
}

void print_dot(std::ostream& os, const HasseDiagram& h, const std::string& name) {
  std::vector<std::string> nodes;
  for (const auto& s : h.nodes) nodes.push_back(s.str());
  std::sort(nodes.begin(), nodes.end());
  std::vector<std::tuple<std::string, std::string, std::string>> edges;
  for (const auto& e : h.edges) edges.emplace_back(e.lower.str(), e.upper.str(), e.label);
  std::sort(edges.begin(), edges.end());
  os << "digraph \"" << name << "\" {\n  rankdir=BT;\n";
  for (const auto& s : nodes) os << "  \"" << s << "\";\n";
  for (const auto& [lo, hi, label] : edges) os << "  \"" << lo << "\" -> \"" << hi << "\" [label=\"" << label << "\"];\n";
  os << "}\n";
}

int cmd_hasse(int n, std::optional<int> rank, bool dp, bool dot) {
  auto h = hasse(hasse_nodes(n, rank, dp));
  if (dot) {
    std::string name = dp ? "DP(" + std::to_string(n) + ")"
                          : (rank ? "P(" + std::to_string(n) + ",rank " + std::to_string(*rank) + ")"
                                  : "P(" + std::to_string(n) + ")");
    print_dot(std::cout, h, name);
    return kOk;
  }
  std::cout << "nodes " << h.nodes.size() << "\n";
  for (const auto& s : h.nodes) std::cout << s.str() << "\n";
  std::cout << "edges " << h.edges.size() << "\n";
  for (const auto& e : h.edges) std::cout << e.lower.str() << " < " << e.upper.str() << "\t" << e.label << "\n";
  return kOk;
}

int cmd_dim(int n, std::optional<int> rank, bool oracle) {
  int mismatches = 0;
  for (const auto& s : enumerate_involutions(n, rank)) {
    int dim = melnikov_dim(s).dim;
    std::cout << s.str() << "\t" << dim;
    if (oracle) {
      int other = commutant_dim_oracle(s);
      std::cout << "\t" << other;
      if (other != dim) {
        std::cout << "\tMISMATCH";
        ++mismatches;
      }
    }
    std::cout << "\n";
  }
  if (oracle) std::cerr << mismatches << " mismatches against the commutant oracle\n";
  return mismatches == 0 ? kOk : kFailed;
}

int cmd_dp(int n) {
  auto members = enumerate_dp(n);
  for (const auto& s : members) std::cout << s.str() << "\n";
  int checked = 0, disagreements = 0;
  for (const auto& s : enumerate_involutions(n, n / 2)) {
    ++checked;
    if (is_dp(s, DpMethod::definition) != is_dp(s, DpMethod::characterization)) ++disagreements;
  }
  std::cerr << "DP(" << n << "): " << members.size() << " members; definition and characterization "
            << (disagreements == 0 ? "agree" : "DISAGREE") << " on " << checked << " matchings";
  if (disagreements) std::cerr << " (" << disagreements << " disagreements)";
  std::cerr << "\n";
  return disagreements == 0 ? kOk : kFailed;
}

void print_report(std::ostream& os, const VerificationReport& r, const GradedMorphism& psi, bool inferred) {
  os << "N = " << psi.size() << ", r = " << psi.nvars() << ", m = " << psi.multiplier() << "\n";
  os << "d = " << weights_str(psi.weights()) << (inferred ? " (inferred)" : "") << "\n";
  os << "square-zero: " << (r.square_zero ? "yes" : "NO") << "\n";
  os << "grading: " << (r.grading_ok ? "ok" : "VIOLATED") << "\n";
  for (const auto& v : r.grading_violations) os << "  " << v << "\n";
  os << "generic rank: " << r.generic_rank << " (N/2 = " << psi.half() << ")\n";
  os << "sigma_psi: " << (r.sigma ? r.sigma->str() : "none") << "\n";
  os << "zero pattern: R = " << r.zero.rows << ", C = " << r.zero.cols << "\n";
  os << "Lemma A: " << (r.lemma_a_ok ? "ok" : "FAILS") << "\n";
  const auto& a = r.avoidance;
  os << "L-avoidance: " << to_string(a.status) << " (" << a.method;
  if (a.method == "monte-carlo")
    os << ", " << a.trials << " trials, " << a.violations << " violations, " << a.modular_false_alarms
       << " modular false alarms";
  os << ")\n";
  if (a.minor_gcd) os << "  gcd of maximal minors: " << a.minor_gcd->str(psi.names()) << "\n";
  if (a.witness) {
    os << "  witness: (";
    for (std::size_t k = 0; k < a.witness->size(); ++k) os << (k ? ":" : "") << to_string((*a.witness)[k]);
    os << ")\n";
  }
  if (!a.detail.empty()) os << "  " << a.detail << "\n";
  os << "verified: " << (r.verified() ? "yes" : "NO") << "\n";
}

int cmd_verify(const std::string& file, bool exact, std::optional<int> mc, std::uint64_t seed, std::uint64_t prime,
               bool json_only) {
  auto loaded = load_morphism(file, GradedMorphism::Grading::report);
  const auto& psi = loaded.psi;
  AvoidanceMode mode;
  if (mc)
    mode = AvoidanceMode::monte_carlo(*mc);
  else if (!exact && psi.nvars() >= 3)
    mode = AvoidanceMode::monte_carlo(10000);
  mode.seed = seed;
  mode.prime = prime;
  auto report = verify(psi, mode);
  if (!json_only) {
    print_report(std::cout, report, psi, loaded.d_inferred);
    std::cout << "--- report (json) ---\n";
  }
  std::cout << report_to_json(report, psi);
  return report.verified() ? kOk : kFailed;
}

void write_or_print(const GradedMorphism& psi, const std::string& out) {
  if (out.empty())
    std::cout << morphism_to_json(psi);
  else
    save_morphism(out, psi);
}

int check_order(int n) {
  auto all = enumerate_involutions(n);
  MoveClosure closure;
  long pairs = 0, mismatches = 0;
  for (const auto& a : all)
    for (const auto& b : all) {
      ++pairs;
      if (closure.leq(a, b) != leq_by_rank(a, b)) {
        ++mismatches;
        std::cout << "mismatch: " << a.str() << " vs " << b.str() << "\n";
      }
    }
  std::cout << "order-equivalence N=" << n << ": " << all.size() << " involutions, " << pairs << " pairs, "
            << mismatches << " mismatches\n";
  return mismatches == 0 ? kOk : kFailed;
}

int check_dp(int n) {
  if (n < 2 || n % 2) throw InputError("dp-equivalence needs an even N >= 2");
  int checked = 0, bad = 0;
  for (const auto& s : enumerate_involutions(n, n / 2)) {
    ++checked;
    bool a = is_dp(s, DpMethod::definition), b = is_dp(s, DpMethod::characterization);
    if (a != b) {
      ++bad;
      std::cout << "disagreement: " << s.str() << " definition=" << a << " characterization=" << b << "\n";
    }
  }
  std::cout << "dp-equivalence N=" << n << ": " << checked << " matchings, " << enumerate_dp(n).size()
            << " in DP, " << bad << " disagreements\n";
  return bad == 0 ? kOk : kFailed;
}

int check_one_n(int n) {
  auto report = check_1n_lemma(n);
  for (const auto& s : report.counterexamples) std::cout << "counterexample: " << s.str() << "\n";
  std::cout << "one-N-lemma N=" << n << ": " << report.checked << " matchings contain (1," << n << "), "
            << report.counterexamples.size() << " in DP\n";
  return report.counterexamples.empty() ? kOk : kFailed;
}

int check_lemma_a(const std::string& file) {
  auto loaded = load_morphism(file, GradedMorphism::Grading::report);
  auto table = generic_rank_table(loaded.psi.matrix());
  bool ok = lemma_a_check(table, loaded.psi.half());
  std::cout << "generic rank table:\n" << table.str() << "\n";
  std::cout << "Lemma A: " << (ok ? "holds" : "FAILS") << "\n";
  return ok ? kOk : kFailed;
}

int check_figures() {
  struct Case {
    FigureFixture fixture;
    std::vector<Involution> nodes;
  };
  std::vector<Case> cases{{figure_p4(), enumerate_involutions(4)},
                          {figure_rp6(), enumerate_involutions(6, 3)},
                          {figure_dp8(), enumerate_dp(8)}};
  int failures = 0;
  for (const auto& c : cases) {
    auto h = hasse(c.nodes);
    auto diffs = compare_with_fixture(h, c.fixture);
    std::cout << c.fixture.name << ": " << h.nodes.size() << " nodes, " << h.edges.size() << " edges, "
              << (diffs.empty() ? "matches fixture" : "DIFFERS") << "\n";
    for (const auto& d : diffs) std::cout << "  " << d << "\n";
    if (!diffs.empty()) ++failures;
  }
  return failures == 0 ? kOk : kFailed;
}

std::vector<int> parse_weights(const std::string& text) {
  std::vector<int> out;
  std::string s = text;
  s.erase(std::remove_if(s.begin(), s.end(), [](char c) { return c == '(' || c == ')' || c == ' '; }), s.end());
  std::stringstream in(s);
  std::string piece;
  while (std::getline(in, piece, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(piece, &used));
      if (used != piece.size()) throw std::invalid_argument(piece);
    } catch (const std::exception&) {
      throw InputError("--d must be a comma-separated list of integers, got \"" + text + "\"");
    }
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Borel orbits of square-zero upper triangular matrices and graded morphisms into them"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "borelkit 1.0");

  int n = 0;
  std::optional<int> rank;
  bool dp_flag = false, dot = false, oracle = false;

  auto* enumerate = app.add_subcommand("enumerate", "List the involutions of {1..N} in canonical order");
  enumerate->add_option("N", n, "Size")->required()->check(CLI::Range(1, 64));
  enumerate->add_option("--rank", rank, "Only involutions with this many transpositions");

  auto* hasse_cmd = app.add_subcommand("hasse", "Hasse diagram of the orbit closure order");
  hasse_cmd->add_option("N", n, "Size")->required()->check(CLI::Range(1, 64));
  auto* hasse_rank = hasse_cmd->add_option("--rank", rank, "Restrict to one rank");
  hasse_cmd->add_flag("--dp", dp_flag, "Restrict to DP(N)")->excludes(hasse_rank);
  hasse_cmd->add_flag("--dot", dot, "Emit Graphviz DOT");

  auto* dim = app.add_subcommand("dim", "Orbit dimensions from Melnikov's formula");
  dim->add_option("N", n, "Size")->required()->check(CLI::Range(1, 64));
  dim->add_option("--rank", rank, "Restrict to one rank");
  dim->add_flag("--oracle", oracle, "Add a column computed from the commutant");

  auto* dp = app.add_subcommand("dp", "Members of DP(N)");
  dp->add_option("N", n, "Even size")->required()->check(CLI::Range(2, 64));

  std::string file, file2, out, pat1, pat2, weights, kind;
  bool exact = false, json_only = false;
  std::optional<int> mc, param;
  std::uint64_t seed = AvoidanceMode{}.seed, prime = kDefaultPrime;

  auto* verify_cmd = app.add_subcommand("verify", "Verify a morphism file");
  verify_cmd->add_option("FILE", file, "Morphism file")->required();
  auto* exact_opt = verify_cmd->add_flag("--exact", exact, "Exact L-avoidance (r <= 2)");
  verify_cmd->add_option("--mc", mc, "Monte Carlo L-avoidance with this many samples")
      ->excludes(exact_opt)
      ->check(CLI::PositiveNumber);
  verify_cmd->add_option("--seed", seed, "Sampling seed");
  verify_cmd->add_option("--prime", prime, "Prime for Monte Carlo sampling");
  verify_cmd->add_flag("--json", json_only, "Only print the JSON report");

  auto* sigma = app.add_subcommand("sigma", "Involution of the largest orbit met by a morphism");
  sigma->add_option("FILE", file, "Morphism file")->required();

  auto* make = app.add_subcommand("make-example", "Write a built-in example morphism");
  make->add_option("KIND", kind, "identity_block, ex2, ex3, row_family, koszul8 or ex12")->required();
  make->add_option("n", param, "Family parameter");
  make->add_option("-o,--output", out, "Output file (default: stdout)");

  auto* board = app.add_subcommand("chessboard", "Interleave two morphisms on a chessboard");
  board->add_option("FILE1", file, "First morphism (odd squares)")->required();
  board->add_option("PAT1", pat1, "Block pattern of the first, e.g. 1,3,2")->required();
  board->add_option("FILE2", file2, "Second morphism (even squares)")->required();
  board->add_option("PAT2", pat2, "Block pattern of the second")->required();
  board->add_option("-o,--output", out, "Output file (default: stdout)");
  board->add_option("--d", weights, "Weights to use instead of inferring them");

  auto* check = app.add_subcommand("check", "Property suites");
  check->require_subcommand(1);
  int check_n = 0;
  auto* c_order = check->add_subcommand("order-equivalence", "Moves versus rank tables on all pairs of P(N)");
  c_order->add_option("N", check_n)->required()->check(CLI::Range(1, 16));
  auto* c_dp = check->add_subcommand("dp-equivalence", "DP definition versus characterization");
  c_dp->add_option("N", check_n)->required()->check(CLI::Range(2, 16));
  auto* c_one = check->add_subcommand("one-N-lemma", "No DP matching contains (1,N)");
  c_one->add_option("N", check_n)->required()->check(CLI::Range(4, 16));
  auto* c_lemma = check->add_subcommand("lemmaA", "r_ij >= j - i + 1 - n on the generic rank table");
  c_lemma->add_option("FILE", file)->required();
  auto* c_fig = check->add_subcommand("figures", "Compare computed diagrams with the committed figures");

  int bound_n = 0, bound_r = 0, bound_c = 0;
  auto* bound = app.add_subcommand("bound", "floor(log2(N/(R+C))) + 1");
  bound->add_option("N", bound_n)->required();
  bound->add_option("R", bound_r)->required();
  bound->add_option("C", bound_c)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kInputError;
  }

  try {
    if (*enumerate) {
      for (const auto& s : enumerate_involutions(n, rank)) std::cout << s.str() << "\n";
      return kOk;
    }
    if (*hasse_cmd) return cmd_hasse(n, rank, dp_flag, dot);
    if (*dim) return cmd_dim(n, rank, oracle);
    if (*dp) return cmd_dp(n);
    if (*verify_cmd) return cmd_verify(file, exact, mc, seed, prime, json_only);
    if (*sigma) {
      std::cout << sigma_psi(load_morphism(file).psi).str() << "\n";
      return kOk;
    }
    if (*make) {
      write_or_print(make_example(kind, param), out);
      return kOk;
    }
    if (*board) {
      std::optional<std::vector<int>> d;
      if (!weights.empty()) d = parse_weights(weights);
      auto psi = chessboard(load_morphism(file).psi, BlockPattern::parse(pat1), load_morphism(file2).psi,
                            BlockPattern::parse(pat2), d);
      write_or_print(psi, out);
      return kOk;
    }
    if (*check) {
      if (*c_order) return check_order(check_n);
      if (*c_dp) return check_dp(check_n);
      if (*c_one) return check_one_n(check_n);
      if (*c_lemma) return check_lemma_a(file);
      if (*c_fig) return check_figures();
    }
    if (*bound) {
      std::cout << conjecture_bound(bound_n, bound_r, bound_c) << "\n";
      return kOk;
    }
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  }
  return kInputError;
}
