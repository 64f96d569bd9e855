#include <chrono>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "borelkit/constructions.hpp"
#include "borelkit/dimension.hpp"
#include "borelkit/errors.hpp"
#include "borelkit/figures.hpp"
#include "borelkit/morphism_io.hpp"
#include "borelkit/order.hpp"
#include "support.hpp"

using namespace borelkit;

namespace {

struct Outcome {
  bool pass = true;
  std::vector<std::string> notes;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      notes.push_back("FAILED " + what);
    }
  }
  void note(const std::string& what) { notes.push_back(what); }
};

std::string weights_str(const std::vector<int>& d) {
  std::string out = "(";
  for (std::size_t k = 0; k < d.size(); ++k) out += (k ? "," : "") + std::to_string(d[k]);
  return out + ")";
}

std::set<std::string> labels(const HasseDiagram& h) {
  std::set<std::string> out;
  for (const auto& e : h.edges) out.insert(e.label);
  return out;
}

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

// The 10 x 10 board: ex3 fills the odd squares, ex2 the even ones.
GradedMorphism board() {
  return chessboard(make_example("ex3"), BlockPattern{{1, 3, 2}}, make_example("ex2"), BlockPattern{{1, 2, 1}});
}

const std::vector<int> kPrintedBoardWeights{0, 0, -1, -1, -1, -1, -1, -1, -1, -1};

Outcome criterion1() {
  Outcome o;
  struct Case {
    FigureFixture fixture;
    std::vector<Involution> nodes;
    std::size_t count;
    std::set<std::string> allowed;
  };
  std::vector<Case> cases{
      {figure_p4(), enumerate_involutions(4), 9, {"I", "II", "III", "IV", "V"}},
      {figure_rp6(), enumerate_involutions(6, 3), 15, {"III", "V"}},
      {figure_dp8(), enumerate_dp(8), 14, {"V"}},
  };
  for (const auto& c : cases) {
    auto h = hasse(c.nodes);
    o.require(h.nodes.size() == c.count, c.fixture.name + " node count " + std::to_string(h.nodes.size()));
    for (const auto& d : compare_with_fixture(h, c.fixture)) o.require(false, c.fixture.name + ": " + d);
    for (const auto& l : labels(h)) o.require(c.allowed.contains(l), c.fixture.name + " unexpected label " + l);
    o.note(c.fixture.name + ": " + std::to_string(h.nodes.size()) + " nodes, " + std::to_string(h.edges.size()) +
           " edges");
  }
  return o;
}

Outcome criterion2() {
  Outcome o;
  auto start = std::chrono::steady_clock::now();
  for (int n = 3; n <= 6; ++n) {
    auto all = enumerate_involutions(n);
    MoveClosure closure;
    long pairs = 0, mismatches = 0;
    for (const auto& a : all)
      for (const auto& b : all) {
        ++pairs;
        if (closure.leq(a, b) != leq_by_rank(a, b)) ++mismatches;
      }
    o.require(mismatches == 0, "N=" + std::to_string(n) + ": " + std::to_string(mismatches) + " mismatches");
    o.note("N=" + std::to_string(n) + ": " + std::to_string(pairs) + " pairs");
  }
  double t = seconds_since(start);
  o.require(t < 120, "runtime " + std::to_string(t) + " s");
  return o;
}

Outcome criterion3() {
  Outcome o;
  for (int n = 2; n <= 8; ++n) {
    int mismatches = 0;
    auto all = enumerate_involutions(n);
    for (const auto& s : all)
      if (melnikov_dim(s).dim != commutant_dim_oracle(s)) ++mismatches;
    o.require(mismatches == 0, "N=" + std::to_string(n) + ": " + std::to_string(mismatches) + " mismatches");
    if (n == 8) o.note("N=8: " + std::to_string(all.size()) + " non-identity involutions");
  }
  return o;
}

Outcome criterion4() {
  Outcome o;
  const std::map<int, std::size_t> expected{{4, 2}, {6, 5}, {8, 14}};
  for (int n = 4; n <= 10; n += 2) {
    auto all = enumerate_involutions(n, n / 2);
    int bad = 0;
    for (const auto& s : all)
      if (is_dp(s, DpMethod::definition) != is_dp(s, DpMethod::characterization)) ++bad;
    o.require(bad == 0, "N=" + std::to_string(n) + ": " + std::to_string(bad) + " disagreements");
    auto size = enumerate_dp(n).size();
    if (auto it = expected.find(n); it != expected.end())
      o.require(size == it->second, "|DP(" + std::to_string(n) + ")| = " + std::to_string(size));
    o.note("N=" + std::to_string(n) + ": " + std::to_string(all.size()) + " matchings, |DP| = " +
           std::to_string(size));
  }
  return o;
}

Outcome criterion5() {
  Outcome o;
  for (int n = 4; n <= 10; n += 2) {
    auto r = check_1n_lemma(n);
    o.require(r.counterexamples.empty(), "N=" + std::to_string(n) + ": " +
                                             std::to_string(r.counterexamples.size()) + " counterexamples");
    o.note("N=" + std::to_string(n) + ": " + std::to_string(r.checked) + " checked");
  }
  return o;
}

struct Reference {
  std::string name;
  PolyMatrix matrix;
  std::vector<int> stated_d;
  std::optional<std::string> stated_sigma;
};

std::vector<Reference> references() {
  std::vector<Reference> out;
  for (int n = 1; n <= 6; ++n) {
    std::string sigma;
    for (int k = 1; k <= n; ++k) sigma += "(" + std::to_string(k) + "," + std::to_string(n + k) + ")";
    out.push_back({"identity_block " + std::to_string(n), identity_block(n).matrix(), std::vector<int>(2 * n, 0), sigma});
  }
  out.push_back({"ex2", make_example("ex2").matrix(), {0, 0, 0, 0}, "(1,2)(3,4)"});
  out.push_back({"ex3", make_example("ex3").matrix(), {0, -1, -1, -1, -1, -1}, "(1,2)(3,5)(4,6)"});
  for (int n = 2; n <= 6; ++n) {
    std::vector<int> d(2 * n, -n + 2);
    d[0] = 0;
    out.push_back({"row_family " + std::to_string(n), row_family(n).matrix(), d, std::nullopt});
  }
  out.push_back({"board", board().matrix(), kPrintedBoardWeights, std::nullopt});
  out.push_back({"koszul8", koszul8().matrix(), std::vector<int>(8, 0), "(1,2)(3,5)(4,6)(7,8)"});
  std::vector<int> d12(12, -1);
  d12[0] = d12[1] = 0;
  out.push_back({"ex12", ex12().matrix(), d12, std::nullopt});
  return out;
}

Outcome criterion6() {
  Outcome o;
  for (const auto& ex : references()) {
    GradedMorphism psi(ex.stated_d, 1, ex.matrix, GradedMorphism::Grading::report);
    o.require((psi.matrix() * psi.matrix()).is_zero(), ex.name + " square-zero");
    for (const auto& v : psi.grading_violations())
      o.require(false, ex.name + " grading against d=" + weights_str(ex.stated_d) + ": " + v);
    int rank = generic_rank(psi.matrix());
    o.require(rank == psi.half(), ex.name + " generic rank " + std::to_string(rank));
    if (ex.stated_sigma && rank == psi.half()) {
      auto s = sigma_psi(psi).str();
      o.require(s == *ex.stated_sigma, ex.name + " sigma " + s + " != " + *ex.stated_sigma);
    }
  }
  auto s12 = sigma_psi(ex12()).str();
  o.require(s12 == "(1,2)(3,6)(4,7)(5,9)(8,11)(10,12)", "ex12 regression sigma " + s12);
  o.note("ex12 sigma (regression value): " + s12);
  return o;
}

Outcome criterion7() {
  Outcome o;
  for (const char* kind : {"ex2", "ex3"}) {
    auto r = check_l_avoidance(make_example(kind), AvoidanceMode::exact());
    o.require(r.status == AvoidanceReport::Status::certified && r.minor_gcd && r.minor_gcd->is_constant(),
              std::string(kind) + " exact: " + to_string(r.status));
  }
  for (const auto& [name, psi] : {std::pair{"koszul8", koszul8()}, std::pair{"ex12", ex12()}}) {
    auto r = check_l_avoidance(psi, AvoidanceMode::monte_carlo(10000));
    o.require(r.status == AvoidanceReport::Status::inconclusive && r.violations == 0 && r.trials == 10000,
              std::string(name) + " Monte Carlo: " + to_string(r.status));
    o.note(std::string(name) + ": " + std::to_string(r.trials) + " samples, " + std::to_string(r.violations) +
           " violations, " + to_string(r.status));
  }
  PolyMatrix m(2, 2);
  m.set(1, 2, Polynomial::variable(2, 1));
  auto r = check_l_avoidance(GradedMorphism({0, 0}, 1, m), AvoidanceMode::exact());
  o.require(r.status == AvoidanceReport::Status::violated && r.witness.has_value(), "single-entry refutation");
  if (r.witness) {
    std::string w = "(";
    for (std::size_t k = 0; k < r.witness->size(); ++k) w += (k ? ":" : "") + to_string((*r.witness)[k]);
    o.note("single-entry witness " + w + ")");
  }
  return o;
}

Outcome criterion8() {
  Outcome o;
  auto psi = board();
  const auto& fixture = chessboard_board_fixture();
  int cells = 0;
  for (int i = 1; i <= 10; ++i)
    for (int j = 1; j <= 10; ++j) {
      bool got = i < j && !psi.matrix().at(i, j).is_zero();
      bool want = i < j && !fixture.at(i, j).is_zero();
      if (got != want || (i < j && psi.matrix().at(i, j) != fixture.at(i, j))) ++cells;
    }
  o.require(cells == 0, std::to_string(cells) + " cells differ from the printed board");
  o.require(psi.weights() == kPrintedBoardWeights,
            "inferred d=" + weights_str(psi.weights()) + ", printed d=" + weights_str(kPrintedBoardWeights));
  auto report = verify(psi, AvoidanceMode::exact());
  o.require(report.generic_rank == 5 && report.verified(), "verification, generic rank " +
                                                               std::to_string(report.generic_rank));
  o.note("sigma " + (report.sigma ? report.sigma->str() : std::string("none")) + ", L-avoidance " +
         to_string(report.avoidance.status));
  try {
    chessboard(make_example("ex2"), BlockPattern{{1, 2, 1}}, make_example("ex3"), BlockPattern{{1, 3, 2}});
    o.note("ex2 on the odd squares also grades");
  } catch (const InputError& e) {
    o.note(std::string("ex2 on the odd squares: ") + e.what());
  }
  return o;
}

Outcome criterion9() {
  Outcome o;
  struct Row {
    std::string name;
    GradedMorphism psi;
    int stated_sum;
  };
  std::vector<Row> rows{{"ex2", make_example("ex2"), 2},
                        {"ex3", make_example("ex3"), 3},
                        {"koszul8", koszul8(), 2},
                        {"board", board(), 5},
                        {"ex12", ex12(), 3}};
  for (const auto& row : rows) {
    auto z = zero_pattern(row.psi);
    int bound = conjecture_bound(row.psi.size(), z.rows, z.cols);
    o.require(z.rows + z.cols == row.stated_sum, row.name + " R+C=" + std::to_string(z.rows + z.cols));
    o.require(bound == row.psi.nvars(), row.name + " bound " + std::to_string(bound) + " != r=" +
                                            std::to_string(row.psi.nvars()));
    o.note("(" + std::to_string(row.psi.size()) + "," + std::to_string(z.rows) + "," + std::to_string(z.cols) +
           ") -> " + std::to_string(bound));
  }
  return o;
}

Outcome criterion10() {
  Outcome o;
  std::mt19937_64 rng(2024);
  std::vector<std::pair<std::string, GradedMorphism>> examples{
      {"identity_block", identity_block(3)}, {"ex2", make_example("ex2")}, {"ex3", make_example("ex3")},
      {"row_family", row_family(5)},     {"board", board()},             {"koszul8", koszul8()},
      {"ex12", ex12()}};

  auto start = std::chrono::steady_clock::now();
  for (const auto& [name, psi] : examples) {
    auto back = parse_morphism(morphism_to_json(psi)).psi;
    o.require(back.matrix() == psi.matrix() && back.weights() == psi.weights(), name + " file round trip");
    for (const auto& [ij, p] : psi.matrix().entries())
      o.require(Polynomial::parse(p.str(), psi.nvars()) == p, name + " polynomial round trip");
  }
  for (int n = 2; n <= 7; ++n)
    for (const auto& s : enumerate_involutions(n))
      o.require(to_involution(pattern_from_rank_table(rank_table(s))) == s, "table round trip " + s.str());
  o.note("round trips " + std::to_string(seconds_since(start)) + " s");

  start = std::chrono::steady_clock::now();
  int conjugations = 0;
  for (const auto& [name, psi] : examples) {
    for (int t = 0; t < 100; ++t) {
      auto x = psi.matrix().evaluate(testing::random_point(rng, psi.nvars()));
      auto b = testing::random_borel(rng, psi.size());
      auto y = b * x * testing::upper_inverse(b);
      o.require(rank_table(y) == rank_table(x), name + " conjugation invariance");
      ++conjugations;
    }
  }
  o.note(std::to_string(conjugations) + " conjugations " + std::to_string(seconds_since(start)) + " s");

  start = std::chrono::steady_clock::now();
  int perturbations = 0;
  for (const auto& [name, psi] : examples) {
    const auto& m = psi.matrix();
    for (int i = 2; i <= psi.size(); ++i)
      for (int j = 1; j < i; ++j) {
        auto out = apply_row_operation(m, i, j, testing::random_polynomial(rng, psi.nvars(), 2, 3));
        o.require((out * out).is_zero(), name + " R square-zero");
        ++perturbations;
      }
    for (int i = 1; i <= psi.size(); ++i) {
      auto q = testing::random_polynomial(rng, psi.nvars(), 2, 3);
      if (q.is_zero()) continue;
      auto out = apply_diagonal_operation(m, i, q).matrix;
      o.require((out * out).is_zero(), name + " D square-zero");
      ++perturbations;
    }
  }
  o.note(std::to_string(perturbations) + " perturbations " + std::to_string(seconds_since(start)) + " s");

  for (const auto& [name, psi] : examples)
    o.require(lemma_a_check(generic_rank_table(psi.matrix()), psi.half()), name + " Lemma A");
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    const char* title;
    Outcome (*run)();
  };
  const Criterion criteria[] = {
      {"figure regression", criterion1},  {"order equivalence", criterion2},  {"dimension oracle", criterion3},
      {"DP equivalence", criterion4},     {"(1,N) lemma", criterion5},        {"example suite", criterion6},
      {"L-avoidance", criterion7},        {"chessboard", criterion8},         {"bound table", criterion9},
      {"property suites", criterion10},
  };
  int failures = 0;
  int index = 0;
  for (const auto& c : criteria) {
    ++index;
    auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.require(false, std::string("exception: ") + e.what());
    }
    std::ostringstream line;
    line.precision(2);
    line << std::fixed << "criterion " << index << " [" << c.title << "]: " << (o.pass ? "PASS" : "FAIL") << " ("
         << seconds_since(start) << " s)";
    std::cout << line.str() << "\n";
    for (const auto& n : o.notes) std::cout << "    " << n << "\n";
    if (!o.pass) ++failures;
  }
  std::cout << (10 - failures) << "/10 criteria pass\n";
  return failures == 0 ? 0 : 1;
}
