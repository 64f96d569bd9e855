#include "borelkit/morphism.hpp"

#include <algorithm>
#include <limits>
#include <random>
#include <sstream>

#include "borelkit/errors.hpp"

namespace borelkit {
namespace {

std::string at(int i, int j) { return "(" + std::to_string(i) + "," + std::to_string(j) + ")"; }

// Polynomial matrix with coefficients reduced mod p, for fast sampling.
class ModularMatrix {
 public:
  ModularMatrix(const PolyMatrix& m, std::uint64_t prime) : n_(m.size()), prime_(prime) {
    for (const auto& [ij, p] : m.entries()) {
      Entry e{ij.first - 1, ij.second - 1, {}};
      for (const auto& [mono, c] : p.terms()) e.terms.emplace_back(ModP::from_rational(c, prime), mono);
      entries_.push_back(std::move(e));
    }
  }

  DenseMatrix<ModP> evaluate(const std::vector<ModP>& point) const {
    DenseMatrix<ModP> out(n_, n_, ModP(0, prime_));
    for (const auto& e : entries_) {
      ModP total(0, prime_);
      for (const auto& [c, mono] : e.terms) {
        ModP v = c;
        for (std::size_t k = 0; k < mono.size(); ++k)
          for (unsigned p = 0; p < mono[k]; ++p) v = v * point[k];
        total = total + v;
      }
      out(e.row, e.col) = total;
    }
    return out;
  }

 private:
  struct Entry {
    int row;
    int col;
    std::vector<std::pair<ModP, Monomial>> terms;
  };
  int n_;
  std::uint64_t prime_;
  std::vector<Entry> entries_;
};

std::vector<int> nonzero_rows(const PolyMatrix& m) {
  std::vector<int> out;
  for (const auto& [ij, p] : m.entries())
    if (out.empty() || out.back() != ij.first) out.push_back(ij.first);
  return out;
}

std::vector<int> nonzero_cols(const PolyMatrix& m) {
  std::vector<int> out;
  for (const auto& [ij, p] : m.entries()) out.push_back(ij.second);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

// Calls visit(subset) for every k-subset of items, in lexicographic order.
// Stops early when visit returns false.
template <class F>
bool for_each_subset(const std::vector<int>& items, std::size_t k, F&& visit) {
  if (k > items.size()) return true;
  std::vector<std::size_t> idx(k);
  for (std::size_t a = 0; a < k; ++a) idx[a] = a;
  std::vector<int> chosen(k);
  for (;;) {
    for (std::size_t a = 0; a < k; ++a) chosen[a] = items[idx[a]];
    if (!visit(chosen)) return false;
    std::size_t a = k;
    while (a > 0 && idx[a - 1] == items.size() - k + a - 1) --a;
    if (a == 0) return true;
    ++idx[a - 1];
    for (std::size_t b = a; b < k; ++b) idx[b] = idx[b - 1] + 1;
  }
}

std::vector<mpz_class> divisors(const mpz_class& value) {
  mpz_class v = abs(value);
  std::vector<mpz_class> out;
  for (mpz_class d = 1; d * d <= v; ++d) {
    if (v % d == 0) {
      out.push_back(d);
      if (d * d != v) out.push_back(v / d);
    }
  }
  return out;
}

// A rational root (t : 1) of a homogeneous bivariate polynomial with no
// x or y factor, when one exists and the search is small enough.
std::optional<Rational> rational_root(const Polynomial& g) {
  const int deg = g.total_degree();
  std::vector<Rational> coeff(deg + 1);  // coefficient of t^a
  for (const auto& [m, c] : g.terms()) coeff[m[0]] = c;
  mpz_class common = 1;
  for (const auto& c : coeff) common = lcm(common, c.get_den());
  std::vector<mpz_class> ints;
  for (const auto& c : coeff) ints.push_back(mpz_class(c * common));
  const mpz_class limit = 10'000'000;
  if (abs(ints.front()) > limit || abs(ints.back()) > limit) return std::nullopt;
  for (const auto& p : divisors(ints.front()))
    for (const auto& q : divisors(ints.back()))
      for (int sign : {1, -1}) {
        Rational t(sign * p, q);
        t.canonicalize();
        Rational value = 0;
        for (int a = deg; a >= 0; --a) value = value * t + coeff[a];
        if (sgn(value) == 0) return t;
      }
  return std::nullopt;
}

AvoidanceReport exact_avoidance(const GradedMorphism& psi) {
  AvoidanceReport report;
  const int n = psi.half();
  const auto& m = psi.matrix();
  if (psi.nvars() >= 3)
    throw InputError("exact L-avoidance is only supported for r <= 2; use Monte Carlo mode for r = " +
                     std::to_string(psi.nvars()));
  if (psi.nvars() == 1) {
    report.method = "evaluation";
    report.trials = 1;
    std::vector<Rational> point{1};
    int rank = static_cast<int>(exact_rank(m.evaluate(point)));
    if (rank < n) {
      report.status = AvoidanceReport::Status::violated;
      report.violations = 1;
      report.witness = point;
      report.detail = "rank " + std::to_string(rank) + " < " + std::to_string(n) + " at (1)";
    } else {
      report.status = AvoidanceReport::Status::certified;
    }
    return report;
  }

  report.method = "minor-gcd";
  if (!psi.grading_violations().empty()) {
    report.status = AvoidanceReport::Status::inconclusive;
    report.detail = "grading violated; maximal minors need not be homogeneous";
    return report;
  }
  std::optional<Polynomial> g;
  auto rows = nonzero_rows(m);
  auto cols = nonzero_cols(m);
  for_each_subset(rows, n, [&](const std::vector<int>& r) {
    return for_each_subset(cols, n, [&](const std::vector<int>& c) {
      Polynomial det = minor(m, r, c);
      if (det.is_zero()) return true;
      std::vector<Polynomial> pair{det};
      if (g) pair.push_back(*g);
      g = bivariate_homogeneous_gcd(pair);
      return !g->is_constant();
    });
  });
  if (!g) {
    report.status = AvoidanceReport::Status::violated;
    report.violations = 1;
    report.witness = std::vector<Rational>{1, 0};
    report.detail = "every maximal minor vanishes identically (generic rank below N/2)";
    return report;
  }
  report.minor_gcd = *g;
  if (g->is_constant()) {
    report.status = AvoidanceReport::Status::certified;
    report.detail = "maximal minors have constant gcd";
    return report;
  }
  report.status = AvoidanceReport::Status::violated;
  report.violations = 1;
  report.detail = "maximal minors share the factor " + g->str(psi.names());
  // Roots of g are exactly the rank-drop points of P^1.
  const Monomial x_only{static_cast<unsigned>(g->total_degree()), 0};
  const auto& terms = g->terms();
  bool y_divides = !terms.contains(x_only);
  bool x_divides = std::all_of(terms.begin(), terms.end(), [](const auto& t) { return t.first[0] > 0; });
  if (y_divides) {
    report.witness = std::vector<Rational>{1, 0};
  } else if (x_divides) {
    report.witness = std::vector<Rational>{0, 1};
  } else if (auto t = rational_root(*g)) {
    report.witness = std::vector<Rational>{*t, 1};
  } else {
    report.detail += " (no rational root; the rank drops on its zero set)";
  }
  return report;
}

AvoidanceReport monte_carlo_avoidance(const GradedMorphism& psi, const AvoidanceMode& mode) {
  if (!is_prime(mode.prime)) throw InputError("modulus " + std::to_string(mode.prime) + " is not prime");
  if (mode.prime >= (1ULL << 63)) throw InputError("prime must be below 2^63");
  if (mode.trials < 1) throw InputError("Monte Carlo mode needs at least one trial");
  AvoidanceReport report;
  report.method = "monte-carlo";
  const int n = psi.half();
  const int r = psi.nvars();
  ModularMatrix reduced(psi.matrix(), mode.prime);
  std::mt19937_64 rng(mode.seed);
  std::uniform_int_distribution<std::uint64_t> dist(0, mode.prime - 1);
  std::vector<ModP> point(r, ModP(0, mode.prime));
  for (int trial = 0; trial < mode.trials; ++trial) {
    bool all_zero = true;
    do {
      for (auto& v : point) {
        v = ModP(dist(rng), mode.prime);
        if (v.value() != 0) all_zero = false;
      }
    } while (all_zero);
    ++report.trials;
    if (static_cast<int>(exact_rank(reduced.evaluate(point))) >= n) continue;
    // Confirm over Q at the integer lift of the sample.
    std::vector<Rational> lift;
    for (const auto& v : point) lift.emplace_back(mpz_class(std::to_string(v.value())));
    if (static_cast<int>(exact_rank(psi.matrix().evaluate(lift))) < n) {
      report.status = AvoidanceReport::Status::violated;
      report.violations = 1;
      report.witness = lift;
      report.detail = "rank drops below " + std::to_string(n) + " at a sampled point";
      return report;
    }
    ++report.modular_false_alarms;
  }
  report.status = AvoidanceReport::Status::inconclusive;
  report.detail = "no rank drop in " + std::to_string(report.trials) + " samples";
  return report;
}

}  // namespace

GradedMorphism::GradedMorphism(std::vector<int> d, int multiplier, PolyMatrix matrix, Grading mode,
                               VariableNames names)
    : d_(std::move(d)), multiplier_(multiplier), matrix_(std::move(matrix)), names_(std::move(names)) {
  std::vector<std::string> structural;
  const int n = matrix_.size();
  if (n % 2 != 0) structural.push_back("N=" + std::to_string(n) + " is not even");
  if (multiplier_ < 1) structural.push_back("multiplier m must be positive");
  if (static_cast<int>(d_.size()) != n)
    structural.push_back("d has " + std::to_string(d_.size()) + " entries, expected " + std::to_string(n));
  for (std::size_t k = 1; k < d_.size(); ++k)
    if (d_[k] > d_[k - 1])
      structural.push_back("d is not nonincreasing at positions " + std::to_string(k) + "," + std::to_string(k + 1));
  if (matrix_.is_zero()) structural.push_back("all entries are zero");

  if (structural.empty()) {
    for (const auto& [ij, p] : matrix_.entries()) {
      const int want = required_degree(ij.first, ij.second);
      auto h = p.homogeneity();
      if (h.kind == Homogeneity::Kind::inhomogeneous)
        grading_violations_.push_back("entry " + at(ij.first, ij.second) + " is not homogeneous");
      else if (want < 0)
        grading_violations_.push_back("entry " + at(ij.first, ij.second) + " must vanish (required degree " +
                                      std::to_string(want) + ")");
      else if (h.degree != want)
        grading_violations_.push_back("entry " + at(ij.first, ij.second) + " has degree " + std::to_string(h.degree) +
                                      ", expected " + std::to_string(want));
    }
  }
  std::vector<std::string> fatal = structural;
  if (mode == Grading::strict) fatal.insert(fatal.end(), grading_violations_.begin(), grading_violations_.end());
  if (!fatal.empty()) {
    std::string msg = "invalid graded morphism:";
    for (const auto& v : fatal) msg += "\n  " + v;
    throw InputError(msg);
  }
}

int GradedMorphism::required_degree(int i, int j) const { return multiplier_ * (d_[i - 1] - d_[j - 1] + 1); }

std::vector<int> infer_grading(const PolyMatrix& matrix, int multiplier) {
  if (multiplier < 1) throw InputError("multiplier m must be positive");
  const int n = matrix.size();
  // d_i - d_j along each support edge.
  std::vector<std::vector<std::pair<int, int>>> adj(n + 1);
  for (const auto& [ij, p] : matrix.entries()) {
    auto h = p.homogeneity();
    if (h.kind != Homogeneity::Kind::homogeneous)
      throw InputError("infer_grading: entry " + at(ij.first, ij.second) + " is not homogeneous");
    if (h.degree % multiplier != 0)
      throw InputError("infer_grading: degree of entry " + at(ij.first, ij.second) + " is not a multiple of m");
    int diff = h.degree / multiplier - 1;
    adj[ij.first].push_back({ij.second, diff});
    adj[ij.second].push_back({ij.first, -diff});
  }

  std::vector<int> comp(n + 1, -1), rel(n + 1, 0);
  int components = 0;
  for (int start = 1; start <= n; ++start) {
    if (comp[start] >= 0) continue;
    comp[start] = components;
    std::vector<int> stack{start};
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (auto [w, diff] : adj[v]) {
        // diff = d_v - d_w
        int expected = rel[v] - diff;
        if (comp[w] < 0) {
          comp[w] = components;
          rel[w] = expected;
          stack.push_back(w);
        } else if (rel[w] != expected) {
          throw InputError("infer_grading: inconsistent degrees around a cycle through " +
                           at(std::min(v, w), std::max(v, w)));
        }
      }
    }
    ++components;
  }

  // Offsets c per component with d_k = c_comp(k) + rel_k and d_k >= d_{k+1}:
  // c_B <= c_A + (rel_k - rel_{k+1}). The greatest solution with c_0 = 0 is
  // the shortest-path distance from component 0.
  struct Edge {
    int from, to, weight;
  };
  std::vector<Edge> edges;
  for (int k = 1; k < n; ++k) edges.push_back({comp[k], comp[k + 1], rel[k] - rel[k + 1]});
  constexpr long long kInf = std::numeric_limits<long long>::max() / 4;
  std::vector<long long> dist(components, kInf);
  dist[comp[1]] = 0;
  for (int round = 0; round < components; ++round) {
    bool changed = false;
    for (const auto& e : edges) {
      if (dist[e.from] == kInf) continue;
      if (dist[e.from] + e.weight < dist[e.to]) {
        dist[e.to] = dist[e.from] + e.weight;
        changed = true;
      }
    }
    if (!changed) break;
    if (round + 1 == components) throw InputError("infer_grading: no nonincreasing weight vector exists");
  }
  if (dist[comp[1]] != 0) throw InputError("infer_grading: no nonincreasing weight vector exists");
  std::vector<int> d(n);
  for (int k = 1; k <= n; ++k) d[k - 1] = static_cast<int>(dist[comp[k]] + rel[k]);
  return d;
}

ZeroPattern zero_pattern(const PolyMatrix& matrix) {
  const int n = matrix.size();
  int lowest_row = 0, first_col = n + 1;
  for (const auto& [ij, p] : matrix.entries()) {
    lowest_row = std::max(lowest_row, ij.first);
    first_col = std::min(first_col, ij.second);
  }
  return {n - lowest_row, first_col - 1};
}

Involution sigma_psi(const GradedMorphism& psi) {
  const int rank = generic_rank(psi.matrix());
  if (rank != psi.half())
    throw InputError("rank-deficient morphism: generic rank " + std::to_string(rank) + " < N/2 = " +
                     std::to_string(psi.half()));
  try {
    return to_involution(pattern_from_rank_table(generic_rank_table(psi.matrix())));
  } catch (const InputError& e) {
    throw InternalError(std::string("generic rank table is not an orbit table: ") + e.what());
  }
}

std::string to_string(AvoidanceReport::Status status) {
  switch (status) {
    case AvoidanceReport::Status::certified: return "certified";
    case AvoidanceReport::Status::violated: return "violated";
    case AvoidanceReport::Status::inconclusive: return "inconclusive";
  }
  return "?";
}

AvoidanceReport check_l_avoidance(const GradedMorphism& psi, const AvoidanceMode& mode) {
  return mode.kind == AvoidanceMode::Kind::exact ? exact_avoidance(psi) : monte_carlo_avoidance(psi, mode);
}

bool lemma_a_check(const RankTable& table, int n) {
  const int size = table.size();
  for (int i = 1; i <= size; ++i)
    for (int j = i + 1; j <= size; ++j)
      if (table.at(i, j) < j - i + 1 - n) return false;
  return true;
}

bool VerificationReport::verified() const {
  return square_zero && grading_ok && sigma.has_value() && lemma_a_ok &&
         avoidance.status != AvoidanceReport::Status::violated;
}

VerificationReport verify(const GradedMorphism& psi, const AvoidanceMode& mode) {
  VerificationReport report;
  const auto& m = psi.matrix();
  report.square_zero = (m * m).is_zero();
  report.grading_violations = psi.grading_violations();
  report.grading_ok = report.grading_violations.empty();
  report.generic_table = generic_rank_table(m);
  report.generic_rank = report.generic_table.at(1, psi.size());
  if (report.generic_rank == psi.half()) {
    try {
      report.sigma = to_involution(pattern_from_rank_table(report.generic_table));
    } catch (const InputError&) {
      // Only possible when the matrix is not square-zero.
      if (report.square_zero) throw;
    }
  }
  report.zero = zero_pattern(m);
  report.lemma_a_ok = lemma_a_check(report.generic_table, psi.half());
  report.avoidance = check_l_avoidance(psi, mode);
  return report;
}

PolyMatrix apply_row_operation(const PolyMatrix& m, int i, int j, const Polynomial& u) {
  const int n = m.size();
  if (i < 1 || i > n || j < 1 || j > n) throw InputError("R_{i,j}: index out of range");
  if (i <= j) throw InputError("R_{i,j}(u) requires i > j to stay in the Borel orbit");
  if (u.nvars() != m.nvars()) throw InputError("R_{i,j}: u lives in a different ring; extend the matrix first");
  PolyMatrix out = m;
  for (int c = i + 1; c <= n; ++c) {
    Polynomial v = m.at(i, c);
    if (!v.is_zero()) out.set(j, c, out.at(j, c) + u * v);
  }
  for (int r = 1; r < j; ++r) {
    Polynomial v = m.at(r, j);
    if (!v.is_zero()) out.set(r, i, out.at(r, i) - u * v);
  }
  return out;
}

ScaledMatrix apply_diagonal_operation(const PolyMatrix& m, int i, const Polynomial& q) {
  const int n = m.size();
  if (i < 1 || i > n) throw InputError("D_i: index out of range");
  if (q.is_zero()) throw InputError("D_i(q) requires q to be nonzero");
  if (q.nvars() != m.nvars()) throw InputError("D_i: q lives in a different ring");
  bool exact = true;
  for (int r = 1; r < i && exact; ++r)
    if (!q.divides(m.at(r, i))) exact = false;

  PolyMatrix out(n, m.nvars());
  for (const auto& [ij, p] : m.entries()) {
    auto [r, c] = ij;
    Polynomial v = p;
    if (r == i) v = v * q;
    if (c == i) v = exact ? v.divide_exact(q) : v;
    if (!exact && c != i) v = v * q;
    out.set(r, c, std::move(v));
  }
  return {std::move(out), exact ? unit_like(q) : q, q};
}

int conjecture_bound(int n, int rows, int cols) {
  if (n < 2 || n % 2 != 0) throw InputError("bound: N must be even and positive");
  if (rows < 1 || cols < 1) throw InputError("bound: R and C must be at least 1");
  if (rows + cols > n) throw InputError("bound: R + C must not exceed N");
  const long long s = rows + cols;
  int k = 0;
  while (s << (k + 1) <= n) ++k;
  return k + 1;
}

}  // namespace borelkit
