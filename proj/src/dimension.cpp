#include "borelkit/dimension.hpp"

#include "borelkit/dense_matrix.hpp"
#include "borelkit/errors.hpp"
#include "borelkit/scalar.hpp"

namespace borelkit {
namespace {

std::vector<int> melnikov_f(const std::vector<Transposition>& pairs) {
  std::vector<int> f;
  for (std::size_t t = 1; t < pairs.size(); ++t) {
    int value = 0;
    for (std::size_t p = 0; p < t; ++p) {
      if (pairs[p].hi < pairs[t].hi) ++value;
      if (pairs[p].hi < pairs[t].lo) ++value;
    }
    f.push_back(value);
  }
  return f;
}

void require_full_rank(const Involution& sigma) {
  if (sigma.size() % 2 != 0 || sigma.rank() * 2 != sigma.size())
    throw InputError("DP(N) is defined only for involutions of rank N/2; got " + sigma.str() + " with N=" +
                     std::to_string(sigma.size()));
}

}  // namespace

int melnikov_dim(int n, const std::vector<Transposition>& pairs) {
  int dim = n * static_cast<int>(pairs.size());
  for (const auto& [lo, hi] : pairs) dim += lo - hi;
  for (int v : melnikov_f(pairs)) dim -= v;
  return dim;
}

DimensionRecord melnikov_dim(const Involution& sigma) {
  std::vector<Transposition> pairs(sigma.pairs().begin(), sigma.pairs().end());
  return {sigma, sigma.size(), sigma.rank(), melnikov_f(pairs), melnikov_dim(sigma.size(), pairs)};
}

int commutant_dim_oracle(const Involution& sigma) {
  const int n = sigma.size();
  // Unknowns t_ab for a <= b, numbered row by row.
  std::vector<std::vector<int>> index(n + 1, std::vector<int>(n + 1, -1));
  int unknowns = 0;
  for (int a = 1; a <= n; ++a)
    for (int b = a; b <= n; ++b) index[a][b] = unknowns++;

  auto p = [&](int a, int b) { return a < b && sigma.image(a) == b ? 1 : 0; };
  // (T P - P T)_{xy} = sum_k t_xk p_ky - p_xk t_ky
  DenseMatrix<Rational> system(static_cast<std::size_t>(n) * n, unknowns, Rational(0));
  for (int x = 1; x <= n; ++x)
    for (int y = 1; y <= n; ++y) {
      const std::size_t row = static_cast<std::size_t>(x - 1) * n + (y - 1);
      for (int k = 1; k <= n; ++k) {
        if (p(k, y) && index[x][k] >= 0) system(row, index[x][k]) += 1;
        if (p(x, k) && index[k][y] >= 0) system(row, index[k][y]) -= 1;
      }
    }
  const int commutant = unknowns - static_cast<int>(exact_rank(system));
  return n * (n + 1) / 2 - commutant;
}

bool is_dp(const Involution& sigma, DpMethod method) {
  require_full_rank(sigma);
  std::vector<Transposition> pairs(sigma.pairs().begin(), sigma.pairs().end());
  if (method == DpMethod::characterization) {
    for (std::size_t t = 1; t < pairs.size(); ++t)
      if (pairs[t - 1].hi >= pairs[t].hi) return false;
    return true;
  }
  const int full = melnikov_dim(sigma.size(), pairs);
  for (std::size_t q = 0; q < pairs.size(); ++q) {
    std::vector<Transposition> rest;
    for (std::size_t t = 0; t < pairs.size(); ++t)
      if (t != q) rest.push_back(pairs[t]);
    if (full - melnikov_dim(sigma.size(), rest) != 1) return false;
  }
  return true;
}

std::vector<Involution> enumerate_dp(int n) {
  if (n < 2 || n % 2 != 0) throw InputError("DP(N) requires an even N >= 2");
  std::vector<Involution> out;
  for (auto& sigma : enumerate_involutions(n, n / 2))
    if (is_dp(sigma, DpMethod::definition)) out.push_back(std::move(sigma));
  return out;
}

LemmaReport check_1n_lemma(int n) {
  if (n < 4 || n % 2 != 0) throw InputError("the (1,N) lemma needs an even N >= 4");
  LemmaReport report;
  for (const auto& sigma : enumerate_involutions(n, n / 2)) {
    if (!sigma.contains({1, n})) continue;
    ++report.checked;
    if (is_dp(sigma, DpMethod::definition)) report.counterexamples.push_back(sigma);
  }
  return report;
}

}  // namespace borelkit
