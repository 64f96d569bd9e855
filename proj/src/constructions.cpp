#include "borelkit/constructions.hpp"

#include <charconv>
#include <numeric>

#include "borelkit/errors.hpp"

namespace borelkit {
namespace {

// Builds a morphism from "i j poly" triples in the default variable names.
GradedMorphism build(int n, int nvars, std::vector<int> d,
                     std::initializer_list<std::tuple<int, int, const char*>> entries) {
  PolyMatrix m(n, nvars);
  for (const auto& [i, j, text] : entries) m.set(i, j, Polynomial::parse(text, nvars));
  return GradedMorphism(std::move(d), 1, std::move(m));
}

Polynomial x_pow_y_pow(unsigned a, unsigned b) { return Polynomial::monomial(1, {a, b}); }

}  // namespace

GradedMorphism identity_block(int n) {
  if (n < 1) throw InputError("identity_block(n) needs n >= 1");
  PolyMatrix m(2 * n, 1);
  for (int k = 1; k <= n; ++k) m.set(k, n + k, Polynomial::variable(1, 1));
  return GradedMorphism(std::vector<int>(2 * n, 0), 1, std::move(m));
}

GradedMorphism row_family(int n) {
  if (n < 2) throw InputError("row_family(n) needs n >= 2");
  const int size = 2 * n;
  PolyMatrix m(size, 2);
  for (int k = 2; k <= n + 1; ++k) m.set(1, k, x_pow_y_pow(n + 1 - k, k - 2));
  for (int k = 2; k <= n; ++k) m.set(k, n + k, Polynomial::variable(2, 2));
  for (int k = 3; k <= n + 1; ++k) m.set(k, n + k - 1, -Polynomial::variable(2, 1));
  std::vector<int> d(size, -n + 2);
  d[0] = 0;
  return GradedMorphism(std::move(d), 1, std::move(m));
}

GradedMorphism koszul8() {
  return build(8, 3, {0, 0, 0, 0, 0, 0, 0, 0},
               {{1, 2, "x"}, {1, 3, "y"}, {1, 4, "z"},
                {2, 5, "y"}, {2, 6, "-z"},
                {3, 5, "-x"}, {3, 7, "z"},
                {4, 6, "x"}, {4, 7, "-y"},
                {5, 8, "z"}, {6, 8, "y"}, {7, 8, "x"}});
}

GradedMorphism ex12() {
  std::vector<int> d(12, -1);
  d[0] = d[1] = 0;
  return build(12, 3, std::move(d),
               {{1, 2, "x"}, {1, 3, "y^2"}, {1, 4, "y*z"}, {1, 5, "z^2"},
                {2, 6, "y^2"}, {2, 7, "y*z"}, {2, 9, "z^2"},
                {3, 6, "-x"}, {3, 8, "-z"},
                {4, 7, "-x"}, {4, 8, "y"}, {4, 10, "z"},
                {5, 9, "-x"}, {5, 10, "-y"},
                {6, 11, "-z"}, {7, 11, "y"}, {7, 12, "-z"}, {8, 11, "x"}, {9, 12, "y"}, {10, 12, "-x"}});
}

const std::vector<ExampleKind>& example_kinds() {
  static const std::vector<ExampleKind> kinds{{"identity_block", true}, {"ex2", false}, {"ex3", false},
                                              {"row_family", true},     {"koszul8", false}, {"ex12", false}};
  return kinds;
}

GradedMorphism make_example(std::string_view kind, std::optional<int> n) {
  bool parametric = kind == "identity_block" || kind == "row_family";
  if (parametric && !n) throw InputError(std::string(kind) + " needs a parameter n");
  if (!parametric && n && (kind == "ex2" || kind == "ex3" || kind == "koszul8" || kind == "ex12"))
    throw InputError(std::string(kind) + " takes no parameter");
  if (kind == "identity_block") return identity_block(*n);
  if (kind == "row_family") return row_family(*n);
  if (kind == "ex2") return row_family(2);
  if (kind == "ex3") return row_family(3);
  if (kind == "koszul8") return koszul8();
  if (kind == "ex12") return ex12();
  throw InputError("unknown example kind \"" + std::string(kind) +
                   "\" (expected identity_block, ex2, ex3, row_family, koszul8 or ex12)");
}

int BlockPattern::total() const { return std::accumulate(sizes.begin(), sizes.end(), 0); }

BlockPattern BlockPattern::parse(std::string_view text) {
  if (!text.empty() && text.front() == '(') text.remove_prefix(1);
  if (!text.empty() && text.back() == ')') text.remove_suffix(1);
  BlockPattern out;
  while (true) {
    auto comma = text.find(',');
    auto piece = text.substr(0, comma);
    int value = 0;
    auto [ptr, ec] = std::from_chars(piece.data(), piece.data() + piece.size(), value);
    if (ec != std::errc() || ptr != piece.data() + piece.size() || value < 1)
      throw InputError("block pattern must be a comma-separated list of positive integers, got \"" +
                       std::string(piece) + "\"");
    out.sizes.push_back(value);
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return out;
}

std::string BlockPattern::str() const {
  std::string out = "(";
  for (std::size_t k = 0; k < sizes.size(); ++k) out += (k ? "," : "") + std::to_string(sizes[k]);
  return out + ")";
}

bool block_pattern_check(const PolyMatrix& m, const BlockPattern& pat) {
  if (pat.total() != m.size())
    throw InputError("block pattern " + pat.str() + " sums to " + std::to_string(pat.total()) + ", expected N=" +
                     std::to_string(m.size()));
  std::vector<int> block(m.size() + 1);
  int index = 1;
  for (std::size_t s = 0; s < pat.sizes.size(); ++s)
    for (int k = 0; k < pat.sizes[s]; ++k) block[index++] = static_cast<int>(s);
  for (const auto& [ij, p] : m.entries())
    if (block[ij.first] == block[ij.second]) return false;
  return true;
}

GradedMorphism chessboard(const GradedMorphism& psi1, const BlockPattern& pat1, const GradedMorphism& psi2,
                          const BlockPattern& pat2, std::optional<std::vector<int>> d) {
  if (pat1.sizes.size() != pat2.sizes.size())
    throw InputError("chessboard: block patterns have " + std::to_string(pat1.sizes.size()) + " and " +
                     std::to_string(pat2.sizes.size()) + " blocks");
  if (psi1.nvars() != psi2.nvars())
    throw InputError("chessboard: inputs live over different rings (r=" + std::to_string(psi1.nvars()) + " vs r=" +
                     std::to_string(psi2.nvars()) + ")");
  if (psi1.multiplier() != psi2.multiplier()) throw InputError("chessboard: inputs have different multipliers m");
  if (!block_pattern_check(psi1, pat1)) throw InputError("chessboard: first input violates its pattern " + pat1.str());
  if (!block_pattern_check(psi2, pat2)) throw InputError("chessboard: second input violates its pattern " + pat2.str());

  // place[e][a]: board index of index a of psi_e.
  const GradedMorphism* psi[2] = {&psi1, &psi2};
  const BlockPattern* pat[2] = {&pat1, &pat2};
  std::vector<int> place[2] = {std::vector<int>(psi1.size() + 1), std::vector<int>(psi2.size() + 1)};
  int next[2] = {1, 1};
  int board = 1;
  for (std::size_t k = 1; k <= 2 * pat1.sizes.size(); ++k) {
    int e = k % 2 == 1 ? 0 : 1;
    int len = pat[e]->sizes[(k + 1) / 2 - 1];
    for (int t = 0; t < len; ++t) place[e][next[e]++] = board++;
  }
  const int n = psi1.size() + psi2.size();
  PolyMatrix m(n, psi1.nvars());
  for (int e = 0; e < 2; ++e)
    for (const auto& [ij, p] : psi[e]->matrix().entries()) m.set(place[e][ij.first], place[e][ij.second], p);

  if (!(m * m).is_zero()) throw InternalError("chessboard output is not square-zero");
  std::vector<int> weights = d ? std::move(*d) : infer_grading(m, psi1.multiplier());
  return GradedMorphism(std::move(weights), psi1.multiplier(), std::move(m), GradedMorphism::Grading::strict,
                        psi1.names());
}

}  // namespace borelkit
