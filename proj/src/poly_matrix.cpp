#include "borelkit/poly_matrix.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "borelkit/errors.hpp"

namespace borelkit {
namespace {

std::vector<std::size_t> checked_indices(std::span<const int> ids, int n, const char* what) {
  std::vector<std::size_t> out;
  std::set<int> seen;
  for (int k : ids) {
    if (k < 1 || k > n) throw InputError(std::string("minor: ") + what + " index " + std::to_string(k) + " out of range");
    if (!seen.insert(k).second) throw InputError(std::string("minor: repeated ") + what + " index " + std::to_string(k));
    out.push_back(static_cast<std::size_t>(k - 1));
  }
  return out;
}

}  // namespace

PolyMatrix::PolyMatrix(int n, int nvars) : n_(n), nvars_(nvars) {
  if (n < 1) throw InputError("matrix size must be positive");
  if (nvars < 1) throw InputError("polynomial ring needs at least one variable");
}

Polynomial PolyMatrix::at(int i, int j) const {
  if (auto it = entries_.find({i, j}); it != entries_.end()) return it->second;
  return Polynomial(nvars_);
}

void PolyMatrix::set(int i, int j, Polynomial p) {
  if (i < 1 || j > n_ || i >= j)
    throw InputError("entry (" + std::to_string(i) + "," + std::to_string(j) + ") is not strictly upper triangular in N=" +
                     std::to_string(n_));
  if (p.nvars() != nvars_) throw InputError("entry polynomial lives in a different ring");
  if (p.is_zero())
    entries_.erase({i, j});
  else
    entries_.insert_or_assign({i, j}, std::move(p));
}

PolyMatrix PolyMatrix::operator*(const PolyMatrix& other) const {
  if (n_ != other.n_ || nvars_ != other.nvars_) throw InputError("matrix product: shape mismatch");
  PolyMatrix out(n_, nvars_);
  std::map<std::pair<int, int>, Polynomial> acc;
  for (const auto& [ik, a] : entries_) {
    for (const auto& [kj, b] : other.entries_) {
      if (ik.second != kj.first) continue;
      auto key = std::make_pair(ik.first, kj.second);
      auto it = acc.find(key);
      if (it == acc.end())
        acc.emplace(key, a * b);
      else
        it->second += a * b;
    }
  }
  for (auto& [key, p] : acc) out.set(key.first, key.second, std::move(p));
  return out;
}

DenseMatrix<Polynomial> PolyMatrix::dense() const {
  DenseMatrix<Polynomial> out(n_, n_, Polynomial(nvars_));
  for (const auto& [ij, p] : entries_) out(ij.first - 1, ij.second - 1) = p;
  return out;
}

DenseMatrix<Rational> PolyMatrix::evaluate(std::span<const Rational> point) const {
  DenseMatrix<Rational> out(n_, n_, Rational(0));
  for (const auto& [ij, p] : entries_) out(ij.first - 1, ij.second - 1) = p.evaluate(point);
  return out;
}

DenseMatrix<ModP> PolyMatrix::evaluate(std::span<const ModP> point) const {
  if (point.empty()) throw InputError("evaluation point has wrong length");
  DenseMatrix<ModP> out(n_, n_, ModP(0, point[0].modulus()));
  for (const auto& [ij, p] : entries_) out(ij.first - 1, ij.second - 1) = p.evaluate(point);
  return out;
}

PolyMatrix PolyMatrix::extended(int extra) const {
  PolyMatrix out(n_, nvars_ + extra);
  for (const auto& [ij, p] : entries_) out.set(ij.first, ij.second, p.extended(extra));
  return out;
}

std::string PolyMatrix::str(const VariableNames& names) const {
  std::vector<std::vector<std::string>> cells(n_, std::vector<std::string>(n_, "0"));
  std::size_t width = 1;
  for (const auto& [ij, p] : entries_) {
    cells[ij.first - 1][ij.second - 1] = p.str(names);
    width = std::max(width, cells[ij.first - 1][ij.second - 1].size());
  }
  std::ostringstream os;
  for (int i = 0; i < n_; ++i) {
    for (int j = 0; j < n_; ++j) {
      const auto& c = cells[i][j];
      os << std::string(width - c.size() + (j == 0 ? 0 : 2), ' ') << c;
    }
    if (i + 1 < n_) os << '\n';
  }
  return os.str();
}

Polynomial minor(const PolyMatrix& m, std::span<const int> rows, std::span<const int> cols, MinorMethod method) {
  if (rows.size() != cols.size()) throw InputError("minor: row and column index sets differ in size");
  if (rows.empty()) throw InputError("minor: empty index set");
  auto r = checked_indices(rows, m.size(), "row");
  auto c = checked_indices(cols, m.size(), "column");
  auto sub = m.dense().submatrix(r, c);
  return method == MinorMethod::cofactor ? determinant_cofactor(sub) : determinant_bareiss(std::move(sub));
}

Polynomial minor(const PolyMatrix& m, std::span<const int> rows, std::span<const int> cols) {
  return minor(m, rows, cols, rows.size() <= 4 ? MinorMethod::cofactor : MinorMethod::elimination);
}

int generic_rank(const PolyMatrix& m) {
  if (m.is_zero()) return 0;
  return static_cast<int>(exact_rank(m.dense()));
}

RankTable generic_rank_table(const PolyMatrix& m) { return rank_table(m.dense()); }

}  // namespace borelkit
