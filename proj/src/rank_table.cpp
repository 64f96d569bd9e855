#include "borelkit/rank_table.hpp"

#include <algorithm>
#include <sstream>

namespace borelkit {

RankTable::RankTable(int n) : n_(n), values_(static_cast<std::size_t>(n + 2) * (n + 2), 0) {
  if (n < 1) throw InputError("rank table: size must be positive");
}

int RankTable::at(int i, int j) const {
  if (i < 1 || j > n_ || i >= j) return 0;
  return values_[static_cast<std::size_t>(i) * (n_ + 2) + j];
}

void RankTable::set(int i, int j, int value) {
  if (i < 1 || j > n_ || i >= j) throw InputError("rank table: index outside 1 <= i < j <= N");
  if (value < 0) throw InputError("rank table: negative entry");
  values_[static_cast<std::size_t>(i) * (n_ + 2) + j] = value;
}

bool RankTable::leq(const RankTable& other) const {
  if (n_ != other.n_) throw InputError("rank tables of different sizes");
  for (int i = 1; i <= n_; ++i)
    for (int j = i + 1; j <= n_; ++j)
      if (at(i, j) > other.at(i, j)) return false;
  return true;
}

std::vector<std::string> RankTable::invariant_violations() const {
  std::vector<std::string> out;
  auto where = [](int i, int j) { return "(" + std::to_string(i) + "," + std::to_string(j) + ")"; };
  for (int i = 1; i <= n_; ++i) {
    for (int j = i + 1; j <= n_; ++j) {
      int v = at(i, j);
      if (v > std::min(n_ - i + 1, j)) out.push_back("entry " + where(i, j) + " exceeds window size");
      if (j < n_) {
        int d = at(i, j + 1) - v;
        if (d < 0 || d > 1) out.push_back("row step " + where(i, j) + "->" + where(i, j + 1) + " not in {0,1}");
      }
      if (i > 1) {
        int d = at(i - 1, j) - v;
        if (d < 0 || d > 1) out.push_back("column step " + where(i, j) + "->" + where(i - 1, j) + " not in {0,1}");
      }
    }
  }
  return out;
}

std::string RankTable::str() const {
  std::ostringstream os;
  for (int i = 1; i <= n_; ++i) {
    for (int j = i + 1; j <= n_; ++j) {
      if (j > i + 1) os << ' ';
      os << at(i, j);
    }
    if (i < n_ - 1) os << '\n';
  }
  return os.str();
}

RankTable rank_table(const PartialPermutationPattern& pattern) {
  const int n = pattern.size();
  RankTable table(n);
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      int count = 0;
      for (const auto& [row, col] : pattern.ones())
        if (row >= i && col <= j) ++count;
      table.set(i, j, count);
    }
  return table;
}

RankTable rank_table(const Involution& sigma) { return rank_table(to_pattern(sigma)); }

PartialPermutationPattern pattern_from_rank_table(const RankTable& table) {
  const int n = table.size();
  std::vector<Transposition> ones;
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      int v = table.at(i, j) - table.at(i + 1, j) - table.at(i, j - 1) + table.at(i + 1, j - 1);
      if (v == 0) continue;
      if (v != 1) throw InputError("not a pattern rank table: inclusion-exclusion gives " + std::to_string(v) +
                                   " at (" + std::to_string(i) + "," + std::to_string(j) + ")");
      ones.push_back({i, j});
    }
  }
  try {
    PartialPermutationPattern pattern(n, std::move(ones));
    if (rank_table(pattern) != table) throw InputError("reconstruction does not reproduce the table");
    return pattern;
  } catch (const InputError& e) {
    throw InputError(std::string("not a pattern rank table: ") + e.what());
  }
}

}  // namespace borelkit
