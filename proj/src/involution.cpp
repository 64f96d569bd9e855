#include "borelkit/involution.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "borelkit/errors.hpp"

namespace borelkit {
namespace {

void check_disjoint(int n, const std::vector<Transposition>& pairs, const char* what) {
  if (n < 1) throw InputError(std::string(what) + ": size must be positive");
  if (pairs.empty()) throw InputError(std::string(what) + ": must be nonempty");
  std::vector<bool> used(n + 1, false);
  for (const auto& [lo, hi] : pairs) {
    if (lo < 1 || hi > n || lo >= hi) {
      std::ostringstream os;
      os << what << ": invalid pair (" << lo << "," << hi << ") for N=" << n;
      throw InputError(os.str());
    }
    for (int k : {lo, hi}) {
      if (used[k]) {
        std::ostringstream os;
        os << what << ": index " << k << " used twice";
        throw InputError(os.str());
      }
      used[k] = true;
    }
  }
}

void collect(int n, int rank_filter, std::vector<bool>& used, std::vector<Transposition>& current,
             std::vector<std::vector<Transposition>>& out) {
  // Choose the next smallest unused index: either it stays fixed or pairs
  // with a larger unused index.
  int first = 1;
  while (first <= n && used[first]) ++first;
  if (first > n) {
    if (!current.empty() && (rank_filter < 0 || static_cast<int>(current.size()) == rank_filter))
      out.push_back(current);
    return;
  }
  used[first] = true;
  collect(n, rank_filter, used, current, out);
  for (int partner = first + 1; partner <= n; ++partner) {
    if (used[partner]) continue;
    used[partner] = true;
    current.push_back({first, partner});
    collect(n, rank_filter, used, current, out);
    current.pop_back();
    used[partner] = false;
  }
  used[first] = false;
}

}  // namespace

Involution::Involution(int n, std::vector<Transposition> pairs) : n_(n), pairs_(std::move(pairs)) {
  check_disjoint(n_, pairs_, "involution");
  std::sort(pairs_.begin(), pairs_.end());
}

Involution Involution::parse(std::string_view text, int n) {
  std::vector<Transposition> pairs;
  std::size_t pos = 0;
  auto fail = [&](const std::string& msg) {
    std::ostringstream os;
    os << "cannot parse involution \"" << text << "\" at position " << pos << ": " << msg;
    throw InputError(os.str());
  };
  auto read_int = [&]() {
    std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (start == pos) fail("expected integer");
    return std::stoi(std::string(text.substr(start, pos - start)));
  };
  auto expect = [&](char c) {
    if (pos >= text.size() || text[pos] != c) fail(std::string("expected '") + c + "'");
    ++pos;
  };
  while (pos < text.size()) {
    expect('(');
    int a = read_int();
    expect(',');
    int b = read_int();
    expect(')');
    if (a > b) std::swap(a, b);
    pairs.push_back({a, b});
  }
  return Involution(n, std::move(pairs));
}

int Involution::image(int k) const {
  for (const auto& [lo, hi] : pairs_) {
    if (lo == k) return hi;
    if (hi == k) return lo;
  }
  return k;
}

std::vector<int> Involution::images() const {
  std::vector<int> img(n_ + 1);
  for (int k = 0; k <= n_; ++k) img[k] = k;
  for (const auto& [lo, hi] : pairs_) {
    img[lo] = hi;
    img[hi] = lo;
  }
  return img;
}

std::vector<int> Involution::lefts() const {
  std::vector<int> out;
  for (const auto& t : pairs_) out.push_back(t.lo);
  return out;
}

std::vector<int> Involution::rights() const {
  std::vector<int> out;
  for (const auto& t : pairs_) out.push_back(t.hi);
  return out;
}

bool Involution::contains(Transposition t) const {
  return std::find(pairs_.begin(), pairs_.end(), t) != pairs_.end();
}

Involution Involution::conjugated(int a, int b) const {
  auto swap_label = [&](int k) { return k == a ? b : (k == b ? a : k); };
  std::vector<Transposition> out;
  out.reserve(pairs_.size());
  for (const auto& [lo, hi] : pairs_) {
    int x = swap_label(lo), y = swap_label(hi);
    out.push_back({std::min(x, y), std::max(x, y)});
  }
  return Involution(n_, std::move(out));
}

std::optional<Involution> Involution::without(Transposition t) const {
  std::vector<Transposition> out;
  for (const auto& p : pairs_)
    if (p != t) out.push_back(p);
  if (out.size() == pairs_.size()) throw InputError("transposition not present in " + str());
  if (out.empty()) return std::nullopt;
  return Involution(n_, std::move(out));
}

std::string Involution::str() const {
  std::string s;
  for (const auto& [lo, hi] : pairs_)
    s += "(" + std::to_string(lo) + "," + std::to_string(hi) + ")";
  return s;
}

PartialPermutationPattern::PartialPermutationPattern(int n, std::vector<Transposition> ones)
    : n_(n), ones_(std::move(ones)) {
  // Distinct rows and columns plus disjointness of row and column index sets
  // is exactly "partial permutation" together with "square-zero".
  check_disjoint(n_, ones_, "pattern");
  std::sort(ones_.begin(), ones_.end());
}

bool PartialPermutationPattern::at(int row, int col) const {
  return std::binary_search(ones_.begin(), ones_.end(), Transposition{row, col});
}

PartialPermutationPattern to_pattern(const Involution& sigma) {
  return {sigma.size(), {sigma.pairs().begin(), sigma.pairs().end()}};
}

Involution to_involution(const PartialPermutationPattern& pattern) {
  return {pattern.size(), {pattern.ones().begin(), pattern.ones().end()}};
}

std::vector<Involution> enumerate_involutions(int n, std::optional<int> rank) {
  if (n < 2) throw InputError("enumerate_involutions: N must be at least 2");
  if (rank && (*rank < 1 || *rank > n / 2))
    throw InputError("enumerate_involutions: rank must lie in [1, N/2]");
  std::vector<std::vector<Transposition>> raw;
  std::vector<bool> used(n + 1, false);
  std::vector<Transposition> current;
  collect(n, rank.value_or(-1), used, current, raw);
  std::sort(raw.begin(), raw.end());
  std::vector<Involution> out;
  out.reserve(raw.size());
  for (auto& pairs : raw) out.emplace_back(n, std::move(pairs));
  return out;
}

}  // namespace borelkit
