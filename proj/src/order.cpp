#include "borelkit/order.hpp"

#include <algorithm>

#include "borelkit/errors.hpp"
#include "borelkit/rank_table.hpp"

namespace borelkit {
namespace {

void require_same_size(int a, int b) {
  if (a != b) throw InputError("involutions act on different N (" + std::to_string(a) + " vs " + std::to_string(b) + ")");
}

}  // namespace

std::string to_string(MoveKind kind) {
  switch (kind) {
    case MoveKind::I: return "I";
    case MoveKind::II: return "II";
    case MoveKind::III: return "III";
    case MoveKind::IV: return "IV";
    case MoveKind::V: return "V";
  }
  return "?";
}

MoveList applicable_moves(const Involution& sigma) {
  MoveList out;
  const int n = sigma.size();
  const auto s = sigma.images();

  for (const auto& t : sigma.pairs()) {
    if (auto smaller = sigma.without(t))
      out.moves.push_back({MoveKind::I, t.lo, t.hi, *smaller});
    else
      out.rank_one_deletion_omitted = true;
  }
  for (int i = 1; i <= n; ++i) {
    if (s[i] != i) continue;
    for (int ip = i + 1; ip <= n; ++ip)
      if (ip < s[ip]) out.moves.push_back({MoveKind::II, i, ip, sigma.conjugated(i, ip)});
  }
  for (int j = 1; j <= n; ++j) {
    if (s[j] >= j) continue;
    for (int jp = 1; jp < j; ++jp)
      if (s[jp] < jp && s[j] < s[jp]) out.moves.push_back({MoveKind::III, j, jp, sigma.conjugated(j, jp)});
  }
  for (int j = 1; j <= n; ++j) {
    if (s[j] != j) continue;
    for (int jp = 1; jp < j; ++jp)
      if (s[jp] < jp) out.moves.push_back({MoveKind::IV, j, jp, sigma.conjugated(j, jp)});
  }
  for (int i = 1; i <= n; ++i) {
    if (s[i] <= i) continue;
    for (int j = i + 1; j <= n; ++j)
      if (s[j] < j && s[i] < s[j]) out.moves.push_back({MoveKind::V, i, j, sigma.conjugated(i, j)});
  }
  return out;
}

const std::set<Involution>& MoveClosure::down_set(const Involution& sigma) {
  if (auto it = cache_.find(sigma); it != cache_.end()) return it->second;
  std::set<Involution> down{sigma};
  for (const auto& move : applicable_moves(sigma).moves) {
    const auto& below = down_set(move.result);
    down.insert(below.begin(), below.end());
  }
  return cache_.emplace(sigma, std::move(down)).first->second;
}

bool MoveClosure::leq(const Involution& lo, const Involution& hi) {
  require_same_size(lo.size(), hi.size());
  return down_set(hi).contains(lo);
}

bool leq_by_moves(const Involution& lo, const Involution& hi) {
  MoveClosure closure;
  return closure.leq(lo, hi);
}

bool leq_by_rank(const PartialPermutationPattern& lo, const PartialPermutationPattern& hi) {
  require_same_size(lo.size(), hi.size());
  return rank_table(lo).leq(rank_table(hi));
}

bool leq_by_rank(const Involution& lo, const Involution& hi) {
  return leq_by_rank(to_pattern(lo), to_pattern(hi));
}

std::string cover_label(const Involution& lower, const Involution& upper) {
  // applicable_moves is already ordered by (kind, parameters).
  for (const auto& move : applicable_moves(upper).moves)
    if (move.result == lower) return to_string(move.kind);
  return "composite";
}

HasseDiagram hasse(std::vector<Involution> nodes) {
  if (nodes.empty()) throw InputError("hasse: empty node set");
  std::sort(nodes.begin(), nodes.end());
  nodes.erase(std::unique(nodes.begin(), nodes.end()), nodes.end());
  for (const auto& v : nodes) require_same_size(v.size(), nodes.front().size());

  const std::size_t count = nodes.size();
  std::vector<RankTable> tables;
  tables.reserve(count);
  for (const auto& v : nodes) tables.push_back(rank_table(v));
  // below[a][b]: nodes[a] < nodes[b] strictly.
  std::vector<std::vector<bool>> below(count, std::vector<bool>(count, false));
  for (std::size_t a = 0; a < count; ++a)
    for (std::size_t b = 0; b < count; ++b)
      below[a][b] = a != b && tables[a].leq(tables[b]);

  HasseDiagram out{nodes, {}};
  for (std::size_t a = 0; a < count; ++a) {
    for (std::size_t b = 0; b < count; ++b) {
      if (!below[a][b]) continue;
      bool cover = true;
      for (std::size_t c = 0; c < count && cover; ++c)
        if (below[a][c] && below[c][b]) cover = false;
      if (cover) out.edges.push_back({nodes[a], nodes[b], cover_label(nodes[a], nodes[b])});
    }
  }
  return out;
}

std::vector<Involution> minimal_elements(const std::vector<Involution>& nodes) {
  std::vector<Involution> sorted = nodes;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  std::vector<RankTable> tables;
  for (const auto& v : sorted) tables.push_back(rank_table(v));
  std::vector<Involution> out;
  for (std::size_t a = 0; a < sorted.size(); ++a) {
    bool minimal = true;
    for (std::size_t b = 0; b < sorted.size() && minimal; ++b)
      if (a != b && tables[b].leq(tables[a])) minimal = false;
    if (minimal) out.push_back(sorted[a]);
  }
  return out;
}

}  // namespace borelkit
