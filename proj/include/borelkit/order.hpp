#ifndef BORELKIT_ORDER_HPP
#define BORELKIT_ORDER_HPP

#include <map>
#include <set>
#include <string>
#include <vector>

#include "borelkit/involution.hpp"

namespace borelkit {

enum class MoveKind { I = 1, II, III, IV, V };

std::string to_string(MoveKind kind);

/// One step down the orbit closure order.
///
/// Parameters follow the defining side conditions:
///   I   (i, j)  : sigma(i) = j; deletes the transposition.
///   II  (i, i') : sigma(i) = i < i' < sigma(i'); conjugates by (i, i').
///   III (j, j') : sigma(j) < sigma(j') < j' < j; conjugates by (j, j').
///   IV  (j, j') : sigma(j') < j' < j = sigma(j); conjugates by (j, j').
///   V   (i, j)  : i < sigma(i) < sigma(j) < j; conjugates by (i, j).
struct Move {
  MoveKind kind;
  int first;
  int second;
  Involution result;
};

struct MoveList {
  std::vector<Move> moves;
  /// Set when sigma has rank 1: its type I move would give the identity.
  bool rank_one_deletion_omitted = false;
};

/// All moves applicable to sigma, ordered by (kind, first, second).
MoveList applicable_moves(const Involution& sigma);

/// Reflexive-transitive closure of the moves, with memoized down-sets.
/// Independent of rank tables; used as a cross-check of leq_by_rank.
class MoveClosure {
 public:
  bool leq(const Involution& lo, const Involution& hi);
  const std::set<Involution>& down_set(const Involution& sigma);

 private:
  std::map<Involution, std::set<Involution>> cache_;
};

bool leq_by_moves(const Involution& lo, const Involution& hi);

bool leq_by_rank(const Involution& lo, const Involution& hi);
bool leq_by_rank(const PartialPermutationPattern& lo, const PartialPermutationPattern& hi);

struct HasseEdge {
  Involution lower;
  Involution upper;
  /// Move kind realizing the cover in one step, or "composite".
  std::string label;
};

struct HasseDiagram {
  std::vector<Involution> nodes;
  std::vector<HasseEdge> edges;
};

/// Smallest move kind (then parameters) taking upper to lower, if any.
std::string cover_label(const Involution& lower, const Involution& upper);

/// Cover relations of the ambient orbit order restricted to nodes. Nodes and
/// edges come back sorted lexicographically.
HasseDiagram hasse(std::vector<Involution> nodes);

std::vector<Involution> minimal_elements(const std::vector<Involution>& nodes);

}  // namespace borelkit

#endif  // BORELKIT_ORDER_HPP
