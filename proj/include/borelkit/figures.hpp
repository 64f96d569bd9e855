#ifndef BORELKIT_FIGURES_HPP
#define BORELKIT_FIGURES_HPP

#include <string>
#include <vector>

#include "borelkit/order.hpp"
#include "borelkit/poly_matrix.hpp"

namespace borelkit {

/// A committed Hasse diagram: node set plus labelled cover pairs. Edge
/// endpoints are stored unordered; the label is the move kind.
struct FigureFixture {
  std::string name;
  int n;
  std::vector<Involution> nodes;
  struct Edge {
    Involution a;
    Involution b;
    std::string label;
  };
  std::vector<Edge> edges;
};

/// All of P(4).
FigureFixture figure_p4();
/// RP(6).
FigureFixture figure_rp6();
/// DP(8).
FigureFixture figure_dp8();

/// Differences between a computed diagram and a fixture; empty when they
/// agree exactly on nodes, cover pairs and labels.
std::vector<std::string> compare_with_fixture(const HasseDiagram& diagram, const FigureFixture& fixture);

/// The printed 10x10 chessboard over Q[x, y].
PolyMatrix chessboard_board_fixture();

}  // namespace borelkit

#endif  // BORELKIT_FIGURES_HPP
