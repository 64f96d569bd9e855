#include "borelkit/figures.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <tuple>

namespace borelkit {
namespace {

using Named = std::map<std::string, Involution>;

FigureFixture assemble(std::string name, int n, const Named& nodes,
                       std::initializer_list<std::tuple<const char*, const char*, const char*>> edges) {
  FigureFixture fx{std::move(name), n, {}, {}};
  for (const auto& [key, sigma] : nodes) fx.nodes.push_back(sigma);
  std::sort(fx.nodes.begin(), fx.nodes.end());
  for (const auto& [a, b, label] : edges) fx.edges.push_back({nodes.at(a), nodes.at(b), label});
  return fx;
}

Named by_string(int n, std::initializer_list<const char*> items) {
  Named out;
  for (const char* s : items) out.emplace(s, Involution::parse(s, n));
  return out;
}

using Key = std::tuple<Involution, Involution, std::string>;

Key key(const Involution& a, const Involution& b, const std::string& label) {
  return a < b ? Key{a, b, label} : Key{b, a, label};
}

}  // namespace

FigureFixture figure_p4() {
  auto nodes = by_string(4, {"(1,2)(3,4)", "(1,3)(2,4)", "(1,4)(2,3)", "(1,2)", "(1,3)", "(1,4)", "(2,3)", "(2,4)",
                             "(3,4)"});
  return assemble("P(4)", 4, nodes,
                  {{"(1,2)(3,4)", "(3,4)", "I"},
                   {"(3,4)", "(2,4)", "II"},
                   {"(2,4)", "(1,4)", "II"},
                   {"(1,2)(3,4)", "(1,3)(2,4)", "V"},
                   {"(1,3)(2,4)", "(1,3)", "I"},
                   {"(1,3)", "(1,4)", "IV"},
                   {"(1,4)(2,3)", "(2,3)", "I"},
                   {"(2,3)", "(2,4)", "IV"},
                   {"(2,3)", "(1,3)", "II"},
                   {"(1,3)(2,4)", "(2,4)", "I"},
                   {"(1,4)(2,3)", "(1,3)(2,4)", "III"},
                   {"(1,2)(3,4)", "(1,2)", "I"},
                   {"(1,2)", "(1,3)", "IV"}});
}

FigureFixture figure_rp6() {
  const char* s[] = {"(1,2)(3,4)(5,6)", "(1,4)(2,3)(5,6)", "(1,2)(3,6)(4,5)", "(1,6)(2,3)(4,5)", "(1,6)(2,5)(3,4)",
                     "(1,3)(2,4)(5,6)", "(1,2)(3,5)(4,6)", "(1,5)(2,3)(4,6)", "(1,3)(2,6)(4,5)", "(1,5)(2,6)(3,4)",
                     "(1,6)(2,4)(3,5)", "(1,3)(2,5)(4,6)", "(1,5)(2,4)(3,6)", "(1,4)(2,6)(3,5)", "(1,4)(2,5)(3,6)"};
  const char* names[] = {"1", "2", "3", "4", "5", "6", "7", "8", "9", "10", "11", "12", "13", "14", "15"};
  Named nodes;
  for (int k = 0; k < 15; ++k) nodes.emplace(names[k], Involution::parse(s[k], 6));
  return assemble("RP(6)", 6, nodes,
                  {{"15", "12", "V"},  {"1", "6", "V"},    {"12", "7", "V"},   {"7", "1", "V"},    {"1", "10", "V"},
                   {"6", "13", "V"},   {"6", "12", "V"},   {"2", "8", "V"},    {"8", "13", "V"},   {"3", "9", "V"},
                   {"9", "14", "V"},   {"4", "11", "V"},   {"7", "14", "V"},   {"10", "14", "III"}, {"14", "15", "III"},
                   {"2", "6", "III"},  {"3", "7", "III"},  {"4", "8", "III"},  {"8", "12", "III"}, {"4", "9", "III"},
                   {"9", "12", "III"}, {"5", "10", "III"}, {"10", "13", "III"}, {"13", "15", "III"}, {"11", "13", "III"},
                   {"5", "11", "III"}, {"11", "14", "III"}});
}

FigureFixture figure_dp8() {
  auto nodes = Named{
      {"A", Involution::parse("(1,2)(3,4)(5,6)(7,8)", 8)}, {"B", Involution::parse("(1,2)(3,5)(4,6)(7,8)", 8)},
      {"C", Involution::parse("(1,2)(3,4)(5,7)(6,8)", 8)}, {"D", Involution::parse("(1,3)(2,4)(5,6)(7,8)", 8)},
      {"E", Involution::parse("(1,3)(2,5)(4,6)(7,8)", 8)}, {"F", Involution::parse("(1,2)(3,5)(4,7)(6,8)", 8)},
      {"G", Involution::parse("(1,3)(2,4)(5,7)(6,8)", 8)}, {"H", Involution::parse("(1,4)(2,5)(3,6)(7,8)", 8)},
      {"I", Involution::parse("(1,2)(3,6)(4,7)(5,8)", 8)}, {"J", Involution::parse("(1,3)(2,5)(4,7)(6,8)", 8)},
      {"K", Involution::parse("(1,3)(2,6)(4,7)(5,8)", 8)}, {"L", Involution::parse("(1,4)(2,5)(3,7)(6,8)", 8)},
      {"M", Involution::parse("(1,4)(2,6)(3,7)(5,8)", 8)}, {"N", Involution::parse("(1,5)(2,6)(3,7)(4,8)", 8)}};
  return assemble("DP(8)", 8, nodes,
                  {{"A", "B", "V"}, {"B", "F", "V"}, {"F", "J", "V"}, {"J", "K", "V"}, {"A", "C", "V"},
                   {"C", "F", "V"}, {"F", "I", "V"}, {"I", "K", "V"}, {"K", "M", "V"}, {"M", "N", "V"},
                   {"A", "D", "V"}, {"D", "G", "V"}, {"G", "J", "V"}, {"J", "L", "V"}, {"L", "M", "V"},
                   {"D", "E", "V"}, {"E", "J", "V"}, {"C", "G", "V"}, {"B", "E", "V"}, {"E", "H", "V"},
                   {"H", "L", "V"}});
}

std::vector<std::string> compare_with_fixture(const HasseDiagram& diagram, const FigureFixture& fixture) {
  std::vector<std::string> diffs;
  std::set<Involution> got(diagram.nodes.begin(), diagram.nodes.end());
  std::set<Involution> want(fixture.nodes.begin(), fixture.nodes.end());
  for (const auto& s : want)
    if (!got.contains(s)) diffs.push_back("missing node " + s.str());
  for (const auto& s : got)
    if (!want.contains(s)) diffs.push_back("extra node " + s.str());

  std::set<Key> got_edges, want_edges;
  for (const auto& e : diagram.edges) got_edges.insert(key(e.lower, e.upper, e.label));
  for (const auto& e : fixture.edges) want_edges.insert(key(e.a, e.b, e.label));
  auto show = [](const Key& k) {
    return std::get<0>(k).str() + " -- " + std::get<1>(k).str() + " [" + std::get<2>(k) + "]";
  };
  for (const auto& k : want_edges)
    if (!got_edges.contains(k)) diffs.push_back("missing edge " + show(k));
  for (const auto& k : got_edges)
    if (!want_edges.contains(k)) diffs.push_back("extra edge " + show(k));
  return diffs;
}

PolyMatrix chessboard_board_fixture() {
  PolyMatrix m(10, 2);
  const std::tuple<int, int, const char*> cells[] = {{1, 3, "x^2"}, {1, 4, "x*y"}, {1, 5, "y^2"}, {2, 6, "x"},
                                                     {2, 7, "y"},   {3, 8, "y"},   {4, 8, "-x"},  {4, 9, "y"},
                                                     {5, 9, "-x"},  {6, 10, "y"},  {7, 10, "-x"}};
  for (const auto& [i, j, p] : cells) m.set(i, j, Polynomial::parse(p, 2));
  return m;
}

}  // namespace borelkit
