#include "diagrams.hpp"

#include <stdexcept>

namespace eqsig::testkit {

namespace {

RegionRef region(const std::string& token) {
  auto r = region_from_token(token);
  if (!r) throw std::invalid_argument("bad region token " + token);
  return *r;
}

Crossing make(const std::string& id, RegionRef r0, RegionRef r1, int eta, std::optional<int> eps,
              Locus locus, const std::string& partner) {
  Crossing c;
  c.id = id;
  c.regions = {r0, r1};
  c.eta = eta;
  c.color = eps ? CrossingColor::Bicolored : CrossingColor::Unicolored;
  c.epsilon = eps;
  c.locus = locus;
  c.partner = partner;
  return c;
}

}  // namespace

DiagramBuilder::DiagramBuilder(std::string label, std::size_t n) {
  d_.label = std::move(label);
  d_.n = n;
}

DiagramBuilder& DiagramBuilder::pair(const std::string& id, const std::string& r0,
                                     const std::string& r1, int eta, std::optional<int> eps) {
  const RegionRef a = region(r0), b = region(r1);
  d_.crossings.push_back(make(id, a, b, eta, eps, Locus::OffAxis, id + "'"));
  d_.crossings.push_back(make(id + "'", a.rho(), b.rho(), eta, eps, Locus::OffAxis, id));
  return *this;
}

DiagramBuilder& DiagramBuilder::axis(const std::string& id, std::size_t k, int eta) {
  d_.crossings.push_back(
      make(id, RegionRef::plus(k), RegionRef::minus(k), eta, std::nullopt, Locus::OnAxisH, id));
  return *this;
}

std::vector<SymmetricDiagram> hand_built_diagrams() {
  std::vector<SymmetricDiagram> out;
  // Reconstructions of the corpus knots.
  out.push_back(DiagramBuilder("6_1", 2)
                    .pair("ab", "a1", "a2", -1)
                    .axis("h1", 1, -1)
                    .axis("h2", 1, -1)
                    .pair("bf", "a2", "fixed", -1)
                    .build());
  out.push_back(DiagramBuilder("5_1", 2)
                    .pair("ab", "a1", "a2", -1, -1)
                    .axis("h1", 1, -1)
                    .pair("bf", "a2", "fixed", -1, -1)
                    .build());
  out.push_back(DiagramBuilder("9_40", 4)
                    .pair("ab", "a1", "a2", -1, 1)
                    .pair("ad", "a1", "a4", -1, 1)
                    .pair("bc", "a2", "a3", -1)
                    .axis("h1", 1, -1)
                    .axis("h3", 3, 1)
                    .axis("h4", 4, -1)
                    .pair("cf", "a3", "fixed", -1)
                    .pair("df", "a4", "fixed", -1)
                    .build());
  // Small cases.
  out.push_back(DiagramBuilder("one-pair", 1).axis("h", 1, 1).pair("f", "a1", "fixed", -1).build());
  out.push_back(DiagramBuilder("one-pair-bicolored", 1)
                    .axis("h", 1, -1)
                    .axis("k", 1, -1)
                    .pair("f", "a1", "fixed", 1, 1)
                    .build());
  out.push_back(DiagramBuilder("axis-only", 1).axis("h", 1, 1).axis("k", 1, 1).axis("l", 1, -1).build());
  out.push_back(DiagramBuilder("chain-2", 2)
                    .pair("x", "a1", "a2", 1)
                    .pair("y", "a2", "fixed", 1, -1)
                    .axis("h1", 1, 1)
                    .axis("h2", 2, -1)
                    .build());
  out.push_back(DiagramBuilder("mixed-2", 2)
                    .pair("m", "a1", "a2'", -1, 1)
                    .pair("f", "a2", "fixed", -1)
                    .axis("h1", 1, -1)
                    .build());
  out.push_back(DiagramBuilder("self-mixed", 2)
                    .pair("s", "a1", "a1'", 1, -1)
                    .pair("t", "a1", "a2", -1)
                    .pair("f", "a2", "fixed", 1)
                    .axis("h2", 2, 1)
                    .build());
  out.push_back(DiagramBuilder("parallel", 2)
                    .pair("p", "a1", "a2", -1, 1)
                    .pair("q", "a1", "a2", -1, 1)
                    .pair("r", "a1", "a2", 1)
                    .pair("f", "a1", "fixed", -1)
                    .axis("h2", 2, -1)
                    .build());
  out.push_back(DiagramBuilder("degenerate", 2)
                    .pair("d", "a1", "a1", 1)
                    .pair("x", "a1", "a2", -1, -1)
                    .pair("f", "a2", "fixed", -1)
                    .axis("h1", 1, -1)
                    .build());
  out.push_back(DiagramBuilder("chain-3", 3)
                    .pair("x", "a1", "a2", -1, 1)
                    .pair("y", "a2", "a3", -1, -1)
                    .pair("z", "a3", "fixed", -1)
                    .axis("h1", 1, -1)
                    .axis("h3", 3, 1)
                    .build());
  out.push_back(DiagramBuilder("triangle-3", 3)
                    .pair("x", "a1", "a2", 1)
                    .pair("y", "a2", "a3", 1, 1)
                    .pair("z", "a3", "a1", 1)
                    .pair("f", "a1", "fixed", -1, 1)
                    .axis("h2", 2, 1)
                    .build());
  out.push_back(DiagramBuilder("mixed-3", 3)
                    .pair("u", "a1", "a3'", -1)
                    .pair("v", "a2'", "a3", 1, 1)
                    .pair("w", "a1", "a2", -1, -1)
                    .pair("f", "a3", "fixed", -1)
                    .axis("h1", 1, 1)
                    .axis("h2", 2, -1)
                    .build());
  out.push_back(DiagramBuilder("fixed-heavy", 2)
                    .pair("f1", "a1", "fixed", -1, 1)
                    .pair("f2", "a1", "fixed", 1, -1)
                    .pair("f3", "a2", "fixed", -1)
                    .pair("x", "a1", "a2", 1)
                    .build());
  out.push_back(DiagramBuilder("star-4", 4)
                    .pair("x2", "a1", "a2", -1)
                    .pair("x3", "a1", "a3", -1, 1)
                    .pair("x4", "a1", "a4", -1, -1)
                    .pair("f", "a1", "fixed", 1)
                    .axis("h2", 2, -1)
                    .axis("h3", 3, 1)
                    .axis("h4", 4, -1)
                    .build());
  out.push_back(DiagramBuilder("cycle-4", 4)
                    .pair("x", "a1", "a2", 1, 1)
                    .pair("y", "a2", "a3", 1, 1)
                    .pair("z", "a3", "a4", 1, -1)
                    .pair("w", "a4", "a1", 1)
                    .pair("f", "a2", "fixed", -1)
                    .pair("g", "a4", "fixed", -1)
                    .build());
  out.push_back(DiagramBuilder("all-bicolored", 3)
                    .pair("x", "a1", "a2", -1, 1)
                    .pair("y", "a2", "a3", 1, 1)
                    .pair("z", "a3", "fixed", -1, -1)
                    .pair("m", "a1", "a3'", 1, -1)
                    .axis("h2", 2, 1)
                    .build());
  out.push_back(DiagramBuilder("twisted-axis", 2)
                    .axis("h1", 1, 1)
                    .axis("k1", 1, 1)
                    .axis("h2", 2, -1)
                    .axis("k2", 2, -1)
                    .pair("x", "a1", "a2", 1)
                    .pair("f", "a1", "fixed", 1)
                    .build());
  out.push_back(DiagramBuilder("mixed-self-5", 5)
                    .pair("s1", "a1", "a1'", -1)
                    .pair("s5", "a5", "a5'", 1, 1)
                    .pair("x", "a1", "a2", -1, 1)
                    .pair("y", "a2", "a3", -1)
                    .pair("z", "a3", "a4", 1, -1)
                    .pair("w", "a4", "a5'", -1)
                    .pair("f", "a5", "fixed", -1)
                    .axis("h3", 3, 1)
                    .build());
  out.push_back(DiagramBuilder("isolated-region", 3)
                    .pair("x", "a1", "a2", -1)
                    .pair("f", "a2", "fixed", -1, 1)
                    .axis("h3", 3, -1)
                    .build());
  out.push_back(DiagramBuilder("no-fixed", 2)
                    .pair("x", "a1", "a2", 1, -1)
                    .pair("y", "a1", "a2'", -1)
                    .axis("h1", 1, 1)
                    .build());
  out.push_back(DiagramBuilder("dense-3", 3)
                    .pair("x12", "a1", "a2", 1, 1)
                    .pair("x13", "a1", "a3", -1)
                    .pair("x23", "a2", "a3", 1, -1)
                    .pair("m12", "a1", "a2'", -1, -1)
                    .pair("m23", "a2", "a3'", 1)
                    .pair("f1", "a1", "fixed", 1, 1)
                    .pair("f3", "a3", "fixed", -1)
                    .axis("h1", 1, -1)
                    .axis("h2", 2, 1)
                    .axis("h3", 3, -1)
                    .build());
  out.push_back(DiagramBuilder("degenerate-fixed", 1)
                    .pair("d", "fixed", "fixed", 1)
                    .pair("f", "a1", "fixed", -1, -1)
                    .axis("h", 1, 1)
                    .build());
  return out;
}

std::vector<DiagramMove> applicable_moves(const SymmetricDiagram& d) {
  std::vector<DiagramMove> out;
  for (const auto& c : d.crossings) {
    if (c.degenerate()) continue;
    if (c.locus == Locus::OnAxisH) out.push_back(FlipB{c.id});
    if (c.locus == Locus::OffAxis) out.push_back(FlipA{c.id});
  }
  for (int s : {1, -1})
    for (auto color : {CrossingColor::Unicolored, CrossingColor::Bicolored})
      out.push_back(ContractC{s, color});
  return out;
}

std::string describe(const DiagramMove& m) {
  if (const auto* b = std::get_if<FlipB>(&m)) return "FlipB " + b->crossing;
  if (const auto* a = std::get_if<FlipA>(&m)) return "FlipA " + a->crossing;
  const auto& c = std::get<ContractC>(m);
  return std::string("ContractC s=") + (c.s > 0 ? "+1 " : "-1 ") + to_token(c.color);
}

}  // namespace eqsig::testkit
