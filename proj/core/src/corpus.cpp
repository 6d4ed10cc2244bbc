#include "eqsig/corpus.hpp"

#include <algorithm>

namespace eqsig {

namespace {

struct Expected {
  long sigma_plus;
  long sigma_minus;
  long e;
  long sigma_tilde;
  long det;
};

CorpusEntry matrix_entry(std::string name, std::string source, SymIntMatrix a, SymIntMatrix b,
                         long e, Expected x, std::string notes,
                         std::optional<TypeCProvenance> type_c = std::nullopt,
                         std::optional<long> stated = std::nullopt) {
  EquivariantGoeritz g(std::move(a), std::move(b), e, name);
  g.type_c = std::move(type_c);
  Document doc;
  doc.payload = std::move(g);
  doc.notes = std::move(notes);
  Expectation exp;
  exp.sigma_plus = x.sigma_plus;
  exp.sigma_minus = x.sigma_minus;
  exp.e = x.e;
  exp.sigma_tilde = x.sigma_tilde;
  exp.stated_sigma_tilde = stated;
  exp.det_full = x.det;
  doc.expected = exp;
  return {std::move(name), std::move(source), std::move(doc), {}};
}

Crossing crossing(std::string id, RegionRef r0, RegionRef r1, int eta, std::optional<int> eps,
                  Locus locus, std::string partner) {
  Crossing c;
  c.id = std::move(id);
  c.regions = {r0, r1};
  c.eta = eta;
  c.color = eps ? CrossingColor::Bicolored : CrossingColor::Unicolored;
  c.epsilon = eps;
  c.locus = locus;
  c.partner = std::move(partner);
  return c;
}

// Adds an off-axis rho-pair: `id` between r0, r1 and `id'` between their images.
void add_pair(SymmetricDiagram& d, const std::string& id, RegionRef r0, RegionRef r1, int eta,
              std::optional<int> eps = std::nullopt) {
  d.crossings.push_back(crossing(id, r0, r1, eta, eps, Locus::OffAxis, id + "'"));
  d.crossings.push_back(crossing(id + "'", r0.rho(), r1.rho(), eta, eps, Locus::OffAxis, id));
}

void add_axis(SymmetricDiagram& d, const std::string& id, std::size_t k, int eta) {
  d.crossings.push_back(crossing(id, RegionRef::plus(k), RegionRef::minus(k), eta, std::nullopt,
                                 Locus::OnAxisH, id));
}

CorpusEntry diagram_entry(std::string name, std::string matches, SymmetricDiagram d,
                          std::string notes) {
  Document doc;
  doc.payload = std::move(d);
  doc.notes = std::move(notes);
  return {std::move(name), "reconstructed incidence data", std::move(doc), std::move(matches)};
}

std::vector<CorpusEntry> build() {
  using R = RegionRef;
  std::vector<CorpusEntry> out;

  out.push_back(matrix_entry(
      "6_1", "M^+ = [[-10,2],[2,-4]], M^- = [[-2,2],[2,-4]], e(D) = 0; stated σ̃(6_1) = 0 - 2 = -2",
      {{-3, 1}, {1, -2}}, {{2, 0}, {0, 0}}, 0, {-2, -2, 0, 0, 9},
      "Goeritz form of a symmetric 6_1 diagram. DISCREPANCY: the published value is -2, but M^+ and "
      "M^- are both negative definite and e = 0, so the definition gives σ̃ = -2 - (-2) - 0 = 0. "
      "The computed value is authoritative; the published one is kept as stated_sigma_tilde.",
      std::nullopt, -2));

  out.push_back(matrix_entry("5_1", "σ̃(5_1) = -2 - (-2) - 4 = -4", {{-2, 1}, {1, -2}},
                             {{1, 0}, {0, 0}}, 4, {-2, -2, 4, -4, 5},
                             "Goeritz form of an admissible symmetric 5_1 diagram."));

  out.push_back(matrix_entry("5_1-after-B", "σ̃(3_1) = 0 - (-2) - 4 = -2", {{0, 1}, {1, -2}},
                             {{-1, 0}, {0, 0}}, 4, {0, -2, 4, -2, -3},
                             "5_1 after the directed type B move B k=1 sign=+1 (a trefoil)."));

  out.push_back(matrix_entry(
      "5_1-after-C", "signature after the move: -1 - (-1) - 2 = -2",
      {{-2, 1, 0}, {1, -2, 1}, {0, 1, 0}}, {{1, 0, 0}, {0, 0, 0}, {0, 0, 0}}, 2,
      {-1, -1, 2, -2, 3},
      "5_1 after the positive bicolored type C move (right-handed trefoil); v = [0,1], S = 1.",
      TypeCProvenance{{0, 1}, 1, 1}));

  const SymIntMatrix b940{{1, 0, 0, 0}, {0, 0, 0, 0}, {0, 0, -1, 0}, {0, 0, 0, 1}};
  out.push_back(matrix_entry(
      "9_40", "σ̃(9_40) = -2 - (-4) - (-4) = 6",
      {{-3, 1, 0, 1}, {1, -2, 1, 0}, {0, 1, -1, 0}, {1, 0, 0, -3}}, b940, -4, {-2, -4, -4, 6, -75},
      "Goeritz form of an admissible symmetric 9_40 diagram (regions a, b, c, d = 1..4)."));

  out.push_back(matrix_entry(
      "9_40-after-A2", "σ(M_1^+) = -2, σ(M_1^-) = -2, e(D) = 0, σ̃(3_1 # r3_1) = 0",
      {{-1, 1, 0, -1}, {1, -2, 1, 0}, {0, 1, -1, 0}, {-1, 0, 0, -1}}, b940, 0, {-2, -2, 0, 0, 9},
      "9_40 after A2 i=1 j=4 sign=+1 color=bicolored eps=+1 (3_1 # r3_1)."));

  out.push_back(matrix_entry(
      "9_40-after-A1+A2", "σ̃(U) = 0",
      {{-1, 1, 0, -1}, {1, -2, 1, 0}, {0, 1, -1, 0}, {-1, 0, 0, 1}}, b940, 0, {0, 0, 0, 0, 1},
      "9_40 after the A2 move followed by A1 k=4 sign=+1 color=unicolored (the unknot)."));

  out.push_back(matrix_entry(
      "9_40-after-C", "σ(M_C^+) = -3, σ(M_C^-) = -3, e(D) = -6, σ̃ = 6",
      {{-3, 1, 0, 1, 0}, {1, -2, 1, 0, 0}, {0, 1, -1, 0, 1}, {1, 0, 0, -3, 1}, {0, 0, 1, 1, -1}},
      {{1, 0, 0, 0, 0}, {0, 0, 0, 0, 0}, {0, 0, -1, 0, 0}, {0, 0, 0, 1, 0}, {0, 0, 0, 0, 0}}, -6,
      {-3, -3, -6, 6, 195},
      "9_40 after the positive bicolored type C move; v = [0,0,1,1], S = 2.",
      TypeCProvenance{{0, 0, 1, 1}, 2, 1}));

  {
    SymmetricDiagram d;
    d.n = 2;
    d.label = "6_1-diagram";
    add_pair(d, "ab", R::plus(1), R::plus(2), -1);
    add_axis(d, "h1", 1, -1);
    add_axis(d, "h2", 1, -1);
    add_pair(d, "bf", R::plus(2), R::fixed(), -1);
    out.push_back(diagram_entry("6_1-diagram", "6_1", std::move(d),
                                "Incidence data whose Goeritz form is the 6_1 entry; arcs a and b "
                                "meet only on the axis, so every crossing is unicolored."));
  }
  {
    SymmetricDiagram d;
    d.n = 2;
    d.label = "5_1-diagram";
    add_pair(d, "ab", R::plus(1), R::plus(2), -1, -1);
    add_axis(d, "h1", 1, -1);
    add_pair(d, "bf", R::plus(2), R::fixed(), -1, -1);
    out.push_back(diagram_entry("5_1-diagram", "5_1", std::move(d),
                                "Incidence data whose Goeritz form is the 5_1 entry; h1 is the "
                                "on-axis crossing changed by the type B move."));
  }
  {
    SymmetricDiagram d;
    d.n = 4;
    d.label = "9_40-diagram";
    add_pair(d, "ab", R::plus(1), R::plus(2), -1, 1);
    add_pair(d, "ad", R::plus(1), R::plus(4), -1, 1);
    add_pair(d, "bc", R::plus(2), R::plus(3), -1);
    add_axis(d, "h1", 1, -1);
    add_axis(d, "h3", 3, 1);
    add_axis(d, "h4", 4, -1);
    add_pair(d, "cf", R::plus(3), R::fixed(), -1);
    add_pair(d, "df", R::plus(4), R::fixed(), -1);
    out.push_back(diagram_entry("9_40-diagram", "9_40", std::move(d),
                                "Incidence data whose Goeritz form is the 9_40 entry; ad is the "
                                "A2 target and df the A1 target."));
  }
  return out;
}

}  // namespace

const std::vector<CorpusEntry>& corpus() {
  static const std::vector<CorpusEntry> entries = build();
  return entries;
}

const CorpusEntry* find_corpus_entry(const std::string& name) {
  const auto& all = corpus();
  auto it = std::find_if(all.begin(), all.end(), [&](const CorpusEntry& e) { return e.name == name; });
  return it == all.end() ? nullptr : &*it;
}

}  // namespace eqsig
