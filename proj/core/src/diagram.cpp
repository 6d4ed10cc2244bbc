#include "eqsig/diagram.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "eqsig/error.hpp"

namespace eqsig {

namespace {

using RegionPair = std::array<RegionRef, 2>;

RegionPair sorted(RegionPair p) {
  if (p[1] < p[0]) std::swap(p[0], p[1]);
  return p;
}

RegionPair rho(const RegionPair& p) { return {p[0].rho(), p[1].rho()}; }

bool region_in_range(const RegionRef& r, std::size_t n) {
  return r.is_fixed() ? r.index == 0 : (r.index >= 1 && r.index <= n);
}

// Position of a region in G': a_i -> i-1, a'_i -> n+i-1, fixed -> 2n.
std::size_t slot(const RegionRef& r, std::size_t n) {
  switch (r.side) {
    case RegionSide::Plus:
      return r.index - 1;
    case RegionSide::Minus:
      return n + r.index - 1;
    case RegionSide::Fixed:
      break;
  }
  return 2 * n;
}

void require_valid(const SymmetricDiagram& d) {
  auto report = validate(d);
  if (!report.ok()) throw InvalidDiagram("invalid diagram: " + report.summary());
}

void require_admissible(const SymmetricDiagram& d) {
  if (!is_admissible(d)) throw InvalidDiagram("diagram is not admissible (crossing on h')");
}

}  // namespace

RegionRef RegionRef::rho() const {
  switch (side) {
    case RegionSide::Plus:
      return minus(index);
    case RegionSide::Minus:
      return plus(index);
    case RegionSide::Fixed:
      break;
  }
  return fixed();
}

std::string to_token(const RegionRef& r) {
  switch (r.side) {
    case RegionSide::Plus:
      return "a" + std::to_string(r.index);
    case RegionSide::Minus:
      return "a" + std::to_string(r.index) + "'";
    case RegionSide::Fixed:
      break;
  }
  return "fixed";
}

std::optional<RegionRef> region_from_token(const std::string& token) {
  if (token == "fixed") return RegionRef::fixed();
  if (token.size() < 2 || token[0] != 'a') return std::nullopt;
  std::string digits = token.substr(1);
  bool prime = false;
  if (digits.back() == '\'') {
    prime = true;
    digits.pop_back();
  }
  if (digits.empty() || digits.size() > 9 || digits[0] == '0') return std::nullopt;
  if (!std::all_of(digits.begin(), digits.end(), [](char c) { return c >= '0' && c <= '9'; }))
    return std::nullopt;
  const std::size_t i = std::stoul(digits);
  return prime ? RegionRef::minus(i) : RegionRef::plus(i);
}

std::string to_token(CrossingColor c) {
  return c == CrossingColor::Bicolored ? "bicolored" : "unicolored";
}

std::string to_token(Locus l) {
  switch (l) {
    case Locus::OffAxis:
      return "off-axis";
    case Locus::OnAxisH:
      return "on-axis-h";
    case Locus::OnAxisHPrime:
      break;
  }
  return "on-axis-h'";
}

std::optional<CrossingColor> color_from_token(const std::string& token) {
  if (token == "unicolored") return CrossingColor::Unicolored;
  if (token == "bicolored") return CrossingColor::Bicolored;
  return std::nullopt;
}

std::optional<Locus> locus_from_token(const std::string& token) {
  if (token == "off-axis") return Locus::OffAxis;
  if (token == "on-axis-h") return Locus::OnAxisH;
  if (token == "on-axis-h'") return Locus::OnAxisHPrime;
  return std::nullopt;
}

const Crossing* SymmetricDiagram::find(const std::string& id) const {
  auto it = std::find_if(crossings.begin(), crossings.end(),
                         [&](const Crossing& c) { return c.id == id; });
  return it == crossings.end() ? nullptr : &*it;
}

std::string ValidationReport::summary() const {
  std::string out;
  for (const auto& v : violations) {
    if (!out.empty()) out += "; ";
    out += v.crossing + ": " + v.message;
  }
  return out;
}

ValidationReport validate(const SymmetricDiagram& d) {
  ValidationReport report;
  auto flag = [&](const Crossing& c, std::string message) {
    report.violations.push_back({c.id, std::move(message)});
  };

  std::map<std::string, const Crossing*> by_id;
  for (const auto& c : d.crossings) {
    if (!by_id.emplace(c.id, &c).second) flag(c, "duplicate crossing id");
  }

  for (const auto& c : d.crossings) {
    for (const auto& r : c.regions)
      if (!region_in_range(r, d.n)) flag(c, "region " + to_token(r) + " out of range");
    if (c.eta != 1 && c.eta != -1) flag(c, "η must be ±1");
    if (c.color == CrossingColor::Bicolored) {
      if (!c.epsilon) flag(c, "bicolored crossing without ε");
      else if (*c.epsilon != 1 && *c.epsilon != -1) flag(c, "ε must be ±1");
    } else if (c.epsilon) {
      flag(c, "ε given for a unicolored crossing");
    }

    auto it = by_id.find(c.partner);
    if (it == by_id.end()) {
      flag(c, "partner '" + c.partner + "' not found");
      continue;
    }
    const Crossing& p = *it->second;
    if (p.partner != c.id) flag(c, "partner not involutive");
    if (c.on_axis() != (p.id == c.id))
      flag(c, c.on_axis() ? "on-axis crossing is not its own partner"
                          : "off-axis crossing is its own partner");
    if (p.eta != c.eta) flag(c, "η not ρ-invariant");
    if (p.color != c.color) flag(c, "color not ρ-invariant");
    else if (p.epsilon != c.epsilon) flag(c, "ε not ρ-invariant");
    if (sorted(p.regions) != sorted(rho(c.regions)))
      flag(c, "partner regions are not the ρ-image");
    if (c.on_axis() && sorted(c.regions) != sorted(rho(c.regions)))
      flag(c, "on-axis crossing has a region pair that is not ρ-invariant");
  }
  return report;
}

bool is_admissible(const SymmetricDiagram& d) {
  require_valid(d);
  return std::none_of(d.crossings.begin(), d.crossings.end(),
                      [](const Crossing& c) { return c.locus == Locus::OnAxisHPrime; });
}

Integer correction_term(const SymmetricDiagram& d) {
  require_admissible(d);
  Integer e = 0;
  for (const auto& c : d.crossings)
    if (c.color == CrossingColor::Bicolored && c.locus == Locus::OffAxis) e -= *c.epsilon;
  return e;
}

SymIntMatrix unreduced_goeritz(const SymmetricDiagram& d) {
  require_valid(d);
  const std::size_t size = 2 * d.n + 1;
  IntMatrix g(size, size);
  for (const auto& c : d.crossings) {
    if (c.degenerate()) continue;
    const std::size_t i = slot(c.regions[0], d.n);
    const std::size_t j = slot(c.regions[1], d.n);
    g(i, j) -= c.eta;
    g(j, i) -= c.eta;
  }
  for (std::size_t i = 0; i < size; ++i) {
    Integer off = 0;
    for (std::size_t j = 0; j < size; ++j)
      if (j != i) off += g(i, j);
    g(i, i) = -off;
  }
  return SymIntMatrix(std::move(g));
}

EquivariantGoeritz goeritz(const SymmetricDiagram& d) {
  require_admissible(d);
  if (d.n == 0) throw InvalidDiagram("diagram has no paired regions; reduced Goeritz form is empty");
  const SymIntMatrix g = unreduced_goeritz(d);
  const std::size_t n = d.n;
  IntMatrix a(n, n), b(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      a(i, j) = g(i, j);
      b(i, j) = g(i, n + j);
      // rho-symmetry of a valid diagram forces the lower-right block to repeat A.
      if (g(n + i, n + j) != a(i, j))
        throw InvalidDiagram("Goeritz blocks are not ρ-symmetric");
    }
  }
  return EquivariantGoeritz(SymIntMatrix(std::move(a)), SymIntMatrix(std::move(b)),
                            correction_term(d), d.label);
}

}  // namespace eqsig
