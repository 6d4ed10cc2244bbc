#include "eqsig/moves.hpp"

#include <algorithm>

#include "eqsig/error.hpp"

namespace eqsig {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};

void check_sign(int value, const char* what) {
  if (value != 1 && value != -1) throw DomainError(std::string(what) + " must be +1 or -1");
}

void check_index(std::size_t k, std::size_t n, const char* what) {
  if (k < 1 || k > n)
    throw DomainError(std::string(what) + "=" + std::to_string(k) + " outside 1.." +
                      std::to_string(n));
}

void check_color(CrossingColor color, std::optional<int> eps) {
  if (color == CrossingColor::Bicolored) {
    if (!eps) throw DomainError("bicolored move requires eps");
    check_sign(*eps, "eps");
  } else if (eps) {
    throw DomainError("eps given for a unicolored move");
  }
}

Crossing& find_mutable(SymmetricDiagram& d, const std::string& id) {
  auto it = std::find_if(d.crossings.begin(), d.crossings.end(),
                         [&](const Crossing& c) { return c.id == id; });
  if (it == d.crossings.end()) throw DomainError("no crossing with id '" + id + "'");
  return *it;
}

const Crossing& target(const SymmetricDiagram& d, const std::string& id, Locus required) {
  const Crossing* c = d.find(id);
  if (!c) throw DomainError("no crossing with id '" + id + "'");
  if (c->locus != required)
    throw DomainError("crossing '" + id + "' has locus " + to_token(c->locus) + ", expected " +
                      to_token(required));
  if (c->degenerate())
    throw DomainError("crossing '" + id + "' has both corners in region " +
                      to_token(c->regions[0]) + " and no Goeritz contribution");
  return *c;
}

std::string fresh_id(const SymmetricDiagram& d, const std::string& base) {
  std::string id = base;
  for (int suffix = 2; d.find(id); ++suffix) id = base + "_" + std::to_string(suffix);
  return id;
}

}  // namespace

MoveKind kind_of(const MoveSpec& m) {
  return std::visit(overloaded{
                        [](const TypeB&) { return MoveKind::B; },
                        [](const TypeA1&) { return MoveKind::A1; },
                        [](const TypeA2&) { return MoveKind::A2; },
                        [](const TypeC&) { return MoveKind::C; },
                    },
                    m);
}

std::string to_string(MoveKind k) {
  switch (k) {
    case MoveKind::B:
      return "B";
    case MoveKind::A1:
      return "A1";
    case MoveKind::A2:
      return "A2";
    case MoveKind::C:
      break;
  }
  return "C";
}

Integer correction_change_type_a(CrossingColor color, std::optional<int> old_epsilon) {
  if (color == CrossingColor::Unicolored) return 0;
  return 4 * old_epsilon.value_or(0);
}

void check_move(const MoveSpec& m, std::size_t n) {
  std::visit(overloaded{
                 [&](const TypeB& b) {
                   check_index(b.k, n, "k");
                   check_sign(b.delta, "sign");
                 },
                 [&](const TypeA1& a) {
                   check_index(a.k, n, "k");
                   check_sign(a.delta, "sign");
                   check_color(a.color, a.old_epsilon);
                 },
                 [&](const TypeA2& a) {
                   check_index(a.i, n, "i");
                   check_index(a.j, n, "j");
                   if (!a.mixed && a.i == a.j) throw DomainError("A2 requires i != j");
                   check_sign(a.delta, "sign");
                   check_color(a.color, a.old_epsilon);
                 },
                 [&](const TypeC& c) {
                   if (n == 0) throw DomainError("type C needs at least one region pair");
                   check_sign(c.s, "sign");
                 },
             },
             m);
}

EquivariantGoeritz apply_move_matrix(const EquivariantGoeritz& g, const MoveSpec& m) {
  check_move(m, g.n());
  EquivariantGoeritz out = g;
  out.type_c.reset();
  std::visit(overloaded{
                 [&](const TypeB& b) {
                   const std::size_t k = b.k - 1;
                   out.A.add(k, k, 2 * b.delta);
                   out.B.add(k, k, -2 * b.delta);
                 },
                 [&](const TypeA1& a) {
                   const std::size_t k = a.k - 1;
                   out.A.add(k, k, 2 * a.delta);
                   out.e += correction_change_type_a(a.color, a.old_epsilon);
                 },
                 [&](const TypeA2& a) {
                   const std::size_t i = a.i - 1, j = a.j - 1;
                   out.A.add(i, i, 2 * a.delta);
                   out.A.add(j, j, 2 * a.delta);
                   if (!a.mixed) {
                     out.A.add(i, j, -2 * a.delta);
                   } else if (i != j) {
                     out.B.add(i, j, -2 * a.delta);
                   } else {
                     out.B.add(i, i, -4 * a.delta);
                   }
                   out.e += correction_change_type_a(a.color, a.old_epsilon);
                 },
                 [&](const TypeC& c) {
                   const std::size_t n = g.n();
                   TypeCProvenance prov;
                   prov.s = c.s;
                   prov.v.resize(n);
                   for (std::size_t i = 0; i < n; ++i) {
                     for (std::size_t j = 0; j < n; ++j) prov.v[i] -= g.A(i, j) + g.B(i, j);
                     prov.S += prov.v[i];
                   }
                   SymIntMatrix a(n + 1), b(n + 1);
                   for (std::size_t i = 0; i < n; ++i) {
                     for (std::size_t j = i; j < n; ++j) {
                       a.set(i, j, g.A(i, j));
                       b.set(i, j, g.B(i, j));
                     }
                     a.set(i, n, prov.v[i]);
                   }
                   a.set(n, n, c.s - prov.S);
                   out.A = std::move(a);
                   out.B = std::move(b);
                   if (c.color == CrossingColor::Bicolored) out.e -= 2 * c.s;
                   out.type_c = std::move(prov);
                 },
             },
             m);
  return out;
}

SymIntMatrix resolution_matrix(const EquivariantGoeritz& g_c) {
  if (!g_c.type_c) throw DomainError("form carries no type C provenance");
  const TypeCProvenance& prov = *g_c.type_c;
  const std::size_t n1 = g_c.n();
  if (n1 == 0 || prov.v.size() + 1 != n1) throw DomainError("type C provenance has wrong size");
  const std::size_t last = n1 - 1;
  for (std::size_t i = 0; i < last; ++i)
    if (g_c.A(i, last) != prov.v[i] || g_c.B(i, last) != 0)
      throw DomainError("type C provenance does not match the form");
  if (g_c.A(last, last) != prov.s - prov.S || g_c.B(last, last) != 0)
    throw DomainError("type C provenance does not match the form");

  IntMatrix m = full_matrix(g_c).matrix();
  m(last, last) = -prov.S;
  m(n1 + last, n1 + last) = -prov.S;
  return SymIntMatrix(std::move(m));
}

SymmetricDiagram apply_move_diagram(const SymmetricDiagram& d, const DiagramMove& m) {
  if (!is_admissible(d)) throw InvalidDiagram("diagram is not admissible (crossing on h')");
  SymmetricDiagram out = d;
  std::visit(overloaded{
                 [&](const FlipB& f) {
                   target(d, f.crossing, Locus::OnAxisH);
                   Crossing& c = find_mutable(out, f.crossing);
                   c.eta = -c.eta;
                 },
                 [&](const FlipA& f) {
                   const Crossing& src = target(d, f.crossing, Locus::OffAxis);
                   for (const std::string& id : {src.id, src.partner}) {
                     Crossing& c = find_mutable(out, id);
                     c.eta = -c.eta;
                     if (c.epsilon) c.epsilon = -*c.epsilon;
                   }
                 },
                 [&](const ContractC& cc) {
                   check_sign(cc.s, "sign");
                   const std::size_t k = d.n + 1;
                   for (Crossing& c : out.crossings) {
                     if (c.degenerate()) continue;
                     for (std::size_t side = 0; side < 2; ++side) {
                       RegionRef& fixed = c.regions[side];
                       const RegionRef& other = c.regions[1 - side];
                       if (!fixed.is_fixed()) continue;
                       fixed = other.side == RegionSide::Plus ? RegionRef::plus(k)
                                                              : RegionRef::minus(k);
                       break;
                     }
                   }
                   Crossing plus, minus;
                   plus.id = fresh_id(d, "c" + std::to_string(k) + "+");
                   minus.id = fresh_id(d, "c" + std::to_string(k) + "-");
                   plus.regions = {RegionRef::plus(k), RegionRef::fixed()};
                   minus.regions = {RegionRef::minus(k), RegionRef::fixed()};
                   for (Crossing* c : {&plus, &minus}) {
                     c->eta = cc.s;
                     c->color = cc.color;
                     if (cc.color == CrossingColor::Bicolored) c->epsilon = cc.s;
                     c->locus = Locus::OffAxis;
                   }
                   plus.partner = minus.id;
                   minus.partner = plus.id;
                   out.n = k;
                   out.crossings.push_back(std::move(plus));
                   out.crossings.push_back(std::move(minus));
                 },
             },
             m);
  return out;
}

MoveSpec move_projection(const SymmetricDiagram& d, const DiagramMove& m) {
  if (!is_admissible(d)) throw InvalidDiagram("diagram is not admissible (crossing on h')");
  return std::visit(
      overloaded{
          [&](const FlipB& f) -> MoveSpec {
            const Crossing& c = target(d, f.crossing, Locus::OnAxisH);
            // A valid on-axis crossing with distinct corners joins a_k and a'_k.
            return TypeB{c.regions[0].index, -c.eta};
          },
          [&](const FlipA& f) -> MoveSpec {
            const Crossing& c = target(d, f.crossing, Locus::OffAxis);
            const RegionRef& x = c.regions[0];
            const RegionRef& y = c.regions[1];
            if (x.is_fixed() || y.is_fixed()) {
              const RegionRef& r = x.is_fixed() ? y : x;
              return TypeA1{r.index, -c.eta, c.color, c.epsilon};
            }
            if (x.side == y.side) return TypeA2{x.index, y.index, -c.eta, c.color, c.epsilon, false};
            const RegionRef& p = x.side == RegionSide::Plus ? x : y;
            const RegionRef& q = x.side == RegionSide::Plus ? y : x;
            return TypeA2{p.index, q.index, -c.eta, c.color, c.epsilon, true};
          },
          [&](const ContractC& cc) -> MoveSpec {
            check_sign(cc.s, "sign");
            return TypeC{cc.s, cc.color};
          },
      },
      m);
}

}  // namespace eqsig
