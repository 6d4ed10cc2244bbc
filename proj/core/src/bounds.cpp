#include "eqsig/bounds.hpp"

#include <cstdlib>
#include <stdexcept>

#include "eqsig/error.hpp"
#include "eqsig/signature.hpp"

namespace eqsig {

namespace {

long ceil_div(long a, long b) { return (a + b - 1) / b; }

}  // namespace

long move_bound(MoveKind kind) {
  switch (kind) {
    case MoveKind::B:
    case MoveKind::C:
      return 2;
    case MoveKind::A1:
    case MoveKind::A2:
      break;
  }
  return 6;
}

long delta_sigma(const EquivariantGoeritz& g, const MoveSpec& m) {
  const long before = equivariant_signature(g).value;
  const long after = equivariant_signature(apply_move_matrix(g, m)).value;
  return after - before;
}

bool check_move_bound(const MoveSpec& m, long delta) {
  return std::labs(delta) <= move_bound(kind_of(m));
}

LowerBounds lower_bounds_from_sigma(long sigma_tilde) {
  const long a = std::labs(sigma_tilde);
  LowerBounds out;
  out.uA_min = ceil_div(a, 3);
  out.uB_min = ceil_div(a, 2);
  out.uC_min = ceil_div(a, 2);
  out.homotopy_selfintersections_min = ceil_div(a, 3);
  return out;
}

LowerBounds lower_bounds(const EquivariantGoeritz& g) {
  return lower_bounds_from_sigma(equivariant_signature(g).value);
}

BoundReport verify_sequence(const EquivariantGoeritz& g, std::span<const MoveSpec> moves,
                            std::optional<long> bound_override) {
  BoundReport report;
  report.label = g.label;
  report.initial_sigma = equivariant_signature(g).value;
  EquivariantGoeritz current = g;
  long sigma = report.initial_sigma;
  for (const MoveSpec& m : moves) {
    EquivariantGoeritz next = apply_move_matrix(current, m);
    BoundStep step;
    step.move = m;
    step.sigma_before = sigma;
    step.sigma_after = equivariant_signature(next).value;
    step.delta = step.sigma_after - step.sigma_before;
    step.bound = bound_override.value_or(move_bound(kind_of(m)));
    step.compliant = std::labs(step.delta) <= step.bound;
    report.compliant = report.compliant && step.compliant;
    report.steps.push_back(step);
    sigma = step.sigma_after;
    current = std::move(next);
  }
  report.final_sigma = sigma;
  report.lower_bounds = lower_bounds_from_sigma(report.initial_sigma);
  return report;
}

RankOneDiagnostics rank_one_diagnostics(const SymIntMatrix& m, std::span<const Integer> u,
                                        const Integer& t) {
  if (t <= 0) throw std::invalid_argument("rank-one weight t must be positive");
  if (u.size() != m.size()) throw std::invalid_argument("vector size does not match matrix");
  RankOneDiagnostics out;
  out.det_before = det(m);
  if (out.det_before == 0) throw SingularFormError("M is singular");

  SymIntMatrix updated = m;
  for (std::size_t i = 0; i < u.size(); ++i)
    for (std::size_t j = i; j < u.size(); ++j) updated.add(i, j, t * u[i] * u[j]);
  out.det_after = det(updated);
  if (out.det_after == 0) throw SingularFormError("M + t uu^T is singular");

  out.before = inertia(m);
  out.after = inertia(updated);
  out.delta_sigma = out.after.signature() - out.before.signature();
  out.delta_in_range = out.delta_sigma == 0 || out.delta_sigma == 2;
  out.positive_index_nondecreasing = out.after.p >= out.before.p;

  const std::vector<Rational> x = solve(m.matrix(), u);
  out.quadratic = 0;
  for (std::size_t i = 0; i < u.size(); ++i) out.quadratic += Rational(u[i]) * x[i];
  out.det_identity_holds =
      Rational(out.det_after) == Rational(out.det_before) * (1 + Rational(t) * out.quadratic);
  return out;
}

}  // namespace eqsig
