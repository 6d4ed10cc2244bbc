#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "eqsig/goeritz.hpp"
#include "eqsig/moves.hpp"
#include "eqsig/signature.hpp"

namespace eqsig {

/// Largest |change of sigma~| a single move of this kind can cause:
/// 2 for directed type B and type C, 6 for type A.
long move_bound(MoveKind kind);

/// sigma~(apply_move_matrix(g, m)) - sigma~(g).
/// Throws SingularFormError if either form has a singular eigenspace part.
long delta_sigma(const EquivariantGoeritz& g, const MoveSpec& m);

bool check_move_bound(const MoveSpec& m, long delta);

struct LowerBounds {
  long uA_min = 0;
  long uB_min = 0;
  long uC_min = 0;
  long homotopy_selfintersections_min = 0;

  friend bool operator==(const LowerBounds&, const LowerBounds&) = default;
};

/// Applicability caveats attached to each lower bound.
struct LowerBoundCaveats {
  static constexpr const char* uA =
      "type A equivariant unknotting number; every strongly invertible knot is unknotted by type A moves";
  static constexpr const char* uB =
      "applies only to homotopies whose self-intersections are all directed type B; requires an admissible diagram";
  static constexpr const char* uC =
      "applies only to (1,2)-knots whose axis is the core of a handlebody of the (1,2)-decomposition";
  static constexpr const char* homotopy =
      "applies to homotopies to the unknot that never cross the direction";
};

LowerBounds lower_bounds_from_sigma(long sigma_tilde);

/// Lower bounds from sigma~(g). Throws SingularFormError for singular parts.
LowerBounds lower_bounds(const EquivariantGoeritz& g);

struct BoundStep {
  MoveSpec move;
  long sigma_before = 0;
  long sigma_after = 0;
  long delta = 0;
  long bound = 0;
  bool compliant = true;

  friend bool operator==(const BoundStep&, const BoundStep&) = default;
};

struct BoundReport {
  std::string label;
  long initial_sigma = 0;
  std::vector<BoundStep> steps;
  long final_sigma = 0;
  LowerBounds lower_bounds;
  bool compliant = true;

  friend bool operator==(const BoundReport&, const BoundReport&) = default;
};

/// Applies `moves` in order, recording sigma~ and bound compliance per step.
/// `bound_override`, when set, replaces every per-move bound.
BoundReport verify_sequence(const EquivariantGoeritz& g, std::span<const MoveSpec> moves,
                            std::optional<long> bound_override = std::nullopt);

struct RankOneDiagnostics {
  Inertia before;
  Inertia after;
  long delta_sigma = 0;
  bool delta_in_range = false;     // delta_sigma in {0, +2}
  bool positive_index_nondecreasing = false;
  Integer det_before;
  Integer det_after;
  Rational quadratic;              // u^T M^{-1} u
  bool det_identity_holds = false;  // det(M + t uu^T) == det(M) (1 + t u^T M^{-1} u)
};

/// Effect of the positive semidefinite rank-one update M -> M + t uu^T.
/// Throws SingularFormError if M or the updated matrix is singular, and
/// std::invalid_argument for t <= 0 or a size mismatch.
RankOneDiagnostics rank_one_diagnostics(const SymIntMatrix& m, std::span<const Integer> u,
                                        const Integer& t);

}  // namespace eqsig
