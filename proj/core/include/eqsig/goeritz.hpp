#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "eqsig/integer.hpp"
#include "eqsig/matrix.hpp"

namespace eqsig {

/// Data recorded by a type C extension; needed to rebuild the split-link
/// resolution matrix.
struct TypeCProvenance {
  std::vector<Integer> v;  // new off-diagonal column, v = -(A + B) * 1
  Integer S;               // sum of v
  int s = 1;               // move sign

  friend bool operator==(const TypeCProvenance&, const TypeCProvenance&) = default;
};

/// Reduced equivariant Goeritz form in the paired-region basis
/// a_1..a_n, a'_1..a'_n:
///
///   M = [[A, B],
///        [B, A]]
///
/// with A_ij = G(a_i, a_j), B_ij = G(a_i, a'_j) and correction term e.
struct EquivariantGoeritz {
  SymIntMatrix A;
  SymIntMatrix B;
  Integer e;
  std::string label;
  std::optional<TypeCProvenance> type_c;

  EquivariantGoeritz() = default;
  /// Throws std::invalid_argument if A and B differ in size.
  EquivariantGoeritz(SymIntMatrix a, SymIntMatrix b, Integer correction, std::string label = {});

  std::size_t n() const { return A.size(); }

  friend bool operator==(const EquivariantGoeritz&, const EquivariantGoeritz&) = default;
};

/// Equality of the form data (A, B, e) only; labels and provenance ignored.
bool same_form(const EquivariantGoeritz& lhs, const EquivariantGoeritz& rhs);

/// [[A, B], [B, A]].
SymIntMatrix full_matrix(const EquivariantGoeritz& g);

/// M^+ = 2(A - B), the form on the +1 eigenspace (basis a_i - a'_i).
SymIntMatrix plus_part(const EquivariantGoeritz& g);

/// M^- = 2(A + B), the form on the -1 eigenspace (basis a_i + a'_i).
SymIntMatrix minus_part(const EquivariantGoeritz& g);

struct DetIdentityCheck {
  Integer det_plus;
  Integer det_minus;
  Integer det_full;
  bool identity_holds = false;  // det(M^+) det(M^-) == 4^n det(M)
  bool knot_like = false;       // |det(M)| odd (hence nonzero)
};

DetIdentityCheck check_det_identity(const EquivariantGoeritz& g);

}  // namespace eqsig
