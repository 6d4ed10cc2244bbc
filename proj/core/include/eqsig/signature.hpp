#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "eqsig/goeritz.hpp"
#include "eqsig/matrix.hpp"

namespace eqsig {

/// Counts of positive, negative and zero eigenvalues.
struct Inertia {
  std::size_t p = 0;
  std::size_t q = 0;
  std::size_t z = 0;

  long signature() const { return static_cast<long>(p) - static_cast<long>(q); }
  std::size_t size() const { return p + q + z; }

  friend bool operator==(const Inertia&, const Inertia&) = default;
};

/// Exact inertia by symmetric congruence elimination over the rationals
/// (Sylvester's law of inertia).
Inertia inertia(const SymIntMatrix& m);

inline long signature(const SymIntMatrix& m) { return inertia(m).signature(); }

/// Nested principal index sets Delta_1 c Delta_2 c ... c Delta_m, stored as
/// the order in which indices are added: Delta_i = first i entries of `order`.
/// `minors[i]` is det(Delta_i), with minors[0] = det(empty) = 1.
struct SigmaSeries {
  std::vector<std::size_t> order;
  std::vector<Integer> minors;

  std::size_t length() const { return order.size(); }
};

/// Builds a sigma-series for a nonsingular symmetric matrix: no two consecutive
/// minors vanish. Extensions are tried in `preference` order (ascending index
/// when empty), nonsingular extensions first, with backtracking.
/// Throws SingularFormError for singular input.
SigmaSeries sigma_series(const SymIntMatrix& m, std::span<const std::size_t> preference = {});

/// Checks nesting, recorded minors and the no-two-consecutive-singular rule.
bool is_valid_sigma_series(const SymIntMatrix& m, const SigmaSeries& series);

/// sum_i sign(det Delta_{i-1} * det Delta_i) over the given series.
long signature_from_series(const SigmaSeries& series);

/// Signature via a sigma-series. Throws SingularFormError for singular input.
long signature_jones(const SymIntMatrix& m, std::span<const std::size_t> preference = {});

struct EquivariantSignature {
  long sigma_plus = 0;
  long sigma_minus = 0;
  Integer e;
  long value = 0;  // sigma_plus - sigma_minus - e
};

/// sigma(M^+) - sigma(M^-) - e. An empty form (n == 0) has value -e.
/// Throws SingularFormError if M^+ or M^- is singular.
EquivariantSignature equivariant_signature(const EquivariantGoeritz& g);

}  // namespace eqsig
