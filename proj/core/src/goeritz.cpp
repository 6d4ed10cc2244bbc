#include "eqsig/goeritz.hpp"

#include <stdexcept>
#include <utility>

namespace eqsig {

EquivariantGoeritz::EquivariantGoeritz(SymIntMatrix a, SymIntMatrix b, Integer correction,
                                       std::string name)
    : A(std::move(a)), B(std::move(b)), e(std::move(correction)), label(std::move(name)) {
  if (A.size() != B.size()) throw std::invalid_argument("A and B must have equal size");
}

bool same_form(const EquivariantGoeritz& lhs, const EquivariantGoeritz& rhs) {
  return lhs.A == rhs.A && lhs.B == rhs.B && lhs.e == rhs.e;
}

SymIntMatrix full_matrix(const EquivariantGoeritz& g) {
  const std::size_t n = g.n();
  IntMatrix m(2 * n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      m(i, j) = g.A(i, j);
      m(n + i, n + j) = g.A(i, j);
      m(i, n + j) = g.B(i, j);
      m(n + i, j) = g.B(i, j);
    }
  }
  return SymIntMatrix(std::move(m));
}

SymIntMatrix plus_part(const EquivariantGoeritz& g) {
  return SymIntMatrix(Integer(2) * (g.A.matrix() - g.B.matrix()));
}

SymIntMatrix minus_part(const EquivariantGoeritz& g) {
  return SymIntMatrix(Integer(2) * (g.A.matrix() + g.B.matrix()));
}

DetIdentityCheck check_det_identity(const EquivariantGoeritz& g) {
  DetIdentityCheck out;
  out.det_plus = det(plus_part(g));
  out.det_minus = det(minus_part(g));
  out.det_full = det(full_matrix(g));
  Integer four_n;
  mpz_ui_pow_ui(four_n.get_mpz_t(), 4, g.n());
  out.identity_holds = out.det_plus * out.det_minus == four_n * out.det_full;
  out.knot_like = mpz_odd_p(out.det_full.get_mpz_t()) != 0;
  return out;
}

}  // namespace eqsig
