#include "eqsig/signature.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "eqsig/error.hpp"

namespace eqsig {

namespace {

using RationalRows = std::vector<std::vector<Rational>>;

// Adds t * (row j, column j) into row/column i of the active block.
void congruence_add(RationalRows& a, std::span<const std::size_t> active, std::size_t i,
                    std::size_t j, const Rational& t) {
  for (std::size_t k : active) a[i][k] += t * a[j][k];
  for (std::size_t k : active) a[k][i] += t * a[k][j];
}

std::vector<std::size_t> preference_order(std::size_t m, std::span<const std::size_t> preference) {
  if (preference.empty()) {
    std::vector<std::size_t> order(m);
    std::iota(order.begin(), order.end(), std::size_t{0});
    return order;
  }
  std::vector<std::size_t> order(preference.begin(), preference.end());
  auto check = order;
  std::sort(check.begin(), check.end());
  for (std::size_t i = 0; i < check.size(); ++i)
    if (check.size() != m || check[i] != i)
      throw std::invalid_argument("preference must be a permutation of the matrix indices");
  return order;
}

class SeriesSearch {
 public:
  SeriesSearch(const SymIntMatrix& m, std::vector<std::size_t> preference)
      : m_(m), preference_(std::move(preference)), used_(m.size(), false) {
    series_.minors.push_back(1);
  }

  bool extend() {
    if (series_.order.size() == m_.size()) return true;
    const bool prev_singular = series_.minors.back() == 0;
    std::vector<std::size_t> singular;
    for (std::size_t c : preference_) {
      if (used_[c]) continue;
      Integer d = minor_with(c);
      if (d == 0) {
        singular.push_back(c);
        continue;
      }
      if (descend(c, std::move(d))) return true;
    }
    if (prev_singular) return false;
    for (std::size_t c : singular)
      if (descend(c, 0)) return true;
    return false;
  }

  SigmaSeries take() { return std::move(series_); }

 private:
  Integer minor_with(std::size_t c) {
    series_.order.push_back(c);
    Integer d = det(m_.principal(series_.order));
    series_.order.pop_back();
    return d;
  }

  bool descend(std::size_t c, Integer d) {
    series_.order.push_back(c);
    series_.minors.push_back(std::move(d));
    used_[c] = true;
    if (extend()) return true;
    used_[c] = false;
    series_.order.pop_back();
    series_.minors.pop_back();
    return false;
  }

  const SymIntMatrix& m_;
  std::vector<std::size_t> preference_;
  std::vector<bool> used_;
  SigmaSeries series_;
};

}  // namespace

Inertia inertia(const SymIntMatrix& m) {
  const std::size_t size = m.size();
  RationalRows a(size, std::vector<Rational>(size));
  for (std::size_t i = 0; i < size; ++i)
    for (std::size_t j = 0; j < size; ++j) a[i][j] = m(i, j);

  std::vector<std::size_t> active(size);
  std::iota(active.begin(), active.end(), std::size_t{0});
  Inertia out;

  while (!active.empty()) {
    auto pivot = std::find_if(active.begin(), active.end(),
                              [&](std::size_t i) { return a[i][i] != 0; });
    if (pivot == active.end()) {
      // Zero diagonal: borrow a nonzero off-diagonal entry.
      std::size_t pi = size, pj = size;
      for (std::size_t i : active) {
        for (std::size_t j : active)
          if (i != j && a[i][j] != 0) {
            pi = i;
            pj = j;
            break;
          }
        if (pi != size) break;
      }
      if (pi == size) {
        out.z += active.size();
        break;
      }
      // New diagonal is t^2 a_jj + 2 t a_ij; at most one t in {1, 2} can zero it.
      Rational t = 1;
      if (a[pj][pj] + 2 * a[pi][pj] == 0) t = 2;
      congruence_add(a, active, pi, pj, t);
      pivot = std::find(active.begin(), active.end(), pi);
    }

    const std::size_t r = *pivot;
    const Rational d = a[r][r];
    (d > 0 ? out.p : out.q) += 1;
    active.erase(pivot);
    for (std::size_t i : active) {
      if (a[i][r] == 0) continue;
      const Rational f = a[i][r] / d;
      for (std::size_t j : active) a[i][j] -= f * a[r][j];
    }
  }
  return out;
}

SigmaSeries sigma_series(const SymIntMatrix& m, std::span<const std::size_t> preference) {
  if (det(m) == 0) throw SingularFormError("sigma-series requested for a singular matrix");
  SeriesSearch search(m, preference_order(m.size(), preference));
  if (!search.extend()) throw std::logic_error("no sigma-series found for a nonsingular matrix");
  return search.take();
}

bool is_valid_sigma_series(const SymIntMatrix& m, const SigmaSeries& series) {
  const std::size_t len = series.order.size();
  if (len != m.size() || series.minors.size() != len + 1 || series.minors[0] != 1) return false;
  std::vector<bool> seen(len, false);
  for (std::size_t i = 0; i < len; ++i) {
    const std::size_t c = series.order[i];
    if (c >= len || seen[c]) return false;
    seen[c] = true;
    std::span<const std::size_t> prefix(series.order.data(), i + 1);
    if (det(m.principal(prefix)) != series.minors[i + 1]) return false;
  }
  for (std::size_t i = 0; i + 1 < series.minors.size(); ++i)
    if (series.minors[i] == 0 && series.minors[i + 1] == 0) return false;
  return true;
}

long signature_from_series(const SigmaSeries& series) {
  long sigma = 0;
  for (std::size_t i = 1; i < series.minors.size(); ++i)
    sigma += sign(series.minors[i - 1]) * sign(series.minors[i]);
  return sigma;
}

long signature_jones(const SymIntMatrix& m, std::span<const std::size_t> preference) {
  return signature_from_series(sigma_series(m, preference));
}

EquivariantSignature equivariant_signature(const EquivariantGoeritz& g) {
  EquivariantSignature out;
  out.e = g.e;
  const auto e = to_int64(g.e);
  if (!e) throw DomainError("correction term out of range");
  if (g.n() > 0) {
    const Inertia plus = inertia(plus_part(g));
    const Inertia minus = inertia(minus_part(g));
    if (plus.z != 0) throw SingularFormError("M^+ is singular (not a knot form)");
    if (minus.z != 0) throw SingularFormError("M^- is singular (not a knot form)");
    out.sigma_plus = plus.signature();
    out.sigma_minus = minus.signature();
  }
  out.value = out.sigma_plus - out.sigma_minus - static_cast<long>(*e);
  return out;
}

}  // namespace eqsig
