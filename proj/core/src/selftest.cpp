#include "eqsig/selftest.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <numeric>
#include <sstream>

#include "eqsig/bounds.hpp"
#include "eqsig/error.hpp"
#include "eqsig/move_script.hpp"
#include "eqsig/random.hpp"
#include "eqsig/signature.hpp"

namespace eqsig {

namespace {

class Digest {
 public:
  void add(std::string_view s) {
    for (unsigned char c : s) {
      h_ ^= c;
      h_ *= 0x100000001B3ull;
    }
    h_ ^= 0xFF;
    h_ *= 0x100000001B3ull;
  }
  void add(long v) { add(std::to_string(v)); }
  void add(const Integer& v) { add(v.get_str()); }
  std::uint64_t value() const { return h_; }

 private:
  std::uint64_t h_ = 0xCBF29CE484222325ull;
};

constexpr std::size_t kMaxMessages = 5;
constexpr std::size_t kAttemptsPerTrial = 50;

// A trial returns false to reject its random input (does not count), or
// records failures through `fail`.
struct TrialContext {
  Rng& rng;
  Digest& digest;
  std::function<void(std::string)> fail;
};

SuiteResult run_suite(std::string name, std::uint64_t stream, const SuiteOptions& options,
                      const std::function<bool(TrialContext&)>& trial) {
  SuiteResult result;
  result.name = std::move(name);
  Digest digest;
  const std::size_t max_attempts = options.trials * kAttemptsPerTrial;
  for (std::size_t attempt = 0; attempt < max_attempts && result.trials < options.trials; ++attempt) {
    Rng rng(trial_seed(options.seed, stream, attempt));
    bool failed = false;
    TrialContext ctx{rng, digest, [&](std::string msg) {
                       failed = true;
                       if (result.messages.size() < kMaxMessages)
                         result.messages.push_back("attempt " + std::to_string(attempt) + ": " +
                                                   std::move(msg));
                     }};
    bool accepted = false;
    try {
      accepted = trial(ctx);
    } catch (const std::exception& e) {
      ctx.fail(std::string("exception: ") + e.what());
      accepted = true;
    }
    if (!accepted) {
      ++result.rejected;
      continue;
    }
    ++result.trials;
    if (failed) ++result.failures;
  }
  if (result.trials < options.trials) {
    ++result.failures;
    result.messages.push_back("only " + std::to_string(result.trials) + " valid trials generated");
  }
  result.digest = digest.value();
  return result;
}

std::size_t pick_size(Rng& rng, std::size_t lo, std::size_t hi) {
  return static_cast<std::size_t>(rng.uniform(static_cast<long>(lo), static_cast<long>(hi)));
}

std::string describe(const SymIntMatrix& m) {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < m.size(); ++i) {
    os << (i ? ",[" : "[");
    for (std::size_t j = 0; j < m.size(); ++j) os << (j ? "," : "") << m(i, j).get_str();
    os << "]";
  }
  os << "]";
  return os.str();
}

// Matrix with entries 4 * sign * w w^T.
IntMatrix outer4(const std::vector<Integer>& w, int sign) {
  IntMatrix out(w.size(), w.size());
  for (std::size_t i = 0; i < w.size(); ++i)
    for (std::size_t j = 0; j < w.size(); ++j) out(i, j) = 4 * sign * w[i] * w[j];
  return out;
}

std::vector<Integer> unit_combo(std::size_t n, std::size_t i, std::size_t j, int sign_j) {
  std::vector<Integer> w(n);
  w[i] += 1;
  w[j] += sign_j;
  return w;
}

EquivariantGoeritz blocks_of(const SymIntMatrix& full) {
  const std::size_t n = full.size() / 2;
  SymIntMatrix a(n), b(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      a.set(i, j, full(i, j));
      b.set(i, j, full(i, n + j));
    }
  return EquivariantGoeritz(std::move(a), std::move(b), 0);
}

MoveSpec inverse_move(const MoveSpec& m) {
  if (const auto* b = std::get_if<TypeB>(&m)) return TypeB{b->k, -b->delta};
  auto flip = [](std::optional<int> eps) { return eps ? std::optional<int>(-*eps) : eps; };
  if (const auto* a = std::get_if<TypeA1>(&m)) return TypeA1{a->k, -a->delta, a->color, flip(a->old_epsilon)};
  const auto& a = std::get<TypeA2>(m);
  return TypeA2{a.i, a.j, -a.delta, a.color, flip(a.old_epsilon), a.mixed};
}

}  // namespace

SuiteResult suite_det_identity(const SuiteOptions& options) {
  return run_suite("det-identity", 1, options, [&](TrialContext& t) {
    const std::size_t n = pick_size(t.rng, 1, options.max_n);
    const EquivariantGoeritz g = random_goeritz(t.rng, n, -5, 5);
    const DetIdentityCheck check = check_det_identity(g);
    t.digest.add(check.det_full);
    if (!check.identity_holds)
      t.fail("det identity fails for A=" + describe(g.A) + " B=" + describe(g.B));
    return true;
  });
}

SuiteResult suite_method_agreement(const SuiteOptions& options) {
  return run_suite("method-agreement", 2, options, [&](TrialContext& t) {
    const std::size_t size = pick_size(t.rng, 1, 2 * options.max_n);
    const SymIntMatrix m = random_symmetric(t.rng, size, -20, 20);
    if (det(m) == 0) return false;
    const SigmaSeries series = sigma_series(m);
    std::vector<std::size_t> pref(size);
    std::iota(pref.begin(), pref.end(), std::size_t{0});
    t.rng.shuffle(pref);
    const SigmaSeries other = sigma_series(m, pref);
    const long by_inertia = inertia(m).signature();
    const long by_series = signature_from_series(series);
    const long by_other = signature_from_series(other);
    t.digest.add(by_inertia);
    if (!is_valid_sigma_series(m, series) || !is_valid_sigma_series(m, other))
      t.fail("invalid sigma-series for " + describe(m));
    if (by_series != by_inertia || by_other != by_inertia)
      t.fail("jones " + std::to_string(by_series) + "/" + std::to_string(by_other) +
             " vs inertia " + std::to_string(by_inertia) + " for " + describe(m));
    return true;
  });
}

SuiteResult suite_inertia_rank(const SuiteOptions& options) {
  return run_suite("inertia-rank", 3, options, [&](TrialContext& t) {
    const std::size_t size = pick_size(t.rng, 1, 2 * options.max_n);
    const std::size_t r = pick_size(t.rng, 0, size);
    // M = X^T D X has rank <= r; when rank(X) = r its inertia is that of D.
    IntMatrix x(r, size), d(r, r);
    std::size_t pos = 0, neg = 0;
    for (std::size_t i = 0; i < r; ++i) {
      const long v = t.rng.sign() * t.rng.uniform(1, 3);
      d(i, i) = v;
      (v > 0 ? pos : neg) += 1;
      for (std::size_t j = 0; j < size; ++j) x(i, j) = t.rng.uniform(-3, 3);
    }
    const SymIntMatrix m(x.transpose() * d * x);
    const Inertia in = inertia(m);
    const std::size_t rk = rank(m);
    t.digest.add(static_cast<long>(in.p));
    t.digest.add(static_cast<long>(in.q));
    if (in.size() != size) t.fail("p + q + z != size for " + describe(m));
    if (in.z != size - rk) t.fail("z != size - rank for " + describe(m));
    if (rank(x) == r && (in.p != pos || in.q != neg)) t.fail("inertia differs from D for " + describe(m));
    return true;
  });
}

SuiteResult suite_congruence(const SuiteOptions& options) {
  return run_suite("congruence", 4, options, [&](TrialContext& t) {
    const std::size_t size = pick_size(t.rng, 1, std::min<std::size_t>(8, 2 * options.max_n));
    const SymIntMatrix m = random_symmetric(t.rng, size, -5, 5);
    const IntMatrix c = random_unimodular(t.rng, size, 3 * size);
    const Integer dc = det(c);
    if (dc != 1 && dc != -1) t.fail("generator produced a non-unimodular matrix");
    const Inertia a = inertia(m);
    const Inertia b = inertia(congruent(m, c));
    t.digest.add(a.signature());
    if (!(a == b)) t.fail("inertia not congruence invariant for " + describe(m));
    return true;
  });
}

SuiteResult suite_type_c_resolution(const SuiteOptions& options, int sign) {
  const std::string name = sign > 0 ? "type-c-resolution(+)" : "type-c-resolution(-)";
  return run_suite(name, sign > 0 ? 5 : 6, options, [&](TrialContext& t) {
    const std::size_t n = pick_size(t.rng, 1, options.max_n);
    const EquivariantGoeritz g = random_goeritz(t.rng, n, -5, 5);
    if (!has_nonsingular_parts(g)) return false;
    const CrossingColor color = t.rng.coin() ? CrossingColor::Bicolored : CrossingColor::Unicolored;
    const EquivariantGoeritz gc = apply_move_matrix(g, TypeC{sign, color});
    const EquivariantGoeritz m0 = blocks_of(resolution_matrix(gc));
    const SymIntMatrix m0_minus = minus_part(m0);
    std::vector<Integer> ones(m0_minus.size(), 1);
    const auto kernel = m0_minus.matrix() * std::span<const Integer>(ones);
    if (std::any_of(kernel.begin(), kernel.end(), [](const Integer& x) { return x != 0; }))
      t.fail("all-ones vector not in the kernel of M_0^-");
    if (det(m0_minus) != 0) t.fail("det(M_0^-) != 0");
    const Integer dm = det(minus_part(g));
    const Integer dc = det(minus_part(gc));
    t.digest.add(dc);
    if (dc != 2 * sign * dm)
      t.fail("det(M_C^-) = " + dc.get_str() + " but 2s det(M^-) = " + Integer(2 * sign * dm).get_str());
    const Integer de = gc.e - g.e;
    if (de != (color == CrossingColor::Bicolored ? -2 * sign : 0)) t.fail("wrong e change");
    return true;
  });
}

SuiteResult suite_move_bounds(const SuiteOptions& options, MoveKind kind) {
  return run_suite("bounds-" + to_string(kind), 10 + static_cast<std::uint64_t>(kind), options,
                   [&](TrialContext& t) {
    const std::size_t lo = kind == MoveKind::A2 ? 2 : 1;
    const std::size_t n = pick_size(t.rng, lo, std::max(lo, options.max_n));
    const EquivariantGoeritz g = random_goeritz(t.rng, n, -5, 5);
    if (!has_nonsingular_parts(g)) return false;
    MoveSpec m = random_move(t.rng, kind, n);
    if (auto* a2 = std::get_if<TypeA2>(&m); a2 && t.rng.uniform(0, 3) == 0) {
      a2->mixed = true;
      a2->j = pick_size(t.rng, 1, n);
    }
    const EquivariantGoeritz after = apply_move_matrix(g, m);
    if (!has_nonsingular_parts(after)) return false;

    const EquivariantSignature s0 = equivariant_signature(g);
    const EquivariantSignature s1 = equivariant_signature(after);
    const long delta = s1.value - s0.value;
    t.digest.add(delta);
    const std::string what = format_move(m);
    if (!check_move_bound(m, delta)) t.fail(what + ": |Δσ̃| = " + std::to_string(delta) + " exceeds bound");
    if (delta != delta_sigma(g, m)) t.fail(what + ": delta_sigma disagrees");

    // Block differences only make sense for moves that keep n.
    const bool same_size = kind != MoveKind::C;
    const IntMatrix dplus = same_size ? plus_part(after).matrix() - plus_part(g).matrix() : IntMatrix();
    const IntMatrix dminus = same_size ? minus_part(after).matrix() - minus_part(g).matrix() : IntMatrix();
    const Integer de = after.e - g.e;

    if (kind == MoveKind::B || kind == MoveKind::C) {
      if (delta % 2 != 0) t.fail(what + ": odd Δσ̃");
    }
    if (const auto* b = std::get_if<TypeB>(&m)) {
      IntMatrix expected(n, n);
      expected(b->k - 1, b->k - 1) = 8 * b->delta;
      if (!(dminus == IntMatrix(n, n))) t.fail(what + ": M^- changed");
      if (!(dplus == expected)) t.fail(what + ": M^+ changed outside (k,k) or not by ±8");
      if (de != 0) t.fail(what + ": e changed");
    }
    if (const auto* a = std::get_if<TypeA1>(&m)) {
      std::vector<Integer> w(n);
      w[a->k - 1] = 1;
      if (!(dplus == outer4(w, a->delta)) || !(dminus == outer4(w, a->delta)))
        t.fail(what + ": eigenspace parts not changed by 4 e_k e_k^T");
    }
    if (const auto* a = std::get_if<TypeA2>(&m)) {
      const auto u = unit_combo(n, a->i - 1, a->j - 1, -1);
      const auto w = unit_combo(n, a->i - 1, a->j - 1, 1);
      const IntMatrix want_plus = outer4(a->mixed ? w : u, a->delta);
      const IntMatrix want_minus = outer4(u, a->delta);
      if (!(dplus == want_plus) || !(dminus == want_minus))
        t.fail(what + ": rank-one block identity fails");
    }
    if (kind == MoveKind::A1 || kind == MoveKind::A2) {
      const long inner = (s1.sigma_plus - s1.sigma_minus) - (s0.sigma_plus - s0.sigma_minus);
      if (std::labs(inner) > 2) t.fail(what + ": |Δ(σ+ − σ−)| > 2");
      if (de != 0 && abs(de) != 4) t.fail(what + ": |Δe| not in {0, 4}");
    }
    if (kind != MoveKind::C) {
      if (!same_form(apply_move_matrix(after, inverse_move(m)), g))
        t.fail(what + ": inverse move does not restore the form");
    }
    return true;
  });
}

SuiteResult suite_rank_one(const SuiteOptions& options) {
  return run_suite("rank-one", 20, options, [&](TrialContext& t) {
    const std::size_t size = pick_size(t.rng, 1, 2 * options.max_n);
    const SymIntMatrix m = random_symmetric(t.rng, size, -5, 5);
    if (det(m) == 0) return false;
    const auto u = random_vector(t.rng, size, -2, 2);
    SymIntMatrix updated = m;
    for (std::size_t i = 0; i < size; ++i)
      for (std::size_t j = i; j < size; ++j) updated.add(i, j, 4 * u[i] * u[j]);
    if (det(updated) == 0) return false;
    const RankOneDiagnostics d = rank_one_diagnostics(m, u, 4);
    t.digest.add(d.delta_sigma);
    if (!d.delta_in_range) t.fail("Δσ = " + std::to_string(d.delta_sigma) + " for " + describe(m));
    if (!d.positive_index_nondecreasing) t.fail("positive index decreased for " + describe(m));
    if (!d.det_identity_holds) t.fail("determinant lemma fails for " + describe(m));
    return true;
  });
}

std::vector<SuiteResult> run_selftest(const SuiteOptions& options) {
  std::vector<SuiteResult> out;
  out.push_back(suite_det_identity(options));
  out.push_back(suite_method_agreement(options));
  out.push_back(suite_inertia_rank(options));
  out.push_back(suite_congruence(options));
  out.push_back(suite_type_c_resolution(options, 1));
  out.push_back(suite_type_c_resolution(options, -1));
  for (MoveKind k : {MoveKind::B, MoveKind::A1, MoveKind::A2, MoveKind::C})
    out.push_back(suite_move_bounds(options, k));
  out.push_back(suite_rank_one(options));
  return out;
}

}  // namespace eqsig
