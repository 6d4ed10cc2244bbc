#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "eqsig/goeritz.hpp"
#include "eqsig/matrix.hpp"
#include "eqsig/moves.hpp"

namespace eqsig {

/// splitmix64 finalizer; used to derive independent per-trial seeds.
std::uint64_t mix_seed(std::uint64_t x);

/// Seed for trial `trial` of stream `stream` under base seed `seed`.
std::uint64_t trial_seed(std::uint64_t seed, std::uint64_t stream, std::uint64_t trial);

/// Deterministic generator. Draws do not depend on the standard library's
/// distribution implementations, so sequences are identical across toolchains.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform integer in [lo, hi].
  long uniform(long lo, long hi);
  bool coin() { return uniform(0, 1) == 1; }
  int sign() { return coin() ? 1 : -1; }

  template <class T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i)
      std::swap(v[i - 1], v[static_cast<std::size_t>(uniform(0, static_cast<long>(i) - 1))]);
  }

 private:
  std::mt19937_64 engine_;
};

SymIntMatrix random_symmetric(Rng& rng, std::size_t size, long lo, long hi);

/// Random unimodular matrix: a product of elementary row additions, swaps and
/// sign changes.
IntMatrix random_unimodular(Rng& rng, std::size_t size, std::size_t steps);

std::vector<Integer> random_vector(Rng& rng, std::size_t size, long lo, long hi);

EquivariantGoeritz random_goeritz(Rng& rng, std::size_t n, long lo, long hi);

/// True when both M^+ and M^- are nonsingular.
bool has_nonsingular_parts(const EquivariantGoeritz& g);

/// A well-formed move of the given kind for a form with n pairs (n >= 2 for A2).
MoveSpec random_move(Rng& rng, MoveKind kind, std::size_t n);

}  // namespace eqsig
