#include "eqsig/random.hpp"

#include <stdexcept>

namespace eqsig {

std::uint64_t mix_seed(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ull;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

std::uint64_t trial_seed(std::uint64_t seed, std::uint64_t stream, std::uint64_t trial) {
  return mix_seed(seed ^ mix_seed(stream * 0x100000001B3ull + trial));
}

long Rng::uniform(long lo, long hi) {
  if (hi < lo) throw std::invalid_argument("empty range");
  const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  if (span == 0) return static_cast<long>(engine_());
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
  std::uint64_t x;
  do {
    x = engine_();
  } while (x >= limit);
  return lo + static_cast<long>(x % span);
}

SymIntMatrix random_symmetric(Rng& rng, std::size_t size, long lo, long hi) {
  SymIntMatrix m(size);
  for (std::size_t i = 0; i < size; ++i)
    for (std::size_t j = i; j < size; ++j) m.set(i, j, rng.uniform(lo, hi));
  return m;
}

IntMatrix random_unimodular(Rng& rng, std::size_t size, std::size_t steps) {
  IntMatrix c = IntMatrix::identity(size);
  if (size == 0) return c;
  const long last = static_cast<long>(size) - 1;
  for (std::size_t s = 0; s < steps; ++s) {
    const auto i = static_cast<std::size_t>(rng.uniform(0, last));
    const auto j = static_cast<std::size_t>(rng.uniform(0, last));
    switch (rng.uniform(0, 3)) {
      case 0:
        if (i != j)
          for (std::size_t k = 0; k < size; ++k) std::swap(c(i, k), c(j, k));
        break;
      case 1:
        for (std::size_t k = 0; k < size; ++k) c(i, k) = -c(i, k);
        break;
      default:
        if (i != j) {
          const long t = rng.uniform(-2, 2);
          for (std::size_t k = 0; k < size; ++k) c(i, k) += t * c(j, k);
        }
        break;
    }
  }
  return c;
}

std::vector<Integer> random_vector(Rng& rng, std::size_t size, long lo, long hi) {
  std::vector<Integer> v(size);
  for (auto& x : v) x = rng.uniform(lo, hi);
  return v;
}

EquivariantGoeritz random_goeritz(Rng& rng, std::size_t n, long lo, long hi) {
  SymIntMatrix a = random_symmetric(rng, n, lo, hi);
  SymIntMatrix b = random_symmetric(rng, n, lo, hi);
  return EquivariantGoeritz(std::move(a), std::move(b), 2 * rng.uniform(-4, 4));
}

bool has_nonsingular_parts(const EquivariantGoeritz& g) {
  return det(plus_part(g)) != 0 && det(minus_part(g)) != 0;
}

MoveSpec random_move(Rng& rng, MoveKind kind, std::size_t n) {
  const long hi = static_cast<long>(n);
  auto color = [&] { return rng.coin() ? CrossingColor::Bicolored : CrossingColor::Unicolored; };
  switch (kind) {
    case MoveKind::B:
      return TypeB{static_cast<std::size_t>(rng.uniform(1, hi)), rng.sign()};
    case MoveKind::A1: {
      TypeA1 m{static_cast<std::size_t>(rng.uniform(1, hi)), rng.sign(), color(), std::nullopt};
      if (m.color == CrossingColor::Bicolored) m.old_epsilon = rng.sign();
      return m;
    }
    case MoveKind::A2: {
      if (n < 2) throw std::invalid_argument("A2 needs two region pairs");
      const auto i = static_cast<std::size_t>(rng.uniform(1, hi));
      auto j = static_cast<std::size_t>(rng.uniform(1, hi - 1));
      if (j >= i) ++j;
      TypeA2 m{i, j, rng.sign(), color(), std::nullopt, false};
      if (m.color == CrossingColor::Bicolored) m.old_epsilon = rng.sign();
      return m;
    }
    case MoveKind::C:
      break;
  }
  return TypeC{rng.sign(), color()};
}

}  // namespace eqsig
