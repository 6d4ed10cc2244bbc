#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "eqsig/moves.hpp"

namespace eqsig {

struct SuiteOptions {
  std::size_t trials = 1000;
  std::uint64_t seed = 42;
  std::size_t max_n = 6;  // largest pair count; plain matrices go up to 2 * max_n
};

struct SuiteResult {
  std::string name;
  std::size_t trials = 0;    // valid trials evaluated
  std::size_t failures = 0;
  std::size_t rejected = 0;  // random inputs discarded (singular parts etc.)
  std::uint64_t digest = 0;  // FNV-1a over every computed value
  std::vector<std::string> messages;  // first few failure descriptions

  bool ok() const { return failures == 0 && trials > 0; }
};

// Randomized property suites. Every trial draws from its own seed derived from
// (options.seed, suite, trial index), so a run is reproducible bit for bit.

/// det(M^+) det(M^-) = 4^n det(M) for random symmetric A, B with entries in [-5, 5].
SuiteResult suite_det_identity(const SuiteOptions& options);

/// Jones sigma-series signature equals the inertia signature on random
/// nonsingular matrices (size <= 2 max_n, entries in [-20, 20]); a second
/// series under a shuffled preference gives the same value.
SuiteResult suite_method_agreement(const SuiteOptions& options);

/// p + q + z = size and z = size - rank on random (often singular) matrices.
SuiteResult suite_inertia_rank(const SuiteOptions& options);

/// inertia(C^T M C) = inertia(M) for random unimodular C (size <= 8).
SuiteResult suite_congruence(const SuiteOptions& options);

/// Split-link resolution kernel and det(M_C^-) = 2 s det(M^-) for type C moves.
SuiteResult suite_type_c_resolution(const SuiteOptions& options, int sign);

/// Per-move sigma~ bounds and structural identities for one move kind.
SuiteResult suite_move_bounds(const SuiteOptions& options, MoveKind kind);

/// M -> M + 4uu^T: sigma change in {0, +2}, p non-decreasing, determinant lemma.
SuiteResult suite_rank_one(const SuiteOptions& options);

/// Runs every suite above.
std::vector<SuiteResult> run_selftest(const SuiteOptions& options);

}  // namespace eqsig
