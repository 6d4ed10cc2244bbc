#include <gtest/gtest.h>

#include "eqsig/bounds.hpp"
#include "eqsig/corpus.hpp"
#include "eqsig/error.hpp"
#include "eqsig/random.hpp"
#include "oracles.hpp"

using namespace eqsig;

namespace {

const EquivariantGoeritz& form(const std::string& name) {
  return std::get<EquivariantGoeritz>(find_corpus_entry(name)->document.payload);
}

const CrossingColor Bi = CrossingColor::Bicolored;

}  // namespace

TEST(Bounds, PerMove) {
  EXPECT_EQ(move_bound(MoveKind::B), 2);
  EXPECT_EQ(move_bound(MoveKind::C), 2);
  EXPECT_EQ(move_bound(MoveKind::A1), 6);
  EXPECT_EQ(move_bound(MoveKind::A2), 6);
  EXPECT_TRUE(check_move_bound(TypeB{1, 1}, -2));
  EXPECT_FALSE(check_move_bound(TypeB{1, 1}, 4));
  EXPECT_TRUE(check_move_bound(TypeA1{1, 1, CrossingColor::Unicolored, std::nullopt}, 6));
}

TEST(Bounds, TightCorpusSteps) {
  EXPECT_EQ(delta_sigma(form("5_1"), TypeB{1, 1}), 2);
  EXPECT_EQ(delta_sigma(form("5_1"), TypeC{1, Bi}), 2);
  EXPECT_EQ(delta_sigma(form("9_40"), TypeA2{1, 4, 1, Bi, 1, false}), -6);
  EXPECT_EQ(delta_sigma(form("9_40"), TypeC{1, Bi}), 0);
}

TEST(Bounds, LowerBoundsRoundUp) {
  EXPECT_EQ(lower_bounds_from_sigma(6), (LowerBounds{2, 3, 3, 2}));
  EXPECT_EQ(lower_bounds_from_sigma(-4), (LowerBounds{2, 2, 2, 2}));
  EXPECT_EQ(lower_bounds_from_sigma(7), (LowerBounds{3, 4, 4, 3}));
  EXPECT_EQ(lower_bounds_from_sigma(0), (LowerBounds{0, 0, 0, 0}));
  EXPECT_EQ(lower_bounds(form("9_40")), (LowerBounds{2, 3, 3, 2}));
}

TEST(Bounds, VerifySequenceTrajectory) {
  const std::vector<MoveSpec> moves{TypeA2{1, 4, 1, Bi, 1, false},
                                    TypeA1{4, 1, CrossingColor::Unicolored, std::nullopt}};
  const BoundReport r = verify_sequence(form("9_40"), moves);
  EXPECT_EQ(r.label, "9_40");
  EXPECT_EQ(r.initial_sigma, 6);
  ASSERT_EQ(r.steps.size(), 2u);
  EXPECT_EQ(r.steps[0].sigma_after, 0);
  EXPECT_EQ(r.steps[0].delta, -6);
  EXPECT_EQ(r.steps[0].bound, 6);
  EXPECT_EQ(r.steps[1].sigma_after, 0);
  EXPECT_EQ(r.final_sigma, 0);
  EXPECT_TRUE(r.compliant);
  EXPECT_EQ(r.lower_bounds, lower_bounds_from_sigma(6));
}

TEST(Bounds, OverrideForcesViolation) {
  const std::vector<MoveSpec> moves{TypeC{1, Bi}, TypeC{1, Bi}};
  const BoundReport r = verify_sequence(form("5_1"), moves, 0);
  EXPECT_FALSE(r.compliant);
  EXPECT_FALSE(r.steps[0].compliant);
  EXPECT_EQ(r.steps[0].bound, 0);
  EXPECT_TRUE(verify_sequence(form("5_1"), moves).compliant);
}

TEST(Bounds, SingularIntermediateThrows) {
  // M^+ = -8 becomes 0 after the move.
  const EquivariantGoeritz g(SymIntMatrix{{-1}}, SymIntMatrix{{3}}, 0);
  EXPECT_THROW(verify_sequence(g, std::vector<MoveSpec>{TypeB{1, 1}}), SingularFormError);
}

TEST(RankOne, Diagnostics) {
  const SymIntMatrix m{{-1, 0}, {0, -1}};
  const std::vector<Integer> u{1, 0};
  const auto d = rank_one_diagnostics(m, u, 4);
  EXPECT_EQ(d.before.signature(), -2);
  EXPECT_EQ(d.after.signature(), 0);
  EXPECT_EQ(d.delta_sigma, 2);
  EXPECT_TRUE(d.delta_in_range);
  EXPECT_TRUE(d.positive_index_nondecreasing);
  EXPECT_EQ(d.det_before, 1);
  EXPECT_EQ(d.det_after, -3);
  EXPECT_EQ(d.quadratic, Rational(-1));
  EXPECT_TRUE(d.det_identity_holds);
}

TEST(RankOne, Errors) {
  const SymIntMatrix m{{1, 0}, {0, 1}};
  const std::vector<Integer> u{1, 0};
  EXPECT_THROW(rank_one_diagnostics(m, u, 0), std::invalid_argument);
  EXPECT_THROW(rank_one_diagnostics(m, std::vector<Integer>{1}, 4), std::invalid_argument);
  EXPECT_THROW(rank_one_diagnostics(SymIntMatrix{{1, 1}, {1, 1}}, u, 4), SingularFormError);
  EXPECT_THROW(rank_one_diagnostics(SymIntMatrix{{-4}}, std::vector<Integer>{1}, 4), SingularFormError);
}

TEST(RankOne, RandomAgainstOracle) {
  for (std::uint64_t trial = 0; trial < 200; ++trial) {
    Rng rng(trial_seed(13, 6, trial));
    const auto size = static_cast<std::size_t>(rng.uniform(1, 6));
    const auto m = random_symmetric(rng, size, -4, 4);
    const auto u = random_vector(rng, size, -2, 2);
    IntMatrix updated = m.matrix();
    for (std::size_t i = 0; i < size; ++i)
      for (std::size_t j = 0; j < size; ++j) updated(i, j) += 4 * u[i] * u[j];
    if (det(m) == 0 || det(updated) == 0) continue;
    const auto d = rank_one_diagnostics(m, u, 4);
    const long want = eqsig::testkit::descartes_inertia(updated).signature() -
                      eqsig::testkit::descartes_inertia(m.matrix()).signature();
    ASSERT_EQ(d.delta_sigma, want);
    ASSERT_TRUE(d.delta_in_range);
    ASSERT_EQ(d.det_after, eqsig::testkit::cofactor_det(updated));
  }
}
