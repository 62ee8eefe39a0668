#include <gtest/gtest.h>

#include <hyperbranch/gram_schmidt.hpp>

#include "test_support.hpp"

using namespace hyperbranch;
namespace t = hyperbranch::testing;

namespace {

WeightVector weights(std::vector<long long> orders, long long group)
{
  std::vector<Integer> o(orders.begin(), orders.end());
  return WeightVector::from_class_orders(o, Integer(group));
}

} // namespace

TEST(GramSchmidt, OrthonormalInputGivesIdentity)
{
  auto const w = weights({1, 6, 3, 8, 6}, 24);
  auto const r = weighted_gram_schmidt(t::matrix(t::s4_x), w);
  EXPECT_EQ(r.orthonormal, t::matrix(t::s4_x));
  EXPECT_EQ(r.transition.matrix(), IntMatrix::identity(5));
}

TEST(GramSchmidt, SymmetricFourFactor)
{
  auto const r = weighted_gram_schmidt(t::matrix(t::s4_phi), weights({1, 6, 3, 8, 6}, 24));
  EXPECT_EQ(r.orthonormal, t::matrix(t::s4_x));
  EXPECT_EQ(r.transition.matrix(), t::lower(t::s4_delta));
  EXPECT_EQ(t::lower(t::s4_delta) * r.orthonormal, t::matrix(t::s4_phi));
}

TEST(GramSchmidt, HyperoctahedralTwoFactor)
{
  auto const r = weighted_gram_schmidt(t::matrix(t::b2_induced), weights({1, 2, 1, 2, 2}, 8));
  EXPECT_EQ(r.orthonormal, t::matrix(t::b2_y));
  EXPECT_EQ(r.transition.matrix(), t::lower(t::b2_transition));
}

TEST(GramSchmidt, DependentRowsAreRejected)
{
  IntMatrix m = t::matrix(t::s4_phi);
  for (std::size_t j = 0; j < 5; ++j)
    m(2, j) = m(1, j);
  EXPECT_THROW(weighted_gram_schmidt(m, weights({1, 6, 3, 8, 6}, 24)), ComputationError);
}

TEST(GramSchmidt, NonUnitNormIsRejected)
{
  // Row 0 has norm 4 under uniform weights.
  IntMatrix const m{{2, 2}, {0, 1}};
  EXPECT_THROW(weighted_gram_schmidt(m, weights({1, 1}, 2)), ComputationError);
}

TEST(GramSchmidt, ShapeErrors)
{
  IntMatrix const rect(2, 3);
  EXPECT_THROW(weighted_gram_schmidt(rect, weights({1, 1, 1}, 3)), DomainError);
  EXPECT_THROW(weighted_gram_schmidt(IntMatrix::identity(2), weights({1, 1, 1}, 3)), DomainError);
}

TEST(Weights, MustSumToGroupOrder)
{
  std::vector<Integer> const o{1, 2};
  EXPECT_THROW(WeightVector::from_class_orders(o, Integer(4)), ComputationError);
  EXPECT_EQ(weights({1, 6, 3, 8, 6}, 24).sum(), Rational(1));
}

TEST(Transition, RejectsNonUnitriangular)
{
  EXPECT_THROW(TransitionMatrix(IntMatrix{{1, 1}, {0, 1}}), ComputationError);
  EXPECT_THROW(TransitionMatrix(IntMatrix{{2, 0}, {0, 1}}), ComputationError);
  EXPECT_NO_THROW(TransitionMatrix(IntMatrix{{1, 0}, {5, 1}}));
}

TEST(ExactLinearAlgebra, DeterminantAndSolve)
{
  EXPECT_EQ(determinant(t::lower(t::s4_delta)), 1);
  EXPECT_EQ(determinant(IntMatrix{{0, 1}, {1, 0}}), -1);
  EXPECT_EQ(determinant(IntMatrix{{2, 1, 0}, {1, 3, 1}, {0, 1, 4}}), 18);
  // Column orthogonality: det(X)^2 is the product of centralizer orders.
  EXPECT_EQ(determinant(t::matrix(t::s4_x)) * determinant(t::matrix(t::s4_x)), 24 * 4 * 8 * 3 * 4);

  // X·A = B with A = Δ, B = φ-row combination.
  IntMatrix const a = t::lower(t::s4_delta);
  IntMatrix const x{{1, -2, 0, 1, 0}};
  auto const solved = solve_right(a, x * a);
  for (std::size_t j = 0; j < 5; ++j)
    EXPECT_EQ(solved(0, j), Rational(x(0, j)));
  EXPECT_THROW(solve_right(IntMatrix{{1, 2}, {2, 4}}, IntMatrix{{1, 1}}), ComputationError);
}
