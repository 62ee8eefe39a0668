#include <gtest/gtest.h>

#include <hyperbranch/oracle.hpp>
#include <hyperbranch/reduction.hpp>

#include <functional>

#include "test_support.hpp"

using namespace hyperbranch;
namespace t = hyperbranch::testing;

namespace {

// (1/|H|)·#{g : g⁻¹xg ∈ H} for every class representative x.
std::vector<Integer> oracle_permutation_character(
  oracle::Group const& g, std::function<bool(oracle::SignedPermutation const&)> const& in_h)
{
  auto const& el = g.elements();
  long long h_order = 0;
  for (auto const& e : el)
    if (in_h(e))
      ++h_order;
  std::vector<Integer> out;
  for (auto const& c : g.classes()) {
    auto const& x = el[c.representative];
    long long hits = 0;
    for (auto const& y : el)
      if (in_h(oracle::compose(oracle::compose(oracle::inverse(y), x), y)))
        ++hits;
    out.emplace_back(hits / h_order);
  }
  return out;
}

// Reorders oracle class values into the formula column order.
IntMatrix as_row(oracle::Group const& g, CharacterTable const& t, std::vector<Integer> const& v)
{
  IntMatrix row(1, t.cols());
  for (std::size_t k = 0; k < g.classes().size(); ++k)
    row(0, oracle::column_of(t, g.classes()[k].alpha.to_string())) = v[k];
  return row;
}

} // namespace

TEST(Reduction, IrreducibleTwo)
{
  auto const r1 = reduce_irreducible(2);
  EXPECT_EQ(r1.entries, t::matrix(t::r1_n2));
  EXPECT_TRUE(r1.non_negative());
  EXPECT_EQ(r1.col_labels, (std::vector<std::string>{"2-", "2+", "1-,1-", "1-,1+", "1+,1+"}));
}

TEST(Reduction, InducedTwo)
{
  EXPECT_EQ(reduce_induced(2).entries, t::matrix(t::r2_n2));
}

TEST(Reduction, IrreducibleThree)
{
  EXPECT_EQ(reduce_irreducible(3).entries, t::matrix(t::r1_n3));
}

TEST(Reduction, IrreducibleInvariants)
{
  for (int n = 1; n <= 5; ++n) {
    ReductionContext ctx(n);
    auto const& r1 = ctx.irreducible_branching();
    auto const& x = ctx.sym_irreducible().table;
    auto const& y = ctx.hob_irreducible().table;
    EXPECT_TRUE(r1.non_negative()) << "n=" << n;
    EXPECT_EQ(r1.entries * y.entries, ctx.modified_irreducible().entries) << "n=" << n;
    auto const ps = partitions(2 * n);
    for (std::size_t i = 0; i < ps.size(); ++i) {
      // Trivial W(B_N) constituent exactly for even shapes.
      EXPECT_EQ(r1.entries(i, 0), ps[i].all_parts_even() ? 1 : 0) << "n=" << n << " " << ps[i].to_string();
      Integer degree = 0;
      for (std::size_t k = 0; k < y.rows(); ++k)
        degree += r1.entries(i, k) * y.entries(k, 0);
      EXPECT_EQ(degree, x.entries(i, 0));
    }
  }
}

TEST(Reduction, InducedIsIntegralAndExact)
{
  for (int n = 1; n <= 5; ++n) {
    ReductionContext ctx(n);
    auto const& r2 = ctx.induced_branching();
    EXPECT_EQ(r2.entries * ctx.hob_induced().entries, ctx.modified_induced().entries) << "n=" << n;
  }
}

TEST(Reduction, InducedNonNegativeOnlyForSmallN)
{
  EXPECT_TRUE(reduce_induced(1).non_negative());
  EXPECT_TRUE(reduce_induced(2).non_negative());
  EXPECT_FALSE(reduce_induced(3).non_negative());
}

// Restricting the S_6 permutation character on 3-subsets splits into
// the stabilizer of {+1,+2,+3} (sign-free S_3, not canonical) and the
// stabilizer of {+1,-1,+2} (canonical, "1-,1-,1+"). The sign-free S_3
// character is not a non-negative combination of canonical ones.
TEST(Reduction, NegativeInducedEntriesComeFromNonCanonicalStabilizer)
{
  oracle::Group const g(3);
  auto const ind = hob_induced_table(3);
  auto const sign_free_values = oracle_permutation_character(g, [](oracle::SignedPermutation const& e) {
    return std::all_of(e.signs.begin(), e.signs.end(), [](int s) { return s > 0; });
  });
  IntMatrix const sign_free = as_row(g, ind, sign_free_values);

  std::size_t const canonical = std::distance(
    ind.row_labels.begin(), std::find(ind.row_labels.begin(), ind.row_labels.end(), "1-,1-,1+"));
  ASSERT_LT(canonical, ind.rows());

  ReductionContext ctx(3);
  auto const& phi = ctx.modified_induced();
  std::size_t const row33 = std::distance(
    phi.row_labels.begin(), std::find(phi.row_labels.begin(), phi.row_labels.end(), "3,3"));
  ASSERT_LT(row33, phi.rows());
  for (std::size_t j = 0; j < phi.cols(); ++j)
    EXPECT_EQ(phi.entries(row33, j), sign_free(0, j) + ind.entries(canonical, j)) << phi.col_labels[j];

  auto const coeffs = solve_right(ind.entries, sign_free);
  bool negative = false;
  for (std::size_t k = 0; k < coeffs.cols(); ++k) {
    ASSERT_TRUE(is_integral(coeffs(0, k)));
    negative = negative || coeffs(0, k) < 0;
  }
  EXPECT_TRUE(negative);

  auto const& r2 = ctx.induced_branching();
  for (std::size_t k = 0; k < r2.entries.cols(); ++k)
    EXPECT_EQ(Rational(r2.entries(row33, k)), coeffs(0, k) + (k == canonical ? 1 : 0));
}

TEST(Reduction, ConsistencyRelation)
{
  for (int n = 1; n <= 5; ++n) {
    auto const r = verify_consistency(n);
    EXPECT_TRUE(r.pass) << "n=" << n << " " << r.detail;
    EXPECT_EQ(r.check, "eq8");
  }
}

TEST(Reduction, ShapeErrors)
{
  auto const y = hob_irreducible_table(2).table;
  auto const xm = ReductionContext(3).modified_irreducible();
  EXPECT_THROW(reduce_irreducible(xm, y), DomainError);
}
