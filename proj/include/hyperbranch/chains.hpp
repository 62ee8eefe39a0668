#pragma once

#include <algorithm>
#include <cstddef>
#include <string>
#include <vector>

#include "combinatorics.hpp"
#include "errors.hpp"
#include "exact.hpp"
#include "hob_characters.hpp"
#include "reduction.hpp"
#include "report.hpp"
#include "tables.hpp"

namespace hyperbranch {

/// Weyl's rule for S_n → S_{n-1}: λ restricts to every μ obtained by
/// removing one box from a row such that μ stays weakly decreasing.
inline BranchingMatrix weyl_matrix(int n)
{
  if (n < 2)
    throw DomainError("weyl_matrix needs n >= 2");
  auto const big = partitions(n);
  auto const small = partitions(n - 1);
  BranchingMatrix m;
  for (auto const& p : big)
    m.row_labels.push_back(p.to_string());
  for (auto const& p : small)
    m.col_labels.push_back(p.to_string());
  m.entries = IntMatrix(big.size(), small.size());

  for (std::size_t i = 0; i < big.size(); ++i) {
    auto const& lambda = big[i].parts();
    for (std::size_t r = 0; r < lambda.size(); ++r) {
      if (r + 1 < lambda.size() && lambda[r] - 1 < lambda[r + 1])
        continue;
      std::vector<int> mu = lambda;
      if (--mu[r] == 0)
        mu.pop_back();
      auto const it = std::find(small.begin(), small.end(), Partition(mu));
      m.entries(i, static_cast<std::size_t>(it - small.begin())) = 1;
    }
  }
  return m;
}

/// Exact product of consecutive branching matrices; adjacent label sets must agree.
inline BranchingMatrix chain_compose(std::vector<BranchingMatrix> const& matrices)
{
  if (matrices.empty())
    throw DomainError("chain_compose of an empty list");
  BranchingMatrix acc = matrices.front();
  for (std::size_t k = 1; k < matrices.size(); ++k) {
    if (acc.col_labels != matrices[k].row_labels)
      throw DomainError("chain link " + std::to_string(k) + " labels do not match");
    acc.entries = acc.entries * matrices[k].entries;
    acc.col_labels = matrices[k].col_labels;
  }
  return acc;
}

/// S_from → S_{from-1} → ... → S_to; identity when from == to.
inline BranchingMatrix weyl_chain(int from, int to)
{
  if (to < 1 || from < to)
    throw DomainError("weyl_chain needs from >= to >= 1");
  if (from == to) {
    BranchingMatrix id;
    for (auto const& p : partitions(from))
      id.row_labels.push_back(p.to_string());
    id.col_labels = id.row_labels;
    id.entries = IntMatrix::identity(id.row_labels.size());
    return id;
  }
  std::vector<BranchingMatrix> links;
  for (int n = from; n > to; --n)
    links.push_back(weyl_matrix(n));
  return chain_compose(links);
}

/// W(B_N) → W(B_{N-1}), with W(B_{N-1}) fixing the last coordinate
/// (class fusion adds one positive 1-cycle). Entry (i, k) is
/// ⟨Res Y_i, Y′_k⟩ over W(B_{N-1}).
inline BranchingMatrix hob_restriction_matrix(CharacterTable const& y_big,
                                              CharacterTable const& y_small, int n)
{
  auto const big = hob_classes(n);
  auto const small = hob_classes(n - 1);
  std::vector<std::size_t> picks;
  for (auto const& c : small) {
    AlphaSystem a = c.alpha;
    a.add(1, false);
    auto const it = std::find_if(big.begin(), big.end(),
                                 [&a](HobClass const& b) { return b.alpha == a; });
    if (it == big.end())
      throw ComputationError("restricted class " + a.to_string() + " not found");
    picks.push_back(static_cast<std::size_t>(it - big.begin()));
  }
  IntMatrix const restricted = y_big.entries.select_columns(picks);
  auto const w = WeightVector::from_class_orders(y_small.class_orders, y_small.group_order);

  BranchingMatrix m{y_big.row_labels, y_small.row_labels,
                    IntMatrix(y_big.rows(), y_small.rows())};
  for (std::size_t i = 0; i < y_big.rows(); ++i)
    for (std::size_t k = 0; k < y_small.rows(); ++k) {
      Integer const v = to_integer(inner_product(restricted.row(i), y_small.entries.row(k), w),
                                   "restriction multiplicity");
      if (v < 0)
        throw ComputationError("negative restriction multiplicity");
      m.entries(i, k) = v;
    }
  return m;
}

inline BranchingMatrix hob_restriction_matrix(int n)
{
  if (n < 2)
    throw DomainError("hob_restriction_matrix needs N >= 2");
  return hob_restriction_matrix(hob_irreducible_table(n).table, hob_irreducible_table(n - 1).table,
                                n);
}

/// W(B_N) → W(B_{N-1}) → ... → W(B_1); identity for N = 1.
inline BranchingMatrix hob_chain(int n)
{
  if (n < 1)
    throw DomainError("hob_chain needs N >= 1");
  std::vector<CharacterTable> ys;
  for (int k = n; k >= 1; --k)
    ys.push_back(hob_irreducible_table(k).table);
  if (n == 1) {
    BranchingMatrix id{ys[0].row_labels, ys[0].row_labels, IntMatrix::identity(ys[0].rows())};
    return id;
  }
  std::vector<BranchingMatrix> links;
  for (int k = n; k >= 2; --k)
    links.push_back(hob_restriction_matrix(ys[n - k], ys[n - k + 1], k));
  return chain_compose(links);
}

/// {S_2N → W(B_N)}·{W(B_N) → W(B_1)} = {S_2N → S_2}, using S_2 ≅ W(B_1)
/// (trivial ↔ trivial, sign ↔ sign: the columns correspond by position).
inline Report method_b_verify(ReductionContext& ctx)
{
  int const n = ctx.n();
  auto const& r1 = ctx.irreducible_branching();
  auto const hob = hob_chain(n);
  auto const weyl = weyl_chain(2 * n, 2);
  auto const lhs = chain_compose({r1, hob});
  return compare_matrices("method-b", n, lhs.entries, weyl.entries, weyl.row_labels,
                          weyl.col_labels,
                          "R1 " + std::to_string(r1.entries.rows()) + "x" +
                            std::to_string(r1.entries.cols()) + " * chain " +
                            std::to_string(hob.entries.rows()) + "x" +
                            std::to_string(hob.entries.cols()) + " vs S_" +
                            std::to_string(2 * n) + "->S_2 " +
                            std::to_string(weyl.entries.rows()) + "x" +
                            std::to_string(weyl.entries.cols()));
}

inline Report method_b_verify(int n)
{
  ReductionContext ctx(n);
  return method_b_verify(ctx);
}

} // namespace hyperbranch
