#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "combinatorics.hpp"
#include "errors.hpp"
#include "exact.hpp"
#include "gram_schmidt.hpp"
#include "labels.hpp"
#include "tables.hpp"

namespace hyperbranch {


/// |S(λ,b)| = Π_j 2^{λ_j - b_j} λ_j!.
inline Integer canonical_subgroup_order(SignedSubgroupLabel const& s)
{
  Integer order = 1;
  for (std::size_t j = 0; j < s.flags.size(); ++j)
    order *= power(2, s.partition[j] - s.flags[j]) * factorial(s.partition[j]);
  return order;
}

struct HobClass
{
  AlphaSystem alpha;
  Integer order;
};

struct HobSubgroup
{
  SignedSubgroupLabel label;
  Integer order;
  Integer index;
};

inline Integer hyperoctahedral_order(int n)
{
  return power(2, n) * factorial(n);
}

/// |C(α)| = N! Π_i 2^{α_i(i-1)} / (i^{α_i} α_i⁺! α_i⁻!), α_i = α_i⁺ + α_i⁻.
inline Integer hob_class_order(AlphaSystem const& a)
{
  Integer num = factorial(a.weight());
  Integer den = 1;
  for (int i = 1; i <= a.max_length(); ++i) {
    auto const c = a.counts(i);
    num *= power(2, c.total() * (i - 1));
    den *= power(i, c.total()) * factorial(c.positive) * factorial(c.negative);
  }
  if (num % den != 0)
    throw ComputationError("class order of " + a.to_string() + " is not integral");
  return num / den;
}

/// All (λ, b) in canonical order: λ lexicographically decreasing, b increasing.
inline std::vector<SignedSubgroupLabel> hob_labels(int n)
{
  if (n < 1)
    throw DomainError("hyperoctahedral degree must be >= 1");
  std::vector<SignedSubgroupLabel> out;
  for (auto const& lambda : partitions(n))
    for (auto const& b : sign_flag_vectors(lambda))
      out.emplace_back(lambda, b);
  return out;
}

inline std::vector<HobSubgroup> hob_subgroups(int n)
{
  Integer const g = hyperoctahedral_order(n);
  std::vector<HobSubgroup> out;
  for (auto& label : hob_labels(n)) {
    Integer order = canonical_subgroup_order(label);
    out.push_back({std::move(label), order, g / order});
  }
  return out;
}

/// Classes ordered as the mirror of the subgroup labels (identity first).
inline std::vector<HobClass> hob_classes(int n)
{
  auto const labels = hob_labels(n);
  std::vector<HobClass> out;
  out.reserve(labels.size());
  for (auto it = labels.rbegin(); it != labels.rend(); ++it) {
    auto a = it->paired_class();
    Integer order = hob_class_order(a);
    out.push_back({std::move(a), std::move(order)});
  }
  return out;
}

/// Character of W(B_N) induced from the trivial representation of
/// S(λ,b), at the class C(α): 2^{Σb} times the sum over signed
/// cycle-to-part assignments (columns with b_j = 1 taking an even number
/// of negative cycles) of Π_i α_i⁺! α_i⁻! / Π_ij α_ij⁺! α_ij⁻!.
inline Integer hob_induced_char(SignedSubgroupLabel const& s, AlphaSystem const& a)
{
  if (s.weight() != a.weight())
    throw DomainError("subgroup " + s.to_string() + " and class " + a.to_string() +
                      " have different weights");
  std::vector<CellRow> rows;
  for (int len = 1; len <= a.max_length(); ++len) {
    if (a.positive(len) > 0)
      rows.push_back({len, false, a.positive(len)});
    if (a.negative(len) > 0)
      rows.push_back({len, true, a.negative(len)});
  }
  std::vector<Integer> row_fact;
  for (auto const& r : rows)
    row_fact.push_back(factorial(r.count));

  Integer total = 0;
  for_each_cell_matrix(rows, s.partition.parts(), s.flags, [&](CellMatrix const& m) {
    Integer term = 1;
    for (std::size_t r = 0; r < m.rows; ++r) {
      Integer denom = 1;
      for (std::size_t j = 0; j < m.cols; ++j)
        denom *= factorial(m(r, j));
      term *= row_fact[r] / denom;
    }
    total += term;
  });

  int flagged = 0;
  for (auto f : s.flags)
    flagged += f;
  return total * power(2, flagged);
}

inline CharacterTable hob_induced_table(int n)
{
  auto const subgroups = hob_subgroups(n);
  auto const classes = hob_classes(n);
  CharacterTable t;
  t.group_order = hyperoctahedral_order(n);
  t.entries = IntMatrix(subgroups.size(), classes.size());
  for (auto const& c : classes) {
    t.col_labels.push_back(c.alpha.to_string());
    t.class_orders.push_back(c.order);
  }
  for (std::size_t i = 0; i < subgroups.size(); ++i) {
    t.row_labels.push_back(subgroups[i].label.to_string());
    for (std::size_t j = 0; j < classes.size(); ++j)
      t.entries(i, j) = hob_induced_char(subgroups[i].label, classes[j].alpha);
  }
  return t;
}

/// Y rows keep the (λ, b) label of the inducing subgroup they came from.
inline IrreducibleTable hob_irreducible_table(CharacterTable const& induced)
{
  auto gs = weighted_gram_schmidt(
    induced.entries, WeightVector::from_class_orders(induced.class_orders, induced.group_order));
  CharacterTable y = induced;
  y.entries = std::move(gs.orthonormal);
  return {std::move(y), std::move(gs.transition)};
}

inline IrreducibleTable hob_irreducible_table(int n)
{
  return hob_irreducible_table(hob_induced_table(n));
}

} // namespace hyperbranch
