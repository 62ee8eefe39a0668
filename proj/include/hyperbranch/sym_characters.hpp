#pragma once

#include <algorithm>
#include <cstddef>
#include <string>
#include <vector>

#include "combinatorics.hpp"
#include "errors.hpp"
#include "exact.hpp"
#include "gram_schmidt.hpp"
#include "labels.hpp"
#include "tables.hpp"

namespace hyperbranch {


struct SymClass
{
  CycleType type;
  Integer order;
};

/// |C| = n! / Π_i i^{e_i} e_i!.
inline Integer sym_class_order(CycleType const& c)
{
  Integer denom = 1;
  for (int len = 1; len <= c.max_length(); ++len)
    denom *= power(len, c.count(len)) * factorial(c.count(len));
  return factorial(c.degree()) / denom;
}

/// Classes of S_n, identity first: the mirror of the partition order.
inline std::vector<SymClass> sym_classes(int n)
{
  if (n < 1)
    throw DomainError("sym_classes needs n >= 1");
  auto ps = partitions(n);
  std::vector<SymClass> out;
  out.reserve(ps.size());
  for (auto it = ps.rbegin(); it != ps.rend(); ++it) {
    auto t = CycleType::from_partition(*it);
    out.push_back({t, sym_class_order(t)});
  }
  return out;
}

/// Value at class `c` of the character induced from the trivial
/// representation of the Young subgroup S_λ1 × S_λ2 × ...: the sum over
/// cycle-to-part assignments of Π_i e_i! / Π_j e_ij!.
inline Integer sym_induced_char(Partition const& lambda, CycleType const& c)
{
  if (lambda.weight() != c.degree())
    throw DomainError("partition " + lambda.to_string() + " and class " + c.to_string() +
                      " have different weights");
  std::vector<CellRow> rows;
  for (int len = 1; len <= c.max_length(); ++len)
    if (c.count(len) > 0)
      rows.push_back({len, false, c.count(len)});

  std::vector<Integer> row_fact;
  for (auto const& r : rows)
    row_fact.push_back(factorial(r.count));

  Integer total = 0;
  for_each_cell_matrix(rows, lambda.parts(), {}, [&](CellMatrix const& m) {
    Integer term = 1;
    for (std::size_t r = 0; r < m.rows; ++r) {
      Integer denom = 1;
      for (std::size_t j = 0; j < m.cols; ++j)
        denom *= factorial(m(r, j));
      term *= row_fact[r] / denom;
    }
    total += term;
  });
  return total;
}

inline CharacterTable sym_induced_table(int n)
{
  auto const classes = sym_classes(n);
  auto const rows = partitions(n);
  CharacterTable t;
  t.group_order = factorial(n);
  t.entries = IntMatrix(rows.size(), classes.size());
  for (auto const& c : classes) {
    t.col_labels.push_back(c.type.to_string());
    t.class_orders.push_back(c.order);
  }
  for (std::size_t i = 0; i < rows.size(); ++i) {
    t.row_labels.push_back(rows[i].to_string());
    for (std::size_t j = 0; j < classes.size(); ++j)
      t.entries(i, j) = sym_induced_char(rows[i], classes[j].type);
  }
  return t;
}

inline WeightVector class_weights(CharacterTable const& t)
{
  return WeightVector::from_class_orders(t.class_orders, t.group_order);
}

/// Irreducible characters of S_n by weighted Gram-Schmidt on the induced
/// table, together with the transition matrix Δ (φ = Δ·X).
inline IrreducibleTable sym_irreducible_table(CharacterTable const& induced)
{
  auto gs = weighted_gram_schmidt(induced.entries, class_weights(induced));
  CharacterTable x = induced;
  x.entries = std::move(gs.orthonormal);
  return {std::move(x), std::move(gs.transition)};
}

inline IrreducibleTable sym_irreducible_table(int n)
{
  return sym_irreducible_table(sym_induced_table(n));
}

} // namespace hyperbranch
