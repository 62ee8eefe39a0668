#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "errors.hpp"
#include "exact.hpp"
#include "hob_characters.hpp"
#include "sym_characters.hpp"
#include "tables.hpp"

namespace hyperbranch {

/// Image in S_2N of a W(B_N) class, with W(B_N) acting on ±e_1, ..., ±e_N:
/// a positive i-cycle becomes two i-cycles, a negative one a single 2i-cycle.
inline CycleType fuse_class(AlphaSystem const& a, int n)
{
  if (a.weight() != n)
    throw DomainError("alpha system " + a.to_string() + " does not have weight " +
                      std::to_string(n));
  CycleType t;
  for (int i = 1; i <= a.max_length(); ++i) {
    t.add(i, 2 * a.positive(i));
    t.add(2 * i, a.negative(i));
  }
  return t;
}

struct FusionMap
{
  /// For each W(B_N) class (hob_classes order): index of its S_2N image class.
  std::vector<std::size_t> image;
  /// For each S_2N class (sym_classes order): the W(B_N) classes fusing into it.
  std::vector<std::vector<std::size_t>> fibers;
  /// |C(g) ∩ W(B_N)| per S_2N class.
  std::vector<Integer> intersection_orders;
};

inline FusionMap fusion_map(int n)
{
  auto const hob = hob_classes(n);
  auto const sym = sym_classes(2 * n);
  FusionMap f;
  f.fibers.resize(sym.size());
  f.intersection_orders.assign(sym.size(), 0);
  for (std::size_t k = 0; k < hob.size(); ++k) {
    auto const t = fuse_class(hob[k].alpha, n);
    std::size_t j = 0;
    while (j < sym.size() && !(sym[j].type == t))
      ++j;
    if (j == sym.size())
      throw ComputationError("fused class " + t.to_string() + " not found in S_2N");
    f.image.push_back(j);
    f.fibers[j].push_back(k);
    f.intersection_orders[j] += hob[k].order;
  }
  return f;
}

inline std::vector<Integer> intersection_orders(int n)
{
  return fusion_map(n).intersection_orders;
}

/// F(g) = (2N)!/(2^N N!) · |C(g) ∩ W(B_N)| / |C(g)| per S_2N class.
inline std::vector<Integer> permutation_character(int n)
{
  auto const sym = sym_classes(2 * n);
  auto const inter = intersection_orders(n);
  Integer const index = factorial(2 * n) / hyperoctahedral_order(n);
  std::vector<Integer> f;
  f.reserve(sym.size());
  for (std::size_t j = 0; j < sym.size(); ++j)
    f.push_back(to_integer(Rational(index * inter[j], sym[j].order),
                           "permutation character at " + sym[j].type.to_string()));
  return f;
}

inline CharacterTable permutation_character_table(int n)
{
  auto const sym = sym_classes(2 * n);
  auto const values = permutation_character(n);
  CharacterTable t;
  t.row_labels = {"F"};
  t.group_order = factorial(2 * n);
  t.entries = IntMatrix(1, sym.size());
  for (std::size_t j = 0; j < sym.size(); ++j) {
    t.col_labels.push_back(sym[j].type.to_string());
    t.class_orders.push_back(sym[j].order);
    t.entries(0, j) = values[j];
  }
  return t;
}

/// Re-columns an S_2N table over the W(B_N) classes: each W(B_N) class
/// carries the value at its fused class; S_2N classes that miss W(B_N)
/// drop out.
inline CharacterTable modify_table(CharacterTable const& t, int n)
{
  auto const sym = sym_classes(2 * n);
  if (t.cols() != sym.size())
    throw DomainError("table does not have the S_2N class columns");
  for (std::size_t j = 0; j < sym.size(); ++j)
    if (t.col_labels[j] != sym[j].type.to_string())
      throw DomainError("table column " + std::to_string(j) + " is not S_2N class " +
                        sym[j].type.to_string());

  auto const hob = hob_classes(n);
  auto const fusion = fusion_map(n);
  CharacterTable m;
  m.row_labels = t.row_labels;
  m.group_order = hyperoctahedral_order(n);
  m.entries = t.entries.select_columns(fusion.image);
  for (auto const& c : hob) {
    m.col_labels.push_back(c.alpha.to_string());
    m.class_orders.push_back(c.order);
  }
  return m;
}

} // namespace hyperbranch
