#pragma once

#include <algorithm>
#include <cstddef>
#include <string>
#include <vector>

#include "chains.hpp"
#include "embedding.hpp"
#include "hob_characters.hpp"
#include "matrix.hpp"
#include "oracle.hpp"
#include "reduction.hpp"
#include "report.hpp"
#include "sym_characters.hpp"
#include "tables.hpp"

namespace hyperbranch {

/// ⟨row_i, row_j⟩ = δ_ij under the table's class weights.
inline Report row_orthonormality(std::string check, int n, CharacterTable const& t)
{
  auto const w = WeightVector::from_class_orders(t.class_orders, t.group_order);
  IntMatrix gram(t.rows(), t.rows());
  for (std::size_t i = 0; i < t.rows(); ++i)
    for (std::size_t j = 0; j < t.rows(); ++j) {
      Rational const v = inner_product(t.entries.row(i), t.entries.row(j), w);
      // A fractional inner product is recorded as a sentinel so the
      // comparison fails at the right entry.
      gram(i, j) = is_integral(v) ? Integer(boost::multiprecision::numerator(v)) : Integer(-999);
    }
  return compare_matrices(std::move(check), n, gram, IntMatrix::identity(t.rows()), t.row_labels,
                          t.row_labels, "row Gram matrix vs identity");
}

/// Σ_i X_i(c)·X_i(c′) = δ_cc′·|G|/|c|.
inline Report column_orthogonality(std::string check, int n, CharacterTable const& t)
{
  IntMatrix const gram = t.entries.transpose() * t.entries;
  IntMatrix expected(t.cols(), t.cols());
  for (std::size_t c = 0; c < t.cols(); ++c)
    expected(c, c) = t.group_order / t.class_orders[c];
  return compare_matrices(std::move(check), n, gram, expected, t.col_labels, t.col_labels,
                          "column Gram matrix vs centralizer orders");
}

inline std::vector<Report> orthogonality_reports(ReductionContext& ctx)
{
  int const n = ctx.n();
  auto const& x = ctx.sym_irreducible().table;
  auto const& y = ctx.hob_irreducible().table;
  return {row_orthonormality("orthogonality:X-rows", n, x),
          column_orthogonality("orthogonality:X-columns", n, x),
          row_orthonormality("orthogonality:Y-rows", n, y),
          column_orthogonality("orthogonality:Y-columns", n, y)};
}

/// Compares the oracle's classes, fusion images, induced characters (N <= 4)
/// and restriction multiplicities with the formula pipeline.
inline std::vector<Report> oracle_reports(ReductionContext& ctx)
{
  int const n = ctx.n();
  oracle::Group const group(n);
  auto const hob = hob_classes(n);
  auto const& oc = group.classes();
  std::vector<Report> out;

  // For each formula class, the oracle class with the same alpha system.
  std::vector<std::size_t> match(hob.size(), oc.size());
  {
    Report r{"oracle:classes", n, oc.size() == hob.size(), std::nullopt,
             std::to_string(oc.size()) + " oracle classes, " + std::to_string(hob.size()) +
               " formula classes"};
    for (std::size_t k = 0; k < hob.size() && r.pass; ++k) {
      auto const it = std::find_if(oc.begin(), oc.end(), [&](oracle::OracleClass const& c) {
        return c.alpha == hob[k].alpha;
      });
      if (it == oc.end()) {
        r.pass = false;
        r.first_mismatch = Mismatch{hob[k].alpha.to_string(), "size", hob[k].order, 0};
        break;
      }
      match[k] = static_cast<std::size_t>(it - oc.begin());
      Integer const size = it->members.size();
      if (size != hob[k].order) {
        r.pass = false;
        r.first_mismatch = Mismatch{hob[k].alpha.to_string(), "size", hob[k].order, size};
      }
    }
    out.push_back(std::move(r));
    if (!out.back().pass)
      return out;
  }

  {
    Report r{"oracle:fusion", n, true, std::nullopt, "ambient cycle type vs fuse_class"};
    for (std::size_t k = 0; k < hob.size(); ++k)
      if (!(oc[match[k]].ambient == fuse_class(hob[k].alpha, n))) {
        r.pass = false;
        r.first_mismatch = Mismatch{hob[k].alpha.to_string(), fuse_class(hob[k].alpha, n).to_string(),
                                    0, 0};
        r.detail += "; oracle image " + oc[match[k]].ambient.to_string();
        break;
      }
    out.push_back(std::move(r));
  }

  if (n <= 4) {
    auto const& induced = ctx.hob_induced();
    auto const labels = hob_labels(n);
    IntMatrix brute(labels.size(), hob.size());
    for (std::size_t i = 0; i < labels.size(); ++i) {
      auto const values = oracle::induced_char(group, labels[i]);
      for (std::size_t k = 0; k < hob.size(); ++k)
        brute(i, k) = values[match[k]];
    }
    out.push_back(compare_matrices("oracle:induced", n, induced.entries, brute, induced.row_labels,
                                   induced.col_labels, "hob_induced_table vs coset fixed points"));
  }

  auto const brute_r1 =
    oracle::restriction(group, ctx.sym_irreducible().table, ctx.hob_irreducible().table);
  auto const& r1 = ctx.irreducible_branching();
  out.push_back(compare_matrices("oracle:restriction", n, r1.entries, brute_r1.entries,
                                 r1.row_labels, r1.col_labels,
                                 "R1 vs element sums over " + std::to_string(group.order()) +
                                   " elements"));
  return out;
}

} // namespace hyperbranch
