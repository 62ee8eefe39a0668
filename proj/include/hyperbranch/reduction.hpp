#pragma once

#include <cstddef>
#include <optional>
#include <string>

#include "embedding.hpp"
#include "errors.hpp"
#include "exact.hpp"
#include "hob_characters.hpp"
#include "matrix.hpp"
#include "report.hpp"
#include "sym_characters.hpp"
#include "tables.hpp"

namespace hyperbranch {

/// Lazily computed tables for one reduction S_2N → W(B_N). Each table is
/// built at most once; not safe for concurrent use.
class ReductionContext
{
public:
  explicit ReductionContext(int n)
  : n_(n)
  {
    if (n < 1)
      throw DomainError("reduction needs N >= 1");
  }

  int n() const { return n_; }

  CharacterTable const& sym_induced()
  {
    if (!sym_induced_)
      sym_induced_ = sym_induced_table(2 * n_);
    return *sym_induced_;
  }

  IrreducibleTable const& sym_irreducible()
  {
    if (!sym_irreducible_)
      sym_irreducible_ = sym_irreducible_table(sym_induced());
    return *sym_irreducible_;
  }

  CharacterTable const& hob_induced()
  {
    if (!hob_induced_)
      hob_induced_ = hob_induced_table(n_);
    return *hob_induced_;
  }

  IrreducibleTable const& hob_irreducible()
  {
    if (!hob_irreducible_)
      hob_irreducible_ = hob_irreducible_table(hob_induced());
    return *hob_irreducible_;
  }

  /// X′
  CharacterTable const& modified_irreducible()
  {
    if (!modified_irreducible_)
      modified_irreducible_ = modify_table(sym_irreducible().table, n_);
    return *modified_irreducible_;
  }

  /// φ′
  CharacterTable const& modified_induced()
  {
    if (!modified_induced_)
      modified_induced_ = modify_table(sym_induced(), n_);
    return *modified_induced_;
  }

  BranchingMatrix const& irreducible_branching();
  BranchingMatrix const& induced_branching();

private:
  int n_;
  std::optional<CharacterTable> sym_induced_;
  std::optional<IrreducibleTable> sym_irreducible_;
  std::optional<CharacterTable> hob_induced_;
  std::optional<IrreducibleTable> hob_irreducible_;
  std::optional<CharacterTable> modified_irreducible_;
  std::optional<CharacterTable> modified_induced_;
  std::optional<BranchingMatrix> r1_;
  std::optional<BranchingMatrix> r2_;
};

/// R₁[i][k] = ⟨X′_i, Y_k⟩ under the W(B_N) class weights. Checks X′ = R₁·Y.
inline BranchingMatrix reduce_irreducible(CharacterTable const& modified_irreducible,
                                          CharacterTable const& hob_irreducible)
{
  auto const& xp = modified_irreducible;
  auto const& y = hob_irreducible;
  auto const w = WeightVector::from_class_orders(y.class_orders, y.group_order);

  BranchingMatrix r{xp.row_labels, y.row_labels, IntMatrix(xp.rows(), y.rows())};
  for (std::size_t i = 0; i < xp.rows(); ++i)
    for (std::size_t k = 0; k < y.rows(); ++k) {
      Rational const m = inner_product(xp.entries.row(i), y.entries.row(k), w);
      Integer const v = to_integer(m, "multiplicity of " + y.row_labels[k] + " in " +
                                        xp.row_labels[i]);
      if (v < 0)
        throw ComputationError("negative multiplicity of " + y.row_labels[k] + " in " +
                               xp.row_labels[i]);
      r.entries(i, k) = v;
    }
  if (!(r.entries * y.entries == xp.entries))
    throw ComputationError("X' is not spanned by the irreducible characters of W(B_N)");
  return r;
}

/// R₂ as the exact solution of R₂·I = φ′. Entries must be integral; they
/// are not guaranteed non-negative (check BranchingMatrix::non_negative).
inline BranchingMatrix reduce_induced(CharacterTable const& modified_induced,
                                      CharacterTable const& hob_induced)
{
  auto const sol = solve_right(hob_induced.entries, modified_induced.entries);
  BranchingMatrix r{modified_induced.row_labels, hob_induced.row_labels,
                    IntMatrix(sol.rows(), sol.cols())};
  for (std::size_t i = 0; i < sol.rows(); ++i)
    for (std::size_t k = 0; k < sol.cols(); ++k)
      r.entries(i, k) = to_integer(sol(i, k), "coefficient of " + hob_induced.row_labels[k] +
                                                " in " + modified_induced.row_labels[i]);
  return r;
}

inline BranchingMatrix const& ReductionContext::irreducible_branching()
{
  if (!r1_)
    r1_ = reduce_irreducible(modified_irreducible(), hob_irreducible().table);
  return *r1_;
}

inline BranchingMatrix const& ReductionContext::induced_branching()
{
  if (!r2_)
    r2_ = reduce_induced(modified_induced(), hob_induced());
  return *r2_;
}

inline BranchingMatrix reduce_irreducible(int n)
{
  ReductionContext ctx(n);
  return ctx.irreducible_branching();
}

inline BranchingMatrix reduce_induced(int n)
{
  ReductionContext ctx(n);
  return ctx.induced_branching();
}

/// R₂·T_B = Δ′·R₁ with Δ′ = Δ.
inline Report verify_consistency(ReductionContext& ctx)
{
  auto const& r1 = ctx.irreducible_branching();
  auto const& r2 = ctx.induced_branching();
  auto const& tb = ctx.hob_irreducible().transition.matrix();
  auto const& delta = ctx.sym_irreducible().transition.matrix();
  return compare_matrices("eq8", ctx.n(), r2.entries * tb, delta * r1.entries, r1.row_labels,
                          r1.col_labels,
                          "R2*T_B vs Delta'*R1, " + std::to_string(r1.entries.rows()) + "x" +
                            std::to_string(r1.entries.cols()));
}

inline Report verify_consistency(int n)
{
  ReductionContext ctx(n);
  return verify_consistency(ctx);
}

/// φ′ = Δ·X′ with the unmodified Δ.
inline Report verify_modified_factorization(ReductionContext& ctx)
{
  auto const& xp = ctx.modified_irreducible();
  auto const& pp = ctx.modified_induced();
  return compare_matrices("modified-factorization", ctx.n(),
                          ctx.sym_irreducible().transition.matrix() * xp.entries, pp.entries,
                          pp.row_labels, pp.col_labels, "Delta*X' vs phi'");
}

} // namespace hyperbranch
