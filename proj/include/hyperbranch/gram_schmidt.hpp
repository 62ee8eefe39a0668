#pragma once

#include <string>

#include "errors.hpp"
#include "exact.hpp"
#include "matrix.hpp"
#include "tables.hpp"

namespace hyperbranch {

struct GramSchmidtResult
{
  IntMatrix orthonormal;
  TransitionMatrix transition;
};

/// Orthonormalizes the rows of `m` in order under the w-weighted inner
/// product: x_i = m_i - Σ_{k<i} ⟨m_i, x_k⟩ x_k. Returns X and the factor Δ
/// with m = Δ·X. Every residual must come out with norm exactly 1 and
/// integral entries; anything else is reported as a ComputationError.
inline GramSchmidtResult weighted_gram_schmidt(IntMatrix const& m, WeightVector const& w)
{
  if (!m.square())
    throw DomainError("Gram-Schmidt input must be square");
  if (m.cols() != w.size())
    throw DomainError("weight vector length differs from column count");

  std::size_t const n = m.rows();
  IntMatrix x(n, n);
  IntMatrix delta(n, n);
  RationalMatrix const mq = to_rational(m);

  for (std::size_t i = 0; i < n; ++i) {
    std::vector<Rational> residual(mq.row(i).begin(), mq.row(i).end());
    for (std::size_t k = 0; k < i; ++k) {
      Rational const c = inner_product(mq.row(i), x.row(k), w);
      delta(i, k) = to_integer(c, "transition coefficient (" + std::to_string(i) + "," +
                                    std::to_string(k) + ")");
      if (c == 0)
        continue;
      for (std::size_t j = 0; j < n; ++j)
        residual[j] -= c * Rational(x(k, j));
    }
    delta(i, i) = 1;

    Rational const norm = inner_product(residual, residual, w);
    if (norm == 0)
      throw ComputationError("rank deficiency at row " + std::to_string(i));
    if (norm != 1)
      throw ComputationError("residual of row " + std::to_string(i) + " has norm " + norm.str());
    for (std::size_t j = 0; j < n; ++j)
      x(i, j) = to_integer(residual[j], "orthonormal entry (" + std::to_string(i) + "," +
                                          std::to_string(j) + ")");
  }
  return {std::move(x), TransitionMatrix(std::move(delta))};
}

} // namespace hyperbranch
