#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "errors.hpp"
#include "exact.hpp"
#include "matrix.hpp"

namespace hyperbranch {

/// Character values with row labels (characters), column labels
/// (classes) and per-column class orders.
struct CharacterTable
{
  std::vector<std::string> row_labels;
  std::vector<std::string> col_labels;
  std::vector<Integer> class_orders;
  Integer group_order = 1;
  IntMatrix entries;

  std::size_t rows() const { return entries.rows(); }
  std::size_t cols() const { return entries.cols(); }
};

/// Restriction multiplicities: rows are characters of the larger group,
/// columns characters of the smaller one.
struct BranchingMatrix
{
  std::vector<std::string> row_labels;
  std::vector<std::string> col_labels;
  IntMatrix entries;

  bool non_negative() const
  {
    for (auto const& v : entries.data())
      if (v < 0)
        return false;
    return true;
  }
};

/// Per-class weights |C| / |G|.
class WeightVector
{
public:
  explicit WeightVector(std::vector<Rational> weights)
  : weights_(std::move(weights))
  {
    for (auto const& w : weights_)
      if (w <= 0)
        throw DomainError("class weights must be positive");
  }

  /// Builds weights from class orders; the orders must cover the group.
  static WeightVector from_class_orders(std::span<Integer const> orders, Integer const& group_order)
  {
    std::vector<Rational> w;
    Integer total = 0;
    for (auto const& o : orders) {
      w.emplace_back(o, group_order);
      total += o;
    }
    if (total != group_order)
      throw ComputationError("class orders sum to " + total.str() + ", expected " +
                             group_order.str());
    return WeightVector(std::move(w));
  }

  std::size_t size() const { return weights_.size(); }
  Rational const& operator[](std::size_t i) const { return weights_[i]; }

  Rational sum() const
  {
    Rational s = 0;
    for (auto const& w : weights_)
      s += w;
    return s;
  }

private:
  std::vector<Rational> weights_;
};

/// ⟨u, v⟩ = Σ_c w_c·u_c·v_c (characters here are real).
template<typename U, typename V>
Rational inner_product(U const& u, V const& v, WeightVector const& w)
{
  if (u.size() != w.size() || v.size() != w.size())
    throw DomainError("inner product dimension mismatch");
  Rational s = 0;
  for (std::size_t c = 0; c < w.size(); ++c)
    s += w[c] * Rational(u[c]) * Rational(v[c]);
  return s;
}

/// Lower unitriangular integer matrix; the invariant is checked on construction.
class TransitionMatrix
{
public:
  TransitionMatrix() = default;

  explicit TransitionMatrix(IntMatrix m)
  : m_(std::move(m))
  {
    if (!is_lower_unitriangular(m_))
      throw ComputationError("transition matrix is not lower unitriangular");
  }

  IntMatrix const& matrix() const { return m_; }
  std::size_t size() const { return m_.rows(); }
  Integer const& operator()(std::size_t r, std::size_t c) const { return m_(r, c); }

private:
  IntMatrix m_;
};

/// An irreducible table together with the unitriangular factor that
/// expresses the inducing table in it.
struct IrreducibleTable
{
  CharacterTable table;
  TransitionMatrix transition;
};

} // namespace hyperbranch
