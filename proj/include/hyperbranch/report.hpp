#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "exact.hpp"
#include "matrix.hpp"

namespace hyperbranch {

struct Mismatch
{
  std::string row_label;
  std::string col_label;
  Integer lhs;
  Integer rhs;
};

/// Outcome of a verification; failures carry the first differing entry.
struct Report
{
  std::string check;
  int n = 0;
  bool pass = false;
  std::optional<Mismatch> first_mismatch;
  std::string detail;
};

inline std::string label_at(std::vector<std::string> const& labels, std::size_t i)
{
  return i < labels.size() ? labels[i] : std::to_string(i);
}

/// Entrywise comparison of two integer matrices.
inline Report compare_matrices(std::string check, int n, IntMatrix const& lhs, IntMatrix const& rhs,
                               std::vector<std::string> const& row_labels,
                               std::vector<std::string> const& col_labels, std::string detail = {})
{
  Report r{std::move(check), n, true, std::nullopt, std::move(detail)};
  if (lhs.rows() != rhs.rows() || lhs.cols() != rhs.cols()) {
    r.pass = false;
    r.detail += (r.detail.empty() ? "" : "; ") + std::string("shape mismatch ") +
                std::to_string(lhs.rows()) + "x" + std::to_string(lhs.cols()) + " vs " +
                std::to_string(rhs.rows()) + "x" + std::to_string(rhs.cols());
    return r;
  }
  for (std::size_t i = 0; i < lhs.rows(); ++i)
    for (std::size_t j = 0; j < lhs.cols(); ++j)
      if (lhs(i, j) != rhs(i, j)) {
        r.pass = false;
        r.first_mismatch = Mismatch{label_at(row_labels, i), label_at(col_labels, j), lhs(i, j),
                                    rhs(i, j)};
        return r;
      }
  return r;
}

} // namespace hyperbranch
