#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <numeric>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "errors.hpp"
#include "labels.hpp"

namespace hyperbranch {


namespace detail {

inline void partitions_rec(int remaining, int max_part, std::vector<int>& prefix,
                           std::vector<Partition>& out)
{
  if (remaining == 0) {
    out.emplace_back(prefix);
    return;
  }
  for (int k = std::min(remaining, max_part); k >= 1; --k) {
    prefix.push_back(k);
    partitions_rec(remaining - k, k, prefix, out);
    prefix.pop_back();
  }
}

} // namespace detail

/// All partitions of n in lexicographically decreasing order: (n) first,
/// (1,...,1) last. n = 0 yields the single empty partition.
inline std::vector<Partition> partitions(int n)
{
  if (n < 0)
    throw DomainError("partitions of a negative number");
  std::vector<Partition> out;
  std::vector<int> prefix;
  detail::partitions_rec(n, n, prefix, out);
  return out;
}

/// Number of partitions of m whose parts are all even.
inline std::size_t even_partition_count(int m)
{
  if (m < 2 || m % 2 != 0)
    throw DomainError("even_partition_count needs an even m >= 2, got " + std::to_string(m));
  auto const all = partitions(m);
  return static_cast<std::size_t>(
    std::count_if(all.begin(), all.end(), [](Partition const& p) { return p.all_parts_even(); }));
}


/// Admissible flag vectors for `lambda`, in lexicographically increasing order.
inline std::vector<SignFlags> sign_flag_vectors(Partition const& lambda)
{
  std::size_t const k = lambda.length();
  std::vector<SignFlags> out;
  SignFlags flags(k, 0);
  // Counting in binary with flags[0] as most significant gives lex order.
  for (std::uint64_t code = 0; code < (std::uint64_t{1} << k); ++code) {
    for (std::size_t i = 0; i < k; ++i)
      flags[i] = static_cast<std::uint8_t>((code >> (k - 1 - i)) & 1u);
    if (flags_admissible(lambda, flags))
      out.push_back(flags);
  }
  return out;
}

/// One row of a cell-matrix problem: `count` cycles of length `length`,
/// negative cycles only in the signed variant.
struct CellRow
{
  int length = 1;
  bool negative = false;
  int count = 0;
};

/// Non-negative integer solution: entry (r, j) is how many of row r's
/// cycles are assigned to part j.
struct CellMatrix
{
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<int> entries;

  int operator()(std::size_t r, std::size_t c) const { return entries[r * cols + c]; }

  friend bool operator==(CellMatrix const&, CellMatrix const&) = default;
};

namespace detail {

struct CellSearch
{
  std::span<CellRow const> rows;
  std::span<std::uint8_t const> parity_mask;
  std::size_t cols;
  std::vector<int> capacity;
  std::vector<int> negatives;
  CellMatrix current;
  std::function<void(CellMatrix const&)> const* visit;

  void place(std::size_t r, std::size_t c, int left)
  {
    if (r == rows.size()) {
      for (std::size_t j = 0; j < parity_mask.size(); ++j)
        if (parity_mask[j] && negatives[j] % 2 != 0)
          return;
      (*visit)(current);
      return;
    }
    CellRow const& row = rows[r];
    int const len = row.length;
    int const cap = capacity[c] / len;
    int const lo = (c + 1 == cols) ? left : 0;
    int const hi = std::min(left, cap);
    for (int v = lo; v <= hi; ++v) {
      current.entries[r * cols + c] = v;
      capacity[c] -= v * len;
      if (row.negative)
        negatives[c] += v;
      if (c + 1 == cols)
        place(r + 1, 0, r + 1 < rows.size() ? rows[r + 1].count : 0);
      else
        place(r, c + 1, left - v);
      capacity[c] += v * len;
      if (row.negative)
        negatives[c] -= v;
    }
    current.entries[r * cols + c] = 0;
  }
};

} // namespace detail

/// Visits every non-negative integer matrix whose row r sums to
/// rows[r].count and whose column j has Σ_r length_r·entry = parts[j].
/// With a parity mask, columns flagged 1 must hold an even number of
/// negative cycles. Visit order is lexicographic on the row-major entries.
inline void for_each_cell_matrix(std::span<CellRow const> rows, std::span<int const> parts,
                                 std::span<std::uint8_t const> parity_mask,
                                 std::function<void(CellMatrix const&)> const& visit)
{
  if (!parity_mask.empty() && parity_mask.size() != parts.size())
    throw DomainError("parity mask length differs from part count");
  long long row_weight = 0;
  for (auto const& r : rows) {
    if (r.length < 1 || r.count < 0)
      throw DomainError("bad cell row");
    row_weight += static_cast<long long>(r.length) * r.count;
  }
  long long const part_weight = std::accumulate(parts.begin(), parts.end(), 0LL);
  if (row_weight != part_weight)
    return;
  if (parts.empty()) {
    // Only the empty matrix, and only when there are no cycles either.
    CellMatrix empty{rows.size(), 0, {}};
    visit(empty);
    return;
  }

  detail::CellSearch search{rows, parity_mask, parts.size(),
                            std::vector<int>(parts.begin(), parts.end()),
                            std::vector<int>(parts.size(), 0),
                            CellMatrix{rows.size(), parts.size(),
                                       std::vector<int>(rows.size() * parts.size(), 0)},
                            &visit};
  if (rows.empty()) {
    visit(search.current);
    return;
  }
  search.place(0, 0, rows[0].count);
}

inline std::vector<CellMatrix> enumerate_cell_matrices(std::span<CellRow const> rows,
                                                       std::span<int const> parts,
                                                       std::span<std::uint8_t const> parity_mask = {})
{
  std::vector<CellMatrix> out;
  for_each_cell_matrix(rows, parts, parity_mask,
                       [&out](CellMatrix const& m) { out.push_back(m); });
  return out;
}

} // namespace hyperbranch
