#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <string>
#include <string_view>
#include <vector>

#include "errors.hpp"

// Label types shared by the formula modules, the oracle and the serializers.

namespace hyperbranch {

/// Weakly decreasing sequence of positive integers.
class Partition
{
public:
  Partition() = default;

  explicit Partition(std::vector<int> parts)
  : parts_(std::move(parts))
  {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (parts_[i] < 1)
        throw DomainError("partition parts must be positive");
      if (i + 1 < parts_.size() && parts_[i] < parts_[i + 1])
        throw DomainError("partition parts must be weakly decreasing");
    }
  }

  std::vector<int> const& parts() const { return parts_; }
  std::size_t length() const { return parts_.size(); }
  int operator[](std::size_t i) const { return parts_[i]; }

  int weight() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

  bool all_parts_even() const
  {
    return std::all_of(parts_.begin(), parts_.end(), [](int p) { return p % 2 == 0; });
  }

  std::string to_string() const
  {
    std::string s;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (i)
        s += ',';
      s += std::to_string(parts_[i]);
    }
    return s;
  }

  static Partition parse(std::string_view text)
  {
    std::vector<int> parts;
    while (!text.empty()) {
      auto const comma = text.find(',');
      auto const field = text.substr(0, comma);
      if (field.empty())
        throw DomainError("empty part in partition label");
      int v = 0;
      for (char ch : field) {
        if (ch < '0' || ch > '9')
          throw DomainError("bad partition label");
        v = v * 10 + (ch - '0');
      }
      parts.push_back(v);
      if (comma == std::string_view::npos)
        break;
      text.remove_prefix(comma + 1);
      if (text.empty())
        throw DomainError("trailing comma in partition label");
    }
    return Partition(std::move(parts));
  }

  auto operator<=>(Partition const&) const = default;

private:
  std::vector<int> parts_;
};

/// Per-part 0/1 flags attached to a partition.
using SignFlags = std::vector<std::uint8_t>;

/// Flags must be non-decreasing across runs of equal parts.
inline bool flags_admissible(Partition const& lambda, SignFlags const& flags)
{
  if (flags.size() != lambda.length())
    return false;
  for (std::size_t i = 0; i < flags.size(); ++i) {
    if (flags[i] > 1)
      return false;
    if (i + 1 < flags.size() && lambda[i] == lambda[i + 1] && flags[i] > flags[i + 1])
      return false;
  }
  return true;
}

/// Cycle structure (1^α, 2^β, 3^γ, ...) of a permutation.
class CycleType
{
public:
  CycleType() = default;

  static CycleType from_cycle_lengths(std::vector<int> const& lengths)
  {
    CycleType t;
    for (int len : lengths)
      t.add(len);
    return t;
  }

  static CycleType from_partition(Partition const& p) { return from_cycle_lengths(p.parts()); }

  void add(int length, int count = 1)
  {
    if (length < 1 || count < 0)
      throw DomainError("bad cycle length");
    if (count == 0)
      return;
    if (exponents_.size() < static_cast<std::size_t>(length))
      exponents_.resize(length, 0);
    exponents_[length - 1] += count;
  }

  /// Number of cycles of length `length`.
  int count(int length) const
  {
    return length >= 1 && static_cast<std::size_t>(length) <= exponents_.size()
             ? exponents_[length - 1]
             : 0;
  }

  int max_length() const { return static_cast<int>(exponents_.size()); }

  int degree() const
  {
    int d = 0;
    for (std::size_t i = 0; i < exponents_.size(); ++i)
      d += static_cast<int>(i + 1) * exponents_[i];
    return d;
  }

  int cycle_count() const
  {
    int c = 0;
    for (int e : exponents_)
      c += e;
    return c;
  }

  Partition to_partition() const
  {
    std::vector<int> parts;
    for (int len = max_length(); len >= 1; --len)
      parts.insert(parts.end(), count(len), len);
    return Partition(std::move(parts));
  }

  /// Cycle lengths, largest first, comma-joined (same grammar as partitions).
  std::string to_string() const { return to_partition().to_string(); }

  friend bool operator==(CycleType const&, CycleType const&) = default;

private:
  std::vector<int> exponents_;
};

struct SignedCycleCounts
{
  int positive = 0;
  int negative = 0;

  int total() const { return positive + negative; }
  friend bool operator==(SignedCycleCounts const&, SignedCycleCounts const&) = default;
};

/// Counts of positive and negative cycles per length; labels a class of W(B_N).
class AlphaSystem
{
public:
  AlphaSystem() = default;

  void add(int length, bool negative, int count = 1)
  {
    if (length < 1 || count < 0)
      throw DomainError("bad signed cycle length");
    if (count == 0)
      return;
    if (counts_.size() < static_cast<std::size_t>(length))
      counts_.resize(length);
    auto& c = counts_[length - 1];
    (negative ? c.negative : c.positive) += count;
  }

  SignedCycleCounts counts(int length) const
  {
    return length >= 1 && static_cast<std::size_t>(length) <= counts_.size() ? counts_[length - 1]
                                                                               : SignedCycleCounts{};
  }
  int positive(int length) const { return counts(length).positive; }
  int negative(int length) const { return counts(length).negative; }
  int max_length() const { return static_cast<int>(counts_.size()); }

  /// Σ_i i·(α_i⁺ + α_i⁻).
  int weight() const
  {
    int w = 0;
    for (std::size_t i = 0; i < counts_.size(); ++i)
      w += static_cast<int>(i + 1) * counts_[i].total();
    return w;
  }

  /// "i+:count" / "i-:count" terms joined by ';', zero counts omitted.
  std::string to_string() const
  {
    std::string s;
    auto term = [&s](int len, char sign, int count) {
      if (count == 0)
        return;
      if (!s.empty())
        s += ';';
      s += std::to_string(len) + sign + ':' + std::to_string(count);
    };
    for (int len = 1; len <= max_length(); ++len) {
      term(len, '+', positive(len));
      term(len, '-', negative(len));
    }
    return s;
  }

  static AlphaSystem parse(std::string_view text)
  {
    AlphaSystem a;
    while (!text.empty()) {
      auto const semi = text.find(';');
      auto const field = text.substr(0, semi);
      auto const colon = field.find(':');
      if (colon == std::string_view::npos || colon < 2)
        throw DomainError("bad alpha-system term");
      char const sign = field[colon - 1];
      if (sign != '+' && sign != '-')
        throw DomainError("bad alpha-system sign");
      int const len = std::stoi(std::string(field.substr(0, colon - 1)));
      int const count = std::stoi(std::string(field.substr(colon + 1)));
      a.add(len, sign == '-', count);
      if (semi == std::string_view::npos)
        break;
      text.remove_prefix(semi + 1);
    }
    return a;
  }

  friend bool operator==(AlphaSystem const&, AlphaSystem const&) = default;

private:
  std::vector<SignedCycleCounts> counts_;
};

/// (λ, b): labels the canonical subgroup S(λ,b) = Π_j Z₂^{λ_j - b_j} ≀ S_{λ_j}.
struct SignedSubgroupLabel
{
  Partition partition;
  SignFlags flags;

  SignedSubgroupLabel() = default;

  SignedSubgroupLabel(Partition p, SignFlags b)
  : partition(std::move(p)), flags(std::move(b))
  {
    if (!flags_admissible(partition, flags))
      throw DomainError("inadmissible sign flags for " + partition.to_string());
  }

  int weight() const { return partition.weight(); }

  /// Each part with '+' for flag 1 and '-' for flag 0, e.g. "2+,1-".
  std::string to_string() const
  {
    std::string s;
    for (std::size_t j = 0; j < flags.size(); ++j) {
      if (j)
        s += ',';
      s += std::to_string(partition[j]) + (flags[j] ? '+' : '-');
    }
    return s;
  }

  /// The class whose β-system is (λ, b): flag 1 parts are positive cycles.
  AlphaSystem paired_class() const
  {
    AlphaSystem a;
    for (std::size_t j = 0; j < flags.size(); ++j)
      a.add(partition[j], flags[j] == 0);
    return a;
  }

  friend bool operator==(SignedSubgroupLabel const&, SignedSubgroupLabel const&) = default;
};

} // namespace hyperbranch
