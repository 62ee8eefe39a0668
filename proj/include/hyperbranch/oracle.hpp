#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <string>
#include <unordered_map>
#include <vector>

#include "errors.hpp"
#include "exact.hpp"
#include "labels.hpp"
#include "matrix.hpp"
#include "tables.hpp"

// Brute-force ground truth for small N. Nothing here calls the formula
// modules: classes come from conjugation closure, induced characters
// from coset fixed points, restriction from sums over group elements.

namespace hyperbranch::oracle {

/// g = (σ; f): coordinate i goes to σ(i) with sign f(σ(i)).
struct SignedPermutation
{
  std::vector<int> images; // σ(i), 0-based
  std::vector<int> signs;  // f(i) ∈ {+1, -1}

  int degree() const { return static_cast<int>(images.size()); }

  static SignedPermutation identity(int n)
  {
    SignedPermutation g;
    g.images.resize(n);
    std::iota(g.images.begin(), g.images.end(), 0);
    g.signs.assign(n, 1);
    return g;
  }

  std::uint32_t key() const
  {
    std::uint32_t k = 0;
    for (int i = 0; i < degree(); ++i)
      k = (k << 4) | static_cast<std::uint32_t>(images[i] << 1) | (signs[i] < 0 ? 1u : 0u);
    return k;
  }

  friend bool operator==(SignedPermutation const&, SignedPermutation const&) = default;
};

/// (σ′; f′)(σ; f) = (σ′σ; f′·(f∘σ′⁻¹)); the right factor acts first.
inline SignedPermutation compose(SignedPermutation const& left, SignedPermutation const& right)
{
  int const n = left.degree();
  SignedPermutation g;
  g.images.resize(n);
  g.signs.resize(n);
  std::vector<int> left_inv(n);
  for (int i = 0; i < n; ++i)
    left_inv[left.images[i]] = i;
  for (int i = 0; i < n; ++i) {
    g.images[i] = left.images[right.images[i]];
    g.signs[i] = left.signs[i] * right.signs[left_inv[i]];
  }
  return g;
}

inline SignedPermutation inverse(SignedPermutation const& g)
{
  int const n = g.degree();
  SignedPermutation h;
  h.images.resize(n);
  h.signs.resize(n);
  for (int i = 0; i < n; ++i)
    h.images[g.images[i]] = i;
  // g sends +i to f(σi)·σi, so g⁻¹ sends +σi to f(σi)·i.
  for (int i = 0; i < n; ++i)
    h.signs[i] = g.signs[g.images[i]];
  return h;
}

inline constexpr int max_degree = 5;

/// All 2^N·N! elements: permutations in lexicographic order, for each the
/// sign patterns by increasing bit mask (bit i set means f(i) = -1).
inline std::vector<SignedPermutation> enumerate_group(int n)
{
  if (n < 1 || n > max_degree)
    throw DomainError("oracle group enumeration supports 1 <= N <= 5, got " + std::to_string(n));
  std::vector<SignedPermutation> out;
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
      SignedPermutation g;
      g.images = perm;
      g.signs.resize(n);
      for (int i = 0; i < n; ++i)
        g.signs[i] = (mask >> i) & 1u ? -1 : 1;
      out.push_back(std::move(g));
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

/// Action on the 2N symbols ordered (+1, ..., +N, -1, ..., -N): symbol
/// index i is +(i+1) for i < N and -(i-N+1) otherwise.
inline std::vector<int> to_ambient_permutation(SignedPermutation const& g)
{
  int const n = g.degree();
  std::vector<int> p(2 * n);
  for (int i = 0; i < n; ++i) {
    int const target = g.images[i];
    bool const flipped = g.signs[target] < 0;
    p[i] = flipped ? n + target : target;
    p[n + i] = flipped ? target : n + target;
  }
  return p;
}

inline CycleType cycle_type_of(std::vector<int> const& perm)
{
  std::vector<bool> seen(perm.size(), false);
  std::vector<int> lengths;
  for (std::size_t s = 0; s < perm.size(); ++s) {
    if (seen[s])
      continue;
    int len = 0;
    for (std::size_t x = s; !seen[x]; x = static_cast<std::size_t>(perm[x])) {
      seen[x] = true;
      ++len;
    }
    lengths.push_back(len);
  }
  return CycleType::from_cycle_lengths(lengths);
}

/// Cycles of σ, each signed by the product of f over its points.
inline AlphaSystem alpha_system_of(SignedPermutation const& g)
{
  int const n = g.degree();
  std::vector<bool> seen(n, false);
  AlphaSystem a;
  for (int s = 0; s < n; ++s) {
    if (seen[s])
      continue;
    int len = 0;
    int sign = 1;
    for (int x = s; !seen[x]; x = g.images[x]) {
      seen[x] = true;
      sign *= g.signs[x];
      ++len;
    }
    a.add(len, sign < 0);
  }
  return a;
}

struct OracleClass
{
  std::vector<std::size_t> members; // indices into the element list, ascending
  std::size_t representative = 0;   // smallest member index
  AlphaSystem alpha;
  CycleType ambient;
};

/// Enumerated W(B_N) with its conjugacy classes.
class Group
{
public:
  explicit Group(int n)
  : n_(n), elements_(enumerate_group(n))
  {
    for (std::size_t i = 0; i < elements_.size(); ++i)
      index_.emplace(elements_[i].key(), i);
    build_classes();
  }

  int degree() const { return n_; }
  std::vector<SignedPermutation> const& elements() const { return elements_; }
  std::vector<OracleClass> const& classes() const { return classes_; }
  std::size_t order() const { return elements_.size(); }

  std::size_t index_of(SignedPermutation const& g) const { return index_.at(g.key()); }

  /// Class index of every element.
  std::vector<std::size_t> const& class_of() const { return class_of_; }

private:
  void build_classes()
  {
    std::vector<SignedPermutation> inverses;
    for (auto const& h : elements_)
      inverses.push_back(inverse(h));
    std::size_t const unassigned = elements_.size();
    class_of_.assign(elements_.size(), unassigned);
    for (std::size_t g = 0; g < elements_.size(); ++g) {
      if (class_of_[g] != unassigned)
        continue;
      OracleClass c;
      c.representative = g;
      std::size_t const id = classes_.size();
      for (std::size_t h = 0; h < elements_.size(); ++h) {
        std::size_t const conj = index_of(compose(compose(elements_[h], elements_[g]), inverses[h]));
        if (class_of_[conj] == unassigned) {
          class_of_[conj] = id;
          c.members.push_back(conj);
        }
      }
      std::sort(c.members.begin(), c.members.end());
      c.alpha = alpha_system_of(elements_[g]);
      c.ambient = cycle_type_of(to_ambient_permutation(elements_[g]));
      for (auto m : c.members) {
        if (!(alpha_system_of(elements_[m]) == c.alpha))
          throw ComputationError("alpha system not constant on an oracle class");
        if (!(cycle_type_of(to_ambient_permutation(elements_[m])) == c.ambient))
          throw ComputationError("ambient cycle type not constant on an oracle class");
      }
      classes_.push_back(std::move(c));
    }
  }

  int n_;
  std::vector<SignedPermutation> elements_;
  std::unordered_map<std::uint32_t, std::size_t> index_;
  std::vector<OracleClass> classes_;
  std::vector<std::size_t> class_of_;
};

/// Membership in S(λ,b) realized on consecutive coordinate blocks: each
/// block is preserved, and a block with flag 1 has sign product +1.
inline bool in_canonical_subgroup(SignedPermutation const& g, SignedSubgroupLabel const& s)
{
  int start = 0;
  for (std::size_t j = 0; j < s.partition.length(); ++j) {
    int const end = start + s.partition[j];
    int product = 1;
    for (int i = start; i < end; ++i) {
      if (g.images[i] < start || g.images[i] >= end)
        return false;
      product *= g.signs[i];
    }
    if (s.flags[j] && product < 0)
      return false;
    start = end;
  }
  return true;
}

/// Induced character from the trivial representation of S(λ,b): the
/// number of left cosets gH fixed by each class representative x,
/// i.e. with g⁻¹xg ∈ H. Ordered as group.classes().
inline std::vector<Integer> induced_char(Group const& group, SignedSubgroupLabel const& s)
{
  if (s.weight() != group.degree())
    throw DomainError("subgroup label weight differs from group degree");
  if (group.degree() > 4)
    throw DomainError("oracle coset enumeration is limited to N <= 4");
  auto const& el = group.elements();

  std::vector<std::size_t> subgroup;
  for (std::size_t i = 0; i < el.size(); ++i)
    if (in_canonical_subgroup(el[i], s))
      subgroup.push_back(i);

  // Coset transversal: smallest element index of each left coset.
  std::vector<bool> covered(el.size(), false);
  std::vector<std::size_t> transversal;
  for (std::size_t g = 0; g < el.size(); ++g) {
    if (covered[g])
      continue;
    transversal.push_back(g);
    for (auto h : subgroup)
      covered[group.index_of(compose(el[g], el[h]))] = true;
  }

  std::vector<Integer> values;
  for (auto const& c : group.classes()) {
    auto const& x = el[c.representative];
    long long fixed = 0;
    for (auto g : transversal)
      if (in_canonical_subgroup(compose(compose(inverse(el[g]), x), el[g]), s))
        ++fixed;
    values.emplace_back(fixed);
  }
  return values;
}

inline std::size_t column_of(CharacterTable const& t, std::string const& label)
{
  auto const it = std::find(t.col_labels.begin(), t.col_labels.end(), label);
  if (it == t.col_labels.end())
    throw ComputationError("no column labelled " + label);
  return static_cast<std::size_t>(it - t.col_labels.begin());
}

/// Multiplicity of each character of `hob_irreducible` in the restriction of
/// each character of `sym_irreducible`, as (1/|G|) Σ_g χ(g)·ψ(g) summed
/// over every element. Columns are matched by label only.
inline BranchingMatrix restriction(Group const& group, CharacterTable const& sym_irreducible,
                                   CharacterTable const& hob_irreducible)
{
  auto const& el = group.elements();
  std::vector<std::size_t> sym_col(el.size());
  std::vector<std::size_t> hob_col(el.size());
  for (std::size_t g = 0; g < el.size(); ++g) {
    sym_col[g] = column_of(sym_irreducible, cycle_type_of(to_ambient_permutation(el[g])).to_string());
    hob_col[g] = column_of(hob_irreducible, alpha_system_of(el[g]).to_string());
  }
  BranchingMatrix r{sym_irreducible.row_labels, hob_irreducible.row_labels,
                    IntMatrix(sym_irreducible.rows(), hob_irreducible.rows())};
  Integer const order = el.size();
  for (std::size_t i = 0; i < sym_irreducible.rows(); ++i)
    for (std::size_t k = 0; k < hob_irreducible.rows(); ++k) {
      Integer sum = 0;
      for (std::size_t g = 0; g < el.size(); ++g)
        sum += sym_irreducible.entries(i, sym_col[g]) * hob_irreducible.entries(k, hob_col[g]);
      if (sum % order != 0)
        throw ComputationError("oracle multiplicity is not integral");
      r.entries(i, k) = sum / order;
    }
  return r;
}

} // namespace hyperbranch::oracle
