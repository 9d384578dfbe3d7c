#pragma once
// Wedge-product bases: colex ranking of k-subsets and signed insert/delete.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

namespace syz {

using Subset = std::vector<std::uint32_t>;

/// C(n, k) in 64 bits; throws std::overflow_error if it does not fit.
std::uint64_t binomial(std::uint64_t n, std::uint64_t k);

/// Throws std::invalid_argument unless s is strictly increasing with entries < n.
void validate_subset(const Subset& s, std::size_t n);

/// Colex rank: sum of C(s_i, i+1).
std::uint64_t subset_rank(const Subset& s, std::size_t n);
Subset subset_unrank(std::uint64_t r, std::size_t k, std::size_t n);

/// Next k-subset in colex order; false after the last one.
bool next_subset(Subset& s, std::size_t n);

/// All k-subsets of {0..n-1} in colex order.
std::vector<Subset> all_subsets(std::size_t n, std::size_t k);

struct SignedSubset {
  int sign;
  Subset subset;

  bool operator==(const SignedSubset&) const = default;
};

/// Removes the element at `position`, sign (-1)^position.
SignedSubset wedge_delete(const Subset& s, std::size_t position);

/// e_idx ^ e_s: zero if idx is in s, else (-1)^#{elements below idx} times the sorted union.
std::optional<SignedSubset> wedge_insert(const Subset& s, std::uint32_t idx);

/// Cached colex ranks for repeated lookups with a fixed ambient dimension.
class SubsetRanker {
 public:
  explicit SubsetRanker(std::size_t n);
  std::size_t n() const { return n_; }
  std::uint64_t rank(const Subset& s) const;
  /// Rank of s with the element at `position` removed, without materializing it.
  std::uint64_t rank_without(const Subset& s, std::size_t position) const;

 private:
  std::size_t n_;
  std::vector<std::vector<std::uint64_t>> table_;  // table_[m][j] = C(m, j)
};

}  // namespace syz
