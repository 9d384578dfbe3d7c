#include "syzygy/exterior.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace syz {

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  unsigned __int128 acc = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    acc = acc * (n - k + i) / i;
    if (acc > UINT64_MAX) throw std::overflow_error("binomial C(" + std::to_string(n) + "," + std::to_string(k) + ") overflows");
  }
  return static_cast<std::uint64_t>(acc);
}

void validate_subset(const Subset& s, std::size_t n) {
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] >= n) throw std::invalid_argument("subset index " + std::to_string(s[i]) + " out of range");
    if (i > 0 && s[i] <= s[i - 1]) throw std::invalid_argument("subset is not strictly increasing");
  }
}

std::uint64_t subset_rank(const Subset& s, std::size_t n) {
  validate_subset(s, n);
  std::uint64_t r = 0;
  for (std::size_t i = 0; i < s.size(); ++i) r += binomial(s[i], i + 1);
  return r;
}

Subset subset_unrank(std::uint64_t r, std::size_t k, std::size_t n) {
  if (r >= binomial(n, k)) throw std::invalid_argument("subset rank out of range");
  Subset s(k);
  std::uint64_t m = n;
  for (std::size_t i = k; i-- > 0;) {
    // Largest m with C(m, i+1) <= r.
    while (binomial(m, i + 1) > r) --m;
    s[i] = static_cast<std::uint32_t>(m);
    r -= binomial(m, i + 1);
  }
  return s;
}

bool next_subset(Subset& s, std::size_t n) {
  const std::size_t k = s.size();
  for (std::size_t i = 0; i < k; ++i) {
    std::uint32_t limit = i + 1 < k ? s[i + 1] : static_cast<std::uint32_t>(n);
    if (s[i] + 1 < limit) {
      ++s[i];
      for (std::size_t j = 0; j < i; ++j) s[j] = static_cast<std::uint32_t>(j);
      return true;
    }
  }
  return false;
}

std::vector<Subset> all_subsets(std::size_t n, std::size_t k) {
  std::vector<Subset> out;
  if (k > n) return out;
  out.reserve(binomial(n, k));
  Subset s(k);
  for (std::size_t i = 0; i < k; ++i) s[i] = static_cast<std::uint32_t>(i);
  do {
    out.push_back(s);
  } while (next_subset(s, n));
  return out;
}

SignedSubset wedge_delete(const Subset& s, std::size_t position) {
  if (position >= s.size()) throw std::invalid_argument("wedge_delete: position out of range");
  Subset out;
  out.reserve(s.size() - 1);
  for (std::size_t i = 0; i < s.size(); ++i)
    if (i != position) out.push_back(s[i]);
  return {position % 2 == 0 ? 1 : -1, std::move(out)};
}

std::optional<SignedSubset> wedge_insert(const Subset& s, std::uint32_t idx) {
  auto it = std::lower_bound(s.begin(), s.end(), idx);
  if (it != s.end() && *it == idx) return std::nullopt;
  const std::size_t below = static_cast<std::size_t>(it - s.begin());
  Subset out(s.begin(), it);
  out.push_back(idx);
  out.insert(out.end(), it, s.end());
  return SignedSubset{below % 2 == 0 ? 1 : -1, std::move(out)};
}

SubsetRanker::SubsetRanker(std::size_t n) : n_(n), table_(n + 1) {
  for (std::size_t m = 0; m <= n; ++m) {
    table_[m].assign(n + 2, 0);
    for (std::size_t j = 0; j <= n + 1; ++j) table_[m][j] = binomial(m, j);
  }
}

std::uint64_t SubsetRanker::rank(const Subset& s) const {
  std::uint64_t r = 0;
  for (std::size_t i = 0; i < s.size(); ++i) r += table_[s[i]][i + 1];
  return r;
}

std::uint64_t SubsetRanker::rank_without(const Subset& s, std::size_t position) const {
  std::uint64_t r = 0;
  for (std::size_t i = 0; i < position; ++i) r += table_[s[i]][i + 1];
  for (std::size_t i = position + 1; i < s.size(); ++i) r += table_[s[i]][i];
  return r;
}

}  // namespace syz
