#pragma once
// Arithmetic in the prime field F_p, 2 < p < 2^31.

#include <cstdint>
#include <string>
#include <vector>

namespace syz {

using Residue = std::uint32_t;
using Vec = std::vector<Residue>;

inline constexpr std::uint32_t kDefaultModulus = 31991;

bool is_prime(std::uint64_t n);

/// Resolves the working modulus: SYZYGY_MODULUS if set, otherwise 31991.
std::uint32_t default_modulus();

class PrimeField {
 public:
  /// Throws InputError unless p is an odd prime below 2^31.
  explicit PrimeField(std::uint32_t p = kDefaultModulus);

  std::uint32_t modulus() const { return p_; }

  Residue add(Residue a, Residue b) const {
    std::uint32_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  Residue sub(Residue a, Residue b) const { return a >= b ? a - b : a + p_ - b; }
  Residue neg(Residue a) const { return a == 0 ? 0 : p_ - a; }
  Residue mul(Residue a, Residue b) const {
    return static_cast<Residue>(static_cast<std::uint64_t>(a) * b % p_);
  }
  /// Fused a + b*c.
  Residue mul_add(Residue a, Residue b, Residue c) const {
    return static_cast<Residue>((a + static_cast<std::uint64_t>(b) * c) % p_);
  }
  Residue pow(Residue a, std::uint64_t e) const;
  /// Throws std::domain_error on zero.
  Residue inv(Residue a) const;
  Residue from_int(std::int64_t v) const {
    std::int64_t r = v % static_cast<std::int64_t>(p_);
    return static_cast<Residue>(r < 0 ? r + p_ : r);
  }
  /// Symmetric representative in (-p/2, p/2], for readable output.
  std::int64_t to_signed(Residue a) const {
    return a > p_ / 2 ? static_cast<std::int64_t>(a) - p_ : static_cast<std::int64_t>(a);
  }
  bool is_square(Residue a) const;
  /// Some square root of a quadratic residue (Tonelli-Shanks); throws if none exists.
  Residue sqrt(Residue a) const;

  bool operator==(const PrimeField& o) const { return p_ == o.p_; }

 private:
  std::uint32_t p_;
};

}  // namespace syz
