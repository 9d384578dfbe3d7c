#include "syzygy/field.hpp"

#include <cstdlib>
#include <stdexcept>

#include "syzygy/errors.hpp"

namespace syz {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::uint32_t default_modulus() {
  if (const char* env = std::getenv("SYZYGY_MODULUS"); env != nullptr && *env != '\0') {
    char* end = nullptr;
    unsigned long v = std::strtoul(env, &end, 10);
    if (end == env || *end != '\0') throw InputError("SYZYGY_MODULUS is not an integer: " + std::string(env));
    return static_cast<std::uint32_t>(v);
  }
  return kDefaultModulus;
}

PrimeField::PrimeField(std::uint32_t p) : p_(p) {
  if (p <= 2 || p >= (1u << 31) || !is_prime(p))
    throw InputError("modulus must be an odd prime below 2^31, got " + std::to_string(p));
}

Residue PrimeField::pow(Residue a, std::uint64_t e) const {
  std::uint64_t base = a % p_, acc = 1;
  while (e > 0) {
    if (e & 1) acc = acc * base % p_;
    base = base * base % p_;
    e >>= 1;
  }
  return static_cast<Residue>(acc);
}

Residue PrimeField::inv(Residue a) const {
  if (a % p_ == 0) throw std::domain_error("inverse of zero in F_" + std::to_string(p_));
  return pow(a, p_ - 2);
}

bool PrimeField::is_square(Residue a) const { return a == 0 || pow(a, (p_ - 1) / 2) == 1; }

Residue PrimeField::sqrt(Residue a) const {
  a %= p_;
  if (a == 0) return 0;
  if (!is_square(a)) throw std::domain_error("not a quadratic residue");
  if (p_ % 4 == 3) return pow(a, (p_ + 1) / 4);
  // Tonelli-Shanks: p - 1 = q * 2^s with q odd.
  std::uint32_t q = p_ - 1, s = 0;
  while ((q & 1) == 0) {
    q >>= 1;
    ++s;
  }
  Residue z = 2;
  while (is_square(z)) ++z;
  Residue m = s, c = pow(z, q), t = pow(a, q), r = pow(a, (q + 1) / 2);
  while (t != 1) {
    Residue i = 0, t2 = t;
    while (t2 != 1) {
      t2 = mul(t2, t2);
      ++i;
    }
    Residue b = c;
    for (Residue j = 0; j + 1 < m - i; ++j) b = mul(b, b);
    m = i;
    c = mul(b, b);
    t = mul(t, c);
    r = mul(r, b);
  }
  return r;
}

}  // namespace syz
