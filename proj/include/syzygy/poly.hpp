#pragma once
// Dense univariate polynomials over F_p, coefficients in ascending degree.

#include <cstdint>
#include <vector>

#include "syzygy/field.hpp"

namespace syz::poly {

using Poly = Vec;

void trim(Poly& a);
/// -1 for the zero polynomial.
long degree(const Poly& a);

Poly add(const PrimeField& f, const Poly& a, const Poly& b);
Poly sub(const PrimeField& f, const Poly& a, const Poly& b);
Poly mul(const PrimeField& f, const Poly& a, const Poly& b);
Poly scale(const PrimeField& f, const Poly& a, Residue c);
/// Quotient and remainder; throws std::domain_error when dividing by zero.
void divmod(const PrimeField& f, const Poly& a, const Poly& b, Poly& q, Poly& r);
Poly mod(const PrimeField& f, const Poly& a, const Poly& b);
/// Monic gcd.
Poly gcd(const PrimeField& f, Poly a, Poly b);
Poly derivative(const PrimeField& f, const Poly& a);
Residue eval(const PrimeField& f, const Poly& a, Residue x);
Poly powmod(const PrimeField& f, Poly base, std::uint64_t e, const Poly& m);

bool is_squarefree(const PrimeField& f, const Poly& a);

/// Distinct roots in F_p, ascending. Deterministic (equal-degree splitting seeded from the input).
std::vector<Residue> roots(const PrimeField& f, const Poly& a);

/// Taylor shift: coefficients of a(x0 + t) in t.
Poly shift(const PrimeField& f, const Poly& a, Residue x0);

/// Power series truncated to n coefficients.
Poly mul_trunc(const PrimeField& f, const Poly& a, const Poly& b, std::size_t n);
/// a(s(t)) mod t^n.
Poly compose_trunc(const PrimeField& f, const Poly& a, const Poly& s, std::size_t n);

}  // namespace syz::poly
