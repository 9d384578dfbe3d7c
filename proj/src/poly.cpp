#include "syzygy/poly.hpp"

#include <algorithm>
#include <stdexcept>

#include "syzygy/rng.hpp"

namespace syz::poly {

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

long degree(const Poly& a) {
  for (std::size_t i = a.size(); i-- > 0;)
    if (a[i] != 0) return static_cast<long>(i);
  return -1;
}

Poly add(const PrimeField& f, const Poly& a, const Poly& b) {
  Poly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] = f.add(r[i], b[i]);
  trim(r);
  return r;
}

Poly sub(const PrimeField& f, const Poly& a, const Poly& b) {
  Poly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] = f.sub(r[i], b[i]);
  trim(r);
  return r;
}

Poly mul(const PrimeField& f, const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = f.mul_add(r[i + j], a[i], b[j]);
  }
  trim(r);
  return r;
}

Poly scale(const PrimeField& f, const Poly& a, Residue c) {
  Poly r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = f.mul(a[i], c);
  trim(r);
  return r;
}

void divmod(const PrimeField& f, const Poly& a, const Poly& b, Poly& q, Poly& r) {
  const long db = degree(b);
  if (db < 0) throw std::domain_error("polynomial division by zero");
  r = a;
  trim(r);
  const long da = degree(r);
  q.assign(da >= db ? static_cast<std::size_t>(da - db + 1) : 0, 0);
  const Residue lead_inv = f.inv(b[static_cast<std::size_t>(db)]);
  for (long i = da; i >= db; --i) {
    Residue c = f.mul(r[static_cast<std::size_t>(i)], lead_inv);
    if (c == 0) continue;
    q[static_cast<std::size_t>(i - db)] = c;
    for (long j = 0; j <= db; ++j) {
      auto& slot = r[static_cast<std::size_t>(i - db + j)];
      slot = f.sub(slot, f.mul(c, b[static_cast<std::size_t>(j)]));
    }
  }
  trim(q);
  trim(r);
}

Poly mod(const PrimeField& f, const Poly& a, const Poly& b) {
  Poly q, r;
  divmod(f, a, b, q, r);
  return r;
}

Poly gcd(const PrimeField& f, Poly a, Poly b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r = mod(f, a, b);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) a = scale(f, a, f.inv(a.back()));
  return a;
}

Poly derivative(const PrimeField& f, const Poly& a) {
  Poly r;
  for (std::size_t i = 1; i < a.size(); ++i) r.push_back(f.mul(a[i], f.from_int(static_cast<std::int64_t>(i))));
  trim(r);
  return r;
}

Residue eval(const PrimeField& f, const Poly& a, Residue x) {
  Residue acc = 0;
  for (std::size_t i = a.size(); i-- > 0;) acc = f.mul_add(a[i], acc, x);
  return acc;
}

Poly powmod(const PrimeField& f, Poly base, std::uint64_t e, const Poly& m) {
  Poly acc{1};
  base = mod(f, base, m);
  while (e > 0) {
    if (e & 1) acc = mod(f, mul(f, acc, base), m);
    base = mod(f, mul(f, base, base), m);
    e >>= 1;
  }
  return acc;
}

bool is_squarefree(const PrimeField& f, const Poly& a) {
  if (degree(a) <= 0) return true;
  return degree(gcd(f, a, derivative(f, a))) == 0;
}

namespace {

// g is monic, squarefree and splits into linear factors.
void split(const PrimeField& f, const Poly& g, Rng& rng, std::vector<Residue>& out) {
  const long d = degree(g);
  if (d <= 0) return;
  if (d == 1) {
    out.push_back(f.neg(g[0]));
    return;
  }
  for (;;) {
    Poly probe{rng.residue(f), 1};
    Poly h = powmod(f, probe, (f.modulus() - 1) / 2, g);
    h = sub(f, h, Poly{1});
    Poly factor = gcd(f, g, h);
    const long df = degree(factor);
    if (df > 0 && df < d) {
      Poly q, r;
      divmod(f, g, factor, q, r);
      split(f, factor, rng, out);
      split(f, q, rng, out);
      return;
    }
  }
}

}  // namespace

std::vector<Residue> roots(const PrimeField& f, const Poly& a) {
  Poly g = a;
  trim(g);
  if (degree(g) <= 0) return {};
  std::vector<Residue> out;
  if (g[0] == 0) {
    out.push_back(0);
    std::size_t k = 0;
    while (g[k] == 0) ++k;
    g.erase(g.begin(), g.begin() + static_cast<long>(k));
  }
  // Product of the distinct linear factors: gcd with x^p - x.
  Poly xp = powmod(f, Poly{0, 1}, f.modulus(), g);
  Poly lin = gcd(f, g, sub(f, xp, Poly{0, 1}));
  std::uint64_t seed = 0x5eed;
  for (Residue c : g) seed = seed * 1000003 + c;
  Rng rng(seed);
  split(f, lin, rng, out);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

Poly shift(const PrimeField& f, const Poly& a, Residue x0) {
  // Horner in the ring F_p[t]: a(x0 + t).
  Poly acc;
  const Poly lin{x0, 1};
  for (std::size_t i = a.size(); i-- > 0;) acc = add(f, mul(f, acc, lin), Poly{a[i]});
  return acc;
}

Poly mul_trunc(const PrimeField& f, const Poly& a, const Poly& b, std::size_t n) {
  Poly r(n, 0);
  for (std::size_t i = 0; i < a.size() && i < n; ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size() && i + j < n; ++j) r[i + j] = f.mul_add(r[i + j], a[i], b[j]);
  }
  return r;
}

Poly compose_trunc(const PrimeField& f, const Poly& a, const Poly& s, std::size_t n) {
  Poly acc(n, 0);
  for (std::size_t i = a.size(); i-- > 0;) {
    acc = mul_trunc(f, acc, s, n);
    if (n > 0) acc[0] = f.add(acc[0], a[i]);
  }
  return acc;
}

}  // namespace syz::poly
