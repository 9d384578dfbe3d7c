#include "syzygy/strand.hpp"

#include "syzygy/errors.hpp"

namespace syz {

namespace {

void check_table(const std::vector<Vec>& table, std::size_t count, std::size_t width, const PrimeField& f,
                 const char* name) {
  if (table.size() != count)
    throw InputError(std::string(name) + ": expected " + std::to_string(count) + " products, got " +
                     std::to_string(table.size()));
  for (const Vec& v : table) {
    if (v.size() != width)
      throw InputError(std::string(name) + ": product of length " + std::to_string(v.size()) + ", expected " +
                       std::to_string(width));
    for (Residue x : v)
      if (x >= f.modulus()) throw InputError(std::string(name) + ": unreduced coefficient");
  }
}

// Linear combination sum_t coeffs[t] * table[v * stride + t].
Vec combine(const GradedStrand& s, std::size_t v, const Vec& coeffs) {
  Vec out(s.r3(), 0);
  for (std::size_t t = 0; t < coeffs.size(); ++t) {
    if (coeffs[t] == 0) continue;
    const Vec& prod = s.cur_product(v, t);
    for (std::size_t u = 0; u < out.size(); ++u) out[u] = s.field.mul_add(out[u], coeffs[t], prod[u]);
  }
  return out;
}

}  // namespace

void GradedStrand::validate() const {
  check_table(mult_prev, c() * r1(), r2(), field, "mult_prev");
  check_table(mult_cur, c() * r2(), r3(), field, "mult_cur");
}

bool GradedStrand::is_commutative() const {
  for (std::size_t v = 0; v < c(); ++v)
    for (std::size_t w = v + 1; w < c(); ++w)
      for (std::size_t s = 0; s < r1(); ++s)
        if (combine(*this, v, prev_product(w, s)) != combine(*this, w, prev_product(v, s))) return false;
  return true;
}

}  // namespace syz
