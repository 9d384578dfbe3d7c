#include "syzygy/models/hyperelliptic.hpp"

#include "syzygy/errors.hpp"

namespace syz {

HyperellipticModel::HyperellipticModel(const PrimeField& f, poly::Poly coeffs) : field_(f), f_(std::move(coeffs)) {
  for (Residue& c : f_) c %= field_.modulus();
  poly::trim(f_);
  const long d = poly::degree(f_);
  if (d < 1 || d % 2 == 0) throw InputError("hyperelliptic f must have odd degree 2h+1");
  if (!poly::is_squarefree(field_, f_)) throw InputError("hyperelliptic f is not squarefree over F_p");
  h_ = static_cast<int>((d - 1) / 2);
}

HyperellipticModel HyperellipticModel::random(const PrimeField& f, int h, Rng& rng, bool with_root) {
  if (h < 0) throw InputError("genus must be non-negative");
  for (;;) {
    const std::size_t d = with_root ? 2 * static_cast<std::size_t>(h) : 2 * static_cast<std::size_t>(h) + 1;
    poly::Poly c(d + 1);
    for (std::size_t i = 0; i < d; ++i) c[i] = rng.residue(f);
    c[d] = 1;
    if (with_root) c = poly::mul(f, c, poly::Poly{f.neg(rng.residue(f)), 1});
    if (poly::is_squarefree(f, c)) return HyperellipticModel(f, c);
  }
}

long HyperellipticModel::class_degree(const DivisorClass& cls) const {
  if (cls.size() != 1) throw InputError("hyperelliptic classes have one entry");
  return cls[0];
}

std::pair<std::size_t, std::size_t> HyperellipticModel::split_dims(long m) const {
  if (m < 0) return {0, 0};
  const std::size_t nx = static_cast<std::size_t>(m / 2 + 1);
  const long odd = m - (2 * h_ + 1);
  const std::size_t ny = odd < 0 ? 0 : static_cast<std::size_t>(odd / 2 + 1);
  return {nx, ny};
}

std::size_t HyperellipticModel::ambient_dim(const DivisorClass& cls) const {
  auto [nx, ny] = split_dims(class_degree(cls));
  return nx + ny;
}

std::string HyperellipticModel::ambient_label(const DivisorClass& cls, std::size_t i) const {
  auto [nx, ny] = split_dims(class_degree(cls));
  auto xpow = [](std::size_t e) { return e == 0 ? std::string() : e == 1 ? std::string("x") : "x^" + std::to_string(e); };
  if (i < nx) return i == 0 ? "1" : xpow(i);
  if (i < nx + ny) {
    const std::size_t j = i - nx;
    return j == 0 ? "y" : xpow(j) + "*y";
  }
  throw std::out_of_range("ambient index");
}

Vec HyperellipticModel::ambient_multiply(const DivisorClass& c1, const Vec& a, const DivisorClass& c2, const Vec& b) const {
  auto [ax, ay] = split_dims(class_degree(c1));
  auto [bx, by] = split_dims(class_degree(c2));
  auto [tx, ty] = split_dims(class_degree(c1) + class_degree(c2));
  if (a.size() != ax + ay || b.size() != bx + by) throw ModelError("section size does not match its class");
  const poly::Poly a0(a.begin(), a.begin() + static_cast<long>(ax)), a1(a.begin() + static_cast<long>(ax), a.end());
  const poly::Poly b0(b.begin(), b.begin() + static_cast<long>(bx)), b1(b.begin() + static_cast<long>(bx), b.end());
  poly::Poly p0 = poly::add(field_, poly::mul(field_, a0, b0), poly::mul(field_, poly::mul(field_, a1, b1), f_));
  poly::Poly p1 = poly::add(field_, poly::mul(field_, a0, b1), poly::mul(field_, a1, b0));
  if (static_cast<std::size_t>(poly::degree(p0) + 1) > tx || static_cast<std::size_t>(poly::degree(p1) + 1) > ty)
    throw ModelError("hyperelliptic product exceeds its target pole order");
  Vec out(tx + ty, 0);
  std::copy(p0.begin(), p0.end(), out.begin());
  std::copy(p1.begin(), p1.end(), out.begin() + static_cast<long>(tx));
  return out;
}

bool HyperellipticModel::on_curve(const CurvePoint& p) const {
  return p.x < field_.modulus() && p.y < field_.modulus() && field_.mul(p.y, p.y) == poly::eval(field_, f_, p.x);
}

CurvePoint HyperellipticModel::random_point(Rng& rng) const {
  for (;;) {
    const Residue x = rng.residue(field_);
    const Residue v = poly::eval(field_, f_, x);
    if (v == 0 || !field_.is_square(v)) continue;
    Residue y = field_.sqrt(v);
    if (rng.below(2)) y = field_.neg(y);
    return {x, y};
  }
}

std::vector<Vec> HyperellipticModel::jets(const DivisorClass& cls, const CurvePoint& p, int first, int count) const {
  if (!on_curve(p)) throw InputError("point is not on the hyperelliptic curve");
  const std::size_t n = static_cast<std::size_t>(first + count);
  poly::Poly g = poly::shift(field_, f_, p.x);
  g.resize(std::max(g.size(), n + 1), 0);
  poly::Poly X, Y;
  if (p.y != 0) {
    X = {p.x, 1};
    Y.assign(n, 0);
    if (n > 0) Y[0] = p.y;
    const Residue inv2y = field_.inv(field_.add(p.y, p.y));
    for (std::size_t k = 1; k < n; ++k) {
      Residue acc = g[k];
      for (std::size_t i = 1; i < k; ++i) acc = field_.sub(acc, field_.mul(Y[i], Y[k - i]));
      Y[k] = field_.mul(acc, inv2y);
    }
  } else {
    // f(x0 + xi) = t^2 with t = y; xi = (t^2 - higher(xi)) / f'(x0).
    const Residue inv_c1 = field_.inv(g[1]);
    poly::Poly higher = g;
    higher[0] = higher[1] = 0;
    poly::Poly t2(n, 0);
    if (n > 2) t2[2] = 1;
    poly::Poly xi(n, 0);
    for (std::size_t it = 0; it < n; ++it) {
      poly::Poly rhs = poly::compose_trunc(field_, higher, xi, n);
      for (std::size_t k = 0; k < n; ++k) xi[k] = field_.mul(field_.sub(t2[k], rhs[k]), inv_c1);
    }
    X = xi;
    if (!X.empty()) X[0] = field_.add(X[0], p.x);
    else X = {p.x};
    Y = {0, 1};
  }
  auto [nx, ny] = split_dims(class_degree(cls));
  std::vector<poly::Poly> xpow{poly::Poly{1}};
  for (std::size_t i = 1; i < std::max(nx, ny); ++i) xpow.push_back(poly::mul_trunc(field_, xpow.back(), X, n));
  std::vector<poly::Poly> mono;
  for (std::size_t i = 0; i < nx; ++i) mono.push_back(xpow[i]);
  for (std::size_t j = 0; j < ny; ++j) mono.push_back(poly::mul_trunc(field_, xpow[j], Y, n));
  std::vector<Vec> out(static_cast<std::size_t>(count), Vec(nx + ny, 0));
  for (int o = 0; o < count; ++o)
    for (std::size_t i = 0; i < mono.size(); ++i) {
      const std::size_t k = static_cast<std::size_t>(first + o);
      out[o][i] = k < mono[i].size() ? mono[i][k] : 0;
    }
  return out;
}

nlohmann::json HyperellipticModel::describe() const {
  return {{"type", "hyperelliptic"}, {"h", h_}, {"f", f_}, {"p", field_.modulus()}};
}

std::vector<CurvePoint> HyperellipticModel::weierstrass_points() const {
  std::vector<CurvePoint> out;
  for (Residue r : poly::roots(field_, f_)) out.push_back({r, 0});
  return out;
}

}  // namespace syz
