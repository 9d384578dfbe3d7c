#include "syzygy/models/scroll.hpp"

#include <numeric>
#include <tuple>

#include "syzygy/errors.hpp"
#include "syzygy/poly.hpp"

namespace syz {

namespace {

void compositions(int total, std::size_t parts, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (cur.size() + 1 == parts) {
    cur.push_back(total);
    out.push_back(cur);
    cur.pop_back();
    return;
  }
  for (int v = total; v >= 0; --v) {
    cur.push_back(v);
    compositions(total - v, parts, cur, out);
    cur.pop_back();
  }
}

std::vector<std::vector<int>> compositions(int total, std::size_t parts) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  if (total >= 0 && parts > 0) compositions(total, parts, cur, out);
  return out;
}

ScrollMonomial times(const ScrollMonomial& a, const ScrollMonomial& b) {
  ScrollMonomial m = a;
  for (std::size_t i = 0; i < m.x.size(); ++i) m.x[i] += b.x[i];
  m.t0 += b.t0;
  m.t1 += b.t1;
  return m;
}

DivisorClass minus(const DivisorClass& a, const DivisorClass& b) { return {a[0] - b[0], a[1] - b[1]}; }

}  // namespace

std::string class_label(const DivisorClass& c) {
  std::string s = "(";
  for (std::size_t i = 0; i < c.size(); ++i) s += (i ? "," : "") + std::to_string(c[i]);
  return s + ")";
}

ToricScroll::ToricScroll(std::vector<int> e) : e_(std::move(e)) {
  if (e_.empty()) throw InputError("scroll needs at least one invariant");
  for (int v : e_)
    if (v < 0) throw InputError("scrollar invariants must be non-negative");
}

int ToricScroll::degree() const { return std::accumulate(e_.begin(), e_.end(), 0); }

std::vector<ScrollMonomial> ToricScroll::monomials(int dH, int dR) const {
  std::vector<ScrollMonomial> out;
  for (const auto& m : compositions(dH, rank())) {
    int d = dR;
    for (std::size_t i = 0; i < rank(); ++i) d += m[i] * e_[i];
    for (int j1 = 0; j1 <= d; ++j1) out.push_back({m, d - j1, j1});
  }
  return out;
}

std::size_t ToricScroll::h0(int dH, int dR) const { return cohomology(dH, dR)[0]; }

std::vector<std::size_t> ToricScroll::cohomology(int dH, int dR) const {
  const int r = static_cast<int>(rank());
  std::vector<std::size_t> h(rank() + 1, 0);
  if (dH >= 0) {
    for (const auto& m : compositions(dH, rank())) {
      long d = dR;
      for (std::size_t i = 0; i < rank(); ++i) d += static_cast<long>(m[i]) * e_[i];
      if (d >= 0) h[0] += static_cast<std::size_t>(d + 1);
      if (d <= -2) h[1] += static_cast<std::size_t>(-d - 1);
    }
  } else if (dH <= -r) {
    const std::vector<std::size_t> dual = cohomology(-r - dH, degree() - 2 - dR);
    for (int i = 0; i <= r; ++i) h[static_cast<std::size_t>(i)] = dual[static_cast<std::size_t>(r - i)];
  }
  return h;
}

long ToricScroll::intersect(const std::vector<DivisorClass>& classes) const {
  if (classes.size() != rank()) throw std::invalid_argument("intersection needs one class per dimension");
  long prod = 1;
  for (const auto& c : classes) prod *= c[0];
  long total = prod * degree();
  for (std::size_t j = 0; j < classes.size(); ++j) {
    long rest = classes[j][1];
    for (std::size_t i = 0; i < classes.size(); ++i)
      if (i != j) rest *= classes[i][0];
    total += rest;
  }
  return total;
}

DivisorClass ToricScroll::canonical() const { return {-static_cast<int>(rank()), degree() - 2}; }

std::string ToricScroll::label(const ScrollMonomial& m) const {
  std::string s;
  auto put = [&](const std::string& var, int e) {
    if (e == 0) return;
    if (!s.empty()) s += "*";
    s += var;
    if (e > 1) s += "^" + std::to_string(e);
  };
  for (std::size_t i = 0; i < m.x.size(); ++i) put(rank() == 1 ? "x" : "x" + std::to_string(i + 1), m.x[i]);
  put("t0", m.t0);
  put("t1", m.t1);
  return s.empty() ? "1" : s;
}

ScrollCurveModel::ScrollCurveModel(const PrimeField& f, ToricScroll scroll, std::vector<Equation> equations)
    : field_(f), scroll_(std::move(scroll)), equations_(std::move(equations)) {
  if (!equations_.empty() && equations_.size() + 1 > scroll_.rank())
    throw InputError("too many equations for a curve in this scroll");
  for (const auto& eq : equations_) {
    if (eq.cls.size() != 2) throw InputError("scroll classes are (dH, dR)");
    if (eq.coeffs.size() != scroll_.monomials(eq.cls[0], eq.cls[1]).size())
      throw InputError("equation coefficients do not match the monomials of class " + class_label(eq.cls));
  }
  if (dimension() == 1) {
    const long dK = class_degree(canonical_class());
    if (dK % 2 != 0) throw ModelError("odd canonical degree; the classes do not define a curve");
    genus_ = static_cast<int>(dK / 2 + 1);
  }
  descriptor_ = {{"type", "scroll"}, {"e", scroll_.e()}, {"p", field_.modulus()}};
}

std::shared_ptr<ScrollCurveModel> ScrollCurveModel::hirzebruch(const PrimeField& f, int e, int k, int b, std::uint64_t seed) {
  if (e < 0 || k < 2) throw InputError("hirzebruch curves need e >= 0 and k >= 2");
  ToricScroll X({0, e});
  const DivisorClass Q = hirzebruch_class(e, k, b);
  if (Q[1] < 0) throw InputError("class is not base-point free on F_e");
  Rng rng(seed);
  std::string diagnostics;
  for (int attempt = 0; attempt < 20; ++attempt) {
    Vec coeffs(X.monomials(Q[0], Q[1]).size());
    for (Residue& c : coeffs) c = rng.nonzero(f);
    auto model = std::make_shared<ScrollCurveModel>(f, X, std::vector<Equation>{{Q, coeffs}});
    model->set_descriptor({{"type", "hirzebruch"}, {"e", e}, {"class", {k, b}}, {"seed", seed}, {"p", f.modulus()}});
    if (model->genus() <= 0) return model;
    try {
      const std::size_t hk = model->ambient_dim(model->canonical_class());
      const std::size_t ha = model->ambient_dim({0, 1});
      if (hk == static_cast<std::size_t>(model->genus()) && ha == 2) return model;
      diagnostics = "h0(K) = " + std::to_string(hk) + ", h0(A) = " + std::to_string(ha);
    } catch (const ModelError& err) {
      diagnostics = err.what();
    }
  }
  throw ModelError("no valid member of class (" + std::to_string(k) + "," + std::to_string(b) + ") on F_" +
                   std::to_string(e) + ": " + diagnostics);
}

std::shared_ptr<ScrollCurveModel> ScrollCurveModel::complete_intersection(const PrimeField& f, std::vector<int> e,
                                                                          std::vector<DivisorClass> classes,
                                                                          std::uint64_t seed) {
  ToricScroll X(e);
  Rng rng(seed);
  std::vector<Equation> eqs;
  for (const auto& c : classes) {
    if (c.size() != 2) throw InputError("scroll classes are (dH, dR)");
    Vec coeffs(X.monomials(c[0], c[1]).size());
    for (Residue& v : coeffs) v = rng.nonzero(f);
    eqs.push_back({c, std::move(coeffs)});
  }
  auto model = std::make_shared<ScrollCurveModel>(f, X, std::move(eqs));
  model->set_descriptor({{"type", "scroll_curve"}, {"e", e}, {"classes", classes}, {"seed", seed}, {"p", f.modulus()}});
  if (model->dimension() == 1 && model->genus() > 0 &&
      model->ambient_dim(model->canonical_class()) != static_cast<std::size_t>(model->genus()))
    throw ModelError("complete intersection fails h0(K) = g");
  return model;
}

std::shared_ptr<ScrollCurveModel> ScrollCurveModel::scroll(const PrimeField& f, std::vector<int> e) {
  return std::make_shared<ScrollCurveModel>(f, ToricScroll(std::move(e)), std::vector<Equation>{});
}

long ScrollCurveModel::class_degree(const DivisorClass& cls) const {
  if (cls.size() != 2) throw InputError("scroll classes are (dH, dR)");
  std::vector<DivisorClass> classes(static_cast<std::size_t>(dimension()), cls);
  for (const auto& eq : equations_) classes.push_back(eq.cls);
  return scroll_.intersect(classes);
}

DivisorClass ScrollCurveModel::canonical_class() const {
  DivisorClass k = scroll_.canonical();
  for (const auto& eq : equations_) k = {k[0] + eq.cls[0], k[1] + eq.cls[1]};
  return k;
}

void ScrollCurveModel::check_restriction(const DivisorClass& cls) const {
  const std::size_t c = equations_.size();
  for (std::size_t mask = 1; mask < (std::size_t{1} << c); ++mask) {
    DivisorClass d = cls;
    std::size_t size = 0;
    for (std::size_t i = 0; i < c; ++i)
      if (mask >> i & 1) {
        d = minus(d, equations_[i].cls);
        ++size;
      }
    const auto h = scroll_.cohomology(d[0], d[1]);
    auto fail = [&](std::size_t i) {
      throw ModelError("class " + class_label(cls) + " does not restrict exactly: h^" + std::to_string(i) + "(X, " +
                       class_label(d) + ") = " + std::to_string(h[i]));
    };
    if (h[size] != 0) fail(size);
    if (size >= 2 && h[size - 1] != 0) fail(size - 1);
  }
}

const ScrollCurveModel::ClassData& ScrollCurveModel::data(const DivisorClass& cls) const {
  if (cls.size() != 2) throw InputError("scroll classes are (dH, dR)");
  std::lock_guard lock(mutex_);
  auto it = cache_.find(cls);
  if (it != cache_.end()) return *it->second;
  auto d = std::make_unique<ClassData>();
  d->monomials = scroll_.monomials(cls[0], cls[1]);
  const std::size_t n = d->monomials.size();
  for (std::size_t i = 0; i < n; ++i) d->index.emplace(d->monomials[i], i);
  d->relations = std::make_unique<Echelon>(field_, n);
  if (dimension() == 1 && class_degree(cls) < 0) return *cache_.emplace(cls, std::move(d)).first->second;
  if (!equations_.empty()) check_restriction(cls);
  for (const auto& eq : equations_) {
    const auto terms = scroll_.monomials(eq.cls[0], eq.cls[1]);
    const DivisorClass rest = minus(cls, eq.cls);
    for (const auto& mu : scroll_.monomials(rest[0], rest[1])) {
      Vec v(n, 0);
      for (std::size_t t = 0; t < terms.size(); ++t) {
        if (eq.coeffs[t] == 0) continue;
        const std::size_t idx = d->index.at(times(mu, terms[t]));
        v[idx] = field_.add(v[idx], eq.coeffs[t]);
      }
      d->relations->insert(std::move(v));
    }
  }
  std::vector<char> pivot(n, 0);
  for (std::size_t c : d->relations->pivots()) pivot[c] = 1;
  for (std::size_t i = 0; i < n; ++i)
    if (!pivot[i]) d->free.push_back(i);
  return *cache_.emplace(cls, std::move(d)).first->second;
}

std::size_t ScrollCurveModel::ambient_dim(const DivisorClass& cls) const { return data(cls).free.size(); }

std::string ScrollCurveModel::ambient_label(const DivisorClass& cls, std::size_t i) const {
  const ClassData& d = data(cls);
  return scroll_.label(d.monomials.at(d.free.at(i)));
}

const std::vector<ScrollMonomial>& ScrollCurveModel::scroll_monomials(const DivisorClass& cls) const {
  return data(cls).monomials;
}

Vec ScrollCurveModel::reduce(const DivisorClass& cls, Vec full) const {
  const ClassData& d = data(cls);
  if (full.size() != d.monomials.size()) throw ModelError("vector size does not match class " + class_label(cls));
  d.relations->reduce(full);
  Vec out(d.free.size());
  for (std::size_t j = 0; j < d.free.size(); ++j) out[j] = full[d.free[j]];
  return out;
}

Vec ScrollCurveModel::ambient_multiply(const DivisorClass& c1, const Vec& a, const DivisorClass& c2, const Vec& b) const {
  const ClassData& d1 = data(c1);
  const ClassData& d2 = data(c2);
  const DivisorClass target{c1[0] + c2[0], c1[1] + c2[1]};
  const ClassData& dt = data(target);
  if (a.size() != d1.free.size() || b.size() != d2.free.size()) throw ModelError("section size does not match its class");
  Vec full(dt.monomials.size(), 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    const ScrollMonomial& mi = d1.monomials[d1.free[i]];
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (b[j] == 0) continue;
      const std::size_t idx = dt.index.at(times(mi, d2.monomials[d2.free[j]]));
      full[idx] = field_.mul_add(full[idx], a[i], b[j]);
    }
  }
  dt.relations->reduce(full);
  Vec out(dt.free.size());
  for (std::size_t j = 0; j < dt.free.size(); ++j) out[j] = full[dt.free[j]];
  return out;
}

std::vector<std::tuple<Residue, int, int>> ScrollCurveModel::chart_terms() const {
  if (!supports_points()) throw ModelError("points are only modeled on curves in surface scrolls");
  const auto& eq = equations_[0];
  const auto monos = scroll_.monomials(eq.cls[0], eq.cls[1]);
  std::vector<std::tuple<Residue, int, int>> terms;
  for (std::size_t i = 0; i < monos.size(); ++i)
    if (eq.coeffs[i] != 0) terms.emplace_back(eq.coeffs[i], monos[i].t1, monos[i].x[0]);
  return terms;
}

bool ScrollCurveModel::on_curve(const CurvePoint& p) const {
  if (!supports_points() || p.x >= field_.modulus() || p.y >= field_.modulus()) return false;
  Residue acc = 0;
  for (auto [c, ju, jw] : chart_terms())
    acc = field_.mul_add(acc, c, field_.mul(field_.pow(p.x, static_cast<std::uint64_t>(ju)), field_.pow(p.y, static_cast<std::uint64_t>(jw))));
  return acc == 0;
}

CurvePoint ScrollCurveModel::random_point(Rng& rng) const {
  const auto terms = chart_terms();
  for (int attempt = 0; attempt < 10000; ++attempt) {
    const Residue u = rng.residue(field_);
    poly::Poly g;
    for (auto [c, ju, jw] : terms) {
      if (g.size() <= static_cast<std::size_t>(jw)) g.resize(static_cast<std::size_t>(jw) + 1, 0);
      g[static_cast<std::size_t>(jw)] = field_.mul_add(g[static_cast<std::size_t>(jw)], c, field_.pow(u, static_cast<std::uint64_t>(ju)));
    }
    const poly::Poly dg = poly::derivative(field_, g);
    std::vector<Residue> good;
    for (Residue w : poly::roots(field_, g))
      if (poly::eval(field_, dg, w) != 0) good.push_back(w);
    if (good.empty()) continue;
    return {u, good[rng.below(good.size())]};
  }
  throw ModelError("could not find a smooth rational point on the curve");
}

std::vector<Vec> ScrollCurveModel::jets(const DivisorClass& cls, const CurvePoint& p, int first, int count) const {
  if (!on_curve(p)) throw InputError("point is not on the curve");
  const auto terms = chart_terms();
  const std::size_t n = static_cast<std::size_t>(first + count);
  const ClassData& d = data(cls);
  int max_u = 0, max_w = 0;
  for (auto [c, ju, jw] : terms) max_u = std::max(max_u, ju), max_w = std::max(max_w, jw);
  for (const auto& m : d.monomials) max_u = std::max(max_u, m.t1), max_w = std::max(max_w, m.x[0]);

  std::vector<poly::Poly> upow{poly::Poly{1}};
  for (int i = 1; i <= max_u; ++i) upow.push_back(poly::mul_trunc(field_, upow.back(), {p.x, 1}, n));
  Residue gw = 0;
  for (auto [c, ju, jw] : terms)
    if (jw > 0)
      gw = field_.mul_add(gw, field_.mul(c, field_.from_int(jw)),
                          field_.mul(field_.pow(p.x, static_cast<std::uint64_t>(ju)), field_.pow(p.y, static_cast<std::uint64_t>(jw - 1))));
  if (gw == 0) throw ModelError("u is not a local parameter at this point");
  const Residue gw_inv = field_.inv(gw);

  poly::Poly w(n, 0);
  if (n > 0) w[0] = p.y;
  auto powers = [&](const poly::Poly& s) {
    std::vector<poly::Poly> pw{poly::Poly{1}};
    for (int i = 1; i <= max_w; ++i) pw.push_back(poly::mul_trunc(field_, pw.back(), s, n));
    return pw;
  };
  for (std::size_t it = 0; it < n; ++it) {
    const auto wpow = powers(w);
    Vec g(n, 0);
    for (auto [c, ju, jw] : terms) {
      const poly::Poly term = poly::mul_trunc(field_, upow[static_cast<std::size_t>(ju)], wpow[static_cast<std::size_t>(jw)], n);
      for (std::size_t k = 0; k < term.size(); ++k) g[k] = field_.mul_add(g[k], c, term[k]);
    }
    for (std::size_t k = 0; k < n; ++k) w[k] = field_.sub(w[k], field_.mul(g[k], gw_inv));
  }
  const auto wpow = powers(w);
  std::vector<Vec> out(static_cast<std::size_t>(count), Vec(d.free.size(), 0));
  for (std::size_t j = 0; j < d.free.size(); ++j) {
    const ScrollMonomial& m = d.monomials[d.free[j]];
    const poly::Poly s = poly::mul_trunc(field_, upow[static_cast<std::size_t>(m.t1)], wpow[static_cast<std::size_t>(m.x[0])], n);
    for (int o = 0; o < count; ++o) out[static_cast<std::size_t>(o)][j] = s[static_cast<std::size_t>(first + o)];
  }
  return out;
}

}  // namespace syz
