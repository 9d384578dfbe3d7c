#include "syzygy/eagon_northcott.hpp"

#include <algorithm>

#include "syzygy/elimination.hpp"
#include "syzygy/errors.hpp"
#include "syzygy/exterior.hpp"
#include "syzygy/poly.hpp"

namespace syz {

namespace {

Residue det(const PrimeField& f, std::vector<Vec> m) {
  const std::size_t n = m.size();
  Residue d = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && m[piv][c] == 0) ++piv;
    if (piv == n) return 0;
    if (piv != c) {
      std::swap(m[piv], m[c]);
      d = f.neg(d);
    }
    d = f.mul(d, m[c][c]);
    const Residue inv = f.inv(m[c][c]);
    for (std::size_t r = c + 1; r < n; ++r) {
      const Residue factor = f.mul(m[r][c], inv);
      if (factor == 0) continue;
      for (std::size_t k = c; k < n; ++k) m[r][k] = f.sub(m[r][k], f.mul(factor, m[c][k]));
    }
  }
  return d;
}

/// Coordinates of v_1 ^ ... ^ v_k over the colex-ordered k-subsets of the ambient basis.
Vec wedge(const PrimeField& f, const std::vector<Vec>& vs, std::size_t dim) {
  const std::size_t k = vs.size();
  const auto subsets = all_subsets(dim, k);
  Vec out(subsets.size());
  std::vector<Vec> m(k, Vec(k));
  for (std::size_t t = 0; t < subsets.size(); ++t) {
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) m[i][j] = vs[i][subsets[t][j]];
    out[t] = det(f, m);
  }
  return out;
}

void add_tensor(const PrimeField& f, Vec& acc, const Vec& w, const Vec& s, Residue scale) {
  const std::size_t b = s.size();
  for (std::size_t t = 0; t < w.size(); ++t) {
    if (w[t] == 0) continue;
    const Residue ws = f.mul(w[t], scale);
    for (std::size_t j = 0; j < b; ++j) acc[t * b + j] = f.mul_add(acc[t * b + j], ws, s[j]);
  }
}

std::vector<Vec> columns(const FieldMatrix& m) {
  std::vector<Vec> cols(m.cols(), Vec(m.rows(), 0));
  if (m.is_sparse()) {
    for (const Triple& t : m.triples()) cols[t.col][t.row] = t.value;
  } else {
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (std::size_t j = 0; j < m.cols(); ++j) cols[j][i] = m.at(i, j);
  }
  return cols;
}

/// rank([m | extra]) - rank(m).
std::size_t rank_modulo(const FieldMatrix& m, const std::vector<Vec>& extra) {
  std::vector<Triple> entries = m.is_sparse() ? m.triples() : m.to_sparse().triples();
  for (std::size_t j = 0; j < extra.size(); ++j)
    for (std::size_t i = 0; i < extra[j].size(); ++i)
      if (extra[j][i] != 0)
        entries.push_back({static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(m.cols() + j), extra[j][i]});
  const FieldMatrix combined = FieldMatrix::sparse(m.field(), m.rows(), m.cols() + extra.size(), std::move(entries));
  return rank(combined) - rank(m);
}

bool is_zero_vec(const Vec& v) {
  return std::all_of(v.begin(), v.end(), [](Residue x) { return x == 0; });
}

DivisorClass class_minus(const DivisorClass& a, const DivisorClass& b) {
  DivisorClass r = a;
  for (std::size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
  return r;
}

std::shared_ptr<const SectionModel> borrow(const SectionModel& m) {
  return std::shared_ptr<const SectionModel>(std::shared_ptr<void>(), &m);
}

/// Every t-coefficient of S(t) for sigma -> sigma + t sigma'.
std::vector<Vec> polarized(const CurveRing& ring, const DivisorClass& pencil, const std::vector<Vec>& tau, const Vec& sigma,
                           const Vec& sigma_prime) {
  const SectionModel& model = ring.model();
  const PrimeField& f = model.field();
  const SectionSpace& V = ring.v_space();
  const SectionSpace T(model, Bundle::of_class(class_minus(ring.L().cls, pencil)));
  const SectionSpace A(model, Bundle::of_class(pencil));
  if (tau.size() < 2) throw InputError("the syzygy needs h0(L - A) >= 2");
  if (A.dim() != 2 || sigma.size() != 2 || sigma_prime.size() != 2)
    throw InputError("the pencil must have exactly two sections");
  if (f.sub(f.mul(sigma[0], sigma_prime[1]), f.mul(sigma[1], sigma_prime[0])) == 0)
    throw InputError("sigma and sigma' are linearly dependent");
  const std::size_t n = tau.size() - 1, g = V.dim();
  std::vector<Vec> u, w;
  for (const Vec& t : tau) {
    u.push_back(multiply_sections(model, A, sigma, T, t, V));
    w.push_back(multiply_sections(model, A, sigma_prime, T, t, V));
  }
  const std::size_t chain = static_cast<std::size_t>(binomial(g, n)) * g;
  // Values at t = 1 .. n+1, then Lagrange interpolation to coefficients.
  std::vector<Vec> values;
  for (std::size_t ti = 1; ti <= n + 1; ++ti) {
    const Residue t = f.from_int(static_cast<std::int64_t>(ti));
    std::vector<Vec> ut(u.size(), Vec(g));
    for (std::size_t j = 0; j <= n; ++j)
      for (std::size_t i = 0; i < g; ++i) ut[j][i] = f.mul_add(u[j][i], t, w[j][i]);
    Vec S(chain, 0);
    for (std::size_t j = 1; j <= n; ++j) {
      std::vector<Vec> factors;
      for (std::size_t i = 1; i <= n; ++i)
        if (i != j) factors.push_back(ut[i]);
      const Residue sign = j % 2 ? f.neg(1) : 1;
      factors.push_back(ut[0]);
      add_tensor(f, S, wedge(f, factors, g), w[j], sign);
      factors.back() = w[0];
      add_tensor(f, S, wedge(f, factors, g), ut[j], f.neg(sign));
    }
    values.push_back(std::move(S));
  }
  std::vector<Vec> coeffs(n + 1, Vec(chain, 0));
  for (std::size_t i = 0; i <= n; ++i) {
    poly::Poly basis{1};
    Residue denom = 1;
    const Residue ti = f.from_int(static_cast<std::int64_t>(i + 1));
    for (std::size_t k = 0; k <= n; ++k) {
      if (k == i) continue;
      const Residue tk = f.from_int(static_cast<std::int64_t>(k + 1));
      basis = poly::mul(f, basis, {f.neg(tk), 1});
      denom = f.mul(denom, f.sub(ti, tk));
    }
    basis = poly::scale(f, basis, f.inv(denom));
    for (std::size_t m = 0; m < basis.size(); ++m)
      for (std::size_t x = 0; x < chain; ++x) coeffs[m][x] = f.mul_add(coeffs[m][x], basis[m], values[i][x]);
  }
  if (!is_zero_vec(coeffs[n])) throw ModelError("polarized syzygy has a nonzero t^n coefficient");
  coeffs.pop_back();
  return coeffs;
}

SyzygyVector checked(const CurveRing& ring, std::size_t n, Vec coords, const FieldMatrix& d2) {
  if (!is_zero_vec(d2.apply(coords))) throw ModelError("Eagon-Northcott vector is not a cocycle: delta_2 does not vanish");
  return {n, ring.v_space().dim(), ring.v_space().dim(), std::move(coords)};
}

}  // namespace

std::size_t scroll_betti(std::size_t a, std::size_t p) { return p * static_cast<std::size_t>(binomial(a, p + 1)); }

nlohmann::json SyzygyVector::to_json() const {
  nlohmann::json out = nlohmann::json::array();
  for (std::size_t i = 0; i < coords.size(); ++i)
    if (coords[i] != 0) out.push_back({subset_unrank(i / b, p, c), i % b, coords[i]});
  return out;
}

ENSyzygySpec default_en_spec(const CurveRing& ring, const DivisorClass& pencil, std::size_t power) {
  const SectionSpace T(ring.model(), Bundle::of_class(class_minus(ring.L().cls, pencil)));
  ENSyzygySpec spec;
  for (std::size_t i = 0; i < T.dim(); ++i) {
    Vec v(T.dim(), 0);
    v[i] = 1;
    spec.tau.push_back(std::move(v));
  }
  spec.sigma = {1, 0};
  spec.sigma_prime = {0, 1};
  spec.power = power;
  return spec;
}

SyzygyVector en_syzygy(const CurveRing& ring, const DivisorClass& pencil, const ENSyzygySpec& spec) {
  auto all = polarized(ring, pencil, spec.tau, spec.sigma, spec.sigma_prime);
  if (spec.power >= all.size()) throw InputError("power exponent exceeds the symmetric power degree");
  const std::size_t n = spec.tau.size() - 1;
  return checked(ring, n, std::move(all[spec.power]), build_differential_out(ring.strand(1), n));
}

std::vector<SyzygyVector> en_syzygies(const CurveRing& ring, const DivisorClass& pencil) {
  const ENSyzygySpec spec = default_en_spec(ring, pencil, 0);
  const std::size_t n = spec.tau.size() - 1;
  const FieldMatrix d2 = build_differential_out(ring.strand(1), n);
  std::vector<SyzygyVector> out;
  for (Vec& v : polarized(ring, pencil, spec.tau, spec.sigma, spec.sigma_prime))
    out.push_back(checked(ring, n, std::move(v), d2));
  return out;
}

std::size_t en_span_rank(const GradedStrand& strand, const std::vector<SyzygyVector>& syz) {
  if (syz.empty()) return 0;
  std::vector<Vec> extra;
  for (const auto& s : syz) extra.push_back(s.coords);
  return rank_modulo(build_differential_in(strand, syz.front().p), extra);
}

ScrollRestriction restriction_scroll(const ScrollCurveModel& model) {
  const PrimeField& f = model.field();
  const auto& X = model.toric();
  const std::size_t c = model.equations().size();
  ScrollRestriction out;
  auto identity_on = [&](const DivisorClass& cls) {
    const auto& monos = model.scroll_monomials(cls);
    for (std::size_t i = 0; i < monos.size(); ++i) {
      Vec full(monos.size(), 0);
      full[i] = 1;
      out.phi.push_back(model.reduce(cls, std::move(full)));
    }
  };
  if (c == 0 || (X.rank() >= 3 && c + 1 == X.rank())) {
    if (c > 0 && model.canonical_class() != DivisorClass{1, 0})
      throw ModelError("complete intersection is not canonically embedded by H");
    out.invariants = X.e();
    out.scroll = ScrollCurveModel::scroll(f, X.e());
    identity_on({1, 0});
  } else if (X.rank() == 2 && c == 1) {
    const int k = model.equations()[0].cls[0];
    const DivisorClass K = model.canonical_class();
    if (k < 3 || K[0] != k - 2) throw ModelError("the pencil scroll needs a curve of degree >= 3 over P^1");
    for (int u = 0; u <= k - 2; ++u) {
      const int eu = K[1] + u * X.e()[0] + (k - 2 - u) * X.e()[1];
      if (eu < 0) throw ModelError("negative scrollar invariant; the canonical class is not ample on fibers");
      out.invariants.push_back(eu);
    }
    out.scroll = ScrollCurveModel::scroll(f, out.invariants);
    const auto& surface = model.scroll_monomials(K);
    std::map<ScrollMonomial, std::size_t> index;
    for (std::size_t i = 0; i < surface.size(); ++i) index.emplace(surface[i], i);
    for (const auto& m : out.scroll->toric().monomials(1, 0)) {
      const int u = static_cast<int>(std::find(m.x.begin(), m.x.end(), 1) - m.x.begin());
      const ScrollMonomial image{{u, k - 2 - u}, m.t0, m.t1};
      Vec full(surface.size(), 0);
      full[index.at(image)] = 1;
      out.phi.push_back(model.reduce(K, std::move(full)));
    }
  } else {
    throw ModelError("no pencil scroll for this model");
  }
  return out;
}

std::vector<int> scrollar_invariants(const SectionModel& model) {
  const auto A = model.pencil_class();
  if (!A) throw ModelError("model has no pencil");
  const DivisorClass K = model.canonical_class();
  std::vector<std::size_t> h;
  for (int j = 0;; ++j) {
    DivisorClass d = K;
    for (std::size_t i = 0; i < d.size(); ++i) d[i] -= j * (*A)[i];
    h.push_back(SectionSpace(model, Bundle::of_class(d)).dim());
    if (h.back() == 0) break;
    if (j > 4 * model.genus() + 4) throw ModelError("h0(K - jA) does not reach zero");
  }
  // #{e >= j} = h(j) - h(j+1).
  std::vector<int> out;
  for (std::size_t j = 0; j + 1 < h.size(); ++j) {
    const std::size_t at_least = h[j] - h[j + 1];
    const std::size_t beyond = j + 2 < h.size() ? h[j + 1] - h[j + 2] : 0;
    if (h[j] < h[j + 1] || beyond > at_least) throw ModelError("h0(K - jA) profile is not concave");
    for (std::size_t c = 0; c < at_least - beyond; ++c) out.push_back(static_cast<int>(j));
  }
  return out;
}

AlphaRank restriction_alpha_rank(const ScrollCurveModel& model) {
  const PrimeField& f = model.field();
  const ScrollRestriction R = restriction_scroll(model);
  std::vector<int> sorted = R.invariants;
  std::sort(sorted.begin(), sorted.end());
  if (model.dimension() == 1 && sorted != scrollar_invariants(model))
    throw ModelError("scrollar invariants from the pencil disagree with the h0(K - jA) profile");

  AlphaRank out;
  out.a = static_cast<std::size_t>(R.scroll->toric().degree());
  const std::size_t p = out.a - 1;
  const std::size_t g = R.phi.size();
  CurveRing curve(borrow(model), Bundle::of_class(model.dimension() == 1 ? model.canonical_class() : DivisorClass{1, 0}));
  if (curve.v_space().dim() != g) throw ModelError("H^0(X', H') and H^0(C, K_C) have different dimensions");
  {
    Echelon span(f, g);
    for (const Vec& col : R.phi) {
      if (col.size() != g) throw ModelError("restriction image has the wrong size");
      span.insert(col);
    }
    if (span.rank() != g) throw ModelError("restriction H^0(X', H') -> H^0(C, K_C) is not an isomorphism");
  }

  CurveRing scroll_ring(R.scroll, Bundle::of_class({1, 0}));
  const GradedStrand ss = scroll_ring.strand(1);
  const FieldMatrix d1s = build_differential_in(ss, p);
  Echelon classes(f, d1s.rows());
  for (Vec& col : columns(d1s)) classes.insert(std::move(col));
  std::vector<Vec> reps;
  for (Vec& v : kernel_basis(build_differential_out(ss, p)))
    if (classes.insert(v)) reps.push_back(std::move(v));
  out.scroll_dim = reps.size();

  const GradedStrand cs = curve.strand(1);
  const auto subsets = all_subsets(g, p);
  std::vector<Vec> wedge_cols(subsets.size());
  auto wedge_col = [&](std::size_t w) -> const Vec& {
    if (wedge_cols[w].empty()) {
      std::vector<Vec> vs;
      for (auto idx : subsets[w]) vs.push_back(R.phi[idx]);
      wedge_cols[w] = wedge(f, vs, g);
    }
    return wedge_cols[w];
  };
  std::vector<Vec> mapped;
  for (const Vec& rep : reps) {
    Vec img(subsets.size() * g, 0);
    for (std::size_t i = 0; i < rep.size(); ++i)
      if (rep[i] != 0) add_tensor(f, img, wedge_col(i / g), R.phi[i % g], rep[i]);
    mapped.push_back(std::move(img));
  }
  const FieldMatrix d2c = build_differential_out(cs, p);
  for (const Vec& v : mapped)
    if (!is_zero_vec(d2c.apply(v))) throw ModelError("restricted scroll syzygy is not a cocycle on the curve");
  out.curve_dim = koszul_dim(cs, p);
  out.image_rank = rank_modulo(build_differential_in(cs, p), mapped);
  return out;
}

GrauertCheck grauert_dimension_check(std::size_t a) {
  if (a < 3) throw InputError("the dimension identity needs a >= 3");
  std::vector<int> e(a - 1, 1);
  e.back() = 2;
  const PrimeField f(default_modulus());
  CurveRing ring(ScrollCurveModel::scroll(f, e), Bundle::of_class({1, 0}));
  const KoszulCell cell = koszul_cell(ring.strand(2), a - 2);
  const std::size_t b = koszul_dim(ring.strand(1), a - 1);
  const std::size_t C = static_cast<std::size_t>(binomial(2 * a - 1, a));
  GrauertCheck out;
  out.lhs = cell.chain_dim - cell.rank_out;
  out.via_sequence = (2 * a - 1) * C - (C + b);
  out.rhs = (2 * a - 2) * C - a + 1;
  return out;
}

}  // namespace syz
