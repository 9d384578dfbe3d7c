#include "syzygy/models/section_model.hpp"

#include <algorithm>

#include "syzygy/elimination.hpp"
#include "syzygy/errors.hpp"

namespace syz {

namespace {

DivisorClass add_classes(const DivisorClass& a, const DivisorClass& b) {
  DivisorClass r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  return r;
}

std::string class_string(const DivisorClass& c) {
  std::string s = "(";
  for (std::size_t i = 0; i < c.size(); ++i) s += (i ? "," : "") + std::to_string(c[i]);
  return s + ")";
}

}  // namespace

Bundle Bundle::minus(const CurvePoint& p, int m) const {
  Bundle b = *this;
  auto it = std::lower_bound(b.points.begin(), b.points.end(), p,
                             [](const auto& entry, const CurvePoint& q) { return entry.first < q; });
  if (it != b.points.end() && it->first == p) {
    it->second += m;
    if (it->second == 0) b.points.erase(it);
  } else if (m != 0) {
    b.points.insert(it, {p, m});
  }
  return b;
}

Bundle Bundle::plus(const Bundle& o) const {
  Bundle b{add_classes(cls, o.cls), points};
  for (const auto& [p, m] : o.points) b = b.minus(p, m);
  return b;
}

Bundle Bundle::scaled(int n) const {
  Bundle b{cls, {}};
  for (int& c : b.cls) c *= n;
  if (n != 0)
    for (const auto& [p, m] : points) b.points.emplace_back(p, m * n);
  return b;
}

int Bundle::multiplicity(const CurvePoint& p) const {
  for (const auto& [q, m] : points)
    if (q == p) return m;
  return 0;
}

nlohmann::json Bundle::to_json() const {
  nlohmann::json pts = nlohmann::json::array();
  for (const auto& [p, m] : points) pts.push_back({{"x", p.x}, {"y", p.y}, {"m", m}});
  return {{"class", cls}, {"points", pts}};
}

CurvePoint SectionModel::random_point(Rng&) const { throw ModelError("model does not support points"); }

std::vector<Vec> SectionModel::jets(const DivisorClass&, const CurvePoint&, int, int) const {
  throw ModelError("model does not support local jets");
}

long SectionModel::degree(const Bundle& b) const {
  long d = class_degree(b.cls);
  for (const auto& [p, m] : b.points) d -= m;
  return d;
}

SectionSpace::SectionSpace(const SectionModel& model, Bundle bundle)
    : bundle_(std::move(bundle)), field_(model.field()) {
  const bool adds_points = std::any_of(bundle_.points.begin(), bundle_.points.end(), [](const auto& e) { return e.second < 0; });
  if (model.dimension() == 1 && model.degree(bundle_) < 0) return;
  if (adds_points) throw InputError("bundles must subtract points; rewrite added points through the ambient class");
  ambient_dim_ = model.ambient_dim(bundle_.cls);

  Echelon conditions(field_, ambient_dim_);
  for (const auto& [p, m] : bundle_.points) {
    if (!model.on_curve(p)) throw InputError("point (" + std::to_string(p.x) + "," + std::to_string(p.y) + ") is not on the model");
    for (Vec& row : model.jets(bundle_.cls, p, 0, m)) conditions.insert(std::move(row));
  }
  std::vector<char> pivot(ambient_dim_, 0);
  for (std::size_t c : conditions.pivots()) pivot[c] = 1;
  for (std::size_t j = 0; j < ambient_dim_; ++j) {
    if (pivot[j]) continue;
    Vec v(ambient_dim_, 0);
    v[j] = 1;
    for (std::size_t i = 0; i < conditions.rank(); ++i)
      v[conditions.pivots()[i]] = field_.neg(conditions.rows()[i][j]);
    free_cols_.push_back(j);
    basis_.push_back(std::move(v));
    const std::string label = model.ambient_label(bundle_.cls, j);
    labels_.push_back(conditions.rank() == 0 ? label : "<" + label + ">");
  }
}

Vec SectionSpace::coordinates(const Vec& ambient) const {
  if (ambient.size() != ambient_dim_)
    throw ModelError("section of the wrong ambient size for bundle " + class_string(bundle_.cls));
  Vec c(free_cols_.size());
  for (std::size_t j = 0; j < free_cols_.size(); ++j) c[j] = ambient[free_cols_[j]];
  if (free_cols_.size() != ambient_dim_ && to_ambient(c) != ambient)
    throw ModelError("product not expressible in the basis of " + class_string(bundle_.cls) +
                     " (vanishing conditions violated)");
  return c;
}

Vec SectionSpace::to_ambient(const Vec& coords) const {
  Vec a(ambient_dim_, 0);
  for (std::size_t j = 0; j < coords.size(); ++j) {
    if (coords[j] == 0) continue;
    for (std::size_t i = 0; i < ambient_dim_; ++i) a[i] = field_.mul_add(a[i], coords[j], basis_[j][i]);
  }
  return a;
}

Vec SectionSpace::fiber_value(const SectionModel& model, const CurvePoint& p) const {
  Vec out(dim(), 0);
  if (dim() == 0) return out;
  const int m = bundle_.multiplicity(p);
  const Vec jet = model.jets(bundle_.cls, p, m, 1).at(0);
  for (std::size_t j = 0; j < dim(); ++j) {
    Residue acc = 0;
    for (std::size_t i = 0; i < ambient_dim_; ++i) acc = field_.mul_add(acc, jet[i], basis_[j][i]);
    out[j] = acc;
  }
  return out;
}

Vec multiply_sections(const SectionModel& model, const SectionSpace& a, const Vec& a_coords, const SectionSpace& b,
                      const Vec& b_coords, const SectionSpace& target) {
  if (target.dim() == 0) return {};
  if (a.dim() == 0 || b.dim() == 0) return Vec(target.dim(), 0);
  Vec prod = model.ambient_multiply(a.bundle().cls, a.to_ambient(a_coords), b.bundle().cls, b.to_ambient(b_coords));
  return target.coordinates(prod);
}

void check_riemann_roch(const SectionModel& model, const Bundle& b, std::size_t h0) {
  if (model.dimension() != 1) return;
  const long d = model.degree(b);
  const long g = model.genus();
  long expected = -1;
  if (d < 0) expected = 0;
  if (d > 2 * g - 2) expected = d - g + 1;
  if (expected >= 0 && static_cast<long>(h0) != expected)
    throw ModelError("h0 = " + std::to_string(h0) + " for a bundle of degree " + std::to_string(d) + " on genus " +
                     std::to_string(g) + ", Riemann-Roch gives " + std::to_string(expected) + "; class " +
                     class_string(b.cls));
}

CurveRing::CurveRing(std::shared_ptr<const SectionModel> model, Bundle L, Bundle M)
    : model_(std::move(model)), L_(std::move(L)), M_(std::move(M)) {
  if (M_.cls.empty()) M_.cls.assign(L_.cls.size(), 0);
}

Bundle CurveRing::piece_bundle(int n) const { return L_.scaled(n).plus(M_); }

const SectionSpace& CurveRing::v_space() const {
  std::lock_guard lock(mutex_);
  if (!v_space_) {
    v_space_ = std::make_shared<SectionSpace>(*model_, L_);
    check_riemann_roch(*model_, L_, v_space_->dim());
  }
  return *v_space_;
}

const SectionSpace& CurveRing::piece(int n) const {
  std::lock_guard lock(mutex_);
  auto it = pieces_.find(n);
  if (it == pieces_.end()) {
    Bundle b = piece_bundle(n);
    auto space = std::make_shared<SectionSpace>(*model_, b);
    check_riemann_roch(*model_, b, space->dim());
    it = pieces_.emplace(n, std::move(space)).first;
  }
  return *it->second;
}

GradedStrand CurveRing::strand(int q) const {
  const SectionSpace& V = v_space();
  const SectionSpace& prev = piece(q - 1);
  const SectionSpace& cur = piece(q);
  const SectionSpace& next = piece(q + 1);
  auto mult = [&](std::size_t i, int n, std::size_t j) {
    const SectionSpace& src = n == q - 1 ? prev : cur;
    const SectionSpace& dst = n == q - 1 ? cur : next;
    if (dst.dim() == 0) return Vec{};
    Vec prod = model_->ambient_multiply(L_.cls, V.basis()[i], src.bundle().cls, src.basis()[j]);
    return dst.coordinates(prod);
  };
  return make_strand(model_->field(), V.labels(), prev.labels(), cur.labels(), next.labels(), q, mult);
}

nlohmann::json CurveRing::describe() const {
  return {{"model", model_->describe()}, {"L", L_.to_json()}, {"M", M_.to_json()}};
}

}  // namespace syz
