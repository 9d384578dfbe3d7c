#include "syzygy/models/nodal.hpp"

#include <numeric>

#include "syzygy/elimination.hpp"
#include "syzygy/errors.hpp"

namespace syz {

namespace {

std::shared_ptr<const SectionSpace> borrow(const SectionSpace& s) {
  return std::shared_ptr<const SectionSpace>(std::shared_ptr<void>(), &s);
}

}  // namespace

NodalModel::NodalModel(std::vector<NodalComponent> components, std::vector<Node> nodes)
    : components_(std::move(components)), nodes_(std::move(nodes)) {
  if (components_.empty()) throw InputError("nodal model needs at least one component");
  for (const auto& c : components_) {
    if (!c.model) throw InputError("component " + c.name + " has no model");
    if (!(c.model->field() == field())) throw InputError("components must share one prime field");
    if (c.model->dimension() != 1) throw InputError("component " + c.name + " is not a curve");
  }
  std::vector<std::size_t> parent(components_.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::vector<std::pair<std::size_t, CurvePoint>> used;
  for (const auto& n : nodes_) {
    if (n.a >= components_.size() || n.b >= components_.size()) throw InputError("node refers to a missing component");
    for (auto [c, p] : {std::pair{n.a, n.pa}, std::pair{n.b, n.pb}}) {
      const auto& comp = components_[c];
      if (!comp.model->supports_points() || !comp.model->on_curve(p))
        throw InputError("node point is not on component " + comp.name);
      for (const auto& u : used)
        if (u.first == c && u.second == p) throw InputError("point used by two nodes on component " + comp.name);
      used.emplace_back(c, p);
    }
    if (n.lambda == 0) throw InputError("gluing scalar must be nonzero");
    parent[find(n.a)] = find(n.b);
  }
  for (std::size_t i = 0; i < components_.size(); ++i)
    if (find(i) != find(0)) throw InputError("gluing graph is not connected");
}

int NodalModel::genus() const {
  int g = static_cast<int>(nodes_.size()) - static_cast<int>(components_.size()) + 1;
  for (const auto& c : components_) g += c.model->genus();
  return g;
}

nlohmann::json NodalModel::describe() const {
  nlohmann::json comps = nlohmann::json::array(), glue = nlohmann::json::array();
  for (const auto& c : components_)
    comps.push_back({{"name", c.name}, {"model", c.model->describe()}, {"L", c.L.to_json()}, {"M", c.M.to_json()}});
  for (const auto& n : nodes_)
    glue.push_back({{"a", components_[n.a].name}, {"pa", {n.pa.x, n.pa.y}}, {"b", components_[n.b].name},
                    {"pb", {n.pb.x, n.pb.y}}, {"lambda", n.lambda}});
  return {{"type", "nodal"}, {"genus", genus()}, {"components", comps}, {"glue", glue}};
}

GluedSpace::GluedSpace(const NodalModel& model, std::vector<std::shared_ptr<const SectionSpace>> parts, int power)
    : parts_(std::move(parts)), field_(model.field()) {
  for (const auto& p : parts_) {
    offsets_.push_back(total_);
    total_ += p->dim();
  }
  Echelon conditions(field_, total_);
  for (const auto& n : model.nodes()) {
    Vec row(total_, 0);
    const Vec va = parts_[n.a]->fiber_value(*model.components()[n.a].model, n.pa);
    const Vec vb = parts_[n.b]->fiber_value(*model.components()[n.b].model, n.pb);
    const Residue ln = field_.pow(n.lambda, static_cast<std::uint64_t>(power < 0 ? -power : power));
    const Residue lam = field_.neg(power < 0 ? field_.inv(ln) : ln);
    for (std::size_t i = 0; i < va.size(); ++i) row[offsets_[n.a] + i] = field_.add(row[offsets_[n.a] + i], va[i]);
    for (std::size_t i = 0; i < vb.size(); ++i)
      row[offsets_[n.b] + i] = field_.mul_add(row[offsets_[n.b] + i], lam, vb[i]);
    conditions.insert(std::move(row));
  }
  std::vector<char> pivot(total_, 0);
  for (std::size_t c : conditions.pivots()) pivot[c] = 1;
  for (std::size_t j = 0; j < total_; ++j) {
    if (pivot[j]) continue;
    Vec v(total_, 0);
    v[j] = 1;
    for (std::size_t i = 0; i < conditions.rank(); ++i) v[conditions.pivots()[i]] = field_.neg(conditions.rows()[i][j]);
    free_.push_back(j);
    basis_.push_back(std::move(v));
    std::size_t comp = 0;
    while (comp + 1 < offsets_.size() && offsets_[comp + 1] <= j) ++comp;
    const std::string label = model.components()[comp].name + ":" + parts_[comp]->labels()[j - offsets_[comp]];
    labels_.push_back(conditions.rank() == 0 ? label : "<" + label + ">");
  }
}

Vec GluedSpace::slice(const Vec& v, std::size_t component) const {
  const auto begin = v.begin() + static_cast<long>(offsets_[component]);
  return Vec(begin, begin + static_cast<long>(parts_[component]->dim()));
}

Vec GluedSpace::coordinates(const Vec& tuple) const {
  if (tuple.size() != total_) throw ModelError("glued section of the wrong size");
  Vec c(free_.size());
  for (std::size_t j = 0; j < free_.size(); ++j) c[j] = tuple[free_[j]];
  Vec back(total_, 0);
  for (std::size_t j = 0; j < c.size(); ++j)
    if (c[j] != 0)
      for (std::size_t i = 0; i < total_; ++i) back[i] = field_.mul_add(back[i], c[j], basis_[j][i]);
  if (back != tuple) throw ModelError("product violates a node condition of the glued bundle");
  return c;
}

std::size_t nodal_h0(const NodalModel& model) {
  std::vector<std::shared_ptr<const SectionSpace>> parts;
  for (const auto& c : model.components()) parts.push_back(std::make_shared<SectionSpace>(*c.model, c.L));
  return GluedSpace(model, std::move(parts), 1).dim();
}

NodalRing::NodalRing(std::shared_ptr<const NodalModel> model) : model_(std::move(model)) {
  for (const auto& c : model_->components()) rings_.push_back(std::make_unique<CurveRing>(c.model, c.L, c.M));
}

const GluedSpace& NodalRing::v_space() const {
  std::vector<std::shared_ptr<const SectionSpace>> parts;
  for (const auto& r : rings_) parts.push_back(borrow(r->v_space()));
  std::lock_guard lock(mutex_);
  if (!v_space_) v_space_ = std::make_shared<GluedSpace>(*model_, std::move(parts), 1);
  return *v_space_;
}

const GluedSpace& NodalRing::piece(int n) const {
  {
    std::lock_guard lock(mutex_);
    auto it = pieces_.find(n);
    if (it != pieces_.end()) return *it->second;
  }
  std::vector<std::shared_ptr<const SectionSpace>> parts;
  for (const auto& r : rings_) parts.push_back(borrow(r->piece(n)));
  auto space = std::make_shared<GluedSpace>(*model_, std::move(parts), n);
  std::lock_guard lock(mutex_);
  return *pieces_.emplace(n, std::move(space)).first->second;
}

GradedStrand NodalRing::strand(int q) const {
  const GluedSpace& V = v_space();
  const GluedSpace& prev = piece(q - 1);
  const GluedSpace& cur = piece(q);
  const GluedSpace& next = piece(q + 1);
  auto mult = [&](std::size_t i, int n, std::size_t j) {
    const GluedSpace& src = n == q - 1 ? prev : cur;
    const GluedSpace& dst = n == q - 1 ? cur : next;
    if (dst.dim() == 0) return Vec{};
    Vec tuple;
    for (std::size_t c = 0; c < rings_.size(); ++c) {
      const SectionModel& m = *model_->components()[c].model;
      const Vec part = multiply_sections(m, *V.parts()[c], V.slice(V.basis()[i], c), *src.parts()[c],
                                         src.slice(src.basis()[j], c), *dst.parts()[c]);
      tuple.insert(tuple.end(), part.begin(), part.end());
    }
    return dst.coordinates(tuple);
  };
  return make_strand(model_->field(), V.labels(), prev.labels(), cur.labels(), next.labels(), q, mult);
}

}  // namespace syz
