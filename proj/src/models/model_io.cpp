#include "syzygy/models/model_io.hpp"

#include <fstream>
#include <set>

#include "syzygy/errors.hpp"
#include "syzygy/models/hyperelliptic.hpp"
#include "syzygy/models/scroll.hpp"

namespace syz {

namespace {

using nlohmann::json;

template <class T>
T get(const json& j, const char* key, const std::string& where) {
  if (!j.is_object() || !j.contains(key)) throw InputError(where + ": missing \"" + key + "\"");
  try {
    return j.at(key).get<T>();
  } catch (const json::exception&) {
    throw InputError(where + ": \"" + key + "\" has the wrong type");
  }
}

template <class T>
T get_or(const json& j, const char* key, T fallback, const std::string& where) {
  if (!j.is_object() || !j.contains(key)) return fallback;
  return get<T>(j, key, where);
}

DivisorClass add_scaled(DivisorClass acc, const DivisorClass& c, int k) {
  if (acc.empty()) acc.assign(c.size(), 0);
  for (std::size_t i = 0; i < c.size(); ++i) acc[i] += k * c[i];
  return acc;
}

Residue residue_of(const PrimeField& f, const json& v) {
  if (!v.is_number_integer()) throw InputError("point coordinates must be integers");
  return f.from_int(v.get<std::int64_t>());
}

}  // namespace

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw InputError(path + ": " + e.what());
  }
}

std::uint32_t resolve_modulus(std::optional<std::uint32_t> cli, const json& file) {
  if (cli) return *cli;
  if (file.is_object() && file.contains("p")) return get<std::uint32_t>(file, "p", "model");
  return default_modulus();
}

std::shared_ptr<SectionModel> model_from_json(const json& j, const PrimeField& f) {
  const std::string type = get<std::string>(j, "type", "model");
  if (type == "hyperelliptic") {
    if (j.contains("f")) {
      poly::Poly c;
      for (const auto& v : j.at("f")) c.push_back(residue_of(f, v));
      return std::make_shared<HyperellipticModel>(f, c);
    }
    Rng rng(get<std::uint64_t>(j, "seed", "hyperelliptic"));
    return std::make_shared<HyperellipticModel>(HyperellipticModel::random(
        f, get<int>(j, "h", "hyperelliptic"), rng, get_or<bool>(j, "with_root", false, "hyperelliptic")));
  }
  if (type == "hirzebruch") {
    const auto cls = get<std::vector<int>>(j, "class", "hirzebruch");
    if (cls.size() != 2) throw InputError("hirzebruch: class must be [k, b]");
    return ScrollCurveModel::hirzebruch(f, get<int>(j, "e", "hirzebruch"), cls[0], cls[1],
                                        get_or<std::uint64_t>(j, "seed", 0, "hirzebruch"));
  }
  if (type == "scroll") return ScrollCurveModel::scroll(f, get<std::vector<int>>(j, "e", "scroll"));
  if (type == "scroll_curve")
    return ScrollCurveModel::complete_intersection(f, get<std::vector<int>>(j, "e", "scroll_curve"),
                                                   get<std::vector<DivisorClass>>(j, "classes", "scroll_curve"),
                                                   get_or<std::uint64_t>(j, "seed", 0, "scroll_curve"));
  throw InputError("unknown model type \"" + type + "\"");
}

NamedPoints points_from_json(const SectionModel& m, const json& j, Rng& rng) {
  NamedPoints named;
  if (j.is_null()) return named;
  if (!j.is_object()) throw InputError("\"points\" must be an object");
  if (!m.supports_points()) throw InputError("model does not support points");
  const auto* hyp = dynamic_cast<const HyperellipticModel*>(&m);
  std::set<Residue> used_x;
  for (const auto& [name, spec] : j.items()) {
    CurvePoint p;
    if (spec == "random") {
      do p = m.random_point(rng);
      while (used_x.count(p.x));
    } else if (spec == "weierstrass" || (spec.is_object() && spec.contains("weierstrass"))) {
      if (!hyp) throw InputError("point " + name + ": weierstrass points need a hyperelliptic model");
      const auto w = hyp->weierstrass_points();
      const std::size_t i = spec.is_object() ? get<std::size_t>(spec, "weierstrass", name) : 0;
      if (i >= w.size()) throw InputError("point " + name + ": no rational weierstrass point with index " + std::to_string(i));
      p = w[i];
    } else if (spec.is_object() && spec.contains("conjugate_of")) {
      if (!hyp) throw InputError("point " + name + ": conjugates need a hyperelliptic model");
      const auto other = get<std::string>(spec, "conjugate_of", name);
      if (!named.count(other)) throw InputError("point " + name + ": unknown point " + other);
      p = hyp->conjugate(named.at(other));
    } else if (spec.is_array() && spec.size() == 2) {
      p = {residue_of(m.field(), spec[0]), residue_of(m.field(), spec[1])};
    } else {
      throw InputError("point " + name + ": unrecognised specification");
    }
    if (!m.on_curve(p)) throw InputError("point " + name + " is not on the curve");
    used_x.insert(p.x);
    named.emplace(name, p);
  }
  return named;
}

Bundle bundle_from_json(const SectionModel& m, const json& j, const NamedPoints& named, Rng& rng) {
  if (!j.is_object()) throw InputError("bundle must be an object");
  DivisorClass cls;
  if (j.contains("class")) {
    cls = get<DivisorClass>(j, "class", "bundle");
  } else if (j.contains("surface_class")) {
    const auto* s = dynamic_cast<const ScrollCurveModel*>(&m);
    const auto ab = get<std::vector<int>>(j, "surface_class", "bundle");
    if (!s || s->toric().rank() != 2 || ab.size() != 2) throw InputError("surface_class needs a Hirzebruch model and [a, b]");
    cls = ScrollCurveModel::hirzebruch_class(s->toric().e()[1] - s->toric().e()[0], ab[0], ab[1]);
  } else {
    cls = add_scaled(cls, m.canonical_class(), get_or<int>(j, "canonical", 0, "bundle"));
    if (j.contains("pencil")) {
      if (!m.pencil_class()) throw InputError("model has no pencil");
      cls = add_scaled(cls, *m.pencil_class(), get<int>(j, "pencil", "bundle"));
    }
  }
  if (cls.size() != m.canonical_class().size()) throw InputError("bundle class has the wrong length");
  Bundle b = Bundle::of_class(cls);

  auto lookup = [&](const std::string& name) {
    if (!named.count(name)) throw InputError("bundle refers to unknown point " + name);
    return named.at(name);
  };
  if (j.contains("plus")) {
    const auto* hyp = dynamic_cast<const HyperellipticModel*>(&m);
    if (!hyp) throw InputError("added points need a hyperelliptic model");
    // P = A - P' and P + P' = A.
    std::vector<CurvePoint> added;
    for (const auto& n : get<std::vector<std::string>>(j, "plus", "bundle")) added.push_back(lookup(n));
    std::vector<char> paired(added.size(), 0);
    for (std::size_t i = 0; i < added.size(); ++i) {
      if (paired[i]) continue;
      b.cls = add_scaled(b.cls, *hyp->pencil_class(), 1);
      for (std::size_t k = i + 1; k < added.size() && !paired[i]; ++k)
        if (!paired[k] && added[k] == hyp->conjugate(added[i])) paired[i] = paired[k] = 1;
      if (!paired[i]) b = b.minus(hyp->conjugate(added[i]));
    }
  }
  if (j.contains("minus")) {
    if (!j.at("minus").is_object()) throw InputError("\"minus\" must map point names to multiplicities");
    for (const auto& [name, mult] : j.at("minus").items()) b = b.minus(lookup(name), mult.get<int>());
  }
  const int extra = get_or<int>(j, "random_points", 0, "bundle");
  if (extra > 0) {
    if (!m.supports_points()) throw InputError("model does not support points");
    std::set<Residue> used;
    for (const auto& [n, p] : named) used.insert(p.x);
    for (const auto& [p, mult] : b.points) used.insert(p.x);
    for (int i = 0; i < extra; ++i) {
      CurvePoint p;
      do p = m.random_point(rng);
      while (used.count(p.x));
      used.insert(p.x);
      b = b.minus(p);
    }
  }
  return b;
}

NodalConfig nodal_from_json(const json& j, const PrimeField& f) {
  if (get<std::string>(j, "type", "nodal config") != "nodal") throw InputError("nodal config must have type \"nodal\"");
  Rng rng(get_or<std::uint64_t>(j, "seed", 0, "nodal config"));
  NodalConfig out;
  std::vector<NodalComponent> comps;
  std::map<std::string, std::size_t> index;
  const json comps_json = j.contains("components") ? j.at("components") : json::array();
  if (!comps_json.is_array()) throw InputError("\"components\" must be an array");
  for (const auto& c : comps_json) {
    const auto name = get<std::string>(c, "name", "component");
    if (index.count(name)) throw InputError("duplicate component name " + name);
    auto model = model_from_json(get<json>(c, "model", name), f);
    NamedPoints pts = points_from_json(*model, c.contains("points") ? c.at("points") : json(), rng);
    Bundle L = bundle_from_json(*model, get<json>(c, "L", name), pts, rng);
    Bundle M = c.contains("M") ? bundle_from_json(*model, c.at("M"), pts, rng)
                               : Bundle::of_class(DivisorClass(model->canonical_class().size(), 0));
    index.emplace(name, comps.size());
    comps.push_back({name, std::move(model), std::move(L), std::move(M)});
    out.points.push_back(std::move(pts));
  }
  std::vector<Node> nodes;
  for (const auto& g : j.contains("glue") ? j.at("glue") : json::array()) {
    Node n;
    auto side = [&](const char* ck, const char* pk, std::size_t& ci, CurvePoint& p) {
      const auto cname = get<std::string>(g, ck, "glue");
      if (!index.count(cname)) throw InputError("glue refers to unknown component " + cname);
      ci = index.at(cname);
      const auto pname = get<std::string>(g, pk, "glue");
      if (!out.points[ci].count(pname)) throw InputError("glue refers to unknown point " + cname + ":" + pname);
      p = out.points[ci].at(pname);
    };
    side("a", "pa", n.a, n.pa);
    side("b", "pb", n.b, n.pb);
    if (!g.contains("lambda")) n.lambda = 1;
    else if (g.at("lambda") == "random") n.lambda = rng.nonzero(f);
    else n.lambda = residue_of(f, g.at("lambda"));
    nodes.push_back(n);
  }
  out.model = std::make_shared<NodalModel>(std::move(comps), std::move(nodes));
  if (j.contains("checks")) out.checks = j.at("checks");
  return out;
}

}  // namespace syz
