#pragma once
// JSON model descriptors.
//
//   {"type":"hyperelliptic", "f":[c0, c1, ...]}          explicit f, lowest degree first
//   {"type":"hyperelliptic", "h":3, "seed":5, "with_root":false}
//   {"type":"hirzebruch", "e":1, "class":[k, b], "seed":7}
//   {"type":"scroll", "e":[1, 2]}
//   {"type":"scroll_curve", "e":[2, 2, 2], "classes":[[2, -2], [2, -2]], "seed":9}
//
// Bundles:
//   {"class":[...]} or {"surface_class":[a, b]} on Hirzebruch models, or
//   {"canonical":a, "pencil":b}, each optionally with
//   "minus": {"name": m, ...}  named points, see below
//   "plus": ["name", ...]      hyperelliptic only, rewritten as A - conjugate
//   "random_points": n         n further general points subtracted
//
// Named points: "random", "weierstrass" (or {"weierstrass": i}),
// {"conjugate_of": "name"}, or explicit [x, y].

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>

#include "json.hpp"
#include "syzygy/models/nodal.hpp"
#include "syzygy/models/section_model.hpp"

namespace syz {

/// Throws InputError if the file is missing or not valid JSON.
nlohmann::json read_json_file(const std::string& path);

/// --modulus, then the file's "p", then SYZYGY_MODULUS, then 31991.
std::uint32_t resolve_modulus(std::optional<std::uint32_t> cli, const nlohmann::json& file);

std::shared_ptr<SectionModel> model_from_json(const nlohmann::json& j, const PrimeField& f);

using NamedPoints = std::map<std::string, CurvePoint>;

/// Resolves "points" entries in order; random points avoid earlier ones and ramification.
NamedPoints points_from_json(const SectionModel& m, const nlohmann::json& j, Rng& rng);

Bundle bundle_from_json(const SectionModel& m, const nlohmann::json& j, const NamedPoints& named, Rng& rng);

struct NodalConfig {
  std::shared_ptr<NodalModel> model;
  std::vector<NamedPoints> points;
  nlohmann::json checks = nlohmann::json::object();
};

/// {"type":"nodal", "seed":s, "components":[{"name", "model", "points", "L", "M"}],
///  "glue":[{"a", "pa", "b", "pb", "lambda"}], "checks":{...}}; lambda may be "random".
NodalConfig nodal_from_json(const nlohmann::json& j, const PrimeField& f);

}  // namespace syz
