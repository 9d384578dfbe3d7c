#pragma once
// Experiment commands behind the syzygy CLI. Each returns a record; input and
// model errors propagate as exceptions and are mapped to exit codes by the caller.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

namespace syz {

enum class Verdict { Pass, Fail, Indeterminate, ExpectedExcess, ExpectedNonvanishing };

std::string to_string(Verdict v);

struct Check {
  std::string name;
  std::string claim;
  nlohmann::json value;
  Verdict verdict = Verdict::Pass;
};

struct ExperimentRecord {
  std::string command;
  nlohmann::json model = nlohmann::json::object();
  std::uint64_t seed = 0;
  std::uint32_t modulus = 0;
  nlohmann::json values = nlohmann::json::object();
  std::vector<Check> checks;
  /// Human-readable body and wall time in seconds; text output only, so that JSON stays reproducible.
  std::string text;
  double wall_time = 0;

  /// Fail beats Indeterminate beats the passing kinds.
  Verdict verdict() const;
  nlohmann::json to_json() const;
  /// One line per check, each carrying the modulus and seed.
  std::string verdict_lines() const;
  int exit_code() const;
};

/// 0 pass, 1 mathematical failure, 2 input or model error, 3 resource cap, 4 indeterminate.
enum ExitCode { kExitPass = 0, kExitFail = 1, kExitInput = 2, kExitResource = 3, kExitIndeterminate = 4 };

struct BettiOptions {
  std::string model_file;
  std::optional<std::size_t> max_p;
  int q_min = 0;
  int q_max = 3;
  std::optional<std::uint32_t> modulus;
  unsigned jobs = 1;
};
/// The file holds a model descriptor with optional "bundle" (default canonical) and "twist".
ExperimentRecord cmd_betti(const BettiOptions& o);

struct GonalityOptions {
  int g = 0;
  int k = 0;
  /// Defaults to 2g - 1 + k.
  std::optional<long> degree;
  std::size_t trials = 1;
  std::size_t bundles = 1;
  std::uint64_t seed = 1;
  std::optional<std::uint32_t> modulus;
  unsigned jobs = 1;
  /// "random" (degree `degree`) or "omega2".
  std::string bundle = "random";
};
ExperimentRecord cmd_check_gonality(const GonalityOptions& o);

struct SchreyerOptions {
  int g = 0;
  int k = 0;
  std::size_t trials = 1;
  std::uint64_t seed = 1;
  std::optional<std::uint32_t> modulus;
  unsigned jobs = 1;
  /// Bidegree (k, k) on P^1 x P^1, carrying two pencils.
  bool two_pencils = false;
};
ExperimentRecord cmd_check_schreyer(const SchreyerOptions& o);

ExperimentRecord cmd_nodal(const std::string& config_file, std::optional<std::uint32_t> modulus);

struct ENOptions {
  std::optional<std::size_t> a;
  /// Number of scrollar invariants for --a; defaults to a - 1.
  std::optional<std::size_t> rank;
  std::optional<std::string> model_file;
  bool verify_syzygies = false;
  bool dump_syzygies = false;
  std::optional<std::uint32_t> modulus;
};
ExperimentRecord cmd_en(const ENOptions& o);

/// Balanced invariants: `rank` parts, each >= 1 when possible, summing to a.
std::vector<int> balanced_invariants(std::size_t a, std::size_t rank);

}  // namespace syz
