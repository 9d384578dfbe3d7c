// syzygy: Betti tables and syzygy experiments on explicit curves.

#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "syzygy/elimination.hpp"
#include "syzygy/errors.hpp"
#include "syzygy/harness.hpp"

namespace {

struct Output {
  std::string format = "json";
  std::string record;
};

void add_output(CLI::App* cmd, Output& out) {
  cmd->add_option("--out", out.format, "json or text")->check(CLI::IsMember({"json", "text"}));
  cmd->add_option("--record", out.record, "also write the JSON record to this file");
}

int emit(const syz::ExperimentRecord& r, const Output& out) {
  const std::string json = r.to_json().dump(2) + "\n";
  if (!out.record.empty()) {
    std::ofstream f(out.record);
    if (!f) throw syz::InputError("cannot write " + out.record);
    f << json;
  }
  if (out.format == "json") {
    std::cout << json;
  } else {
    std::cout << r.text << r.verdict_lines();
    std::cout << "wall_time " << r.wall_time << " s\n";
  }
  return r.exit_code();
}

std::pair<int, int> parse_q_range(const std::string& s) {
  const auto colon = s.find(':');
  try {
    if (colon == std::string::npos) {
      const int q = std::stoi(s);
      return {q, q};
    }
    return {std::stoi(s.substr(0, colon)), std::stoi(s.substr(colon + 1))};
  } catch (const std::exception&) {
    throw syz::InputError("--q-range must be q or qmin:qmax, got " + s);
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Koszul cohomology of explicit curves over prime fields"};
  app.require_subcommand(1);
  app.fallthrough();
  std::optional<std::uint32_t> modulus;
  std::size_t memory_gib = 0;
  app.add_option("--modulus", modulus, "prime modulus; overrides the model file and SYZYGY_MODULUS");
  app.add_option("--memory-cap-gib", memory_gib, "abort computations above this size");

  Output out;
  syz::BettiOptions betti;
  std::string q_range = "0:3";
  auto* c_betti = app.add_subcommand("betti", "Betti table of a model file");
  c_betti->add_option("model", betti.model_file, "model descriptor (JSON)")->required();
  c_betti->add_option("--max-p", betti.max_p, "largest p (default h0(L))");
  c_betti->add_option("--q-range", q_range, "q or qmin:qmax");
  c_betti->add_option("--jobs", betti.jobs, "concurrent cells");
  add_output(c_betti, out);

  syz::GonalityOptions gon;
  auto* c_gon = app.add_subcommand("check-gonality", "vanishing of K_{h0-k,1} on k-gonal curves");
  c_gon->add_option("--g", gon.g)->required();
  c_gon->add_option("--k", gon.k)->required();
  c_gon->add_option("--degree", gon.degree, "degree of the random bundles (default 2g-1+k)");
  c_gon->add_option("--trials", gon.trials, "curves to sample");
  c_gon->add_option("--bundles", gon.bundles, "random bundles per curve");
  c_gon->add_option("--bundle", gon.bundle, "random or omega2")->check(CLI::IsMember({"random", "omega2"}));
  c_gon->add_option("--seed", gon.seed);
  c_gon->add_option("--jobs", gon.jobs, "concurrent trials");
  add_output(c_gon, out);

  syz::SchreyerOptions sch;
  auto* c_sch = app.add_subcommand("check-schreyer", "extremal Betti number of canonical k-gonal curves");
  c_sch->add_option("--g", sch.g)->required();
  c_sch->add_option("--k", sch.k)->required();
  c_sch->add_option("--trials", sch.trials, "curves to sample");
  c_sch->add_option("--seed", sch.seed);
  c_sch->add_option("--jobs", sch.jobs, "concurrent trials");
  c_sch->add_flag("--two-pencils", sch.two_pencils, "use a (k,k) curve on P1 x P1");
  add_output(c_sch, out);

  std::string nodal_file;
  auto* c_nodal = app.add_subcommand("nodal", "checks on a glued curve configuration");
  c_nodal->add_option("config", nodal_file, "nodal configuration (JSON)")->required();
  add_output(c_nodal, out);

  syz::ENOptions en;
  std::string en_model;
  auto* c_en = app.add_subcommand("en", "scroll Betti numbers and explicit scroll syzygies");
  c_en->add_option("--a", en.a, "scroll degree; balanced invariants");
  c_en->add_option("--rank", en.rank, "number of invariants for --a (default a-1)");
  c_en->add_option("model", en_model, "scroll or Hirzebruch model (JSON)");
  c_en->add_flag("--verify-syzygies", en.verify_syzygies, "build the syzygies and their span");
  c_en->add_flag("--dump-syzygies", en.dump_syzygies, "include the syzygy vectors in the record");
  add_output(c_en, out);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : syz::kExitInput;
  }

  try {
    if (memory_gib > 0) syz::linalg_config().memory_cap_bytes = memory_gib << 30;
    if (*c_betti) {
      std::tie(betti.q_min, betti.q_max) = parse_q_range(q_range);
      betti.modulus = modulus;
      return emit(syz::cmd_betti(betti), out);
    }
    if (*c_gon) {
      gon.modulus = modulus;
      return emit(syz::cmd_check_gonality(gon), out);
    }
    if (*c_sch) {
      sch.modulus = modulus;
      return emit(syz::cmd_check_schreyer(sch), out);
    }
    if (*c_nodal) return emit(syz::cmd_nodal(nodal_file, modulus), out);
    if (*c_en) {
      en.modulus = modulus;
      if (!en_model.empty()) en.model_file = en_model;
      return emit(syz::cmd_en(en), out);
    }
  } catch (const syz::InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return syz::kExitInput;
  } catch (const syz::ModelError& e) {
    std::cerr << "model error: " << e.what() << "\n";
    return syz::kExitInput;
  } catch (const syz::ResourceLimitError& e) {
    std::cerr << "resource limit: " << e.what() << "\n";
    return syz::kExitResource;
  } catch (const syz::IndeterminateError& e) {
    std::cerr << "indeterminate: " << e.what() << "\n";
    return syz::kExitIndeterminate;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return syz::kExitInput;
  }
  return syz::kExitInput;
}
