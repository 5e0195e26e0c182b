#include <CLI11.hpp>
#include <fstream>
#include <iostream>

#include "xprod/errors.hpp"
#include "xprod/report.hpp"

namespace {

void write_report(const nlohmann::ordered_json& report, const std::string& out_path) {
  xprod::render_text(report, std::cout);
  if (!out_path.empty()) {
    std::ofstream out(out_path);
    if (!out) throw xprod::Error("cannot write " + out_path);
    out << report.dump(2) << "\n";
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"xprod - twisted crossed products of finite group actions: "
               "representations, p-norms, cohomology, ideals and theorem checks"};
  app.require_subcommand(1);

  std::string spec_path, cmd = "verify", out_path, p_csv;
  std::uint64_t seed_flag = 0;
  int restarts_flag = -1;
  bool seed_given = false;
  bool dump_matrices = false;

  CLI::App* analyze = app.add_subcommand("analyze", "analyze one system spec file");
  analyze->add_option("spec", spec_path, "system spec JSON file")->required();
  analyze->add_option("--cmd", cmd, "dynamics|norms|ideals|cohomology|verify")
      ->check(CLI::IsMember({"dynamics", "norms", "ideals", "cohomology", "verify"}));
  analyze->add_option("--p", p_csv, "comma list of exponents, e.g. 1,1.5,2,inf");
  analyze->add_option_function<std::uint64_t>(
      "--seed", [&](std::uint64_t v) { seed_flag = v; seed_given = true; },
      "seed for iterative norms and block splitting (default 0)");
  analyze->add_option("--restarts", restarts_flag, "restarts for iterative p-norms");
  analyze->add_flag("--dump-matrices", dump_matrices,
                    "include regular matrices in the norms report");
  analyze->add_option("--out", out_path, "write the JSON report here");

  std::string groups_csv = "z2,z3,z4,z2xz2,s3";
  int max_points = 4;
  bool dedup = false;
  std::uint64_t sweep_seed = 0;
  std::string sweep_out;
  CLI::App* sweep = app.add_subcommand("sweep", "verify the theorems over a catalog of actions");
  sweep->add_option("--groups", groups_csv, "comma list from z2,z3,z4,z2xz2,s3");
  sweep->add_option("--max-points", max_points, "largest |X| (default 4)")
      ->check(CLI::Range(1, 4));
  sweep->add_flag("--dedup", dedup, "deduplicate actions up to relabelling of X");
  sweep->add_option("--seed", sweep_seed, "global seed (default 0)");
  sweep->add_option("--out", sweep_out, "write the JSON report here");

  CLI11_PARSE(app, argc, argv);

  try {
    if (analyze->parsed()) {
      xprod::SystemSpec spec = xprod::load_spec(spec_path);
      if (!p_csv.empty()) spec.options.p_values = xprod::parse_exponents(p_csv);
      if (seed_given) spec.options.seed = seed_flag;
      if (restarts_flag > 0) spec.options.restarts = restarts_flag;
      spec.options.dump_matrices = dump_matrices;
      nlohmann::ordered_json report = xprod::analyze(spec, cmd);
      write_report(report, out_path);
      return xprod::report_consistent(report) ? 0 : 1;
    }
    if (sweep->parsed()) {
      xprod::SweepOptions opts;
      opts.groups.clear();
      std::stringstream ss(groups_csv);
      std::string tok;
      while (std::getline(ss, tok, ','))
        if (!tok.empty()) opts.groups.push_back(tok);
      opts.max_points = max_points;
      opts.dedup = dedup;
      opts.seed = sweep_seed;
      xprod::SweepResult result = xprod::run_sweep(opts);
      nlohmann::ordered_json report = xprod::sweep_report(result);
      write_report(report, sweep_out);
      return result.all_consistent ? 0 : 1;
    }
  } catch (const xprod::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const xprod::ValidationError& e) {
    std::cerr << "validation error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
