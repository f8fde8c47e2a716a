// bshift: certified bounds for the backward shift and related operators on
// Hardy, Bergman, and harmonic function spaces.
//
//   bshift reproduce                      reproduce the headline constants
//   bshift bound <name> [k=v ...]         evaluate one bound / witness
//   bshift search <op> <space> <family>   extremal lower-bound search
//   bshift verify <suite>                 run a module's property sweeps
//
// Exit status is 0 iff every emitted certificate passes.

#include <fstream>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "bshift/cli.hpp"

namespace {

std::map<std::string, double> parse_kv(const std::vector<std::string>& items,
                                       const char* what) {
  std::map<std::string, double> out;
  for (const std::string& item : items) {
    const auto eq = item.find('=');
    if (eq == std::string::npos)
      throw CLI::ValidationError(std::string(what) + " expects KEY=VALUE, got: " + item);
    out[item.substr(0, eq)] = std::stod(item.substr(eq + 1));
  }
  return out;
}

int emit(const bshift::report_document& doc, const std::string& out_path) {
  const std::string text = bshift::render(doc);
  if (out_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(out_path, std::ios::binary);
    if (!out) {
      std::cerr << "cannot write " << out_path << "\n";
      return 1;
    }
    out << text;
  }
  return doc.all_pass() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"certified operator-norm bounds on Hardy/Bergman/harmonic spaces"};
  app.require_subcommand(1);

  bshift::run_config cfg;
  std::string config_path, out_path, format = "text";
  std::vector<std::string> tol_items;
  std::size_t grid = 0, radial = 0;
  std::uint64_t seed = 0;
  unsigned jobs = 0;
  bool seed_set = false;

  app.add_option("--grid", grid, "circle grid size (power of two, 2^8..2^20)");
  app.add_option("--radial-nodes", radial, "radial quadrature nodes");
  app.add_option("--seed", seed, "root seed for randomized sweeps")->each([&](std::string) {
    seed_set = true;
  });
  app.add_option("--jobs", jobs, "worker threads for sweeps");
  app.add_option("--format", format, "output format: text, json, csv");
  app.add_option("--tol", tol_items, "tolerance override KEY=VAL (repeatable)");
  app.add_option("--config", config_path, "key=value config file");
  app.add_option("--out", out_path, "write the report to a file instead of stdout");

  auto* reproduce = app.add_subcommand("reproduce", "reproduce the headline constants");

  auto* bound = app.add_subcommand("bound", "evaluate one bound or witness");
  std::string bound_name;
  std::vector<std::string> bound_params;
  bound->add_option("name", bound_name,
                    "thm1 | thm2 | h1-szop | h1-bshift | bergman-a1 | interpolation | sharp-r")
      ->required();
  bound->add_option("params", bound_params, "KEY=VALUE parameters");

  auto* search = app.add_subcommand("search", "extremal lower-bound search");
  std::string op_name, space_name, family_name;
  std::size_t budget = 200;
  search->add_option("operator", op_name, "szop | bshift | szop-r")->required();
  search->add_option("space", space_name, "h1 | h2 | ... | hinf | a1 | a2 | ...")->required();
  search->add_option("family", family_name, "mobius | cutoff | poisson | poly")->required();
  search->add_option("budget", budget, "evaluation budget (default 200)");

  auto* verify = app.add_subcommand("verify", "run property sweeps");
  std::string suite = "all";
  verify->add_option("suite", suite, "circlefn | spaces | operators | bounds | rearrange | all");

  CLI11_PARSE(app, argc, argv);

  try {
    if (!config_path.empty()) bshift::apply_config_file(cfg, config_path);
    // command-line flags win over the config file
    if (grid != 0) cfg.grid = grid;
    if (radial != 0) cfg.radial_nodes = radial;
    if (seed_set) cfg.seed = seed;
    if (jobs != 0) cfg.jobs = jobs;
    for (const auto& [k, v] : parse_kv(tol_items, "--tol")) cfg.tol_overrides[k] = v;
    if (format == "text") cfg.format = bshift::run_config::output_format::text;
    else if (format == "json") cfg.format = bshift::run_config::output_format::json;
    else if (format == "csv") cfg.format = bshift::run_config::output_format::csv;
    else throw CLI::ValidationError("--format must be text, json, or csv");
    cfg.validate();

    if (*reproduce) return emit(bshift::cmd_reproduce(cfg), out_path);
    if (*bound)
      return emit(bshift::cmd_bound(bound_name, parse_kv(bound_params, "bound"), cfg),
                  out_path);
    if (*search)
      return emit(bshift::cmd_search(op_name, space_name, family_name, budget, cfg),
                  out_path);
    if (*verify) return emit(bshift::cmd_verify(suite, cfg), out_path);
  } catch (const CLI::Error& e) {
    return app.exit(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
