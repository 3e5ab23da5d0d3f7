#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "hyperstab/json_io.hpp"

namespace {

using namespace hyperstab;

struct OutputOptions {
  std::string format = "table";
  std::string out_path;
};

void add_output_flags(CLI::App* cmd, OutputOptions& opts) {
  cmd->add_option("--format", opts.format, "Output format")
      ->check(CLI::IsMember({"table", "json", "csv"}))
      ->capture_default_str();
  cmd->add_option("--out", opts.out_path, "Write output to a file instead of stdout");
}

void emit(const OutputOptions& opts, const std::string& text) {
  if (opts.out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(opts.out_path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open output file " + opts.out_path);
  f << text;
}

std::string json_text(const Json& j) { return j.dump(2) + "\n"; }

std::string kv_csv(const Json& j) {
  std::string out = "key,value\n";
  for (const auto& [key, value] : j.items()) {
    if (value.is_structured()) continue;
    out += csv_escape(key) + ",";
    out += value.is_string() ? csv_escape(value.get<std::string>()) : csv_escape(value.dump());
    out += "\n";
  }
  return out;
}

unsigned env_threads() {
  const char* v = std::getenv("HYPERSTAB_THREADS");
  if (!v) return 1;
  const long n = std::strtol(v, nullptr, 10);
  return n >= 1 ? static_cast<unsigned>(n) : 1;
}

HyperState load_state(const std::string& spec, const std::string& json_path) {
  if (!json_path.empty()) {
    std::ifstream f(json_path);
    if (!f) throw std::runtime_error("cannot open state file " + json_path);
    return state_from_json(Json::parse(f));
  }
  if (spec.empty()) throw CLI::ValidationError("--state", "a state spec or --state-json is required");
  return HyperState::parse_spec(spec);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "hyperstab: GHZ-type hyperentangled stabilizer groups, Bell-operator "
      "bounds and the optical generation protocol"};
  app.require_subcommand(1);

  std::string state_spec, state_json;
  std::size_t guard_bits = kDefaultGuardBits;
  unsigned partitions = env_threads();
  OutputOptions count_out, closed_out, bell_out, table1_out, cases_out, sim_out;

  auto* count = app.add_subcommand("count", "Enumerate the stabilizer group and count negatives");
  count->add_option("--state", state_spec, "State spec, e.g. 4:0000,4:0101,4:0000");
  count->add_option("--state-json", state_json, "State described in canonical JSON");
  count->add_option("--guard-bits", guard_bits, "Enumeration guard (refuse beyond 2^guard elements)")
      ->capture_default_str();
  count->add_option("--partitions", partitions,
                    "Worker partitions (default: HYPERSTAB_THREADS or 1)");
  add_output_flags(count, count_out);

  auto* closed = app.add_subcommand("closed-form", "Closed-form negative count, no enumeration");
  closed->add_option("--state", state_spec, "State spec");
  closed->add_option("--state-json", state_json, "State described in canonical JSON");
  add_output_flags(closed, closed_out);

  bool exhaustive = false, force_exhaustive = false;
  HeuristicOptions heur;
  auto* bell = app.add_subcommand("bell", "Bell-operator report: QM value, bounds, LHV maxima");
  bell->add_option("--state", state_spec, "State spec");
  bell->add_option("--state-json", state_json, "State described in canonical JSON");
  bell->add_flag("--exhaustive", exhaustive, "Also compute the exact LHV maximum");
  bell->add_flag("--force-exhaustive", force_exhaustive,
                 "Run the exhaustive search even beyond the 24-variable guard");
  bell->add_option("--seed", heur.seed, "Heuristic seed")->capture_default_str();
  bell->add_option("--restarts", heur.restarts, "Heuristic restarts")->capture_default_str();
  bell->add_option("--steps", heur.steps, "Heuristic steps per restart (0 = 10*3n)");
  bell->add_option("--guard-bits", guard_bits, "Enumeration guard")->capture_default_str();
  add_output_flags(bell, bell_out);

  HeuristicOptions table1_heur;
  auto* table1 = app.add_subcommand("table1", "Violation-degree comparison for the three "
                                              "reference 12-qubit states");
  table1->add_option("--seed", table1_heur.seed, "Heuristic seed")->capture_default_str();
  table1->add_option("--restarts", table1_heur.restarts, "Heuristic restarts")
      ->capture_default_str();
  add_output_flags(table1, table1_out);

  unsigned x_max = 5;
  auto* cases = app.add_subcommand("cases", "Evaluate the ten case-difference expressions");
  cases->add_option("--x-max", x_max, "Largest x per case")->capture_default_str();
  add_output_flags(cases, cases_out);

  std::string scenario_path, readout_csv_path;
  auto* simulate = app.add_subcommand("simulate", "Exact amplitude simulation of the optical "
                                                  "generation pipeline");
  simulate->add_option("--scenario", scenario_path, "Scenario JSON (default: bundled pipeline)");
  simulate->add_option("--readout-csv", readout_csv_path, "Also write the readout distribution CSV");
  add_output_flags(simulate, sim_out);

  CLI11_PARSE(app, argc, argv);

  try {
    if (*count) {
      const HyperState state = load_state(state_spec, state_json);
      const CountReport rep = build_count(state, guard_bits, partitions);
      if (count_out.format == "json")
        emit(count_out, json_text(to_json(rep, "count")));
      else if (count_out.format == "csv")
        emit(count_out, kv_csv(to_json(rep, "count")));
      else
        emit(count_out, render_table(rep));
    } else if (*closed) {
      const HyperState state = load_state(state_spec, state_json);
      const CountReport rep = build_closed(state);
      if (closed_out.format == "json")
        emit(closed_out, json_text(to_json(rep, "closed-form")));
      else if (closed_out.format == "csv")
        emit(closed_out, kv_csv(to_json(rep, "closed-form")));
      else
        emit(closed_out, render_table(rep));
    } else if (*bell) {
      const HyperState state = load_state(state_spec, state_json);
      BellOptions opts;
      opts.exhaustive = exhaustive;
      opts.force_exhaustive = force_exhaustive;
      opts.heuristic = heur;
      opts.guard_bits = guard_bits;
      const BellReport rep = bell_report(state, opts);
      if (bell_out.format == "json")
        emit(bell_out, json_text(to_json(rep, state)));
      else if (bell_out.format == "csv")
        emit(bell_out, kv_csv(to_json(rep, state)));
      else
        emit(bell_out, render_table(rep, state));
    } else if (*table1) {
      const Table1Report rep = build_table1(table1_heur);
      if (table1_out.format == "json")
        emit(table1_out, json_text(to_json(rep)));
      else if (table1_out.format == "csv")
        emit(table1_out, table1_csv(rep));
      else
        emit(table1_out, render_table(rep));
    } else if (*cases) {
      const CasesReport rep = build_cases(x_max);
      if (cases_out.format == "json")
        emit(cases_out, json_text(to_json(rep)));
      else
        emit(cases_out, cases_csv(rep));  // csv is the natural form; table falls back to csv
    } else if (*simulate) {
      SimulateReport rep;
      if (scenario_path.empty()) {
        rep = build_simulate();
      } else {
        std::ifstream f(scenario_path);
        if (!f) throw std::runtime_error("cannot open scenario file " + scenario_path);
        rep = run_scenario(scenario_from_json(Json::parse(f)));
      }
      if (!readout_csv_path.empty()) {
        OutputOptions ro{"csv", readout_csv_path};
        emit(ro, readout_csv(rep));
      }
      if (sim_out.format == "json")
        emit(sim_out, json_text(to_json(rep)));
      else if (sim_out.format == "csv")
        emit(sim_out, readout_csv(rep));
      else
        emit(sim_out, render_table(rep));
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
