#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hyperstab/bell.hpp"
#include "hyperstab/closed_forms.hpp"
#include "hyperstab/photonic.hpp"
#include "hyperstab/stabilizer.hpp"

namespace hyperstab {

struct CountReport {
  std::string spec;
  std::size_t n = 0;
  BigInt group_size;
  BigInt negatives;         // result of the command's own route
  BigInt closed_negatives;  // closed-form cross-check
  BigInt bound;             // 2^n - 2*negatives
  bool enumerated = false;
  bool routes_agree = false;
};

/// count command: full enumeration (optionally partitioned) plus the closed
/// form side by side.
CountReport build_count(const HyperState& state, std::size_t guard_bits, unsigned partitions);

/// closed-form command: per-block composite count only.
CountReport build_closed(const HyperState& state);

/// Published comparison-table figures for the three reference 12-qubit
/// states, reproduced next to computed values.
struct Table1Row {
  std::string name;
  std::string spec;
  BigInt qm;
  BigInt published_bound;
  std::string published_violation;
  BigInt computed_negatives;
  BigInt computed_bound;
  std::string computed_violation;
  std::int64_t heuristic_max = 0;
  bool bound_matches = false;
};

struct Table1Report {
  std::vector<Table1Row> rows;
};

Table1Report build_table1(const HeuristicOptions& heuristic = {},
                          std::size_t guard_bits = kDefaultGuardBits);

struct CasesReport {
  unsigned x_max = 0;
  std::vector<CaseResult> rows;
};

CasesReport build_cases(unsigned x_max);

struct ScenarioStage {
  std::string type;  // "spdc" | "pbs" | "qnd" | "od" | "om"
  photonic::Photon photon = photonic::Photon::A;
  photonic::PbsMap pbs;
  photonic::QndConfig qnd;
  photonic::OdMap od;
  photonic::OmMap om;
  std::string label;  // stage tag applied after this step (optional)
};

struct XpmCheck {
  photonic::QndConfig single;
  photonic::DoubleXpmConfig dbl;
  std::vector<std::string> first_domain;
  std::vector<std::string> second_domain;
};

struct Scenario {
  std::string name;
  std::vector<ScenarioStage> stages;
  std::string target_spec;  // empty -> skip the state-vector comparison
  std::vector<XpmCheck> xpm_checks;
};

/// The bundled four-photon pipeline.
Scenario default_scenario();

struct SimulateReport {
  std::string scenario_name;
  std::vector<std::pair<photonic::ModeTuple, photonic::ExactComplex>> final_terms;
  std::vector<photonic::Rational> qnd_probabilities;  // one per qnd stage, in order
  photonic::Rational p_success;                       // product of the above
  std::string target_spec;
  bool has_target = false;
  bool matches_target = false;
  std::vector<bool> xpm_equivalent;  // one per configured check
  bool readout_available = false;
  std::vector<std::pair<std::uint32_t, photonic::Rational>> readout;
  std::size_t outcome_bits = 12;
};

SimulateReport run_scenario(const Scenario& scenario);
inline SimulateReport build_simulate() { return run_scenario(default_scenario()); }

/// RFC-4180-style field quoting.
std::string csv_escape(const std::string& field);

std::string render_bitstring(std::uint32_t outcome, std::size_t bits);

}  // namespace hyperstab
