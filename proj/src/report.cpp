#include "hyperstab/report.hpp"

namespace hyperstab {

CountReport build_count(const HyperState& state, std::size_t guard_bits, unsigned partitions) {
  CountReport r;
  r.spec = state.spec_string();
  r.n = state.qubit_count();
  r.group_size = BigInt(1) << r.n;
  r.negatives = partitions > 1 ? count_negative_partitioned(state, partitions, guard_bits)
                               : count_negative(state, guard_bits);
  r.closed_negatives = count_negative_closed(state);
  r.bound = r.group_size - 2 * r.negatives;
  r.enumerated = true;
  r.routes_agree = r.negatives == r.closed_negatives;
  return r;
}

CountReport build_closed(const HyperState& state) {
  CountReport r;
  r.spec = state.spec_string();
  r.n = state.qubit_count();
  r.group_size = BigInt(1) << r.n;
  r.closed_negatives = count_negative_closed(state);
  r.negatives = r.closed_negatives;
  r.bound = r.group_size - 2 * r.negatives;
  r.enumerated = false;
  r.routes_agree = true;
  return r;
}

Table1Report build_table1(const HeuristicOptions& heuristic, std::size_t guard_bits) {
  struct Published {
    const char* name;
    const char* spec;
    long bound;
    const char* violation;
  };
  static const Published kRows[] = {
      {"psi", "4:0000,4:0101,4:0000", 388, "10.56"},
      {"psi'", "6:000000,6:000000", 1024, "4.00"},
      {"psi''", "12:000000000000", 1984, "2.06"},
  };
  Table1Report rep;
  for (const Published& p : kRows) {
    const HyperState state = HyperState::parse_spec(p.spec);
    Table1Row row;
    row.name = p.name;
    row.spec = p.spec;
    row.qm = qm_expectation(state);
    row.published_bound = p.bound;
    row.published_violation = p.violation;
    row.computed_negatives = count_negative(state, guard_bits);
    row.computed_bound = row.qm - 2 * BigInt(row.computed_negatives);
    row.computed_violation = format_ratio_2dp(row.qm, row.computed_bound);
    row.heuristic_max = lhvt_max_heuristic(state, heuristic, guard_bits);
    row.bound_matches = row.computed_bound == row.published_bound;
    rep.rows.push_back(std::move(row));
  }
  return rep;
}

CasesReport build_cases(unsigned x_max) {
  CasesReport rep;
  rep.x_max = x_max;
  for (int cid = 1; cid <= 10; ++cid)
    for (unsigned x = case_min_x(cid); x <= x_max; ++x)
      rep.rows.push_back(case_difference(cid, x));
  return rep;
}

Scenario default_scenario() {
  using namespace photonic;
  Scenario sc;
  sc.name = "four-photon 12-qubit hyperentanglement";
  auto stage = [&sc](const std::string& type) -> ScenarioStage& {
    sc.stages.emplace_back();
    sc.stages.back().type = type;
    return sc.stages.back();
  };
  stage("spdc");
  { auto& s = stage("pbs"); s.photon = Photon::A; s.pbs = protocol_pbs_map(Photon::A); }
  { auto& s = stage("pbs"); s.photon = Photon::C; s.pbs = protocol_pbs_map(Photon::C); s.label = "pbs"; }
  { auto& s = stage("qnd"); s.qnd = protocol_qnd1(); s.label = "qnd1"; }
  { auto& s = stage("od"); s.photon = Photon::B; s.od = protocol_od_map(Photon::B); }
  { auto& s = stage("od"); s.photon = Photon::D; s.od = protocol_od_map(Photon::D); s.label = "od"; }
  { auto& s = stage("qnd"); s.qnd = protocol_qnd2(); s.label = "qnd2"; }
  { auto& s = stage("om"); s.photon = Photon::B; s.om = protocol_om_map(Photon::B); }
  { auto& s = stage("om"); s.photon = Photon::D; s.om = protocol_om_map(Photon::D); }
  sc.target_spec = protocol_target_state().spec_string();
  sc.xpm_checks.push_back({protocol_qnd1(), protocol_double_xpm_first(),
                           protocol_qnd1_domain(Photon::A), protocol_qnd1_domain(Photon::C)});
  sc.xpm_checks.push_back({protocol_qnd2(), protocol_double_xpm_second(),
                           protocol_qnd2_domain(Photon::B), protocol_qnd2_domain(Photon::D)});
  return sc;
}

SimulateReport run_scenario(const Scenario& scenario) {
  using namespace photonic;
  SimulateReport rep;
  rep.scenario_name = scenario.name;
  AmplitudeState state;
  bool started = false;
  rep.p_success = 1;
  for (const ScenarioStage& st : scenario.stages) {
    if (st.type == "spdc") {
      state = spdc_initial();
      started = true;
    } else if (!started) {
      throw std::invalid_argument("scenario: first stage must be \"spdc\"");
    } else if (st.type == "pbs") {
      state = apply_pbs(state, st.photon, st.pbs);
    } else if (st.type == "qnd") {
      auto [kept, p] = apply_qnd(state, st.qnd);
      state = std::move(kept);
      rep.qnd_probabilities.push_back(p);
      rep.p_success *= p;
    } else if (st.type == "od") {
      state = apply_od(state, st.photon, st.od);
    } else if (st.type == "om") {
      state = apply_om(state, st.photon, st.om);
    } else {
      throw std::invalid_argument("scenario: unknown stage type \"" + st.type + "\"");
    }
    if (!st.label.empty()) state.stage = st.label;
  }
  if (!started) throw std::invalid_argument("scenario: no stages");
  state.stage = "final";
  rep.final_terms.assign(state.terms.begin(), state.terms.end());
  if (!scenario.target_spec.empty()) {
    rep.has_target = true;
    rep.target_spec = scenario.target_spec;
    const HyperState target = HyperState::parse_spec(scenario.target_spec);
    rep.matches_target = equals_state_vector_up_to_scalar(state, state_vector(target));
  }
  for (const XpmCheck& chk : scenario.xpm_checks)
    rep.xpm_equivalent.push_back(
        double_xpm_equivalence(chk.single, chk.dbl, chk.first_domain, chk.second_domain));
  try {
    for (const auto& [outcome, p] : measurement_readout(state)) rep.readout.emplace_back(outcome, p);
    rep.readout_available = true;
  } catch (const std::exception&) {
    rep.readout_available = false;
    rep.readout.clear();
  }
  return rep;
}

std::string csv_escape(const std::string& field) {
  if (field.find_first_of(",\"\n\r") == std::string::npos) return field;
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

std::string render_bitstring(std::uint32_t outcome, std::size_t bits) {
  std::string s(bits, '0');
  for (std::size_t j = 0; j < bits; ++j)
    if ((outcome >> j) & 1u) s[j] = '1';
  return s;
}

}  // namespace hyperstab
