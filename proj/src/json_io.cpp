#include "hyperstab/json_io.hpp"

#include <iomanip>
#include <sstream>

namespace hyperstab {

namespace {

std::string rat_str(const BigRational& r) {
  std::ostringstream os;
  os << r;
  return os.str();
}

const char* pol_str(photonic::Polarization p) {
  return p == photonic::Polarization::H ? "H" : "V";
}
const char* freq_str(photonic::Frequency f) {
  return f == photonic::Frequency::Omega1 ? "omega1" : "omega2";
}

Json amp_json(const photonic::ExactComplex& a) {
  return Json{{"re", rat_str(a.re)}, {"im", rat_str(a.im)}};
}

photonic::Photon photon_at(const Json& j, const char* key) {
  return photonic::photon_from_string(j.at(key).get<std::string>());
}

}  // namespace

Json state_to_json(const HyperState& state) {
  Json blocks = Json::array();
  for (const GhzBlock& b : state.blocks()) {
    std::string mask;
    for (std::size_t j = 0; j < b.m; ++j) mask += b.mask_bit(j) ? '1' : '0';
    blocks.push_back(Json{{"m", b.m}, {"parity_mask", mask}, {"dof_label", b.dof_label}});
  }
  return Json{{"spec", state.spec_string()},
              {"n", state.qubit_count()},
              {"blocks", std::move(blocks)}};
}

HyperState state_from_json(const Json& j) {
  if (j.contains("blocks")) {
    std::vector<GhzBlock> blocks;
    for (const Json& jb : j.at("blocks")) {
      blocks.push_back(make_block(jb.at("m").get<std::size_t>(),
                                  jb.at("parity_mask").get<std::string>(),
                                  jb.value("dof_label", std::string{})));
    }
    return HyperState(std::move(blocks));
  }
  return HyperState::parse_spec(j.at("spec").get<std::string>());
}

Scenario scenario_from_json(const Json& j) {
  using namespace photonic;
  Scenario sc;
  sc.name = j.value("name", std::string{});
  for (const Json& js : j.at("stages")) {
    ScenarioStage st;
    st.type = js.at("type").get<std::string>();
    st.label = js.value("label", std::string{});
    if (st.type == "pbs") {
      st.photon = photon_at(js, "photon");
      for (const auto& [in, ports] : js.at("ports").items())
        st.pbs[in] = {ports.at(0).get<std::string>(), ports.at(1).get<std::string>()};
    } else if (st.type == "qnd") {
      for (const auto& [path, shift] : js.at("shifts").items())
        st.qnd.shifts[path] = shift.get<int>();
      st.qnd.keep_total = js.value("keep_total", 1);
    } else if (st.type == "od") {
      st.photon = photon_at(js, "photon");
      for (const auto& [in, outs] : js.at("split").items())
        st.od[in] = {outs.at(0).get<std::string>(), outs.at(1).get<std::string>()};
    } else if (st.type == "om") {
      st.photon = photon_at(js, "photon");
      for (const auto& [merged, ins] : js.at("merge").items())
        st.om[merged] = {ins.at(0).get<std::string>(), ins.at(1).get<std::string>()};
    } else if (st.type != "spdc") {
      throw std::invalid_argument("scenario: unknown stage type \"" + st.type + "\"");
    }
    sc.stages.push_back(std::move(st));
  }
  sc.target_spec = j.value("target_state", std::string{});
  if (j.contains("double_xpm")) {
    for (const Json& jc : j.at("double_xpm")) {
      XpmCheck chk;
      for (const auto& [path, shift] : jc.at("single").at("shifts").items())
        chk.single.shifts[path] = shift.get<int>();
      chk.single.keep_total = jc.at("single").value("keep_total", 1);
      for (const auto& [path, shift] : jc.at("beam1").items())
        chk.dbl.beam1[path] = shift.get<int>();
      for (const auto& [path, shift] : jc.at("beam2").items())
        chk.dbl.beam2[path] = shift.get<int>();
      chk.first_domain = jc.at("first_domain").get<std::vector<std::string>>();
      chk.second_domain = jc.at("second_domain").get<std::vector<std::string>>();
      sc.xpm_checks.push_back(std::move(chk));
    }
  }
  return sc;
}

Json scenario_to_json(const Scenario& sc) {
  using namespace photonic;
  Json stages = Json::array();
  for (const ScenarioStage& st : sc.stages) {
    Json js{{"type", st.type}};
    if (st.type == "pbs") {
      js["photon"] = to_string(st.photon);
      Json ports;
      for (const auto& [in, p] : st.pbs) ports[in] = Json::array({p.transmit, p.reflect});
      js["ports"] = std::move(ports);
    } else if (st.type == "qnd") {
      Json shifts;
      for (const auto& [path, s] : st.qnd.shifts) shifts[path] = s;
      js["shifts"] = std::move(shifts);
      js["keep_total"] = st.qnd.keep_total;
    } else if (st.type == "od") {
      js["photon"] = to_string(st.photon);
      Json split;
      for (const auto& [in, o] : st.od) split[in] = Json::array({o.omega1_out, o.omega2_out});
      js["split"] = std::move(split);
    } else if (st.type == "om") {
      js["photon"] = to_string(st.photon);
      Json merge;
      for (const auto& [merged, ins] : st.om) merge[merged] = Json::array({ins.first, ins.second});
      js["merge"] = std::move(merge);
    }
    if (!st.label.empty()) js["label"] = st.label;
    stages.push_back(std::move(js));
  }
  Json j{{"name", sc.name}, {"stages", std::move(stages)}};
  if (!sc.target_spec.empty()) j["target_state"] = sc.target_spec;
  if (!sc.xpm_checks.empty()) {
    Json checks = Json::array();
    for (const XpmCheck& chk : sc.xpm_checks) {
      Json shifts;
      for (const auto& [path, s] : chk.single.shifts) shifts[path] = s;
      Json b1, b2;
      for (const auto& [path, s] : chk.dbl.beam1) b1[path] = s;
      for (const auto& [path, s] : chk.dbl.beam2) b2[path] = s;
      checks.push_back(Json{{"single", Json{{"shifts", std::move(shifts)},
                                            {"keep_total", chk.single.keep_total}}},
                            {"beam1", std::move(b1)},
                            {"beam2", std::move(b2)},
                            {"first_domain", chk.first_domain},
                            {"second_domain", chk.second_domain}});
    }
    j["double_xpm"] = std::move(checks);
  }
  return j;
}

Json to_json(const CountReport& r, const std::string& command) {
  return Json{{"command", command},
              {"state", state_to_json(HyperState::parse_spec(r.spec))},
              {"group_size", r.group_size.str()},
              {"negatives", r.negatives.str()},
              {"closed_form_negatives", r.closed_negatives.str()},
              {"all_plus_bound", r.bound.str()},
              {"enumerated", r.enumerated},
              {"routes_agree", r.routes_agree}};
}

Json to_json(const BellReport& r, const HyperState& state) {
  Json j{{"command", "bell"},
         {"state", state_to_json(state)},
         {"qm_expectation", r.qm_value.str()},
         {"negatives", r.negatives.str()},
         {"all_plus_bound", r.bound.str()},
         {"exhaustive_max", nullptr},
         {"heuristic_max", r.heuristic_max},
         {"violation_ratio", rat_str(r.violation_ratio)},
         {"violation_2dp", r.violation_2dp}};
  if (r.exhaustive_max) j["exhaustive_max"] = *r.exhaustive_max;
  return j;
}

Json to_json(const Table1Report& r) {
  Json rows = Json::array();
  for (const Table1Row& row : r.rows) {
    rows.push_back(Json{{"state", row.name},
                        {"spec", row.spec},
                        {"qm_expectation", row.qm.str()},
                        {"published_bound", row.published_bound.str()},
                        {"published_violation", row.published_violation},
                        {"computed_negatives", row.computed_negatives.str()},
                        {"computed_bound", row.computed_bound.str()},
                        {"computed_violation", row.computed_violation},
                        {"heuristic_lhv_lower_bound", row.heuristic_max},
                        {"bound_matches", row.bound_matches}});
  }
  return Json{{"command", "table1"}, {"rows", std::move(rows)}};
}

Json to_json(const CasesReport& r) {
  Json rows = Json::array();
  for (const CaseResult& c : r.rows) {
    Json row{{"case_id", c.case_id},
             {"x", c.x},
             {"size_fine", c.size_fine},
             {"size_coarse", c.size_coarse},
             {"printed_value", c.printed.str()},
             {"simplified_value", c.simplified.str()},
             {"recomputed_value", c.recomputed.str()},
             {"corrected_value", nullptr},
             {"positive", c.positive},
             {"printed_matches", c.printed_matches}};
    if (c.corrected) row["corrected_value"] = c.corrected->str();
    rows.push_back(std::move(row));
  }
  return Json{{"command", "cases"}, {"x_max", r.x_max}, {"rows", std::move(rows)}};
}

Json to_json(const SimulateReport& r) {
  using namespace photonic;
  Json terms = Json::array();
  for (const auto& [modes, amp] : r.final_terms) {
    Json jmodes = Json::array();
    for (std::size_t i = 0; i < 4; ++i)
      jmodes.push_back(Json{{"photon", to_string(static_cast<Photon>(i))},
                            {"polarization", pol_str(modes[i].pol)},
                            {"frequency", freq_str(modes[i].freq)},
                            {"path", modes[i].path}});
    terms.push_back(Json{{"modes", std::move(jmodes)}, {"amplitude", amp_json(amp)}});
  }
  Json probs = Json::array();
  for (const auto& p : r.qnd_probabilities) probs.push_back(rat_str(p));
  Json j{{"command", "simulate"},
         {"scenario", r.scenario_name},
         {"final_terms", std::move(terms)},
         {"qnd_probabilities", std::move(probs)},
         {"p_success", rat_str(r.p_success)},
         {"target_state", nullptr},
         {"matches_target", nullptr},
         {"double_xpm_equivalent", r.xpm_equivalent},
         {"readout", nullptr}};
  if (r.has_target) {
    j["target_state"] = r.target_spec;
    j["matches_target"] = r.matches_target;
  }
  if (r.readout_available) {
    Json readout = Json::array();
    for (const auto& [outcome, p] : r.readout)
      readout.push_back(Json{{"outcome", render_bitstring(outcome, r.outcome_bits)},
                             {"probability", rat_str(p)}});
    j["readout"] = std::move(readout);
  }
  return j;
}

Json to_json(const OrderingReport& r) {
  return Json{{"command", "ordering"},
              {"q", r.q},
              {"three_blocks", r.c1.str()},
              {"two_blocks", r.c2.str()},
              {"one_block", r.c3.str()},
              {"strictly_decreasing", r.strictly_decreasing}};
}

namespace {

std::string pad(const std::string& s, std::size_t w) {
  return s.size() >= w ? s : s + std::string(w - s.size(), ' ');
}

}  // namespace

std::string render_table(const CountReport& r) {
  std::ostringstream os;
  os << "state            " << r.spec << "\n"
     << "qubits           " << r.n << "\n"
     << "group size       " << r.group_size.str() << "\n"
     << "negatives        " << r.negatives.str()
     << (r.enumerated ? "  (enumerated)" : "  (closed form)") << "\n"
     << "closed form      " << r.closed_negatives.str() << "\n"
     << "all-plus bound   " << r.bound.str() << "\n"
     << "routes agree     " << (r.routes_agree ? "yes" : "NO") << "\n";
  return os.str();
}

std::string render_table(const BellReport& r, const HyperState& state) {
  std::ostringstream os;
  os << "state               " << state.spec_string() << "\n"
     << "qm expectation      " << r.qm_value.str() << "\n"
     << "negatives C         " << r.negatives.str() << "\n"
     << "all-plus bound      " << r.bound.str() << "\n";
  if (r.exhaustive_max)
    os << "exhaustive LHV max  " << *r.exhaustive_max << "\n";
  os << "heuristic LHV max   " << r.heuristic_max << "  (achieved lower bound)\n"
     << "violation ratio     " << rat_str(r.violation_ratio) << " = " << r.violation_2dp << "\n";
  return os.str();
}

std::string render_table(const Table1Report& r) {
  std::ostringstream os;
  os << pad("state", 8) << pad("<B>_QM", 8) << pad("published", 11) << pad("computed", 10)
     << pad("heuristic", 11) << pad("pub_D", 8) << pad("comp_D", 8) << "match\n";
  for (const Table1Row& row : r.rows) {
    os << pad(row.name, 8) << pad(row.qm.str(), 8) << pad(row.published_bound.str(), 11)
       << pad(row.computed_bound.str(), 10) << pad(std::to_string(row.heuristic_max), 11)
       << pad(row.published_violation, 8) << pad(row.computed_violation, 8)
       << (row.bound_matches ? "yes" : "NO") << "\n";
  }
  return os.str();
}

std::string render_table(const SimulateReport& r) {
  using namespace photonic;
  std::ostringstream os;
  os << "scenario: " << r.scenario_name << "\n";
  os << "final terms (" << r.final_terms.size() << "):\n";
  for (const auto& [modes, amp] : r.final_terms) {
    os << "  ";
    for (std::size_t i = 0; i < 4; ++i) {
      if (i) os << "  ";
      os << to_string(static_cast<Photon>(i)) << ":" << pol_str(modes[i].pol) << ","
         << freq_str(modes[i].freq) << "," << modes[i].path;
    }
    os << "   amp " << rat_str(amp.re);
    if (amp.im != 0) os << (amp.im > 0 ? "+" : "") << rat_str(amp.im) << "i";
    os << "\n";
  }
  for (std::size_t i = 0; i < r.qnd_probabilities.size(); ++i)
    os << "qnd " << (i + 1) << " success    " << rat_str(r.qnd_probabilities[i]) << "\n";
  os << "p_success        " << rat_str(r.p_success) << "\n";
  if (r.has_target)
    os << "matches target   " << (r.matches_target ? "yes" : "NO") << "  (" << r.target_spec
       << ")\n";
  for (std::size_t i = 0; i < r.xpm_equivalent.size(); ++i)
    os << "double-XPM " << (i + 1) << "     " << (r.xpm_equivalent[i] ? "equivalent" : "NOT equivalent")
       << "\n";
  if (r.readout_available) {
    os << "readout:\n";
    for (const auto& [outcome, p] : r.readout)
      os << "  " << render_bitstring(outcome, r.outcome_bits) << "  " << rat_str(p) << "\n";
  }
  return os.str();
}

std::string render_table(const OrderingReport& r) {
  std::ostringstream os;
  os << "qubits            " << r.q << "\n"
     << "three blocks C1   " << r.c1.str() << "\n"
     << "two blocks   C2   " << r.c2.str() << "\n"
     << "one block    C3   " << r.c3.str() << "\n"
     << "C1 > C2 > C3      " << (r.strictly_decreasing ? "yes" : "NO") << "\n";
  return os.str();
}

std::string cases_csv(const CasesReport& r) {
  std::ostringstream os;
  os << "case_id,x,size_fine,size_coarse,printed_value,simplified_value,recomputed_value,"
        "corrected_value,positive,printed_matches,note\n";
  for (const CaseResult& c : r.rows) {
    std::string note;
    if (c.corrected)
      note = "printed construction reads 2^(4x+11); corrected column uses 2^(4x+1)";
    os << c.case_id << ',' << c.x << ',' << c.size_fine << ',' << c.size_coarse << ','
       << c.printed.str() << ',' << c.simplified.str() << ',' << c.recomputed.str() << ','
       << (c.corrected ? c.corrected->str() : std::string{}) << ','
       << (c.positive ? "true" : "false") << ',' << (c.printed_matches ? "true" : "false") << ','
       << csv_escape(note) << "\n";
  }
  return os.str();
}

std::string table1_csv(const Table1Report& r) {
  std::ostringstream os;
  os << "state,spec,qm_expectation,published_bound,computed_negatives,computed_bound,"
        "heuristic_lhv_lower_bound,published_violation,computed_violation,bound_matches\n";
  for (const Table1Row& row : r.rows) {
    os << csv_escape(row.name) << ',' << csv_escape(row.spec) << ',' << row.qm.str() << ','
       << row.published_bound.str() << ',' << row.computed_negatives.str() << ','
       << row.computed_bound.str() << ',' << row.heuristic_max << ','
       << row.published_violation << ',' << row.computed_violation << ','
       << (row.bound_matches ? "true" : "false") << "\n";
  }
  return os.str();
}

std::string readout_csv(const SimulateReport& r) {
  std::ostringstream os;
  os << "outcome,probability\n";
  for (const auto& [outcome, p] : r.readout)
    os << render_bitstring(outcome, r.outcome_bits) << ',' << rat_str(p) << "\n";
  return os.str();
}

}  // namespace hyperstab
