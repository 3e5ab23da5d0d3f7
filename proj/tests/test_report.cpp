#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fstream>

#include "hyperstab/json_io.hpp"

using namespace hyperstab;

#ifndef HYPERSTAB_SOURCE_DIR
#define HYPERSTAB_SOURCE_DIR "."
#endif

TEST_CASE("count report on the 12-qubit state") {
  const CountReport r = build_count(HyperState::parse_spec("4:0000,4:0101,4:0000"),
                                    kDefaultGuardBits, 2);
  CHECK(r.n == 12);
  CHECK(r.group_size == 4096);
  CHECK(r.negatives == 2016);
  CHECK(r.closed_negatives == 2016);
  CHECK(r.bound == 64);
  CHECK(r.routes_agree);
  const CountReport c = build_closed(HyperState::parse_spec("12:000000000000"));
  CHECK(c.negatives == 1056);
  CHECK(c.bound == 1984);
  CHECK_FALSE(c.enumerated);
}

TEST_CASE("comparison table rows") {
  const Table1Report rep = build_table1();
  REQUIRE(rep.rows.size() == 3);

  const Table1Row& psi = rep.rows[0];
  CHECK(psi.name == "psi");
  CHECK(psi.qm == 4096);
  CHECK(psi.published_bound == 388);
  CHECK(psi.published_violation == "10.56");
  CHECK(psi.computed_negatives == 2016);
  CHECK(psi.computed_bound == 64);
  CHECK(psi.computed_violation == "64.00");
  CHECK_FALSE(psi.bound_matches);  // the documented discrepancy, flagged not hidden

  const Table1Row& psi1 = rep.rows[1];
  CHECK(psi1.computed_bound == 1024);
  CHECK(psi1.computed_violation == "4.00");
  CHECK(psi1.bound_matches);

  const Table1Row& psi2 = rep.rows[2];
  CHECK(psi2.computed_bound == 1984);
  CHECK(psi2.computed_violation == "2.06");
  CHECK(psi2.bound_matches);

  for (const Table1Row& row : rep.rows) {
    CHECK(row.heuristic_max >= static_cast<std::int64_t>(row.computed_bound.convert_to<long>()));
    CHECK(BigInt(row.heuristic_max) <= row.qm);
  }
}

TEST_CASE("cases report and CSV") {
  const CasesReport rep = build_cases(2);
  bool saw_case10 = false, saw_case3_x0 = false;
  for (const CaseResult& c : rep.rows) {
    if (c.case_id == 10) {
      saw_case10 = true;
      CHECK(c.corrected.has_value());
    }
    if (c.case_id == 3 && c.x == 0) {
      saw_case3_x0 = true;
      CHECK_FALSE(c.positive);
    }
  }
  CHECK(saw_case10);
  CHECK(saw_case3_x0);

  const std::string csv = cases_csv(rep);
  CHECK(csv.rfind("case_id,x,size_fine,size_coarse,printed_value,simplified_value,"
                  "recomputed_value,corrected_value,positive,printed_matches,note\n",
                  0) == 0);
  CHECK(csv.find("2^(4x+11)") != std::string::npos);
}

TEST_CASE("csv quoting") {
  CHECK(csv_escape("plain") == "plain");
  CHECK(csv_escape("a,b") == "\"a,b\"");
  CHECK(csv_escape("say \"hi\"") == "\"say \"\"hi\"\"\"");
  CHECK(csv_escape("line\nbreak") == "\"line\nbreak\"");
}

TEST_CASE("state json round trip") {
  const HyperState s = HyperState::parse_spec("4:0000,4:0101,4:0000");
  const Json j = state_to_json(s);
  CHECK(j.at("n") == 12);
  CHECK(j.at("blocks").size() == 3);
  CHECK(state_from_json(j) == s);
  CHECK(state_from_json(Json{{"spec", "2:00"}}) == HyperState::parse_spec("2:00"));
}

TEST_CASE("scenario round trip reproduces the builtin pipeline") {
  const Scenario sc = default_scenario();
  const SimulateReport direct = run_scenario(sc);
  const SimulateReport round = run_scenario(scenario_from_json(scenario_to_json(sc)));
  CHECK(direct.p_success == round.p_success);
  CHECK(direct.final_terms == round.final_terms);
  CHECK(direct.matches_target == round.matches_target);
  CHECK(direct.xpm_equivalent == round.xpm_equivalent);
}

TEST_CASE("the shipped scenario file matches the builtin pipeline") {
  std::ifstream f(std::string(HYPERSTAB_SOURCE_DIR) + "/scenarios/four_photon_12qubit.json");
  REQUIRE(f.good());
  const SimulateReport rep = run_scenario(scenario_from_json(Json::parse(f)));
  CHECK(rep.p_success == photonic::Rational(1, 8));
  CHECK(rep.matches_target);
  CHECK(rep.final_terms.size() == 8);
  REQUIRE(rep.xpm_equivalent.size() == 2);
  CHECK(rep.xpm_equivalent[0]);
  CHECK(rep.xpm_equivalent[1]);
}

TEST_CASE("simulate report content") {
  const SimulateReport rep = build_simulate();
  REQUIRE(rep.qnd_probabilities.size() == 2);
  CHECK(rep.qnd_probabilities[0] == photonic::Rational(1, 4));
  CHECK(rep.qnd_probabilities[1] == photonic::Rational(1, 2));
  CHECK(rep.p_success == photonic::Rational(1, 8));
  CHECK(rep.has_target);
  CHECK(rep.matches_target);
  CHECK(rep.readout_available);
  CHECK(rep.readout.size() == 8);
  const Json j = to_json(rep);
  CHECK(j.at("p_success") == "1/8");
  CHECK(j.at("matches_target") == true);
  const std::string csv = readout_csv(rep);
  CHECK(csv.find("000001010000,1/8") != std::string::npos);
}

TEST_CASE("json output is deterministic") {
  const Json a = to_json(build_table1());
  const Json b = to_json(build_table1());
  CHECK(a.dump(2) == b.dump(2));
  const Json c = to_json(build_count(HyperState::parse_spec("3:000"), kDefaultGuardBits, 1),
                         "count");
  const Json d = to_json(build_count(HyperState::parse_spec("3:000"), kDefaultGuardBits, 1),
                         "count");
  CHECK(c.dump(2) == d.dump(2));
}

TEST_CASE("human tables carry the headline numbers") {
  const std::string t = render_table(build_table1());
  CHECK(t.find("388") != std::string::npos);
  CHECK(t.find("64") != std::string::npos);
  CHECK(t.find("NO") != std::string::npos);  // the psi mismatch flag
  const std::string b = render_table(bell_report(HyperState::parse_spec("3:000"), {}),
                                     HyperState::parse_spec("3:000"));
  CHECK(b.find("all-plus bound") != std::string::npos);
  const std::string o = render_table(ordering_report(12));
  CHECK(o.find("2016") != std::string::npos);
}
