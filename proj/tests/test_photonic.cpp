#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "hyperstab/photonic.hpp"
#include "hyperstab/stabilizer.hpp"

using namespace hyperstab;
using namespace hyperstab::photonic;

namespace {

ModeTuple tuple_of(Polarization pa, Frequency fa, const std::string& patha, Polarization pb,
                   Frequency fb, const std::string& pathb, Polarization pc, Frequency fc,
                   const std::string& pathc, Polarization pd, Frequency fd,
                   const std::string& pathd) {
  return {PhotonMode{pa, fa, patha}, PhotonMode{pb, fb, pathb}, PhotonMode{pc, fc, pathc},
          PhotonMode{pd, fd, pathd}};
}

const ExactComplex kOne{1, 0};

}  // namespace

TEST_CASE("source state: 64 unit terms with pairwise correlations") {
  const AmplitudeState s = spdc_initial();
  CHECK(s.terms.size() == 64);
  CHECK(s.norm_sq() == 64);
  const ModeTuple present =
      tuple_of(Polarization::H, Frequency::Omega1, "a1", Polarization::H, Frequency::Omega2, "b1",
               Polarization::H, Frequency::Omega1, "c1", Polarization::H, Frequency::Omega2, "d1");
  REQUIRE(s.terms.count(present) == 1);
  CHECK(s.terms.at(present) == kOne);
  // a and b are polarization-correlated within the pair.
  const ModeTuple absent =
      tuple_of(Polarization::H, Frequency::Omega1, "a1", Polarization::V, Frequency::Omega2, "b1",
               Polarization::H, Frequency::Omega1, "c1", Polarization::H, Frequency::Omega2, "d1");
  CHECK(s.terms.count(absent) == 0);
}

TEST_CASE("polarizing beam splitter relabels by polarization") {
  const AmplitudeState s = spdc_initial();
  const AmplitudeState after = apply_pbs(s, Photon::A, protocol_pbs_map(Photon::A));
  CHECK(after.terms.size() == s.terms.size());
  CHECK(after.norm_sq() == s.norm_sq());
  for (const auto& [modes, amp] : after.terms) {
    CHECK(amp == kOne);
    if (modes[0].pol == Polarization::H)
      CHECK((modes[0].path == "a'1" || modes[0].path == "a'2"));  // transmitted
    else
      CHECK((modes[0].path == "c'1" || modes[0].path == "c'2"));  // reflected
  }
  CHECK_THROWS_AS(apply_pbs(after, Photon::A, protocol_pbs_map(Photon::A)),
                  std::invalid_argument);  // a'1 is not an input of this element
}

TEST_CASE("identity post-selection keeps everything") {
  const AmplitudeState s = spdc_initial();
  const auto [kept, p] = apply_qnd(s, QndConfig{{}, 0});
  CHECK(kept.terms.size() == 64);
  CHECK(p == 1);
}

TEST_CASE("first post-selection keeps matched ports and halves twice") {
  AmplitudeState s = spdc_initial();
  s = apply_pbs(s, Photon::A, protocol_pbs_map(Photon::A));
  s = apply_pbs(s, Photon::C, protocol_pbs_map(Photon::C));
  const auto [kept, p] = apply_qnd(s, protocol_qnd1());
  CHECK(kept.terms.size() == 16);
  CHECK(p == Rational(1, 4));
  for (const auto& [modes, amp] : kept.terms) {
    const std::set<std::string> ports{modes[0].path, modes[2].path};
    const bool low = ports == std::set<std::string>{"a'1", "c'1"};
    const bool high = ports == std::set<std::string>{"a'2", "c'2"};
    CHECK((low || high));
    CHECK(modes[0].pol == modes[2].pol);  // the same click aligns the polarizations
  }
  CHECK_THROWS_AS(apply_qnd(s, QndConfig{{{"a'1", 1}}, 999}), std::runtime_error);
}

TEST_CASE("demultiplexer splits by frequency") {
  AmplitudeState s;
  s.insert(tuple_of(Polarization::H, Frequency::Omega1, "a1", Polarization::H, Frequency::Omega1,
                    "b1", Polarization::H, Frequency::Omega1, "c1", Polarization::H,
                    Frequency::Omega2, "d1"),
           kOne);
  const AmplitudeState after = apply_od(s, Photon::B, protocol_od_map(Photon::B));
  CHECK(after.terms.begin()->first[1].path == "b11");
  AmplitudeState s2;
  s2.insert(tuple_of(Polarization::H, Frequency::Omega1, "a1", Polarization::H, Frequency::Omega2,
                     "b1", Polarization::H, Frequency::Omega1, "c1", Polarization::H,
                     Frequency::Omega2, "d1"),
            kOne);
  CHECK(apply_od(s2, Photon::B, protocol_od_map(Photon::B)).terms.begin()->first[1].path == "b12");
  CHECK_THROWS_AS(apply_od(after, Photon::B, protocol_od_map(Photon::B)), std::invalid_argument);
}

TEST_CASE("demultiplexer then multiplexer is the identity") {
  AmplitudeState s = spdc_initial();
  const AmplitudeState split = apply_od(s, Photon::B, protocol_od_map(Photon::B));
  OmMap inverse = {{"b1", {"b11", "b12"}}, {"b2", {"b21", "b22"}}};
  const AmplitudeState merged = apply_om(split, Photon::B, inverse);
  CHECK(merged.terms == s.terms);
}

TEST_CASE("multiplexer collisions are modeling errors") {
  AmplitudeState s;
  // Same frequency reaching both inputs of one multiplexer cannot happen in a
  // consistent pipeline; it must be flagged, not silently summed.
  s.insert(tuple_of(Polarization::H, Frequency::Omega1, "a1", Polarization::H, Frequency::Omega1,
                    "b11", Polarization::H, Frequency::Omega1, "c1", Polarization::H,
                    Frequency::Omega1, "d1"),
           kOne);
  s.insert(tuple_of(Polarization::H, Frequency::Omega1, "a1", Polarization::H, Frequency::Omega1,
                    "b12", Polarization::H, Frequency::Omega1, "c1", Polarization::H,
                    Frequency::Omega1, "d1"),
           kOne);
  CHECK_THROWS_AS(apply_om(s, Photon::B, protocol_om_map(Photon::B)), std::logic_error);
}

TEST_CASE("full pipeline: exact state, exact probabilities") {
  const ProtocolResult res = run_protocol();
  CHECK(res.p_qnd1 == Rational(1, 4));
  CHECK(res.p_qnd2 == Rational(1, 2));
  CHECK(res.p_success == Rational(1, 8));
  CHECK(res.final_state.terms.size() == 8);
  for (const auto& [modes, amp] : res.final_state.terms) CHECK(amp == kOne);
  // The encoded final state is exactly the 12-qubit target vector.
  CHECK(equals_state_vector_up_to_scalar(res.final_state, state_vector(protocol_target_state())));
}

TEST_CASE("final state is scale-insensitive and term-sensitive") {
  ProtocolResult res = run_protocol();
  const StateVector target = state_vector(protocol_target_state());
  AmplitudeState scaled = res.final_state;
  for (auto& [modes, amp] : scaled.terms) amp = amp * ExactComplex{3, 1};
  CHECK(equals_state_vector_up_to_scalar(scaled, target));
  AmplitudeState broken = res.final_state;
  broken.terms.erase(broken.terms.begin());
  CHECK_FALSE(equals_state_vector_up_to_scalar(broken, target));
  AmplitudeState skewed = res.final_state;
  skewed.terms.begin()->second = ExactComplex{2, 0};
  CHECK_FALSE(equals_state_vector_up_to_scalar(skewed, target));
}

TEST_CASE("readout distribution is uniform over the eight expansion terms") {
  const ProtocolResult res = run_protocol();
  const auto dist = measurement_readout(res.final_state);
  REQUIRE(dist.size() == 8);
  for (const auto& [outcome, p] : dist) CHECK(p == Rational(1, 8));
  // |0000 0101 0000>: frequency bits on photons b and d.
  const std::uint32_t all_h = (1u << 5) | (1u << 7);
  CHECK(dist.count(all_h) == 1);
  CHECK(dist.count(4095u ^ all_h) == 1);
  // Mixed-polarization outcomes never fire.
  CHECK(dist.count(1u) == 0);
  CHECK_THROWS_AS(measurement_readout(spdc_initial()), std::logic_error);
}

TEST_CASE("double-XPM accept sets match the single-probe configurations") {
  CHECK(double_xpm_equivalence(protocol_qnd1(), protocol_double_xpm_first(),
                               protocol_qnd1_domain(Photon::A), protocol_qnd1_domain(Photon::C)));
  CHECK(double_xpm_equivalence(protocol_qnd2(), protocol_double_xpm_second(),
                               protocol_qnd2_domain(Photon::B), protocol_qnd2_domain(Photon::D)));
  // Degenerate beams accept nothing and are inequivalent.
  DoubleXpmConfig empty_accept{{{"a'1", 1}, {"a'2", 1}}, {{"c'1", 2}, {"c'2", 2}}};
  CHECK_FALSE(double_xpm_equivalence(protocol_qnd1(), empty_accept,
                                     protocol_qnd1_domain(Photon::A),
                                     protocol_qnd1_domain(Photon::C)));
  DoubleXpmConfig negative{{{"a'1", -1}}, {{"c'1", 1}}};
  CHECK_THROWS_AS(double_xpm_equivalence(protocol_qnd1(), negative,
                                         protocol_qnd1_domain(Photon::A),
                                         protocol_qnd1_domain(Photon::C)),
                  std::invalid_argument);
}

TEST_CASE("term encoding") {
  const ModeTuple t =
      tuple_of(Polarization::H, Frequency::Omega1, "a'1", Polarization::H, Frequency::Omega2,
               "b'1", Polarization::H, Frequency::Omega1, "c'1", Polarization::H,
               Frequency::Omega2, "d'1");
  CHECK(encode_term(t) == ((1u << 5) | (1u << 7)));
  ModeTuple bad = t;
  bad[0].path = "a'";
  CHECK_THROWS_AS(encode_term(bad), std::invalid_argument);
}

TEST_CASE("amplitude map drops cancelled terms") {
  AmplitudeState s;
  const ModeTuple t =
      tuple_of(Polarization::H, Frequency::Omega1, "a1", Polarization::H, Frequency::Omega1, "b1",
               Polarization::H, Frequency::Omega1, "c1", Polarization::H, Frequency::Omega1, "d1");
  s.insert(t, kOne);
  s.insert(t, ExactComplex{-1, 0});
  CHECK(s.terms.empty());
  s.insert(t, ExactComplex{0, 0});
  CHECK(s.terms.empty());
}
