#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "hyperstab/stabilizer.hpp"
#include "oracles.hpp"

using namespace hyperstab;

namespace {

std::vector<std::string> generator_strings(const HyperState& s) {
  std::vector<std::string> out;
  for (const auto& g : generators(s)) out.push_back(g.pauli.str());
  return out;
}

bool fixes(const PauliString& p, const StateVector& v) { return apply_pauli(p, v) == v; }

}  // namespace

TEST_CASE("generators for aligned and anti-correlated 4-qubit blocks") {
  CHECK(generator_strings(HyperState::parse_spec("4:0000")) ==
        std::vector<std::string>{"XXXX", "ZZII", "IZZI", "IIZZ"});
  CHECK(generator_strings(HyperState::parse_spec("4:0101")) ==
        std::vector<std::string>{"XXXX", "-ZZII", "-IZZI", "-IIZZ"});
  CHECK(generator_strings(HyperState::parse_spec("2:00")) ==
        std::vector<std::string>{"XX", "ZZ"});
}

TEST_CASE("generators fix the block state vector") {
  for (const char* spec : {"4:0000", "4:0101", "3:000", "5:01010", "2:00,3:010"}) {
    const HyperState s = HyperState::parse_spec(spec);
    const StateVector v = state_vector(s);
    for (const auto& g : generators(s)) {
      CAPTURE(spec);
      CAPTURE(g.pauli.str());
      CHECK(fixes(g.pauli, v));
    }
  }
}

TEST_CASE("element_for_subset") {
  const HyperState s = HyperState::parse_spec("4:0000");
  CHECK(element_for_subset(s, 0).pauli.is_identity());
  CHECK(element_for_subset(s, 0).sign == +1);
  // X-string times first ZZ generator.
  const auto e = element_for_subset(s, 0b0011);
  CHECK(e.pauli.str() == "-YYXX");
  CHECK(e.sign == -1);
}

TEST_CASE("every GHZ_3 subset element fixes the state") {
  const HyperState s = HyperState::parse_spec("3:000");
  const StateVector v = state_vector(s);
  for (std::uint64_t sub = 0; sub < 8; ++sub) {
    const auto e = element_for_subset(s, sub);
    CHECK(fixes(e.pauli, v));
  }
}

TEST_CASE("element_for_subset equals fresh products on random states") {
  std::mt19937_64 rng(31337);
  for (int trial = 0; trial < 20; ++trial) {
    const HyperState s = oracle::random_state(rng);
    const std::uint64_t subset = rng() & ((std::uint64_t{1} << s.qubit_count()) - 1);
    const auto a = element_for_subset(s, subset);
    const auto b = oracle::subset_product(s, subset);
    CHECK(a.pauli == b.pauli);
    CHECK(a.sign == b.sign);
  }
}

TEST_CASE("Bell block group is II, XX, -YY, ZZ") {
  const auto elems = enumerate_group(HyperState::parse_spec("2:00"));
  REQUIRE(elems.size() == 4);
  CHECK(elems.front().pauli.is_identity());  // Gray code starts at the empty subset
  std::set<std::string> strs;
  for (const auto& e : elems) strs.insert(e.pauli.str());
  CHECK(strs == std::set<std::string>{"II", "XX", "-YY", "ZZ"});
}

TEST_CASE("gray-code enumeration matches fresh subset products") {
  std::mt19937_64 rng(8080);
  for (int trial = 0; trial < 10; ++trial) {
    const HyperState s = oracle::random_state(rng, 2, 4);
    for (const auto& e : enumerate_group(s)) {
      const auto fresh = oracle::subset_product(s, e.subset);
      CHECK(e.pauli == fresh.pauli);
      CHECK(e.sign == fresh.sign);
    }
  }
}

TEST_CASE("negative counts: GHZ_3, one 4-block, the 12-qubit state") {
  CHECK(count_negative(HyperState::parse_spec("3:000")) == 3);
  CHECK(count_negative(HyperState::parse_spec("4:0000")) == 6);
  const HyperState paper12 = HyperState::parse_spec("4:0000,4:0101,4:0000");
  const std::uint64_t c = count_negative(paper12);
  CHECK(c == 2016);
  CHECK(c == 3 * 6 * 10 * 10 + 6 * 6 * 6);
  CHECK(count_negative_closed(paper12) == 2016);
}

TEST_CASE("the parity mask can change the count: sensitivity documented") {
  // m = 4: insensitive. m = 5, 6: the alternating mask raises the count.
  CHECK(count_negative(HyperState::parse_spec("4:0101")) ==
        count_negative(HyperState::parse_spec("4:0000")));
  CHECK(count_negative(HyperState::parse_spec("5:00000")) == 10);
  CHECK(count_negative(HyperState::parse_spec("5:01010")) == 14);
  CHECK(count_negative(HyperState::parse_spec("6:000000")) == 16);
  CHECK(count_negative(HyperState::parse_spec("6:010101")) == 28);
}

TEST_CASE("closed form equals enumeration: all single blocks of size 2..6, every mask") {
  for (std::size_t m = 2; m <= 6; ++m) {
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); mask += 2) {
      std::string bits(m, '0');
      for (std::size_t j = 0; j < m; ++j)
        if ((mask >> j) & 1u) bits[j] = '1';
      const HyperState s({make_block(m, bits)});
      CAPTURE(m);
      CAPTURE(bits);
      CHECK(count_negative_closed(s) == count_negative(s));
    }
  }
}

TEST_CASE("closed form equals enumeration on random multi-block states") {
  std::mt19937_64 rng(271828);
  for (int trial = 0; trial < 40; ++trial) {
    const HyperState s = oracle::random_state(rng);
    CAPTURE(s.spec_string());
    CHECK(count_negative_closed(s) == count_negative(s));
  }
}

TEST_CASE("generators mutually commute on random states") {
  std::mt19937_64 rng(161803);
  for (int trial = 0; trial < 50; ++trial) {
    const HyperState s = oracle::random_state(rng);
    const auto gens = generators(s);
    for (std::size_t i = 0; i < gens.size(); ++i)
      for (std::size_t j = i + 1; j < gens.size(); ++j)
        CHECK(symplectic_product(gens[i].pauli, gens[j].pauli) == 0);
  }
}

TEST_CASE("partitioned count matches the single sweep") {
  const HyperState paper12 = HyperState::parse_spec("4:0000,4:0101,4:0000");
  const std::uint64_t expected = count_negative(paper12);
  for (unsigned parts : {1u, 2u, 3u, 4u, 5u, 8u})
    CHECK(count_negative_partitioned(paper12, parts) == expected);
  std::mt19937_64 rng(55);
  for (int trial = 0; trial < 5; ++trial) {
    const HyperState s = oracle::random_state(rng);
    CHECK(count_negative_partitioned(s, 4) == count_negative(s));
  }
}

TEST_CASE("state_vector shapes") {
  const StateVector bell = state_vector(HyperState::parse_spec("2:00"));
  REQUIRE(bell.size() == 4);
  CHECK(bell[0] == Gint{1, 0});
  CHECK(bell[3] == Gint{1, 0});
  CHECK(bell[1] == Gint{});
  CHECK(bell[2] == Gint{});

  const StateVector v = state_vector(HyperState::parse_spec("4:0000,4:0101,4:0000"));
  std::size_t nonzero = 0;
  for (const auto& g : v)
    if (!(g == Gint{})) ++nonzero;
  CHECK(nonzero == 8);
  // |0000 0101 0000> -> frequency bits at slots 5 and 7.
  CHECK(v[(1u << 5) | (1u << 7)] == Gint{1, 0});
  // ...and its complement |1111 1010 1111>.
  CHECK(v[4095u ^ ((1u << 5) | (1u << 7))] == Gint{1, 0});
}

TEST_CASE("every enumerated element fixes the state vector (small states)") {
  for (const char* spec : {"3:000", "4:0101", "2:00,3:010", "6:010101"}) {
    const HyperState s = HyperState::parse_spec(spec);
    const StateVector v = state_vector(s);
    for_each_element(s, [&](const StabilizerElement& e) {
      CAPTURE(spec);
      CHECK(fixes(e.pauli, v));
    });
  }
}

TEST_CASE("guards") {
  const HyperState s = HyperState::parse_spec("4:0000,4:0101,4:0000");
  CHECK_THROWS_AS(count_negative(s, 10), capacity_error);
  CHECK_THROWS_AS(state_vector(HyperState::parse_spec("13:0000000000000,12:000000000000")),
                  capacity_error);
  CHECK_THROWS_AS(enumerate_group(HyperState::parse_spec("9:000000000,9:000000000")),
                  capacity_error);
  CHECK_THROWS_AS(element_for_subset(HyperState::parse_spec("2:00"), 0b100),
                  std::invalid_argument);
}

TEST_CASE("state spec parsing") {
  const HyperState s = HyperState::parse_spec("4:0000,4:0101,4:0000");
  CHECK(s.qubit_count() == 12);
  CHECK(s.blocks().size() == 3);
  CHECK(s.blocks()[0].dof_label == "polarization");
  CHECK(s.blocks()[1].dof_label == "frequency");
  CHECK(s.blocks()[2].dof_label == "spatial");
  CHECK(s.spec_string() == "4:0000,4:0101,4:0000");
  CHECK(HyperState::parse_spec("12:000000000000").qubit_count() == 12);

  CHECK_THROWS_WITH_AS(HyperState::parse_spec("4:1000"),
                       doctest::Contains("parity mask bit 0"), std::invalid_argument);
  CHECK_THROWS_WITH_AS(HyperState::parse_spec("4:000"), doctest::Contains("length"),
                       std::invalid_argument);
  CHECK_THROWS_AS(HyperState::parse_spec("1:0"), std::invalid_argument);
  CHECK_THROWS_AS(HyperState::parse_spec("4"), std::invalid_argument);
  CHECK_THROWS_AS(HyperState::parse_spec("x:00"), std::invalid_argument);
  CHECK_THROWS_AS(HyperState::parse_spec(""), std::invalid_argument);
  CHECK_THROWS_AS(HyperState::parse_spec("2:00,"), std::invalid_argument);
}
