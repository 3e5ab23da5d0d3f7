#pragma once

#include <cstdint>

#include <boost/multiprecision/cpp_int.hpp>

#include "hyperstab/dense.hpp"
#include "hyperstab/ghz.hpp"
#include "hyperstab/pauli.hpp"

namespace hyperstab {

using BigInt = boost::multiprecision::cpp_int;

/// Default enumeration guard: refuse full-group walks beyond 2^34 elements.
inline constexpr std::size_t kDefaultGuardBits = 34;

struct StabilizerElement {
  PauliString pauli;
  std::uint64_t subset = 0;  // generator-selection mask
  int sign = +1;             // == pauli.hermitian_sign()
};

/// Canonical generators: per block of size m, one X^{(x)m} string plus m-1
/// nearest-neighbour ZZ strings, ZZ_j carrying sign -1 exactly when parity
/// mask bits j and j+1 differ. Exactly n generators, all mutually commuting.
std::vector<StabilizerElement> generators(const HyperState& state);

/// Ordered product of the selected generators.
StabilizerElement element_for_subset(const HyperState& state, std::uint64_t subset);

namespace detail {

inline void check_enumeration_guard(std::size_t n, std::size_t guard_bits) {
  if (n > 63)
    throw capacity_error("group enumeration: subset masks support at most 63 generators, got " +
                         std::to_string(n));
  if (n > guard_bits)
    throw capacity_error("group enumeration: 2^" + std::to_string(n) +
                         " elements exceeds the guard of 2^" + std::to_string(guard_bits) +
                         " (raise the guard to proceed)");
}

}  // namespace detail

/// Visits all 2^n group elements exactly once, in Gray-code order over
/// generator subsets, so each step is a single in-place multiplication.
/// The StabilizerElement passed to the visitor is a reused buffer.
template <typename Visitor>
void for_each_element(const HyperState& state, Visitor&& visit,
                      std::size_t guard_bits = kDefaultGuardBits) {
  const std::size_t n = state.qubit_count();
  detail::check_enumeration_guard(n, guard_bits);
  const auto gens = generators(state);
  StabilizerElement cur{PauliString(n), 0, +1};
  visit(const_cast<const StabilizerElement&>(cur));
  const std::uint64_t total = std::uint64_t{1} << n;
  for (std::uint64_t i = 1; i < total; ++i) {
    const unsigned g = static_cast<unsigned>(std::countr_zero(i));
    cur.pauli.mul_inplace(gens[g].pauli);
    cur.subset ^= std::uint64_t{1} << g;
    cur.sign = cur.pauli.hermitian_sign();
    visit(const_cast<const StabilizerElement&>(cur));
  }
}

/// Collects the whole group; memory-capped at 2^16 elements.
std::vector<StabilizerElement> enumerate_group(const HyperState& state,
                                               std::size_t guard_bits = kDefaultGuardBits);

/// Number of group elements with sign -1, by full Gray-code enumeration.
std::uint64_t count_negative(const HyperState& state, std::size_t guard_bits = kDefaultGuardBits);

/// Same count with the subset space split into contiguous Gray-index ranges,
/// one worker thread per partition.
std::uint64_t count_negative_partitioned(const HyperState& state, unsigned partitions,
                                         std::size_t guard_bits = kDefaultGuardBits);

/// Composite closed-form count: a product element is negative exactly when an
/// odd number of blocks contribute a negative factor, so
/// C = (2^n - prod_k (2^{m_k} - 2 C_k)) / 2 with C_k the per-block count.
/// Aligned blocks use the binomial closed form; masked blocks are enumerated.
BigInt count_negative_closed(const HyperState& state);

/// Unnormalized exact state vector: amplitude 1 on every combination of each
/// block's mask bitstring or its complement (2^{#blocks} nonzero entries).
/// Basis index bit j corresponds to qubit j. Capped at 24 qubits.
StateVector state_vector(const HyperState& state);

}  // namespace hyperstab
