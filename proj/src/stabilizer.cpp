#include "hyperstab/stabilizer.hpp"

#include <algorithm>
#include <thread>

#include "hyperstab/closed_forms.hpp"

namespace hyperstab {

std::vector<StabilizerElement> generators(const HyperState& state) {
  const std::size_t n = state.qubit_count();
  std::vector<StabilizerElement> gens;
  gens.reserve(n);
  std::size_t offset = 0;
  std::size_t index = 0;
  for (const GhzBlock& b : state.blocks()) {
    PauliString xs(n);
    for (std::size_t j = 0; j < b.m; ++j) xs.set_letter(offset + j, 'X');
    gens.push_back({std::move(xs), std::uint64_t{1} << index, +1});
    ++index;
    for (std::size_t j = 0; j + 1 < b.m; ++j) {
      PauliString zz(n);
      zz.set_letter(offset + j, 'Z');
      zz.set_letter(offset + j + 1, 'Z');
      const bool negative = b.mask_bit(j) != b.mask_bit(j + 1);
      zz.set_phase_exp(negative ? 2 : 0);
      gens.push_back({std::move(zz), std::uint64_t{1} << index, negative ? -1 : +1});
      ++index;
    }
    offset += b.m;
  }
  return gens;
}

StabilizerElement element_for_subset(const HyperState& state, std::uint64_t subset) {
  const std::size_t n = state.qubit_count();
  if (n > 63) throw capacity_error("element_for_subset: more than 63 generators");
  if (n < 64 && subset >> n)
    throw std::invalid_argument("element_for_subset: subset has bits beyond the generator count");
  const auto gens = generators(state);
  StabilizerElement e{PauliString(n), subset, +1};
  for (std::size_t g = 0; g < n; ++g)
    if ((subset >> g) & 1u) e.pauli.mul_inplace(gens[g].pauli);
  e.sign = e.pauli.hermitian_sign();
  return e;
}

std::vector<StabilizerElement> enumerate_group(const HyperState& state, std::size_t guard_bits) {
  if (state.qubit_count() > 16)
    throw capacity_error("enumerate_group: collecting beyond 2^16 elements; use for_each_element");
  std::vector<StabilizerElement> out;
  out.reserve(std::size_t{1} << state.qubit_count());
  for_each_element(state, [&](const StabilizerElement& e) { out.push_back(e); }, guard_bits);
  return out;
}

namespace {

// Counts sign==-1 elements over Gray indices [begin, end).
std::uint64_t count_range(const HyperState& state, const std::vector<StabilizerElement>& gens,
                          std::uint64_t begin, std::uint64_t end) {
  if (begin >= end) return 0;
  const std::uint64_t start_subset = begin ^ (begin >> 1);
  StabilizerElement cur = element_for_subset(state, start_subset);
  std::uint64_t neg = cur.sign < 0 ? 1 : 0;
  for (std::uint64_t i = begin + 1; i < end; ++i) {
    const unsigned g = static_cast<unsigned>(std::countr_zero(i));
    cur.pauli.mul_inplace(gens[g].pauli);
    neg += cur.pauli.phase_exp() >> 1;  // phase is 0 or 2 for group elements
  }
  return neg;
}

}  // namespace

std::uint64_t count_negative(const HyperState& state, std::size_t guard_bits) {
  const std::size_t n = state.qubit_count();
  detail::check_enumeration_guard(n, guard_bits);
  const auto gens = generators(state);
  return count_range(state, gens, 0, std::uint64_t{1} << n);
}

std::uint64_t count_negative_partitioned(const HyperState& state, unsigned partitions,
                                         std::size_t guard_bits) {
  const std::size_t n = state.qubit_count();
  detail::check_enumeration_guard(n, guard_bits);
  if (partitions == 0) throw std::invalid_argument("count_negative_partitioned: zero partitions");
  const std::uint64_t total = std::uint64_t{1} << n;
  const auto gens = generators(state);
  std::vector<std::uint64_t> counts(partitions, 0);
  std::vector<std::thread> workers;
  workers.reserve(partitions);
  for (unsigned p = 0; p < partitions; ++p) {
    const std::uint64_t begin = total / partitions * p + std::min<std::uint64_t>(p, total % partitions);
    const std::uint64_t end =
        total / partitions * (p + 1) + std::min<std::uint64_t>(p + 1, total % partitions);
    workers.emplace_back([&, p, begin, end] { counts[p] = count_range(state, gens, begin, end); });
  }
  for (auto& w : workers) w.join();
  std::uint64_t neg = 0;
  for (auto c : counts) neg += c;
  return neg;
}

BigInt count_negative_closed(const HyperState& state) {
  BigInt even_minus_odd = 1;  // prod_k (positives_k - negatives_k)
  BigInt group_size = 1;
  for (const GhzBlock& b : state.blocks()) {
    const bool aligned =
        std::all_of(b.parity_mask.begin(), b.parity_mask.end(), [](std::uint64_t w) { return w == 0; });
    BigInt ck;
    if (aligned) {
      ck = c_binomial(static_cast<unsigned>(b.m));
    } else {
      ck = count_negative(HyperState({b}));
    }
    even_minus_odd *= (BigInt(1) << b.m) - 2 * ck;
    group_size <<= b.m;
  }
  return (group_size - even_minus_odd) / 2;
}

StateVector state_vector(const HyperState& state) {
  const std::size_t n = state.qubit_count();
  if (n > 24)
    throw capacity_error("state_vector: " + std::to_string(n) + " qubits exceeds the cap of 24");
  StateVector v(std::size_t{1} << n, Gint{});
  const std::size_t k = state.blocks().size();
  for (std::uint64_t choice = 0; choice < (std::uint64_t{1} << k); ++choice) {
    std::uint64_t index = 0;
    std::size_t offset = 0;
    for (std::size_t bi = 0; bi < k; ++bi) {
      const GhzBlock& b = state.blocks()[bi];
      std::uint64_t bits = b.parity_mask[0];
      if ((choice >> bi) & 1u) bits = ~bits & ((b.m == 64) ? ~0ull : ((1ull << b.m) - 1));
      index |= bits << offset;
      offset += b.m;
    }
    v[index] = {1, 0};
  }
  return v;
}

}  // namespace hyperstab
