#include "hyperstab/bell.hpp"

#include <algorithm>

namespace hyperstab {

Assignment Assignment::random(std::size_t n, std::mt19937_64& rng) {
  Assignment a(n);
  for (auto& v : a.values_) v = (rng() & 1u) ? -1 : +1;
  return a;
}

void Assignment::set(std::size_t slot, Observable o, int v) {
  if (v != 1 && v != -1) throw std::invalid_argument("Assignment: values must be +1 or -1");
  values_[3 * slot + static_cast<unsigned>(o)] = static_cast<std::int8_t>(v);
}

namespace {

struct NegMasks {
  Words x_neg, y_neg, z_neg;  // bit j set when v(slot j, letter) == -1
};

NegMasks neg_masks(const Assignment& a) {
  NegMasks m;
  const std::size_t words = word_count(a.size());
  m.x_neg.assign(words, 0);
  m.y_neg.assign(words, 0);
  m.z_neg.assign(words, 0);
  for (std::size_t j = 0; j < a.size(); ++j) {
    const std::uint64_t bit = 1ull << (j % 64);
    if (a.value(j, Observable::X) < 0) m.x_neg[j / 64] |= bit;
    if (a.value(j, Observable::Y) < 0) m.y_neg[j / 64] |= bit;
    if (a.value(j, Observable::Z) < 0) m.z_neg[j / 64] |= bit;
  }
  return m;
}

// Bit-table form of the Bell sum: per element one sign bit, per variable one
// membership mask over elements. bell values become popcounts.
struct LhvTables {
  std::size_t n = 0;
  std::uint64_t element_count = 0;
  Words sign_bits;                  // bit i: element i is negative
  std::vector<Words> member;        // [3n] element masks
  std::vector<std::uint64_t> member_pop;

  std::int64_t value(const Words& t) const {
    std::uint64_t neg = 0;
    for (auto w : t) neg += std::popcount(w);
    return static_cast<std::int64_t>(element_count) - 2 * static_cast<std::int64_t>(neg);
  }
};

LhvTables build_tables(const HyperState& state, std::size_t guard_bits) {
  LhvTables t;
  t.n = state.qubit_count();
  t.element_count = std::uint64_t{1} << t.n;
  const std::size_t ewords = word_count(t.element_count);
  t.sign_bits.assign(ewords, 0);
  t.member.assign(3 * t.n, Words(ewords, 0));
  std::uint64_t idx = 0;
  for_each_element(
      state,
      [&](const StabilizerElement& e) {
        const std::uint64_t bit = 1ull << (idx % 64);
        const std::size_t w = idx / 64;
        if (e.sign < 0) t.sign_bits[w] |= bit;
        for (std::size_t j = 0; j < t.n; ++j) {
          const bool xb = e.pauli.x_bit(j), zb = e.pauli.z_bit(j);
          if (!xb && !zb) continue;
          const unsigned obs = xb ? (zb ? 1u : 0u) : 2u;  // X=0, Y=1, Z=2
          t.member[3 * j + obs][w] |= bit;
        }
        ++idx;
      },
      guard_bits);
  t.member_pop.resize(t.member.size());
  for (std::size_t v = 0; v < t.member.size(); ++v) {
    std::uint64_t c = 0;
    for (auto w : t.member[v]) c += std::popcount(w);
    t.member_pop[v] = c;
  }
  return t;
}

void xor_into(Words& dst, const Words& src) {
  for (std::size_t w = 0; w < dst.size(); ++w) dst[w] ^= src[w];
}

std::uint64_t popcount_and(const Words& a, const Words& b) {
  std::uint64_t c = 0;
  for (std::size_t w = 0; w < a.size(); ++w) c += std::popcount(a[w] & b[w]);
  return c;
}

}  // namespace

std::int64_t bell_value(const HyperState& state, const Assignment& a, std::size_t guard_bits) {
  if (a.size() != state.qubit_count())
    throw std::invalid_argument("bell_value: assignment covers " + std::to_string(a.size()) +
                                " slots, state has " + std::to_string(state.qubit_count()));
  const NegMasks m = neg_masks(a);
  std::int64_t total = 0;
  for_each_element(
      state,
      [&](const StabilizerElement& e) {
        std::uint64_t parity = e.pauli.phase_exp() >> 1;
        const Words& x = e.pauli.x_mask();
        const Words& z = e.pauli.z_mask();
        for (std::size_t w = 0; w < x.size(); ++w) {
          parity += std::popcount(x[w] & ~z[w] & m.x_neg[w]);
          parity += std::popcount(x[w] & z[w] & m.y_neg[w]);
          parity += std::popcount(~x[w] & z[w] & m.z_neg[w]);
        }
        total += (parity & 1u) ? -1 : +1;
      },
      guard_bits);
  return total;
}

BigInt qm_expectation(const HyperState& state) { return BigInt(1) << state.qubit_count(); }

BigInt qm_expectation_oracle(const HyperState& state) {
  const std::size_t n = state.qubit_count();
  if (n > 12) throw capacity_error("qm_expectation_oracle: capped at 12 qubits");
  const StateVector v = state_vector(state);
  std::int64_t norm = 0;
  for (const Gint& g : v) norm += g.re * g.re + g.im * g.im;
  std::int64_t sum = 0;
  for_each_element(state, [&](const StabilizerElement& e) {
    const StateVector sv = apply_pauli(e.pauli, v);
    std::int64_t inner = 0;  // <v|S|v>, real part; imaginary part must vanish
    std::int64_t inner_im = 0;
    for (std::size_t i = 0; i < v.size(); ++i) {
      inner += v[i].re * sv[i].re + v[i].im * sv[i].im;
      inner_im += v[i].re * sv[i].im - v[i].im * sv[i].re;
    }
    if (inner_im != 0) throw std::logic_error("qm_expectation_oracle: complex expectation");
    sum += inner;
  });
  if (sum % norm != 0) throw std::logic_error("qm_expectation_oracle: non-integer expectation");
  return BigInt(sum / norm);
}

BigInt all_plus_bound(const HyperState& state) {
  return (BigInt(1) << state.qubit_count()) - 2 * count_negative_closed(state);
}

std::int64_t lhvt_max_exhaustive(const HyperState& state, std::size_t max_active_vars, bool force,
                                 std::size_t guard_bits) {
  const LhvTables t = build_tables(state, guard_bits);
  std::vector<std::size_t> active;
  for (std::size_t v = 0; v < t.member.size(); ++v)
    if (t.member_pop[v] != 0) active.push_back(v);
  if (!force && active.size() > max_active_vars)
    throw capacity_error("lhvt_max_exhaustive: " + std::to_string(active.size()) +
                         " active variables exceed the guard of " + std::to_string(max_active_vars));
  Words terms = t.sign_bits;  // all-plus start
  std::int64_t best = t.value(terms);
  const std::uint64_t combos = std::uint64_t{1} << active.size();
  for (std::uint64_t k = 1; k < combos; ++k) {
    xor_into(terms, t.member[active[std::countr_zero(k)]]);
    best = std::max(best, t.value(terms));
  }
  return best;
}

std::int64_t lhvt_max_heuristic(const HyperState& state, const HeuristicOptions& opts,
                                std::size_t guard_bits) {
  const LhvTables t = build_tables(state, guard_bits);
  std::vector<std::size_t> active;
  for (std::size_t v = 0; v < t.member.size(); ++v)
    if (t.member_pop[v] != 0) active.push_back(v);
  const std::size_t steps = opts.steps ? opts.steps : 10 * 3 * t.n;
  const unsigned restarts = std::max(1u, opts.restarts);
  std::mt19937_64 rng(opts.seed);
  std::int64_t best = 0;
  bool first = true;
  for (unsigned r = 0; r < restarts; ++r) {
    Words terms = t.sign_bits;
    if (r > 0)
      for (std::size_t v : active)
        if (rng() & 1u) xor_into(terms, t.member[v]);
    std::int64_t value = t.value(terms);
    if (first || value > best) best = value;
    first = false;
    for (std::size_t s = 0; s < steps; ++s) {
      std::int64_t best_delta = 0;
      std::size_t best_var = 0;
      for (std::size_t v : active) {
        const std::int64_t overlap = static_cast<std::int64_t>(popcount_and(terms, t.member[v]));
        const std::int64_t delta = 2 * (2 * overlap - static_cast<std::int64_t>(t.member_pop[v]));
        if (delta > best_delta) {
          best_delta = delta;
          best_var = v;
        }
      }
      if (best_delta <= 0) break;  // local maximum
      xor_into(terms, t.member[best_var]);
      value += best_delta;
      best = std::max(best, value);
    }
  }
  return best;
}

bool has_single_y_element(const HyperState& state, std::size_t slot, std::size_t guard_bits) {
  bool found = false;
  for_each_element(
      state,
      [&](const StabilizerElement& e) {
        if (!found && e.pauli.weight() == 1 && e.pauli.x_bit(slot) && e.pauli.z_bit(slot))
          found = true;
      },
      guard_bits);
  return found;
}

bool y_flip_invariant(const HyperState& state, std::size_t slot, const Assignment& a,
                      std::size_t guard_bits) {
  const std::int64_t before = bell_value(state, a, guard_bits);
  Assignment flipped = a;
  flipped.flip(slot, Observable::Y);
  return bell_value(state, flipped, guard_bits) == before;
}

std::string format_ratio_2dp(const BigInt& num, const BigInt& den) {
  if (den == 0) throw std::domain_error("format_ratio_2dp: zero denominator");
  const bool neg = (num < 0) != (den < 0);
  const BigInt n = abs(num), d = abs(den);
  const BigInt scaled = (n * 200 + d) / (2 * d);  // half-up at two decimals
  const BigInt whole = scaled / 100;
  const BigInt frac = scaled % 100;
  std::string f = frac.str();
  if (f.size() < 2) f.insert(0, 2 - f.size(), '0');
  return (neg && scaled != 0 ? "-" : "") + whole.str() + "." + f;
}

BellReport bell_report(const HyperState& state, const BellOptions& opts) {
  BellReport rep;
  rep.n = state.qubit_count();
  rep.qm_value = qm_expectation(state);
  rep.negatives = count_negative_closed(state);
  rep.bound = rep.qm_value - 2 * rep.negatives;
  if (opts.exhaustive)
    rep.exhaustive_max = lhvt_max_exhaustive(state, 24, opts.force_exhaustive, opts.guard_bits);
  rep.heuristic_max = lhvt_max_heuristic(state, opts.heuristic, opts.guard_bits);
  if (rep.bound != 0) {
    rep.violation_ratio = BigRational(rep.qm_value, rep.bound);
    rep.violation_2dp = format_ratio_2dp(rep.qm_value, rep.bound);
  } else {
    rep.violation_2dp = "undefined";
  }
  return rep;
}

}  // namespace hyperstab
