#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "hyperstab/closed_forms.hpp"
#include "hyperstab/stabilizer.hpp"

namespace hyperstab {

enum class Observable : unsigned { X = 0, Y = 1, Z = 2 };

/// Deterministic local-realist value table: one +-1 entry per
/// (slot, observable in {X,Y,Z}); the identity is implicitly +1.
class Assignment {
 public:
  explicit Assignment(std::size_t n) : n_(n), values_(3 * n, +1) {}

  static Assignment all_plus(std::size_t n) { return Assignment(n); }
  static Assignment random(std::size_t n, std::mt19937_64& rng);

  std::size_t size() const { return n_; }
  int value(std::size_t slot, Observable o) const {
    return values_[3 * slot + static_cast<unsigned>(o)];
  }
  void set(std::size_t slot, Observable o, int v);
  void flip(std::size_t slot, Observable o) {
    values_[3 * slot + static_cast<unsigned>(o)] *= -1;
  }

 private:
  std::size_t n_;
  std::vector<std::int8_t> values_;
};

/// Value of B = sum of all 2^n group elements under a deterministic
/// assignment: each term contributes sign(S) times the product of assigned
/// values over its support. One Gray-code sweep.
std::int64_t bell_value(const HyperState& state, const Assignment& a,
                        std::size_t guard_bits = kDefaultGuardBits);

/// Quantum expectation of B on the state: 2^n (every element has eigenvalue +1).
BigInt qm_expectation(const HyperState& state);

/// Oracle companion for qm_expectation: sums <v|S|v> over the enumerated
/// group with the exact apply path and divides by <v|v>. n <= 12.
BigInt qm_expectation_oracle(const HyperState& state);

/// 2^n - 2C: the value of B under the all-plus assignment.
BigInt all_plus_bound(const HyperState& state);

/// Exact maximum of bell_value over all deterministic assignments.
/// Guarded by the number of active variables (those appearing in at least
/// one term); pass force=true to run anyway.
std::int64_t lhvt_max_exhaustive(const HyperState& state, std::size_t max_active_vars = 24,
                                 bool force = false, std::size_t guard_bits = kDefaultGuardBits);

struct HeuristicOptions {
  std::uint64_t seed = 0;
  unsigned restarts = 64;
  std::size_t steps = 0;  // 0 -> 10 * 3n
};

/// Best bell_value found by steepest-ascent single-flip search with random
/// restarts (restart 0 starts from all-plus). Deterministic given the seed;
/// the result is always an achieved value, hence a lower bound on the true
/// maximum.
std::int64_t lhvt_max_heuristic(const HyperState& state, const HeuristicOptions& opts = {},
                                std::size_t guard_bits = kDefaultGuardBits);

/// True when some group element's only non-identity letters are a single Y
/// at the given slot.
bool has_single_y_element(const HyperState& state, std::size_t slot,
                          std::size_t guard_bits = kDefaultGuardBits);

/// Diagnostic: does flipping v(slot, Y) leave bell_value unchanged for this
/// assignment? Measured, never assumed.
bool y_flip_invariant(const HyperState& state, std::size_t slot, const Assignment& a,
                      std::size_t guard_bits = kDefaultGuardBits);

struct BellReport {
  std::size_t n = 0;
  BigInt qm_value;
  BigInt negatives;
  BigInt bound;  // all-plus bound, 2^n - 2C
  std::optional<std::int64_t> exhaustive_max;
  std::int64_t heuristic_max = 0;
  BigRational violation_ratio;  // qm / bound
  std::string violation_2dp;
};

struct BellOptions {
  bool exhaustive = false;
  bool force_exhaustive = false;
  HeuristicOptions heuristic;
  std::size_t guard_bits = kDefaultGuardBits;
};

BellReport bell_report(const HyperState& state, const BellOptions& opts = {});

/// Renders an exact ratio to two decimals (half-up).
std::string format_ratio_2dp(const BigInt& num, const BigInt& den);

}  // namespace hyperstab
