#pragma once

#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace hyperstab {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

BigInt binomial(unsigned n, unsigned k);

/// Negative-element count of a single aligned GHZ block:
/// sum of binomial(m, k) over k = 2, 6, 10, ... (k <= m).
BigInt c_binomial(unsigned m);

/// The same count through the four-branch residue closed form
/// (m = 4x-2, 4x-1, 4x, 4x+1).
BigInt c_cases(unsigned m);

/// Composite negative counts for tensor powers of one aligned block.
BigInt composite_count(unsigned block_size, unsigned copies);

struct CaseResult {
  int case_id = 0;          // 1..10
  unsigned x = 0;
  unsigned size_fine = 0;   // block size of the more-entangled state (m, or n for cases 7-10)
  unsigned size_coarse = 0; // block size of the less-entangled state (n or l)
  BigInt printed;       // the printed construction expression, transcribed as written
  BigInt simplified;    // the printed final closed form
  BigInt recomputed;    // first-principles composite difference via c_binomial
  std::optional<BigInt> corrected;  // case 10 only: construction with the 2^{4x+1} reading
  bool positive = false;        // recomputed > 0
  bool printed_matches = false; // printed == recomputed
};

/// Smallest x for which each case's difference is claimed positive.
unsigned case_min_x(int case_id);

/// Evaluates one case at one x. Throws std::domain_error when x is below the
/// case's stated range.
CaseResult case_difference(int case_id, unsigned x);

struct OrderingReport {
  unsigned q = 0;
  BigInt c1, c2, c3;  // three-, two-, one-block counts
  bool strictly_decreasing = false;
};

/// Negative counts of the three-, two- and one-block aligned GHZ states on q
/// qubits (q divisible by 6). The ordering is reported, never assumed.
OrderingReport ordering_report(unsigned q);

}  // namespace hyperstab
