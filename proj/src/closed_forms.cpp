#include "hyperstab/closed_forms.hpp"

#include <stdexcept>

namespace hyperstab {

namespace {

using Rat = BigRational;

Rat pow2(long long e) {
  if (e >= 0) return Rat(BigInt(1) << e);
  return Rat(1, BigInt(1) << (-e));
}

int sign_pow(long long e) { return (e % 2 == 0) ? 1 : -1; }

BigInt to_int(const Rat& r, const char* what) {
  if (denominator(r) != 1)
    throw std::logic_error(std::string(what) + ": expression did not reduce to an integer");
  return numerator(r);
}

// Per-block counts as the residue closed form writes them, in terms of x.
Rat c_of_4xm1(long long x) { return Rat(sign_pow(x + 1)) * pow2(2 * x - 2) + pow2(4 * x - 3); }
Rat c_of_4xp1(long long x) { return Rat(sign_pow(x + 1)) * pow2(2 * x - 1) + pow2(4 * x - 1); }

struct CasePrinted {
  Rat printed;
  Rat simplified;
  std::optional<Rat> corrected;
};

Rat comp3_of(const Rat& c, long long m) {
  const Rat p = pow2(m) - c;
  return 3 * c * p * p + c * c * c;
}

Rat comp2_of(const Rat& c, long long n) { return 2 * c * (pow2(n) - c); }

CasePrinted printed_case(int id, long long x) {
  switch (id) {
    case 1: {
      const Rat c = c_of_4xm1(x);
      const Rat cl = Rat(sign_pow(3 * x)) * pow2(6 * x - 3) + pow2(12 * x - 5);
      return {comp3_of(c, 4 * x - 1) - cl,
              Rat(-3) * pow2(6 * x - 7) *
                  (Rat(8 * sign_pow(x)) + Rat(sign_pow(x)) * pow2(4 * x + 1) + pow2(2 * (x + 1)) -
                   pow2(6 * x)),
              std::nullopt};
    }
    case 2: {
      const Rat c = c_of_4xp1(x);
      const Rat cl = Rat(sign_pow(3 * x + 2)) * pow2(6 * x) + pow2(12 * x + 1);
      return {comp3_of(c, 4 * x + 1) - cl,
              Rat(-3) * pow2(6 * x - 1) *
                  (Rat(sign_pow(x)) * pow2(4 * x) + Rat(sign_pow(x)) + pow2(2 * x) - pow2(6 * x)),
              std::nullopt};
    }
    case 3: {
      const Rat c = pow2(8 * x);
      const Rat cn = Rat(sign_pow(3 * x + 2)) * pow2(6 * x) + pow2(12 * x + 1);
      return {comp3_of(c, 8 * x + 2) - comp2_of(cn, 12 * x + 3),
              pow2(12 * x + 1) + pow2(2 * (12 * x + 1)) - Rat(sign_pow(x)) * pow2(3 * (6 * x + 1)),
              std::nullopt};
    }
    case 4: {
      const Rat c = pow2(8 * x - 4);
      const Rat cn = Rat(sign_pow(3 * x)) * pow2(6 * x - 3) + pow2(12 * x - 5);
      return {comp3_of(c, 8 * x - 2) - comp2_of(cn, 12 * x - 3),
              pow2(2 * (6 * x - 5)) *
                  (Rat(32) + pow2(12 * x) - Rat(sign_pow(x)) * pow2(2 * (3 * x + 2))),
              std::nullopt};
    }
    case 5: {
      const Rat c = Rat(sign_pow(2 * x + 2)) * pow2(4 * x + 1) + pow2(8 * x + 2);
      const Rat cn = pow2(12 * x + 4);
      return {comp3_of(c, 8 * x + 4) - comp2_of(cn, 12 * x + 6),
              pow2(12 * x + 5) *
                  (Rat(1) - 3 * pow2(4 * x + 1) + 3 * pow2(2 * (4 * x + 1)) + pow2(3 * (4 * x + 1))),
              std::nullopt};
    }
    case 6: {
      const Rat c = Rat(sign_pow(2 * x + 1)) * pow2(4 * x - 1) + pow2(8 * x - 2);
      const Rat cn = Rat(sign_pow(3 * x + 1)) * pow2(6 * x - 1) + pow2(12 * x - 2);
      return {comp3_of(c, 8 * x) - comp2_of(cn, 12 * x),
              pow2(4 * (4 * x - 1)) *
                  (Rat(-12) + Rat(sign_pow(x)) * pow2(2 * x + 3) - 3 * pow2(4 * x + 1) + pow2(8 * x)),
              std::nullopt};
    }
    case 7: {
      const Rat c = pow2(4 * x - 4);
      const Rat cl = Rat(sign_pow(2 * x)) * pow2(4 * x - 3) + pow2(8 * x - 6);
      return {comp2_of(c, 4 * x - 2) - cl, pow2(4 * x - 7) * (Rat(-16) + pow2(4 * x)),
              std::nullopt};
    }
    case 8: {
      const Rat cn = Rat(sign_pow(x + 1)) * pow2(2 * x - 1) + pow2(4 * x - 2);
      const Rat cl = Rat(sign_pow(2 * x + 1)) * pow2(4 * x - 1) + pow2(8 * x - 2);
      return {comp2_of(cn, 4 * x) - cl,
              pow2(3 * (2 * x - 1)) * (Rat(-4 * sign_pow(x)) + pow2(2 * x)), std::nullopt};
    }
    case 9: {
      const Rat cn = Rat(sign_pow(x + 1)) * pow2(2 * x - 2) + pow2(4 * x - 3);
      return {comp2_of(cn, 4 * x - 1) - pow2(8 * x - 4),
              pow2(4 * x - 5) * (Rat(-4) - Rat(sign_pow(x)) * pow2(2 * (x + 1)) + pow2(4 * x)),
              std::nullopt};
    }
    case 10: {
      const Rat cn = c_of_4xp1(x);
      const Rat literal = 2 * cn * (pow2(4 * x + 11) - cn) - pow2(8 * x);
      const Rat corrected = 2 * cn * (pow2(4 * x + 1) - cn) - pow2(8 * x);
      return {literal,
              pow2(4 * x - 1) * (Rat(-1) - Rat(sign_pow(x)) * pow2(2 * x + 1) + pow2(4 * x)),
              corrected};
    }
    default:
      throw std::domain_error("case_difference: case id must be 1..10");
  }
}

}  // namespace

BigInt binomial(unsigned n, unsigned k) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  BigInt r = 1;
  for (unsigned i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;
  }
  return r;
}

BigInt c_binomial(unsigned m) {
  if (m < 2) throw std::domain_error("c_binomial: block size must be at least 2");
  BigInt c = 0;
  for (unsigned k = 2; k <= m; k += 4) c += binomial(m, k);
  return c;
}

BigInt c_cases(unsigned m) {
  if (m < 2) throw std::domain_error("c_cases: block size must be at least 2");
  const unsigned r = m % 4;
  if (r == 2) return BigInt(1) << (m - 2);  // m = 4x-2
  if (r == 3) {                             // m = 4x-1
    const unsigned x = (m + 1) / 4;
    return BigInt(sign_pow(x + 1)) * (BigInt(1) << (2 * x - 2)) + (BigInt(1) << (4 * x - 3));
  }
  if (r == 0) {                             // m = 4x
    const unsigned x = m / 4;
    return BigInt(sign_pow(x + 1)) * (BigInt(1) << (2 * x - 1)) + (BigInt(1) << (4 * x - 2));
  }
  const unsigned x = (m - 1) / 4;           // m = 4x+1
  return BigInt(sign_pow(x + 1)) * (BigInt(1) << (2 * x - 1)) + (BigInt(1) << (4 * x - 1));
}

BigInt composite_count(unsigned block_size, unsigned copies) {
  const BigInt c = c_binomial(block_size);
  const BigInt p = (BigInt(1) << block_size) - c;
  switch (copies) {
    case 1: return c;
    case 2: return 2 * c * p;
    case 3: return 3 * c * p * p + c * c * c;
    default: {
      // (total - prod(p - c)) / 2 over `copies` identical blocks
      BigInt diff = 1, total = 1;
      for (unsigned i = 0; i < copies; ++i) {
        diff *= p - c;
        total <<= block_size;
      }
      return (total - diff) / 2;
    }
  }
}

unsigned case_min_x(int case_id) {
  switch (case_id) {
    case 3:
    case 5: return 0;
    case 7: return 2;
    case 1:
    case 2:
    case 4:
    case 6:
    case 8:
    case 9:
    case 10: return 1;
    default: throw std::domain_error("case_min_x: case id must be 1..10");
  }
}

CaseResult case_difference(int case_id, unsigned x) {
  if (case_id < 1 || case_id > 10) throw std::domain_error("case_difference: case id must be 1..10");
  if (x < case_min_x(case_id))
    throw std::domain_error("case_difference: case " + std::to_string(case_id) +
                            " is stated for x >= " + std::to_string(case_min_x(case_id)));
  CaseResult r;
  r.case_id = case_id;
  r.x = x;
  const long long xl = x;
  switch (case_id) {
    case 1: r.size_fine = 4 * x - 1; r.size_coarse = 12 * x - 3; break;
    case 2: r.size_fine = 4 * x + 1; r.size_coarse = 12 * x + 3; break;
    case 3: r.size_fine = 8 * x + 2; r.size_coarse = 12 * x + 3; break;
    case 4: r.size_fine = 8 * x - 2; r.size_coarse = 12 * x - 3; break;
    case 5: r.size_fine = 8 * x + 4; r.size_coarse = 12 * x + 6; break;
    case 6: r.size_fine = 8 * x; r.size_coarse = 12 * x; break;
    case 7: r.size_fine = 4 * x - 2; r.size_coarse = 8 * x - 4; break;
    case 8: r.size_fine = 4 * x; r.size_coarse = 8 * x; break;
    case 9: r.size_fine = 4 * x - 1; r.size_coarse = 8 * x - 2; break;
    case 10: r.size_fine = 4 * x + 1; r.size_coarse = 8 * x + 2; break;
  }
  if (case_id <= 2)
    r.recomputed = composite_count(r.size_fine, 3) - composite_count(r.size_coarse, 1);
  else if (case_id <= 6)
    r.recomputed = composite_count(r.size_fine, 3) - composite_count(r.size_coarse, 2);
  else
    r.recomputed = composite_count(r.size_fine, 2) - composite_count(r.size_coarse, 1);

  const CasePrinted cp = printed_case(case_id, xl);
  r.printed = to_int(cp.printed, "printed construction");
  r.simplified = to_int(cp.simplified, "printed closed form");
  if (cp.corrected) r.corrected = to_int(*cp.corrected, "corrected construction");
  r.positive = r.recomputed > 0;
  r.printed_matches = r.printed == r.recomputed;
  return r;
}

OrderingReport ordering_report(unsigned q) {
  if (q < 6 || q % 6 != 0)
    throw std::domain_error("ordering_report: qubit total must be a positive multiple of 6");
  OrderingReport rep;
  rep.q = q;
  rep.c1 = composite_count(q / 3, 3);
  rep.c2 = composite_count(q / 2, 2);
  rep.c3 = composite_count(q, 1);
  rep.strictly_decreasing = rep.c1 > rep.c2 && rep.c2 > rep.c3;
  return rep;
}

}  // namespace hyperstab
