#pragma once

#include <bit>
#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

namespace hyperstab {

/// Thrown when an operation exceeds a configured size guard.
class capacity_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

using Words = std::vector<std::uint64_t>;

inline std::size_t word_count(std::size_t bits) { return (bits + 63) / 64; }

/// n-qubit Pauli operator stored as paired X/Z bit masks plus an i-exponent.
///
/// The represented operator is i^phase_exp * prod_j L_j where the slot letter
/// L_j is I (x=0,z=0), X (1,0), Z (0,1) or Y (1,1), with the convention
/// Y = iXZ (equivalently ZX = iY). Masks pack slot j into word j/64, bit j%64.
/// Values are immutable in spirit: every mutating member is only used to build
/// a value or to run an in-place product during enumeration.
class PauliString {
 public:
  PauliString() = default;

  /// Identity on n qubits.
  explicit PauliString(std::size_t n)
      : n_(n), phase_(0), x_(word_count(n), 0), z_(word_count(n), 0) {}

  /// Parses the debug text form: optional "+", "-", "i" or "-i" prefix
  /// followed by letters in {I,X,Y,Z}; leftmost letter is slot 0.
  static PauliString parse(const std::string& text);

  std::size_t size() const { return n_; }
  unsigned phase_exp() const { return phase_; }
  const Words& x_mask() const { return x_; }
  const Words& z_mask() const { return z_; }

  bool x_bit(std::size_t slot) const { return (x_[slot / 64] >> (slot % 64)) & 1u; }
  bool z_bit(std::size_t slot) const { return (z_[slot / 64] >> (slot % 64)) & 1u; }

  char letter(std::size_t slot) const {
    static constexpr char kLetters[4] = {'I', 'X', 'Z', 'Y'};
    return kLetters[(x_bit(slot) ? 1 : 0) | (z_bit(slot) ? 2 : 0)];
  }

  void set_letter(std::size_t slot, char letter);
  void set_phase_exp(unsigned e) { phase_ = e & 3u; }

  bool is_identity() const;
  bool is_hermitian() const { return (phase_ & 1u) == 0; }

  /// +1 or -1 for a Hermitian string; throws std::domain_error on odd phase.
  int hermitian_sign() const {
    if (phase_ & 1u)
      throw std::domain_error("hermitian_sign: phase exponent " +
                              std::to_string(phase_) + " is odd (non-Hermitian)");
    return phase_ == 0 ? +1 : -1;
  }

  /// Number of non-identity slots.
  std::size_t weight() const;

  /// this <- this * rhs, with exact phase accumulation mod 4.
  void mul_inplace(const PauliString& rhs);

  std::string str() const;

  friend bool operator==(const PauliString&, const PauliString&) = default;

 private:
  std::size_t n_ = 0;
  unsigned phase_ = 0;  // i-exponent, mod 4
  Words x_, z_;
};

PauliString multiply(const PauliString& p, const PauliString& q);

/// (p.n + q.n)-qubit string; q's slots follow p's, phases add mod 4.
PauliString tensor_concat(const PauliString& p, const PauliString& q);

inline int hermitian_sign(const PauliString& p) { return p.hermitian_sign(); }
inline std::size_t weight(const PauliString& p) { return p.weight(); }

/// Symplectic inner product parity: 0 if p and q commute, 1 otherwise.
/// multiply(p,q) and multiply(q,p) differ in phase_exp by exactly twice this.
unsigned symplectic_product(const PauliString& p, const PauliString& q);

std::ostream& operator<<(std::ostream& os, const PauliString& p);

}  // namespace hyperstab
