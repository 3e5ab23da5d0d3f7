#pragma once

#include <cstdint>
#include <vector>

#include "hyperstab/pauli.hpp"

namespace hyperstab {

/// Gaussian integer a + b*i. Pauli matrices and their products only ever
/// need entries in {0, +-1, +-i}, but sums in matrix products are exact too.
struct Gint {
  std::int64_t re = 0;
  std::int64_t im = 0;

  friend Gint operator+(Gint a, Gint b) { return {a.re + b.re, a.im + b.im}; }
  friend Gint operator-(Gint a, Gint b) { return {a.re - b.re, a.im - b.im}; }
  friend Gint operator*(Gint a, Gint b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend bool operator==(Gint, Gint) = default;

  static Gint i_pow(unsigned e) {
    switch (e & 3u) {
      case 0: return {1, 0};
      case 1: return {0, 1};
      case 2: return {-1, 0};
      default: return {0, -1};
    }
  }
};

/// Exact 2^n x 2^n complex-integer matrix. Oracle representation only;
/// capped at 14 qubits.
class DenseOperator {
 public:
  static constexpr std::size_t kMaxQubits = 14;

  explicit DenseOperator(std::size_t n);
  static DenseOperator identity(std::size_t n);

  std::size_t qubits() const { return n_; }
  std::size_t dim() const { return dim_; }

  Gint& at(std::size_t row, std::size_t col) { return e_[row * dim_ + col]; }
  const Gint& at(std::size_t row, std::size_t col) const { return e_[row * dim_ + col]; }

  DenseOperator operator*(const DenseOperator& rhs) const;
  friend bool operator==(const DenseOperator&, const DenseOperator&) = default;

 private:
  std::size_t n_ = 0;
  std::size_t dim_ = 1;
  std::vector<Gint> e_;
};

/// Exact matrix via slot-wise Kronecker products of the 2x2 Pauli matrices,
/// scaled by i^phase_exp. Basis index bit j corresponds to slot j.
DenseOperator to_dense(const PauliString& p);

using StateVector = std::vector<Gint>;

/// Sparse exact action of a Pauli string on a state vector.
StateVector apply_pauli(const PauliString& p, const StateVector& v);

/// Dense matrix-vector product.
StateVector apply_matrix(const DenseOperator& m, const StateVector& v);

}  // namespace hyperstab
