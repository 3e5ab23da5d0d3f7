#include "hyperstab/dense.hpp"

namespace hyperstab {

DenseOperator::DenseOperator(std::size_t n) : n_(n) {
  if (n > kMaxQubits)
    throw capacity_error("DenseOperator: " + std::to_string(n) + " qubits exceeds the cap of " +
                         std::to_string(kMaxQubits));
  dim_ = std::size_t{1} << n;
  e_.assign(dim_ * dim_, Gint{});
}

DenseOperator DenseOperator::identity(std::size_t n) {
  DenseOperator m(n);
  for (std::size_t d = 0; d < m.dim_; ++d) m.at(d, d) = {1, 0};
  return m;
}

DenseOperator DenseOperator::operator*(const DenseOperator& rhs) const {
  if (n_ != rhs.n_) throw std::invalid_argument("DenseOperator multiply: size mismatch");
  DenseOperator out(n_);
  for (std::size_t r = 0; r < dim_; ++r) {
    for (std::size_t k = 0; k < dim_; ++k) {
      const Gint a = at(r, k);
      if (a == Gint{}) continue;
      for (std::size_t c = 0; c < dim_; ++c) out.at(r, c) = out.at(r, c) + a * rhs.at(k, c);
    }
  }
  return out;
}

namespace {

// 2x2 letter matrices, row-major: I, X, Z, Y (Y = iXZ = [[0,-i],[i,0]]).
constexpr Gint kLetter[4][2][2] = {
    {{{1, 0}, {0, 0}}, {{0, 0}, {1, 0}}},    // I
    {{{0, 0}, {1, 0}}, {{1, 0}, {0, 0}}},    // X
    {{{1, 0}, {0, 0}}, {{0, 0}, {-1, 0}}},   // Z
    {{{0, 0}, {0, -1}}, {{0, 1}, {0, 0}}},   // Y
};

}  // namespace

DenseOperator to_dense(const PauliString& p) {
  if (p.size() > DenseOperator::kMaxQubits)
    throw capacity_error("to_dense: " + std::to_string(p.size()) + " qubits exceeds the cap of " +
                         std::to_string(DenseOperator::kMaxQubits));
  // Grow by Kronecker product, slot j landing on basis-index bit j.
  std::vector<Gint> m{Gint::i_pow(p.phase_exp())};
  std::size_t dim = 1;
  for (std::size_t j = 0; j < p.size(); ++j) {
    const auto& l = kLetter[(p.x_bit(j) ? 1 : 0) | (p.z_bit(j) ? 2 : 0)];
    std::vector<Gint> next(4 * dim * dim);
    const std::size_t nd = 2 * dim;
    for (std::size_t hr = 0; hr < 2; ++hr)
      for (std::size_t hc = 0; hc < 2; ++hc) {
        if (l[hr][hc] == Gint{}) continue;
        for (std::size_t r = 0; r < dim; ++r)
          for (std::size_t c = 0; c < dim; ++c)
            next[(hr * dim + r) * nd + (hc * dim + c)] = l[hr][hc] * m[r * dim + c];
      }
    m = std::move(next);
    dim = nd;
  }
  DenseOperator out(p.size());
  for (std::size_t r = 0; r < dim; ++r)
    for (std::size_t c = 0; c < dim; ++c) out.at(r, c) = m[r * dim + c];
  return out;
}

StateVector apply_pauli(const PauliString& p, const StateVector& v) {
  const std::size_t dim = std::size_t{1} << p.size();
  if (v.size() != dim) throw std::invalid_argument("apply_pauli: state vector length mismatch");
  std::size_t ycount = 0;
  for (std::size_t w = 0; w < p.x_mask().size(); ++w)
    ycount += std::popcount(p.x_mask()[w] & p.z_mask()[w]);
  const std::uint64_t x = p.size() ? p.x_mask()[0] : 0;
  const std::uint64_t z = p.size() ? p.z_mask()[0] : 0;
  if (p.size() > 64) throw capacity_error("apply_pauli: more than 64 qubits");
  StateVector out(dim, Gint{});
  for (std::size_t i = 0; i < dim; ++i) {
    if (v[i] == Gint{}) continue;
    const unsigned e =
        static_cast<unsigned>(p.phase_exp() + ycount + 2 * std::popcount(z & i));
    out[i ^ x] = out[i ^ x] + Gint::i_pow(e) * v[i];
  }
  return out;
}

StateVector apply_matrix(const DenseOperator& m, const StateVector& v) {
  if (v.size() != m.dim()) throw std::invalid_argument("apply_matrix: state vector length mismatch");
  StateVector out(m.dim(), Gint{});
  for (std::size_t r = 0; r < m.dim(); ++r) {
    Gint acc{};
    for (std::size_t c = 0; c < m.dim(); ++c) acc = acc + m.at(r, c) * v[c];
    out[r] = acc;
  }
  return out;
}

}  // namespace hyperstab
