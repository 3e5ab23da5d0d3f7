#include "hyperstab/pauli.hpp"

#include <ostream>

namespace hyperstab {

namespace {

std::size_t popcount_and(const Words& a, const Words& b) {
  std::size_t c = 0;
  for (std::size_t w = 0; w < a.size(); ++w) c += std::popcount(a[w] & b[w]);
  return c;
}

}  // namespace

PauliString PauliString::parse(const std::string& text) {
  std::size_t pos = 0;
  unsigned phase = 0;
  if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
    phase = text[pos] == '-' ? 2 : 0;
    ++pos;
  }
  if (pos < text.size() && text[pos] == 'i') {
    phase = (phase + 1) & 3u;
    ++pos;
  }
  if (pos >= text.size())
    throw std::invalid_argument("PauliString::parse: no letters in \"" + text + "\"");
  PauliString p(text.size() - pos);
  for (std::size_t j = 0; pos < text.size(); ++pos, ++j) p.set_letter(j, text[pos]);
  p.phase_ = phase;
  return p;
}

void PauliString::set_letter(std::size_t slot, char letter) {
  if (slot >= n_) throw std::out_of_range("PauliString::set_letter: slot out of range");
  std::uint64_t bit = 1ull << (slot % 64);
  std::uint64_t xb = 0, zb = 0;
  switch (letter) {
    case 'I': break;
    case 'X': xb = bit; break;
    case 'Z': zb = bit; break;
    case 'Y': xb = bit; zb = bit; break;
    default:
      throw std::invalid_argument(std::string("PauliString: invalid letter '") + letter + "'");
  }
  x_[slot / 64] = (x_[slot / 64] & ~bit) | xb;
  z_[slot / 64] = (z_[slot / 64] & ~bit) | zb;
}

bool PauliString::is_identity() const {
  if (phase_ != 0) return false;
  for (std::size_t w = 0; w < x_.size(); ++w)
    if (x_[w] | z_[w]) return false;
  return true;
}

std::size_t PauliString::weight() const {
  std::size_t c = 0;
  for (std::size_t w = 0; w < x_.size(); ++w) c += std::popcount(x_[w] | z_[w]);
  return c;
}

void PauliString::mul_inplace(const PauliString& rhs) {
  if (n_ != rhs.n_)
    throw std::invalid_argument("PauliString multiply: size mismatch (" +
                                std::to_string(n_) + " vs " + std::to_string(rhs.n_) + ")");
  // In X^x Z^z normal form the stored phase is phase_ + |x&z| (one i per Y).
  // Moving rhs's X block past this string's Z block contributes (-1)^{|z1&x2|}.
  std::size_t e = phase_ + rhs.phase_;
  for (std::size_t w = 0; w < x_.size(); ++w) {
    const std::uint64_t x1 = x_[w], z1 = z_[w];
    const std::uint64_t x2 = rhs.x_[w], z2 = rhs.z_[w];
    const std::uint64_t rx = x1 ^ x2, rz = z1 ^ z2;
    e += 2 * std::popcount(z1 & x2);
    e += std::popcount(x1 & z1) + std::popcount(x2 & z2);
    e += 3 * std::popcount(rx & rz);  // -|rx&rz| mod 4
    x_[w] = rx;
    z_[w] = rz;
  }
  phase_ = static_cast<unsigned>(e & 3u);
}

std::string PauliString::str() const {
  std::string s;
  switch (phase_) {
    case 1: s = "i"; break;
    case 2: s = "-"; break;
    case 3: s = "-i"; break;
    default: break;
  }
  for (std::size_t j = 0; j < n_; ++j) s += letter(j);
  return s;
}

PauliString multiply(const PauliString& p, const PauliString& q) {
  PauliString r = p;
  r.mul_inplace(q);
  return r;
}

PauliString tensor_concat(const PauliString& p, const PauliString& q) {
  PauliString r(p.size() + q.size());
  for (std::size_t j = 0; j < p.size(); ++j) r.set_letter(j, p.letter(j));
  for (std::size_t j = 0; j < q.size(); ++j) r.set_letter(p.size() + j, q.letter(j));
  r.set_phase_exp(p.phase_exp() + q.phase_exp());
  return r;
}

unsigned symplectic_product(const PauliString& p, const PauliString& q) {
  if (p.size() != q.size())
    throw std::invalid_argument("symplectic_product: size mismatch");
  std::size_t c = popcount_and(p.x_mask(), q.z_mask()) + popcount_and(p.z_mask(), q.x_mask());
  return static_cast<unsigned>(c & 1u);
}

std::ostream& operator<<(std::ostream& os, const PauliString& p) { return os << p.str(); }

}  // namespace hyperstab
