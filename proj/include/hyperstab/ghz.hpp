#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hyperstab/pauli.hpp"

namespace hyperstab {

/// One GHZ factor: m qubits in the state (|b> + |b~>)/sqrt(2) where b is the
/// parity mask read as a bitstring and b~ its complement. Bit j of the mask
/// set means qubit j uses flipped basis labels relative to qubit 0, so bit 0
/// is always 0.
struct GhzBlock {
  std::size_t m = 2;
  Words parity_mask;       // m significant bits, bit 0 clear
  std::string dof_label;

  bool mask_bit(std::size_t j) const { return (parity_mask[j / 64] >> (j % 64)) & 1u; }

  friend bool operator==(const GhzBlock&, const GhzBlock&) = default;
};

GhzBlock make_block(std::size_t m, const std::string& mask_bits, std::string dof_label = "");

/// Ordered list of GHZ blocks; the stabilizer group has size 2^n with
/// n = sum of block sizes.
class HyperState {
 public:
  explicit HyperState(std::vector<GhzBlock> blocks);

  const std::vector<GhzBlock>& blocks() const { return blocks_; }
  std::size_t qubit_count() const { return n_; }

  /// Compact text form, e.g. "4:0000,4:0101,4:0000". Block labels default to
  /// polarization/frequency/spatial for the first three blocks.
  static HyperState parse_spec(const std::string& text);
  std::string spec_string() const;

  friend bool operator==(const HyperState&, const HyperState&) = default;

 private:
  std::vector<GhzBlock> blocks_;
  std::size_t n_ = 0;
};

}  // namespace hyperstab
