#include "hyperstab/ghz.hpp"

#include <array>

namespace hyperstab {

namespace {

const std::array<const char*, 3> kDefaultLabels = {"polarization", "frequency", "spatial"};

void validate_block(const GhzBlock& b, std::size_t index) {
  const std::string where = "block " + std::to_string(index + 1) + ": ";
  if (b.m < 2) throw std::invalid_argument(where + "block size must be at least 2");
  if (b.parity_mask.size() != word_count(b.m))
    throw std::invalid_argument(where + "parity mask storage does not match block size");
  if (b.mask_bit(0))
    throw std::invalid_argument(where + "parity mask bit 0 must be 0");
  // No stray bits above m.
  if (b.m % 64 != 0) {
    const std::uint64_t high = b.parity_mask.back() >> (b.m % 64);
    if (high) throw std::invalid_argument(where + "parity mask has bits beyond block size");
  }
}

std::string default_label(std::size_t index) {
  if (index < kDefaultLabels.size()) return kDefaultLabels[index];
  return "dof" + std::to_string(index + 1);
}

}  // namespace

GhzBlock make_block(std::size_t m, const std::string& mask_bits, std::string dof_label) {
  GhzBlock b;
  b.m = m;
  b.dof_label = std::move(dof_label);
  if (mask_bits.size() != m)
    throw std::invalid_argument("parity mask \"" + mask_bits + "\" has length " +
                                std::to_string(mask_bits.size()) + ", expected " +
                                std::to_string(m));
  b.parity_mask.assign(word_count(m), 0);
  for (std::size_t j = 0; j < m; ++j) {
    if (mask_bits[j] == '1')
      b.parity_mask[j / 64] |= 1ull << (j % 64);
    else if (mask_bits[j] != '0')
      throw std::invalid_argument("parity mask \"" + mask_bits + "\" has a non-binary digit at offset " +
                                  std::to_string(j));
  }
  validate_block(b, 0);
  return b;
}

HyperState::HyperState(std::vector<GhzBlock> blocks) : blocks_(std::move(blocks)) {
  if (blocks_.empty()) throw std::invalid_argument("HyperState: at least one block required");
  for (std::size_t i = 0; i < blocks_.size(); ++i) {
    if (blocks_[i].dof_label.empty()) blocks_[i].dof_label = default_label(i);
    validate_block(blocks_[i], i);
    n_ += blocks_[i].m;
  }
}

HyperState HyperState::parse_spec(const std::string& text) {
  std::vector<GhzBlock> blocks;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find(',', pos);
    if (end == std::string::npos) end = text.size();
    const std::string part = text.substr(pos, end - pos);
    const std::size_t colon = part.find(':');
    if (part.empty() || colon == std::string::npos)
      throw std::invalid_argument("state spec: expected \"m:mask\" at offset " +
                                  std::to_string(pos) + " of \"" + text + "\"");
    std::size_t m = 0;
    try {
      std::size_t used = 0;
      m = std::stoul(part.substr(0, colon), &used);
      if (used != colon) throw std::invalid_argument("");
    } catch (const std::exception&) {
      throw std::invalid_argument("state spec: bad block size \"" + part.substr(0, colon) +
                                  "\" at offset " + std::to_string(pos));
    }
    try {
      blocks.push_back(make_block(m, part.substr(colon + 1)));
    } catch (const std::invalid_argument& e) {
      throw std::invalid_argument("state spec: " + std::string(e.what()) + " (block starting at offset " +
                                  std::to_string(pos) + ")");
    }
    if (end == text.size()) break;
    pos = end + 1;
  }
  return HyperState(std::move(blocks));
}

std::string HyperState::spec_string() const {
  std::string out;
  for (std::size_t i = 0; i < blocks_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(blocks_[i].m);
    out += ':';
    for (std::size_t j = 0; j < blocks_[i].m; ++j) out += blocks_[i].mask_bit(j) ? '1' : '0';
  }
  return out;
}

}  // namespace hyperstab
