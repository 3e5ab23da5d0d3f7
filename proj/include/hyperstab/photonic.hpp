#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "hyperstab/dense.hpp"
#include "hyperstab/ghz.hpp"

namespace hyperstab::photonic {

using Rational = boost::multiprecision::cpp_rational;

/// Exact complex amplitude with rational components.
struct ExactComplex {
  Rational re = 0;
  Rational im = 0;

  friend ExactComplex operator+(const ExactComplex& a, const ExactComplex& b) {
    return {a.re + b.re, a.im + b.im};
  }
  friend ExactComplex operator*(const ExactComplex& a, const ExactComplex& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend bool operator==(const ExactComplex&, const ExactComplex&) = default;

  bool is_zero() const { return re == 0 && im == 0; }
  Rational norm_sq() const { return re * re + im * im; }
};

enum class Photon : unsigned { A = 0, B = 1, C = 2, D = 3 };
enum class Polarization : unsigned { H = 0, V = 1 };
enum class Frequency : unsigned { Omega1 = 0, Omega2 = 1 };

struct PhotonMode {
  Polarization pol = Polarization::H;
  Frequency freq = Frequency::Omega1;
  std::string path;

  friend auto operator<=>(const PhotonMode&, const PhotonMode&) = default;
};

using ModeTuple = std::array<PhotonMode, 4>;  // photons a, b, c, d

/// Exact amplitude map over four-photon mode tuples. Zero amplitudes are
/// never stored.
struct AmplitudeState {
  std::map<ModeTuple, ExactComplex> terms;
  std::string stage = "initial";

  Rational norm_sq() const;
  void insert(const ModeTuple& modes, const ExactComplex& amp);
};

/// The two-pair source state: the product of two polarization-and-frequency
/// entangled pair states with two-path pumping, 64 unit-amplitude terms.
AmplitudeState spdc_initial();

struct PbsPorts {
  std::string transmit;  // output for H
  std::string reflect;   // output for V
};
using PbsMap = std::map<std::string, PbsPorts>;  // input path -> ports

AmplitudeState apply_pbs(const AmplitudeState& state, Photon photon, const PbsMap& ports);

struct QndConfig {
  std::map<std::string, int> shifts;  // path -> integer multiple of theta
  int keep_total = 1;                 // accepted summed multiplier
};

/// Post-selects terms whose summed path shifts equal keep_total. Returns the
/// filtered state and the exact success probability (kept / input squared
/// norm). Throws when nothing survives.
std::pair<AmplitudeState, Rational> apply_qnd(const AmplitudeState& state, const QndConfig& cfg);

struct OdSplit {
  std::string omega1_out;
  std::string omega2_out;
};
using OdMap = std::map<std::string, OdSplit>;  // input path -> frequency-split outputs

AmplitudeState apply_od(const AmplitudeState& state, Photon photon, const OdMap& split);

/// merged path -> the two inputs it absorbs
using OmMap = std::map<std::string, std::pair<std::string, std::string>>;

AmplitudeState apply_om(const AmplitudeState& state, Photon photon, const OmMap& merge);

struct ProtocolResult {
  AmplitudeState final_state;
  Rational p_qnd1;
  Rational p_qnd2;
  Rational p_success;  // product of the two post-selection probabilities
};

/// Runs the full pipeline: source, polarizing beam splitters on photons a/c,
/// first path post-selection, frequency demultiplexers on b/d, second path
/// post-selection, and the final multiplexers.
ProtocolResult run_protocol();

/// Two-probe post-selection: each beam accumulates the (nonnegative) shifts
/// of the paths it couples, and a configuration is accepted exactly when the
/// two accumulated phases agree.
struct DoubleXpmConfig {
  std::map<std::string, int> beam1;
  std::map<std::string, int> beam2;
};

/// True when the double-probe accept set equals the single-probe accept set
/// over every ordered pair of occupied paths drawn from the two domains.
bool double_xpm_equivalence(const QndConfig& single, const DoubleXpmConfig& dbl,
                            const std::vector<std::string>& first_paths,
                            const std::vector<std::string>& second_paths);

/// 12-bit computational outcome for a final-stage term: polarization bits in
/// slots 0-3, frequency bits 4-7, path-subscript bits 8-11 (per photon a..d).
std::uint32_t encode_term(const ModeTuple& modes);

/// Outcome distribution of the final state; probabilities are exact.
std::map<std::uint32_t, Rational> measurement_readout(const AmplitudeState& state);

/// Exact equality with an integer state vector up to one global scalar.
bool equals_state_vector_up_to_scalar(const AmplitudeState& state, const StateVector& v);

// Canonical pipeline pieces (paths, shifts and port wiring of the bundled
// four-photon protocol).
PbsMap protocol_pbs_map(Photon photon);
QndConfig protocol_qnd1();
QndConfig protocol_qnd2();
OdMap protocol_od_map(Photon photon);
OmMap protocol_om_map(Photon photon);
DoubleXpmConfig protocol_double_xpm_first();
DoubleXpmConfig protocol_double_xpm_second();
std::vector<std::string> protocol_qnd1_domain(Photon photon);
std::vector<std::string> protocol_qnd2_domain(Photon photon);

/// The 12-qubit target: aligned polarization and path blocks, alternating
/// frequency block.
HyperState protocol_target_state();

std::string to_string(Photon p);
Photon photon_from_string(const std::string& s);

}  // namespace hyperstab::photonic
