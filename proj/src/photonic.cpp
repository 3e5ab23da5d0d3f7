#include "hyperstab/photonic.hpp"

#include <stdexcept>

namespace hyperstab::photonic {

Rational AmplitudeState::norm_sq() const {
  Rational n = 0;
  for (const auto& [modes, amp] : terms) n += amp.norm_sq();
  return n;
}

void AmplitudeState::insert(const ModeTuple& modes, const ExactComplex& amp) {
  if (amp.is_zero()) return;
  auto [it, fresh] = terms.emplace(modes, amp);
  if (!fresh) {
    it->second = it->second + amp;
    if (it->second.is_zero()) terms.erase(it);
  }
}

AmplitudeState spdc_initial() {
  AmplitudeState s;
  s.stage = "initial";
  const ExactComplex one{1, 0};
  // Each pair: (|HH>+|VV>) x (|w1 w2>+|w2 w1>) x (|x1 y1>+|x2 y2>).
  for (unsigned p1 = 0; p1 < 2; ++p1)
    for (unsigned f1 = 0; f1 < 2; ++f1)
      for (unsigned s1 = 0; s1 < 2; ++s1)
        for (unsigned p2 = 0; p2 < 2; ++p2)
          for (unsigned f2 = 0; f2 < 2; ++f2)
            for (unsigned s2 = 0; s2 < 2; ++s2) {
              ModeTuple t;
              t[0] = {static_cast<Polarization>(p1),
                      f1 ? Frequency::Omega2 : Frequency::Omega1, s1 ? "a2" : "a1"};
              t[1] = {static_cast<Polarization>(p1),
                      f1 ? Frequency::Omega1 : Frequency::Omega2, s1 ? "b2" : "b1"};
              t[2] = {static_cast<Polarization>(p2),
                      f2 ? Frequency::Omega2 : Frequency::Omega1, s2 ? "c2" : "c1"};
              t[3] = {static_cast<Polarization>(p2),
                      f2 ? Frequency::Omega1 : Frequency::Omega2, s2 ? "d2" : "d1"};
              s.insert(t, one);
            }
  return s;
}

AmplitudeState apply_pbs(const AmplitudeState& state, Photon photon, const PbsMap& ports) {
  AmplitudeState out;
  out.stage = state.stage;
  const std::size_t p = static_cast<std::size_t>(photon);
  for (const auto& [modes, amp] : state.terms) {
    auto it = ports.find(modes[p].path);
    if (it == ports.end())
      throw std::invalid_argument("apply_pbs: path \"" + modes[p].path +
                                  "\" is not an input of this beam splitter");
    ModeTuple t = modes;
    t[p].path = (t[p].pol == Polarization::H) ? it->second.transmit : it->second.reflect;
    if (out.terms.count(t)) throw std::logic_error("apply_pbs: relabeling collision");
    out.insert(t, amp);
  }
  return out;
}

std::pair<AmplitudeState, Rational> apply_qnd(const AmplitudeState& state, const QndConfig& cfg) {
  AmplitudeState kept;
  kept.stage = state.stage;
  for (const auto& [modes, amp] : state.terms) {
    int total = 0;
    for (const PhotonMode& m : modes) {
      auto it = cfg.shifts.find(m.path);
      if (it != cfg.shifts.end()) total += it->second;
    }
    if (total == cfg.keep_total) kept.insert(modes, amp);
  }
  if (kept.terms.empty())
    throw std::runtime_error("apply_qnd: no term attains the accepted phase shift; "
                             "inconsistent configuration");
  const Rational p = kept.norm_sq() / state.norm_sq();
  return {std::move(kept), p};
}

AmplitudeState apply_od(const AmplitudeState& state, Photon photon, const OdMap& split) {
  AmplitudeState out;
  out.stage = state.stage;
  const std::size_t p = static_cast<std::size_t>(photon);
  for (const auto& [modes, amp] : state.terms) {
    auto it = split.find(modes[p].path);
    if (it == split.end())
      throw std::invalid_argument("apply_od: path \"" + modes[p].path +
                                  "\" is not an input of this demultiplexer");
    ModeTuple t = modes;
    t[p].path =
        (t[p].freq == Frequency::Omega1) ? it->second.omega1_out : it->second.omega2_out;
    if (out.terms.count(t)) throw std::logic_error("apply_od: relabeling collision");
    out.insert(t, amp);
  }
  return out;
}

AmplitudeState apply_om(const AmplitudeState& state, Photon photon, const OmMap& merge) {
  std::map<std::string, std::string> in_to_merged;
  for (const auto& [merged, inputs] : merge) {
    in_to_merged[inputs.first] = merged;
    in_to_merged[inputs.second] = merged;
  }
  AmplitudeState out;
  out.stage = state.stage;
  const std::size_t p = static_cast<std::size_t>(photon);
  for (const auto& [modes, amp] : state.terms) {
    auto it = in_to_merged.find(modes[p].path);
    if (it == in_to_merged.end())
      throw std::invalid_argument("apply_om: path \"" + modes[p].path +
                                  "\" is not an input of this multiplexer");
    ModeTuple t = modes;
    t[p].path = it->second;
    // Merged inputs always differ in frequency, so full tuples stay distinct.
    if (out.terms.count(t))
      throw std::logic_error("apply_om: two terms merged onto one mode tuple");
    out.insert(t, amp);
  }
  return out;
}

PbsMap protocol_pbs_map(Photon photon) {
  switch (photon) {
    case Photon::A: return {{"a1", {"a'1", "c'1"}}, {"a2", {"a'2", "c'2"}}};
    case Photon::C: return {{"c1", {"c'1", "a'1"}}, {"c2", {"c'2", "a'2"}}};
    default:
      throw std::invalid_argument("protocol_pbs_map: beam splitters act on photons a and c");
  }
}

QndConfig protocol_qnd1() { return {{{"a'1", 3}, {"c'1", -2}, {"a'2", 2}, {"c'2", -1}}, 1}; }

QndConfig protocol_qnd2() {
  return {{{"b11", 2}, {"b21", 4}, {"d11", -1}, {"d21", -3},
           {"b12", 3}, {"b22", 5}, {"d12", -2}, {"d22", -4}},
          1};
}

OdMap protocol_od_map(Photon photon) {
  switch (photon) {
    case Photon::B: return {{"b1", {"b11", "b12"}}, {"b2", {"b21", "b22"}}};
    case Photon::D: return {{"d1", {"d11", "d12"}}, {"d2", {"d21", "d22"}}};
    default:
      throw std::invalid_argument("protocol_od_map: demultiplexers act on photons b and d");
  }
}

OmMap protocol_om_map(Photon photon) {
  switch (photon) {
    case Photon::B: return {{"b'1", {"b11", "b12"}}, {"b'2", {"b21", "b22"}}};
    case Photon::D: return {{"d'1", {"d11", "d12"}}, {"d'2", {"d21", "d22"}}};
    default:
      throw std::invalid_argument("protocol_om_map: multiplexers act on photons b and d");
  }
}

DoubleXpmConfig protocol_double_xpm_first() {
  return {{{"a'1", 1}, {"a'2", 2}}, {{"c'1", 1}, {"c'2", 2}}};
}

DoubleXpmConfig protocol_double_xpm_second() {
  return {{{"b11", 1}, {"b12", 2}, {"b21", 3}, {"b22", 4}},
          {{"d11", 1}, {"d12", 2}, {"d21", 3}, {"d22", 4}}};
}

std::vector<std::string> protocol_qnd1_domain(Photon photon) {
  switch (photon) {
    case Photon::A:
    case Photon::C: return {"a'1", "a'2", "c'1", "c'2"};
    default: throw std::invalid_argument("protocol_qnd1_domain: photons a and c only");
  }
}

std::vector<std::string> protocol_qnd2_domain(Photon photon) {
  switch (photon) {
    case Photon::B: return {"b11", "b12", "b21", "b22"};
    case Photon::D: return {"d11", "d12", "d21", "d22"};
    default: throw std::invalid_argument("protocol_qnd2_domain: photons b and d only");
  }
}

HyperState protocol_target_state() { return HyperState::parse_spec("4:0000,4:0101,4:0000"); }

ProtocolResult run_protocol() {
  AmplitudeState s = spdc_initial();
  s = apply_pbs(s, Photon::A, protocol_pbs_map(Photon::A));
  s = apply_pbs(s, Photon::C, protocol_pbs_map(Photon::C));
  s.stage = "pbs";
  auto [after1, p1] = apply_qnd(s, protocol_qnd1());
  after1.stage = "qnd1";
  AmplitudeState t = apply_od(after1, Photon::B, protocol_od_map(Photon::B));
  t = apply_od(t, Photon::D, protocol_od_map(Photon::D));
  t.stage = "od";
  auto [after2, p2] = apply_qnd(t, protocol_qnd2());
  after2.stage = "qnd2";
  AmplitudeState f = apply_om(after2, Photon::B, protocol_om_map(Photon::B));
  f = apply_om(f, Photon::D, protocol_om_map(Photon::D));
  f.stage = "final";
  return {std::move(f), p1, p2, p1 * p2};
}

namespace {

int accumulated(const std::map<std::string, int>& shifts, const std::string& pa,
                const std::string& pb) {
  int total = 0;
  auto ia = shifts.find(pa);
  if (ia != shifts.end()) total += ia->second;
  auto ib = shifts.find(pb);
  if (ib != shifts.end()) total += ib->second;
  return total;
}

}  // namespace

bool double_xpm_equivalence(const QndConfig& single, const DoubleXpmConfig& dbl,
                            const std::vector<std::string>& first_paths,
                            const std::vector<std::string>& second_paths) {
  for (const auto& [path, shift] : dbl.beam1)
    if (shift < 0)
      throw std::invalid_argument("double_xpm: beam shifts must be nonnegative (" + path + ")");
  for (const auto& [path, shift] : dbl.beam2)
    if (shift < 0)
      throw std::invalid_argument("double_xpm: beam shifts must be nonnegative (" + path + ")");
  for (const std::string& pa : first_paths) {
    for (const std::string& pb : second_paths) {
      const bool single_accept = accumulated(single.shifts, pa, pb) == single.keep_total;
      const bool double_accept =
          accumulated(dbl.beam1, pa, pb) == accumulated(dbl.beam2, pa, pb);
      if (single_accept != double_accept) return false;
    }
  }
  return true;
}

std::uint32_t encode_term(const ModeTuple& modes) {
  std::uint32_t idx = 0;
  for (std::size_t i = 0; i < 4; ++i) {
    if (modes[i].pol == Polarization::V) idx |= 1u << i;
    if (modes[i].freq == Frequency::Omega2) idx |= 1u << (4 + i);
    if (modes[i].path.empty())
      throw std::invalid_argument("encode_term: empty path label");
    const char sub = modes[i].path.back();
    if (sub == '2')
      idx |= 1u << (8 + i);
    else if (sub != '1')
      throw std::invalid_argument("encode_term: path \"" + modes[i].path +
                                  "\" has no 1/2 subscript");
  }
  return idx;
}

std::map<std::uint32_t, Rational> measurement_readout(const AmplitudeState& state) {
  if (state.stage != "final")
    throw std::logic_error("measurement_readout: state is at stage \"" + state.stage +
                           "\", not \"final\"");
  const Rational total = state.norm_sq();
  std::map<std::uint32_t, Rational> dist;
  for (const auto& [modes, amp] : state.terms) dist[encode_term(modes)] += amp.norm_sq();
  for (auto& [outcome, p] : dist) p /= total;
  return dist;
}

bool equals_state_vector_up_to_scalar(const AmplitudeState& state, const StateVector& v) {
  // Collect the encoded sparse form.
  std::map<std::uint32_t, ExactComplex> encoded;
  for (const auto& [modes, amp] : state.terms) {
    auto [it, fresh] = encoded.emplace(encode_term(modes), amp);
    if (!fresh) it->second = it->second + amp;
  }
  ExactComplex scale;  // encoded = scale * v
  bool have_scale = false;
  for (std::size_t i = 0; i < v.size(); ++i) {
    const bool v_zero = v[i] == Gint{};
    auto it = encoded.find(static_cast<std::uint32_t>(i));
    const bool e_zero = it == encoded.end() || it->second.is_zero();
    if (v_zero != e_zero) return false;
    if (v_zero) continue;
    // scale = encoded / v at this entry; v entries are Gaussian integers.
    const ExactComplex vv{Rational(v[i].re), Rational(v[i].im)};
    const Rational den = vv.norm_sq();
    const ExactComplex ratio{(it->second.re * vv.re + it->second.im * vv.im) / den,
                             (it->second.im * vv.re - it->second.re * vv.im) / den};
    if (!have_scale) {
      scale = ratio;
      have_scale = true;
    } else if (!(ratio == scale)) {
      return false;
    }
  }
  if (!have_scale) return false;  // both empty counts as mismatch
  for (const auto& [idx, amp] : encoded)
    if (idx >= v.size()) return false;
  return true;
}

std::string to_string(Photon p) {
  switch (p) {
    case Photon::A: return "a";
    case Photon::B: return "b";
    case Photon::C: return "c";
    case Photon::D: return "d";
  }
  return "?";
}

Photon photon_from_string(const std::string& s) {
  if (s == "a") return Photon::A;
  if (s == "b") return Photon::B;
  if (s == "c") return Photon::C;
  if (s == "d") return Photon::D;
  throw std::invalid_argument("unknown photon \"" + s + "\"");
}

}  // namespace hyperstab::photonic
