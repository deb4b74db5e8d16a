// Fourfold detection outcomes and per-photon analysis bases.
//
// Outcomes are indexed 0..15 with photon a as the most significant bit and
// photon d as the least significant; bit 0 means H (outcome "0") in the Z
// basis, + in the X basis, R in the Y basis.
#pragma once

#include <array>
#include <stdexcept>
#include <string>

namespace dfsim {

enum class Basis { Z, X, Y };

// Analysis basis per photon, in spatial-mode order a, b, c, d.
using MeasurementSetting = std::array<Basis, 4>;

inline constexpr int kNumPhotons = 4;
inline constexpr int kNumOutcomes = 16;

inline constexpr MeasurementSetting kSettingZZZZ{Basis::Z, Basis::Z, Basis::Z, Basis::Z};
inline constexpr MeasurementSetting kSettingZZXX{Basis::Z, Basis::Z, Basis::X, Basis::X};

inline int outcome_bit(int outcome, int photon) { return (outcome >> (3 - photon)) & 1; }

inline int outcome_index(int bit_a, int bit_b, int bit_c, int bit_d) {
  return bit_a << 3 | bit_b << 2 | bit_c << 1 | bit_d;
}

inline char outcome_char(Basis basis, int bit) {
  switch (basis) {
    case Basis::Z: return bit ? 'V' : 'H';
    case Basis::X: return bit ? '-' : '+';
    case Basis::Y: return bit ? 'L' : 'R';
  }
  throw std::invalid_argument("outcome_char: bad basis");
}

// 4-character label, e.g. "HVHV" in (Z,Z,Z,Z) or "HV+-" in (Z,Z,X,X).
inline std::string outcome_label(int outcome, const MeasurementSetting& setting) {
  if (outcome < 0 || outcome >= kNumOutcomes) throw std::invalid_argument("outcome_label: out of range");
  std::string s(4, '?');
  for (int k = 0; k < kNumPhotons; ++k) s[k] = outcome_char(setting[k], outcome_bit(outcome, k));
  return s;
}

}  // namespace dfsim
