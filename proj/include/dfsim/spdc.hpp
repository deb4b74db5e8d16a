// Bosonic Fock-space model of the photon-pair source: singlet-pair creation
// operators, second-order emission, 50:50 beam splitters, one-photon-per-arm
// post-selection, mode swaps, and the relative fourfold rates.
//
// The emission amplitude per pair is factored out; every rate below is
// relative, quoted at unit pair amplitude.
#pragma once

#include <array>
#include <cmath>
#include <compare>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "dfsim/linalg.hpp"

namespace dfsim {

enum class Spatial { a0, b0, a, b, c, d };
enum class Pol { H, V };

inline const char* spatial_name(Spatial s) {
  switch (s) {
    case Spatial::a0: return "a0";
    case Spatial::b0: return "b0";
    case Spatial::a: return "a";
    case Spatial::b: return "b";
    case Spatial::c: return "c";
    default: return "d";
  }
}

struct ModeLabel {
  Spatial spatial;
  Pol pol;
  int pulse = 1;
  auto operator<=>(const ModeLabel&) const = default;
};

// Occupation numbers per mode; zero-count entries are never stored.
using Occupation = std::map<ModeLabel, int>;

// Sparse superposition of occupation-number states.
struct FockState {
  std::map<Occupation, Cx> terms;
};

inline FockState fock_vacuum() {
  FockState f;
  f.terms[Occupation{}] = 1.0;
  return f;
}

inline double squared_norm(const FockState& f) {
  double n2 = 0.0;
  for (const auto& [occ, amp] : f.terms) n2 += std::norm(amp);
  return n2;
}

inline void prune(FockState& f, double tol = 1e-15) {
  for (auto it = f.terms.begin(); it != f.terms.end();) {
    if (std::abs(it->second) < tol)
      it = f.terms.erase(it);
    else
      ++it;
  }
}

inline FockState scale(const FockState& f, Cx factor) {
  FockState out = f;
  for (auto& [occ, amp] : out.terms) amp *= factor;
  prune(out);
  return out;
}

// Bosonic creation operator on mode m: |n> -> sqrt(n+1) |n+1>.
inline FockState create(const FockState& f, const ModeLabel& m) {
  FockState out;
  for (const auto& [occ, amp] : f.terms) {
    Occupation o = occ;
    int& n = o[m];
    const Cx boosted = amp * std::sqrt(static_cast<double>(n + 1));
    n += 1;
    out.terms[o] += boosted;
  }
  prune(out);
  return out;
}

// Applies S^dag = a0H^dag b0V^dag - a0V^dag b0H^dag for the given pulse.
inline FockState pair_singlet(const FockState& f, int pulse = 1) {
  const FockState hv = create(create(f, {Spatial::a0, Pol::H, pulse}), {Spatial::b0, Pol::V, pulse});
  const FockState vh = create(create(f, {Spatial::a0, Pol::V, pulse}), {Spatial::b0, Pol::H, pulse});
  FockState out = hv;
  for (const auto& [occ, amp] : vh.terms) out.terms[occ] -= amp;
  prune(out);
  return out;
}

// The two-pair term of a single pulse: (S^dag)^2 |vac> / 2. Squared norm 3.
inline FockState second_order_emission() {
  FockState f = pair_singlet(pair_singlet(fock_vacuum(), 1), 1);
  for (auto& [occ, amp] : f.terms) amp /= 2.0;
  return f;
}

inline double binomial(int n, int k) {
  double r = 1.0;
  for (int i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
  return r;
}

// Symmetric 50:50 splitter: input^dag -> (out1^dag + out2^dag)/sqrt(2), for
// every polarization and pulse index on the input spatial mode.
inline FockState beam_splitter(const FockState& f, Spatial input, Spatial out1, Spatial out2) {
  for (const auto& term : f.terms)
    for (const auto& [mode, n] : term.first)
      if (mode.spatial == out1 || mode.spatial == out2)
        throw std::invalid_argument("beam_splitter: output mode already occupied");

  FockState out;
  for (const auto& [occ, amp] : f.terms) {
    Occupation base;
    std::vector<std::pair<ModeLabel, int>> moving;
    for (const auto& [mode, n] : occ) {
      if (mode.spatial == input)
        moving.push_back({mode, n});
      else
        base[mode] = n;
    }
    // expand each moving channel: |n> -> sum_k sqrt(C(n,k)/2^n) |k, n-k>
    std::vector<std::pair<Occupation, Cx>> partial{{base, amp}};
    for (const auto& [mode, n] : moving) {
      std::vector<std::pair<Occupation, Cx>> next;
      for (const auto& [pocc, pamp] : partial) {
        for (int k = 0; k <= n; ++k) {
          Occupation o = pocc;
          if (k > 0) o[{out1, mode.pol, mode.pulse}] += k;
          if (n - k > 0) o[{out2, mode.pol, mode.pulse}] += n - k;
          next.push_back({o, pamp * std::sqrt(binomial(n, k) / std::pow(2.0, n))});
        }
      }
      partial = std::move(next);
    }
    for (const auto& [o, a] : partial) out.terms[o] += a;
  }
  prune(out);
  return out;
}

// Routes the source modes to the four analysis arms: a0 -> (a,b), b0 -> (c,d).
inline FockState distribute_to_arms(const FockState& f) {
  return beam_splitter(beam_splitter(f, Spatial::a0, Spatial::a, Spatial::b), Spatial::b0,
                       Spatial::c, Spatial::d);
}

struct PostselectionResult {
  Vec state;           // normalized polarization state over arms a,b,c,d
  double probability;  // squared norm of the projected component of f normalized
};

namespace detail {

// One photon in each of a,b,c,d and none elsewhere; fills bit per arm (V = 1)
// and reports the pulse index seen in each arm.
inline bool one_per_arm(const Occupation& occ, int& index, std::array<int, 4>& pulses) {
  constexpr Spatial arms[4] = {Spatial::a, Spatial::b, Spatial::c, Spatial::d};
  int counts[4] = {0, 0, 0, 0};
  int bits[4] = {0, 0, 0, 0};
  for (const auto& [mode, n] : occ) {
    int arm = -1;
    for (int i = 0; i < 4; ++i)
      if (mode.spatial == arms[i]) arm = i;
    if (arm < 0) return false;  // photon left in a source mode
    counts[arm] += n;
    if (counts[arm] > 1) return false;
    bits[arm] = mode.pol == Pol::V ? 1 : 0;
    pulses[arm] = mode.pulse;
  }
  for (int i = 0; i < 4; ++i)
    if (counts[i] != 1) return false;
  index = (bits[0] << 3) | (bits[1] << 2) | (bits[2] << 1) | bits[3];
  return true;
}

}  // namespace detail

// Keeps the component with exactly one photon per arm and reads it out as a
// four-qubit polarization state. Valid only when the polarization pattern
// determines the term uniquely; distinguishable pulse components must go
// through two_pulse_product instead.
inline PostselectionResult postselect_one_per_arm(const FockState& f) {
  const double total2 = squared_norm(f);
  if (total2 == 0.0) throw std::invalid_argument("postselect_one_per_arm: empty projection");
  Vec kept = Vec::Zero(16);
  std::array<bool, 16> seen{};
  for (const auto& [occ, amp] : f.terms) {
    int index = 0;
    std::array<int, 4> pulses{};
    if (!detail::one_per_arm(occ, index, pulses)) continue;
    if (seen[index])
      throw std::invalid_argument(
          "postselect_one_per_arm: distinguishable components share an outcome");
    seen[index] = true;
    kept[index] += amp;
  }
  const double kept2 = kept.squaredNorm();
  if (kept2 < 1e-15) throw std::invalid_argument("postselect_one_per_arm: empty projection");
  return {kept / std::sqrt(kept2), kept2 / total2};
}

inline FockState swap_modes(const FockState& f, Spatial m1, Spatial m2) {
  FockState out;
  for (const auto& [occ, amp] : f.terms) {
    Occupation o;
    for (const auto& [mode, n] : occ) {
      ModeLabel m = mode;
      if (m.spatial == m1)
        m.spatial = m2;
      else if (m.spatial == m2)
        m.spatial = m1;
      o[m] = n;
    }
    out.terms[o] += amp;
  }
  return out;
}

// Relabels two analysis arms of a four-photon polarization state.
inline Vec swap_modes(const Vec& s, Spatial m1, Spatial m2) {
  if (s.size() != 16) throw std::invalid_argument("swap_modes: need a 16-dim state");
  auto arm_of = [](Spatial m) {
    switch (m) {
      case Spatial::a: return 0;
      case Spatial::b: return 1;
      case Spatial::c: return 2;
      case Spatial::d: return 3;
      default: throw std::invalid_argument("swap_modes: not an analysis arm");
    }
  };
  const int p1 = 3 - arm_of(m1), p2 = 3 - arm_of(m2);
  Vec out = Vec::Zero(16);
  for (int i = 0; i < 16; ++i) {
    const int b1 = (i >> p1) & 1, b2 = (i >> p2) & 1;
    const int j = (i & ~((1 << p1) | (1 << p2))) | (b2 << p1) | (b1 << p2);
    out[j] = s[i];
  }
  return out;
}

// Which arms received pulse 1's photons (a0-side arm, b0-side arm); pulse 2
// takes the complementary pair.
struct PairingConfiguration {
  Spatial pulse1_a_arm;
  Spatial pulse1_b_arm;
};

inline std::string configuration_label(const PairingConfiguration& c) {
  const Spatial a2 = c.pulse1_a_arm == Spatial::a ? Spatial::b : Spatial::a;
  const Spatial b2 = c.pulse1_b_arm == Spatial::c ? Spatial::d : Spatial::c;
  std::string s;
  s += "(";
  s += spatial_name(c.pulse1_a_arm);
  s += ",";
  s += spatial_name(c.pulse1_b_arm);
  s += ")(";
  s += spatial_name(a2);
  s += ",";
  s += spatial_name(b2);
  s += ")";
  return s;
}

struct TwoPulseOutcome {
  PairingConfiguration config;
  double probability;    // of this configuration, relative to the full emission
  double relative_rate;  // post-selected squared norm at unit pair amplitude
  Vec state;             // normalized conditional polarization state
};

// One pair from each of two consecutive pulses through the splitters. Photons
// from different pulses are distinguishable, so post-selection yields four
// pairing configurations; each is returned with its conditional state. tau is
// the per-pulse pair amplitude.
inline std::vector<TwoPulseOutcome> two_pulse_product(double tau = 1.0) {
  const FockState emitted =
      scale(pair_singlet(pair_singlet(fock_vacuum(), 1), 2), tau * tau);
  const double total2 = squared_norm(emitted);
  const FockState arms = distribute_to_arms(emitted);

  std::map<std::pair<Spatial, Spatial>, Vec> groups;
  for (const auto& [occ, amp] : arms.terms) {
    int index = 0;
    std::array<int, 4> pulses{};
    if (!detail::one_per_arm(occ, index, pulses)) continue;
    const Spatial ab = pulses[0] == 1 ? Spatial::a : Spatial::b;
    const Spatial cd = pulses[2] == 1 ? Spatial::c : Spatial::d;
    auto it = groups.try_emplace(std::make_pair(ab, cd), Vec::Zero(16)).first;
    it->second[index] += amp;
  }

  std::vector<TwoPulseOutcome> out;
  for (const auto& [key, kept] : groups) {
    const double kept2 = kept.squaredNorm();
    if (kept2 < 1e-15) continue;
    out.push_back({{key.first, key.second}, kept2 / total2, kept2, kept / std::sqrt(kept2)});
  }
  return out;
}

// Relative fourfold rate of the second-order (one-pulse, two-pair) pipeline
// against a single pairing configuration of the two-pulse product, at equal
// per-pulse pair amplitude tau. Conditioning on one configuration is what the
// source comparison measures, and the ratio is independent of tau.
inline double rate_ratio(double tau = 1.0) {
  const FockState so = distribute_to_arms(scale(second_order_emission(), tau * tau));
  const double num = postselect_one_per_arm(so).probability * squared_norm(so);
  const auto configs = two_pulse_product(tau);
  if (configs.empty()) throw std::logic_error("rate_ratio: empty two-pulse ensemble");
  return num / configs.front().relative_rate;
}

}  // namespace dfsim
