// The four-photon decoherence-free basis states and the logical qubit they
// encode.
//
// Qubit convention (inherited everywhere): photon a is the most significant
// bit, photon d the least; |0> = H, |1> = V. The mixed readout basis measures
// photons a,b in Z and photons c,d in X with |+> = (|0>+|1>)/sqrt(2),
// |-> = (|0>-|1>)/sqrt(2).
#pragma once

#include <array>
#include <cmath>
#include <random>
#include <stdexcept>

#include "dfsim/linalg.hpp"
#include "dfsim/outcomes.hpp"

namespace dfsim {

// Logical amplitudes over the decoherence-free basis, |c0|^2 + |c1|^2 = 1.
struct LogicalQubit {
  Cx c0;
  Cx c1;
};

inline bool is_normalized(const LogicalQubit& q, double tol = kConstructTol) {
  return std::abs(std::norm(q.c0) + std::norm(q.c1) - 1.0) <= tol;
}

// Two-photon singlet (|01> - |10>)/sqrt(2), the unique two-qubit DF state.
inline Vec singlet() {
  Vec v = Vec::Zero(4);
  v[0b01] = 1.0 / std::sqrt(2.0);
  v[0b10] = -1.0 / std::sqrt(2.0);
  return v;
}

// First DF basis state: singlet on photons (a,b) times singlet on (c,d).
inline Vec phi0() { return tensor(singlet(), singlet()); }

// Second DF basis state, orthogonal to phi0:
// (2|0011> - |0101> - |0110> - |1001> - |1010> + 2|1100>) / (2 sqrt(3)).
inline Vec phi1() {
  const double s = 1.0 / (2.0 * std::sqrt(3.0));
  Vec v = Vec::Zero(16);
  v[0b0011] = 2.0 * s;
  v[0b0101] = -s;
  v[0b0110] = -s;
  v[0b1001] = -s;
  v[0b1010] = -s;
  v[0b1100] = 2.0 * s;
  return v;
}

inline Vec encode_logical(const LogicalQubit& q) {
  if (!is_normalized(q)) throw std::invalid_argument("encode_logical: qubit not normalized");
  return q.c0 * phi0() + q.c1 * phi1();
}

struct DecodedLogical {
  LogicalQubit q;
  double residual;  // weight of the input outside the DF subspace
};

// Project onto the DF subspace and renormalize. The global phase is fixed by
// making c0 real nonnegative (c1 when |c0| is below 1e-8).
inline DecodedLogical decode_logical(const Vec& s) {
  if (s.size() != 16) throw std::invalid_argument("decode_logical: need a 16-dim state");
  Cx c0 = inner(phi0(), s);
  Cx c1 = inner(phi1(), s);
  const double weight = std::norm(c0) + std::norm(c1);
  const double residual = 1.0 - weight;
  if (residual > 1.0 - kConstructTol)
    throw std::invalid_argument("decode_logical: state orthogonal to the DF subspace");
  const double n = std::sqrt(weight);
  c0 /= n;
  c1 /= n;
  const Cx anchor = std::abs(c0) > 1e-8 ? c0 : c1;
  const Cx phase = std::conj(anchor) / std::abs(anchor);
  return {{c0 * phase, c1 * phase}, residual};
}

// Coefficients of a four-photon state in the Z (x) Z (x) X (x) X product
// basis, indexed like fourfold outcomes (photon a most significant).
inline std::array<Cx, 16> expand_mixed_basis(const Vec& s) {
  if (s.size() != 16) throw std::invalid_argument("expand_mixed_basis: need a 16-dim state");
  Mat hadamard(2, 2);
  hadamard << 1, 1, 1, -1;
  hadamard /= std::sqrt(2.0);
  const Mat t = tensor(tensor(identity(2), identity(2)), tensor(hadamard, hadamard));
  const Vec coeffs = t.adjoint() * s;
  std::array<Cx, 16> out;
  for (int i = 0; i < 16; ++i) out[i] = coeffs[i];
  return out;
}

enum class DfClass { Phi0Consistent, Phi1Consistent };

// In the (Z,Z,X,X) setting the supports of phi0 and phi1 are disjoint: an
// outcome is phi0-consistent iff photons a,b disagree and photons c,d
// disagree. 4 of the 16 outcomes are phi0-consistent, the other 12 phi1.
inline DfClass classify_outcome(int outcome, const MeasurementSetting& setting = kSettingZZXX) {
  if (setting != kSettingZZXX)
    throw std::invalid_argument("classify_outcome: classification is defined in the (Z,Z,X,X) setting");
  if (outcome < 0 || outcome >= kNumOutcomes) throw std::invalid_argument("classify_outcome: out of range");
  const bool ab_differ = outcome_bit(outcome, 0) != outcome_bit(outcome, 1);
  const bool cd_differ = outcome_bit(outcome, 2) != outcome_bit(outcome, 3);
  return ab_differ && cd_differ ? DfClass::Phi0Consistent : DfClass::Phi1Consistent;
}

// Uniform draw from the Bloch sphere via two uniform variates.
inline LogicalQubit random_logical_qubit(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> uni(0.0, 1.0);
  const double theta = std::acos(1.0 - 2.0 * uni(rng));
  const double phi = 2.0 * M_PI * uni(rng);
  return {std::cos(theta / 2.0), std::polar(std::sin(theta / 2.0), phi)};
}

}  // namespace dfsim
