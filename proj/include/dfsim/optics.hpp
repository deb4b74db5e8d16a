// Jones-calculus waveplates, Pauli decomposition, Haar-random SU(2) draws,
// and collective channels U (x) U (x) ... (x) U.
//
// Frozen conventions, checked against the tabulated channel below:
//   * qwp slow axis imparts phase -i relative to the fast axis, det(qwp) = -i,
//     qwp(0) = diag(1, -i);
//   * waveplate_channel applies plates in list order (first plate acts first);
//   * phase alignment for reading off Pauli coefficients multiplies by the
//     unit phase that makes the sigma_x coefficient real positive.
// With these, the plate pair [HWP 59 deg, QWP 13.5 deg] decomposes to
// coefficient magnitudes (0.012, 0.332, 0.707, 0.624) on (id, z, y, x) with
// signs (-, -, +) on (z, y, x).
#pragma once

#include <cmath>
#include <random>
#include <stdexcept>
#include <vector>

#include "dfsim/linalg.hpp"

namespace dfsim {

enum class PlateKind { HWP, QWP };

struct WaveplateSetting {
  PlateKind kind;
  double angle_deg;  // fast-axis angle from horizontal
};

// Coefficients of u = a_id*1 + a_z*sz + a_y*sy + a_x*sx, ordered (id, z, y, x).
struct PauliCoefficients {
  Cx a_id;
  Cx a_z;
  Cx a_y;
  Cx a_x;
};

inline double deg_to_rad(double deg) { return deg * M_PI / 180.0; }

// Normalize a plate angle to [0, 180); both plates have period 180 degrees.
inline double normalize_angle(double deg) {
  double a = std::fmod(deg, 180.0);
  if (a < 0.0) a += 180.0;
  return a;
}

inline Mat hwp(double angle_deg) {
  const double t = deg_to_rad(normalize_angle(angle_deg));
  Mat m(2, 2);
  m << std::cos(2 * t), std::sin(2 * t), std::sin(2 * t), -std::cos(2 * t);
  return m;
}

inline Mat qwp(double angle_deg) {
  const double t = deg_to_rad(normalize_angle(angle_deg));
  const double c = std::cos(t), s = std::sin(t);
  Mat m(2, 2);
  m << Cx{c * c, -s * s}, Cx{s * c, s * c}, Cx{s * c, s * c}, Cx{s * s, -c * c};
  return m;
}

inline Mat waveplate_matrix(const WaveplateSetting& p) {
  return p.kind == PlateKind::HWP ? hwp(p.angle_deg) : qwp(p.angle_deg);
}

// Product over the list with the first plate acting first.
inline Mat waveplate_channel(const std::vector<WaveplateSetting>& plates) {
  if (plates.empty()) throw std::invalid_argument("waveplate_channel: empty plate list");
  Mat u = waveplate_matrix(plates.front());
  for (std::size_t i = 1; i < plates.size(); ++i) u = waveplate_matrix(plates[i]) * u;
  return u;
}

inline std::vector<WaveplateSetting> paper_noise_plates() {
  return {{PlateKind::HWP, 59.0}, {PlateKind::QWP, 13.5}};
}

inline PauliCoefficients pauli_decompose(const Mat& u) {
  if (u.rows() != 2 || u.cols() != 2) throw std::invalid_argument("pauli_decompose: need 2x2");
  return {u.trace() / 2.0, (sigma_z() * u).trace() / 2.0, (sigma_y() * u).trace() / 2.0,
          (sigma_x() * u).trace() / 2.0};
}

inline Mat pauli_reconstruct(const PauliCoefficients& p) {
  return p.a_id * identity(2) + p.a_z * sigma_z() + p.a_y * sigma_y() + p.a_x * sigma_x();
}

// Multiply by the unit phase making a_x real positive (the largest remaining
// coefficient anchors instead when a_x vanishes).
inline PauliCoefficients phase_align(const PauliCoefficients& p) {
  Cx anchor = p.a_x;
  if (std::abs(anchor) < 1e-9) {
    anchor = p.a_z;
    if (std::abs(p.a_y) > std::abs(anchor)) anchor = p.a_y;
    if (std::abs(p.a_id) > std::abs(anchor)) anchor = p.a_id;
  }
  if (std::abs(anchor) == 0.0) return p;
  const Cx phase = std::conj(anchor) / std::abs(anchor);
  return {p.a_id * phase, p.a_z * phase, p.a_y * phase, p.a_x * phase};
}

// Haar draw on SU(2): two uniform phases plus theta = arcsin(sqrt(u)).
inline Mat haar_su2(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> uni(0.0, 1.0);
  const double phi = 2.0 * M_PI * uni(rng);
  const double psi = 2.0 * M_PI * uni(rng);
  const double theta = std::asin(std::sqrt(uni(rng)));
  const double c = std::cos(theta), s = std::sin(theta);
  Mat m(2, 2);
  m << std::polar(c, phi), std::polar(s, psi), -std::polar(s, -psi), std::polar(c, -phi);
  return m;
}

inline Mat collective(const Mat& u, int n) {
  if (n < 1) throw std::invalid_argument("collective: need n >= 1");
  Mat out = u;
  for (int i = 1; i < n; ++i) out = tensor(out, u);
  return out;
}

inline Vec apply(const Mat& op, const Vec& s) {
  if (op.cols() != s.size()) throw std::invalid_argument("apply: dimension mismatch");
  Vec out = op * s;
  const double n2 = out.squaredNorm();
  if (std::abs(n2 - 1.0) > kConstructTol) out /= std::sqrt(n2);
  return out;
}

inline Mat apply_to_density(const Mat& op, const Mat& rho) {
  if (op.cols() != rho.rows()) throw std::invalid_argument("apply_to_density: dimension mismatch");
  return op * rho * op.adjoint();
}

}  // namespace dfsim
