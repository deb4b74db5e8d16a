// Local polarization analysis: outcome probability tables for per-photon
// basis settings, Poisson count sampling, QBER and visibility arithmetic, and
// the white-noise visibility admixture.
#pragma once

#include <array>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <vector>

#include "dfsim/linalg.hpp"
#include "dfsim/outcomes.hpp"

namespace dfsim {

struct OutcomeDistribution {
  std::array<double, kNumOutcomes> probabilities;
};

struct CountRecord {
  std::array<std::uint64_t, kNumOutcomes> counts;
  double total_expected;
  std::uint64_t seed;
};

// +1 eigenvector for bit 0, -1 eigenvector for bit 1, in each basis:
// Z: {|0>, |1>}; X: {(|0>+|1>)/sqrt2, (|0>-|1>)/sqrt2};
// Y: {(|0>+i|1>)/sqrt2 = R, (|0>-i|1>)/sqrt2 = L}.
inline Vec analysis_vector(Basis b, int bit) {
  Vec v(2);
  switch (b) {
    case Basis::Z: v << (bit ? 0.0 : 1.0), (bit ? 1.0 : 0.0); return v;
    case Basis::X: v << 1.0, (bit ? -1.0 : 1.0); return v / std::sqrt(2.0);
    default: v << 1.0, (bit ? -kImag : kImag); return v / std::sqrt(2.0);
  }
}

inline Vec outcome_vector(int outcome, const MeasurementSetting& setting) {
  Vec v = analysis_vector(setting[0], outcome_bit(outcome, 0));
  for (int photon = 1; photon < kNumPhotons; ++photon)
    v = tensor(v, analysis_vector(setting[photon], outcome_bit(outcome, photon)));
  return v;
}

inline OutcomeDistribution outcome_probabilities(const Vec& state, const MeasurementSetting& setting) {
  if (state.size() != 16) throw std::invalid_argument("outcome_probabilities: need a 16-dim state");
  OutcomeDistribution d;
  for (int o = 0; o < kNumOutcomes; ++o) d.probabilities[o] = std::norm(inner(outcome_vector(o, setting), state));
  return d;
}

inline OutcomeDistribution outcome_probabilities(const Mat& rho, const MeasurementSetting& setting) {
  if (rho.rows() != 16 || rho.cols() != 16)
    throw std::invalid_argument("outcome_probabilities: need a 16x16 density operator");
  OutcomeDistribution d;
  for (int o = 0; o < kNumOutcomes; ++o) {
    const Vec v = outcome_vector(o, setting);
    d.probabilities[o] = std::real(inner(v, Vec(rho * v)));
  }
  return d;
}

// Outcomes carrying more than `tol` probability.
inline std::vector<int> support(const OutcomeDistribution& d, double tol = 1e-12) {
  std::vector<int> s;
  for (int o = 0; o < kNumOutcomes; ++o)
    if (d.probabilities[o] > tol) s.push_back(o);
  return s;
}

// Each bin draws independently from a Poisson law with mean total*p, so the
// total count fluctuates run to run, as coincidence counts do.
inline CountRecord sample_counts(const OutcomeDistribution& d, double total_expected,
                                 std::uint64_t seed) {
  if (!(total_expected > 0.0)) throw std::invalid_argument("sample_counts: total_expected must be > 0");
  CountRecord r{{}, total_expected, seed};
  std::mt19937_64 rng(seed);
  for (int o = 0; o < kNumOutcomes; ++o) {
    const double mean = total_expected * d.probabilities[o];
    if (mean <= 0.0) {
      r.counts[o] = 0;
      continue;
    }
    std::poisson_distribution<std::uint64_t> poisson(mean);
    r.counts[o] = poisson(rng);
  }
  return r;
}

// Fraction of events outside the allowed set.
inline double qber(const CountRecord& c, const std::vector<int>& allowed) {
  std::array<bool, kNumOutcomes> ok{};
  for (int o : allowed) {
    if (o < 0 || o >= kNumOutcomes) throw std::invalid_argument("qber: outcome out of range");
    ok[o] = true;
  }
  std::uint64_t total = 0, false_events = 0;
  for (int o = 0; o < kNumOutcomes; ++o) {
    total += c.counts[o];
    if (!ok[o]) false_events += c.counts[o];
  }
  if (total == 0) throw std::invalid_argument("qber: zero total counts");
  return static_cast<double>(false_events) / static_cast<double>(total);
}

inline double visibility_from_qber(double q) {
  if (q < 0.0 || q > 0.5) throw std::invalid_argument("visibility_from_qber: need 0 <= q <= 1/2");
  return 1.0 - 2.0 * q;
}

// White-noise admixture: v |psi><psi| + (1-v) 1/16.
inline Mat admix_visibility(const Vec& state, double v) {
  if (state.size() != 16) throw std::invalid_argument("admix_visibility: need a 16-dim state");
  if (v < 0.0 || v > 1.0) throw std::invalid_argument("admix_visibility: need 0 <= v <= 1");
  return v * projector(state) + (1.0 - v) * identity(16) / 16.0;
}

// Visibility that makes the white-noise model hit a target QBER when the
// allowed set covers `allowed_count` of the 16 bins: QBER = (1-v)(16-k)/16.
inline double visibility_for_qber_target(double qber_target, int allowed_count = 4) {
  if (allowed_count <= 0 || allowed_count >= kNumOutcomes)
    throw std::invalid_argument("visibility_for_qber_target: allowed_count out of range");
  const double spill = static_cast<double>(kNumOutcomes - allowed_count) / kNumOutcomes;
  const double v = 1.0 - qber_target / spill;
  if (v < 0.0 || v > 1.0) throw std::invalid_argument("visibility_for_qber_target: target unreachable");
  return v;
}

}  // namespace dfsim
