// Logical-qubit tomography: the three four-photon observables, expectation
// evaluation through local measurement settings, 2x2 reconstruction in the
// {Phi0, Phi1} basis, physicality projection, and fidelity.
#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

#include "dfsim/df_states.hpp"
#include "dfsim/linalg.hpp"
#include "dfsim/measurement.hpp"
#include "dfsim/outcomes.hpp"

namespace dfsim {

enum class SigmaName { SigmaZ, SigmaX, SigmaY };

struct SigmaObservable {
  SigmaName name;
  std::array<Mat, kNumPhotons> factors;
  Mat matrix;  // 16x16 tensor product of the factors
};

inline SigmaObservable make_sigma(SigmaName name) {
  std::array<Mat, kNumPhotons> f;
  switch (name) {
    case SigmaName::SigmaZ: f = {sigma_z(), sigma_z(), sigma_x(), sigma_x()}; break;
    case SigmaName::SigmaX: f = {sigma_z(), sigma_x(), sigma_z(), sigma_x()}; break;
    default: f = {sigma_y(), sigma_x(), sigma_z(), identity(2)}; break;
  }
  Mat m = f[0];
  for (int i = 1; i < kNumPhotons; ++i) m = tensor(m, f[i]);
  return {name, f, m};
}

inline std::array<SigmaObservable, 3> sigma_observables() {
  return {make_sigma(SigmaName::SigmaZ), make_sigma(SigmaName::SigmaX), make_sigma(SigmaName::SigmaY)};
}

// Local setting realizing an observable, with the photons whose outcome signs
// enter the eigenvalue product. The identity factor of SigmaY leaves photon d
// inactive; its analysis basis defaults to Z and is immaterial.
struct LocalRealization {
  MeasurementSetting setting;
  std::array<bool, kNumPhotons> active;
};

inline LocalRealization local_realization(SigmaName name, Basis idle_basis = Basis::Z) {
  switch (name) {
    case SigmaName::SigmaZ:
      return {{Basis::Z, Basis::Z, Basis::X, Basis::X}, {true, true, true, true}};
    case SigmaName::SigmaX:
      return {{Basis::Z, Basis::X, Basis::Z, Basis::X}, {true, true, true, true}};
    default:
      return {{Basis::Y, Basis::X, Basis::Z, idle_basis}, {true, true, true, false}};
  }
}

inline double outcome_sign(int outcome, const std::array<bool, kNumPhotons>& active) {
  double s = 1.0;
  for (int photon = 0; photon < kNumPhotons; ++photon)
    if (active[photon] && outcome_bit(outcome, photon)) s = -s;
  return s;
}

inline double expectation_from_distribution(const OutcomeDistribution& d,
                                            const std::array<bool, kNumPhotons>& active) {
  double e = 0.0;
  for (int o = 0; o < kNumOutcomes; ++o) e += outcome_sign(o, active) * d.probabilities[o];
  return e;
}

inline double expectation_from_counts(const CountRecord& c,
                                      const std::array<bool, kNumPhotons>& active) {
  double total = 0.0, e = 0.0;
  for (int o = 0; o < kNumOutcomes; ++o) {
    total += static_cast<double>(c.counts[o]);
    e += outcome_sign(o, active) * static_cast<double>(c.counts[o]);
  }
  if (total == 0.0) throw std::invalid_argument("expectation_from_counts: zero total counts");
  return e / total;
}

inline double expectation(const Mat& rho, const SigmaObservable& s) {
  if (rho.rows() != 16 || rho.cols() != 16)
    throw std::invalid_argument("expectation: need a 16x16 density operator");
  const Cx val = (rho * s.matrix).trace();
  if (std::abs(val.imag()) > 1e-8) throw std::invalid_argument("expectation: not real");
  return val.real();
}

inline double expectation(const Vec& state, const SigmaObservable& s) {
  if (state.size() != 16) throw std::invalid_argument("expectation: need a 16-dim state");
  return expectation(projector(state), s);
}

// Affine inverse of the forward map rho -> (<Sz>, <Sx>, <Sy>) on the DF
// subspace; may be unphysical before project_physical.
inline Mat reconstruct(double ez, double ex, double ey) {
  const double r11 = (3.0 * ez + 1.0) / 4.0;
  const double re12 = std::sqrt(3.0) * (2.0 * ex + ez - 1.0) / 4.0;
  const double im12 = std::sqrt(3.0) * ey / 2.0;
  Mat rho(2, 2);
  rho << Cx{r11, 0.0}, Cx{re12, im12}, Cx{re12, -im12}, Cx{1.0 - r11, 0.0};
  return rho;
}

// Clips negative eigenvalues to zero and renormalizes the trace. Idempotent.
inline Mat project_physical(const Mat& rho) {
  const Mat herm = (rho + Mat(rho.adjoint())) / 2.0;
  const EigenSystem es = herm_eig(herm);
  Mat out = Mat::Zero(rho.rows(), rho.cols());
  double trace = 0.0;
  for (int i = 0; i < es.values.size(); ++i) {
    const double lambda = std::max(es.values[i], 0.0);
    trace += lambda;
    out += lambda * projector(Vec(es.vectors.col(i)));
  }
  if (trace <= 0.0) throw std::invalid_argument("project_physical: zero spectrum");
  return out / trace;
}

inline void require_physical(const Mat& rho, const char* who) {
  if (!is_hermitian(rho, 1e-8)) throw std::invalid_argument(std::string(who) + ": not Hermitian");
  if (std::abs(rho.trace().real() - 1.0) > 1e-8)
    throw std::invalid_argument(std::string(who) + ": trace differs from 1");
  const EigenSystem es = herm_eig((rho + Mat(rho.adjoint())) / 2.0);
  if (es.values.minCoeff() < -kPsdClipTol)
    throw std::invalid_argument(std::string(who) + ": negative eigenvalue");
}

// Uhlmann fidelity Tr[(sqrt(sigma) rho sqrt(sigma))^{1/2}].
inline double fidelity(const Mat& rho, const Mat& sigma) {
  require_physical(rho, "fidelity");
  require_physical(sigma, "fidelity");
  const Mat s = matrix_sqrt_psd((sigma + Mat(sigma.adjoint())) / 2.0);
  const Mat inner = s * ((rho + Mat(rho.adjoint())) / 2.0) * s;
  const double f = matrix_sqrt_psd((inner + Mat(inner.adjoint())) / 2.0).trace().real();
  if (f > 1.0 + 1e-9) throw std::invalid_argument("fidelity: result above 1");
  return std::clamp(f, 0.0, 1.0);
}

struct SamplingPlan {
  double total_expected;
  std::uint64_t seed;  // setting k uses seed + k, for k = 0 (Sz), 1 (Sx), 2 (Sy)
};

// Measures the three settings on the input (exactly, or through Poisson
// counts), reconstructs, and projects to physical only in sampled mode so
// that exact runs cannot hide an algebra defect.
inline Mat tomography_pipeline(const Mat& rho, std::optional<SamplingPlan> sampling = std::nullopt) {
  std::array<double, 3> e{};
  const std::array<SigmaName, 3> names{SigmaName::SigmaZ, SigmaName::SigmaX, SigmaName::SigmaY};
  for (int k = 0; k < 3; ++k) {
    const LocalRealization lr = local_realization(names[k]);
    const OutcomeDistribution d = outcome_probabilities(rho, lr.setting);
    if (sampling) {
      const CountRecord c = sample_counts(d, sampling->total_expected, sampling->seed + k);
      e[k] = expectation_from_counts(c, lr.active);
    } else {
      e[k] = expectation_from_distribution(d, lr.active);
    }
  }
  const Mat out = reconstruct(e[0], e[1], e[2]);
  if (sampling) return project_physical(out);
  require_physical(out, "tomography_pipeline");
  return out;
}

inline Mat tomography_pipeline(const Vec& state, std::optional<SamplingPlan> sampling = std::nullopt) {
  if (state.size() != 16) throw std::invalid_argument("tomography_pipeline: need a 16-dim state");
  return tomography_pipeline(projector(state), sampling);
}

// Weight of rho outside the DF subspace.
inline double df_residual(const Mat& rho) {
  const Mat p = projector(phi0()) + projector(phi1());
  return 1.0 - std::real((p * rho * p).trace());
}

inline double df_residual(const Vec& state) { return decode_logical(state).residual; }

}  // namespace dfsim
