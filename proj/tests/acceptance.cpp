// Acceptance gate: one line per criterion, exit code = number of failures.
// argv[1] must point at the dfsim CLI binary (used by the determinism check).
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <dfsim/dfsim.hpp>

using namespace dfsim;

namespace {

int failures = 0;

void report(int number, bool ok, const std::string& name, const std::string& detail) {
  std::printf("%s  %d. %s (%s)\n", ok ? "PASS" : "FAIL", number, name.c_str(), detail.c_str());
  if (!ok) ++failures;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

double trace_distance(const Mat& a, const Mat& b) {
  const Mat d = (a - b + Mat((a - b).adjoint())) / 2.0;
  return 0.5 * herm_eig(d).values.cwiseAbs().sum();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void criterion_invariance() {
  const auto t0 = std::chrono::steady_clock::now();
  std::mt19937_64 rng(1);
  const Vec p0 = phi0(), p1 = phi1();
  double worst = 0.0;
  const int draws = 1000;
  for (int i = 0; i < draws; ++i) {
    const Mat u4 = collective(haar_su2(rng), 4);
    const Vec psi = encode_logical(random_logical_qubit(rng));
    worst = std::max(worst, 1.0 - std::abs(inner(p0, Vec(u4 * p0))));
    worst = std::max(worst, 1.0 - std::abs(inner(p1, Vec(u4 * p1))));
    worst = std::max(worst, 1.0 - std::abs(inner(psi, Vec(u4 * psi))));
  }
  const double dt = seconds_since(t0);
  char detail[160];
  std::snprintf(detail, sizeof(detail), "%d draws, worst deviation %.2e, %.2f s", draws, worst, dt);
  report(1, worst < 1e-10 && dt < 5.0, "DF-subspace invariance under collective rotations", detail);
}

void criterion_noise_decomposition() {
  const PauliCoefficients p = phase_align(pauli_decompose(waveplate_channel(paper_noise_plates())));
  const bool magnitudes = std::abs(std::abs(p.a_id) - 0.012) < 2e-3 &&
                          std::abs(std::abs(p.a_z) - 0.332) < 2e-3 &&
                          std::abs(std::abs(p.a_y) - 0.707) < 2e-3 &&
                          std::abs(std::abs(p.a_x) - 0.624) < 2e-3;
  const bool signs = p.a_z.real() < 0.0 && p.a_y.real() < 0.0 && p.a_x.real() > 0.0;
  char detail[200];
  std::snprintf(detail, sizeof(detail), "|a| = (%.4f, %.4f, %.4f, %.4f), re(z,y,x) = (%+.3f, %+.3f, %+.3f)",
                std::abs(p.a_id), std::abs(p.a_z), std::abs(p.a_y), std::abs(p.a_x), p.a_z.real(),
                p.a_y.real(), p.a_x.real());
  report(2, magnitudes && signs, "benchmark waveplate channel decomposition", detail);
}

void criterion_computational_tables() {
  const OutcomeDistribution d0 = outcome_probabilities(phi0(), kSettingZZZZ);
  const OutcomeDistribution d1 = outcome_probabilities(phi1(), kSettingZZZZ);
  double worst = 0.0;
  for (int o = 0; o < kNumOutcomes; ++o) {
    double want0 = 0.0, want1 = 0.0;
    if (o == 0b0101 || o == 0b0110 || o == 0b1001 || o == 0b1010) {
      want0 = 0.25;
      want1 = 1.0 / 12.0;
    } else if (o == 0b0011 || o == 0b1100) {
      want1 = 1.0 / 3.0;
    }
    worst = std::max(worst, std::abs(d0.probabilities[o] - want0));
    worst = std::max(worst, std::abs(d1.probabilities[o] - want1));
  }
  char detail[96];
  std::snprintf(detail, sizeof(detail), "worst deviation %.2e", worst);
  report(3, worst < 1e-12, "computational-basis coincidence tables", detail);
}

void criterion_mixed_tables() {
  const OutcomeDistribution d0 = outcome_probabilities(phi0(), kSettingZZXX);
  const OutcomeDistribution d1 = outcome_probabilities(phi1(), kSettingZZXX);
  const std::vector<int> s0 = support(d0), s1 = support(d1);
  std::set<int> set0(s0.begin(), s0.end());
  bool disjoint = s0.size() == 4 && s1.size() == 12;
  for (int o : s1) disjoint = disjoint && !set0.count(o);

  const double q_target = 0.0391;
  const double v = visibility_for_qber_target(q_target, 4);
  const Mat rho = admix_visibility(phi0(), v);
  const CountRecord counts = sample_counts(outcome_probabilities(rho, kSettingZZXX), 1e5, 20260819);
  const double q = qber(counts, s0);
  const double sigma = std::sqrt(q_target * (1.0 - q_target) / 1e5);
  const bool q_ok = std::abs(q - q_target) < 3.0 * sigma;
  char detail[160];
  std::snprintf(detail, sizeof(detail), "supports 4/12 disjoint: %s, sampled qber %.5f vs %.5f (3 sigma %.5f)",
                disjoint ? "yes" : "no", q, q_target, 3.0 * sigma);
  report(4, disjoint && q_ok, "mixed-basis tables and sampled error rate", detail);
}

void criterion_source_model() {
  const auto t0 = std::chrono::steady_clock::now();
  const PostselectionResult post = postselect_one_per_arm(distribute_to_arms(second_order_emission()));
  const double f1 = std::abs(inner(phi1(), post.state));
  const Vec psi_l = encode_logical({std::sqrt(3.0) / 2.0, -0.5});
  const double f2 = std::abs(inner(psi_l, swap_modes(post.state, Spatial::b, Spatial::c)));
  const double ratio = rate_ratio();
  const double ratio_scaled = rate_ratio(0.37);
  const double dt = seconds_since(t0);
  const bool ok = std::abs(f1 - 1.0) < 1e-10 && std::abs(f2 - 1.0) < 1e-10 &&
                  std::abs(ratio - 3.0) < 1e-9 && std::abs(ratio_scaled - 3.0) < 1e-9 && dt < 1.0;
  char detail[160];
  std::snprintf(detail, sizeof(detail), "fidelities %.12f / %.12f, rate ratio %.10f, %.3f s", f1, f2,
                ratio, dt);
  report(5, ok, "source model fidelities and fourfold rate ratio", detail);
}

void criterion_tomography_round_trip() {
  std::mt19937_64 rng(2026);
  double worst = 0.0;
  for (int trial = 0; trial < 50; ++trial) {
    const LogicalQubit q = random_logical_qubit(rng);
    Vec v(2);
    v << q.c0, q.c1;
    worst = std::max(worst, trace_distance(tomography_pipeline(encode_logical(q)), projector(v)));
  }
  Vec l(2);
  l << std::sqrt(3.0) / 2.0, -0.5;
  const Mat sampled =
      tomography_pipeline(encode_logical({std::sqrt(3.0) / 2.0, -0.5}), SamplingPlan{1e5, 707});
  const double td = trace_distance(sampled, projector(l));
  char detail[128];
  std::snprintf(detail, sizeof(detail), "50 exact round trips worst %.2e, sampled distance %.4f", worst, td);
  report(6, worst < 1e-10 && td < 0.02, "logical tomography round trips", detail);
}

void criterion_reconstruction_formulas() {
  const auto obs = sigma_observables();
  const double ex_phi1 = expectation(phi1(), obs[1]);
  Mat zero(2, 2), one(2, 2), enc(2, 2);
  zero << 1, 0, 0, 0;
  one << 0, 0, 0, 1;
  enc << 0.75, -std::sqrt(3.0) / 4.0, -std::sqrt(3.0) / 4.0, 0.25;
  const double d1 = (reconstruct(1.0, 0.0, 0.0) - zero).cwiseAbs().maxCoeff();
  const double d2 = (reconstruct(-1.0 / 3.0, 2.0 / 3.0, 0.0) - one).cwiseAbs().maxCoeff();
  const double d3 = (reconstruct(2.0 / 3.0, -1.0 / 3.0, 0.0) - enc).cwiseAbs().maxCoeff();
  const bool ok = std::abs(ex_phi1 - 2.0 / 3.0) < 1e-12 && d1 < 1e-12 && d2 < 1e-12 && d3 < 1e-12;
  char detail[160];
  std::snprintf(detail, sizeof(detail),
                "direct trace <Sx> = %.12f, reconstruction deviations %.1e / %.1e / %.1e", ex_phi1, d1,
                d2, d3);
  report(7, ok, "reconstruction formulas and direct traces", detail);
}

void criterion_cli_determinism(const std::string& cli) {
  bool ok = true;
  std::string detail;
  const struct {
    const char* cmd;
    const char* extra;
  } runs[3] = {{"fig2", ""}, {"fig3", ""}, {"fig4", ""}};
  for (const auto& r : runs) {
    const std::string f1 = std::string("acceptance_") + r.cmd + "_run1.out";
    const std::string f2 = std::string("acceptance_") + r.cmd + "_run2.out";
    for (const std::string& f : {f1, f2}) {
      const std::string cmd =
          "\"" + cli + "\" " + r.cmd + " --seed 90210 --total 2000" + r.extra + " --out " + f;
      if (std::system(cmd.c_str()) != 0) {
        ok = false;
        detail += std::string(r.cmd) + ": run failed; ";
      }
    }
    const std::string a = read_file(f1), b = read_file(f2);
    std::remove(f1.c_str());
    std::remove(f2.c_str());
    if (a.empty() || a != b) {
      ok = false;
      detail += std::string(r.cmd) + ": outputs differ; ";
    } else {
      detail += std::string(r.cmd) + ": " + std::to_string(a.size()) + " bytes identical; ";
    }
  }
  if (!detail.empty()) detail.erase(detail.size() - 2);
  report(8, ok, "CLI byte determinism", detail);
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::fprintf(stderr, "usage: acceptance <path-to-dfsim-cli>\n");
    return 1;
  }
  criterion_invariance();
  criterion_noise_decomposition();
  criterion_computational_tables();
  criterion_mixed_tables();
  criterion_source_model();
  criterion_tomography_round_trip();
  criterion_reconstruction_formulas();
  criterion_cli_determinism(argv[1]);
  std::printf("%d/8 criteria passed\n", 8 - failures);
  return failures;
}
