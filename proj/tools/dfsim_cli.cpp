#include <cstdio>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include <dfsim/dfsim.hpp>

namespace {

struct CommonFlags {
  std::string config_path;
  std::uint64_t seed = 0;
  double total = 0.0;
  double visibility = 1.0;
  double qber_target = 0.0;
  double noise_hwp = 59.0;
  double noise_qwp = 13.5;
  std::vector<double> noise_pauli;
  std::uint64_t haar_seed = 0;
  std::string format;
  std::string out;
  int draws = 1000;
  double tau = 1.0;

  CLI::Option* o_config = nullptr;
  CLI::Option* o_seed = nullptr;
  CLI::Option* o_total = nullptr;
  CLI::Option* o_vis = nullptr;
  CLI::Option* o_qber = nullptr;
  CLI::Option* o_hwp = nullptr;
  CLI::Option* o_qwp = nullptr;
  CLI::Option* o_pauli = nullptr;
  CLI::Option* o_haar = nullptr;
  CLI::Option* o_format = nullptr;
  CLI::Option* o_out = nullptr;
  CLI::Option* o_draws = nullptr;
  CLI::Option* o_tau = nullptr;
};

void attach_flags(CLI::App* cmd, CommonFlags& f, bool with_draws, bool with_tau) {
  f.o_config = cmd->add_option("--config", f.config_path, "config file with key = value lines");
  f.o_seed = cmd->add_option("--seed", f.seed, "count sampling seed (default 12345)");
  f.o_total = cmd->add_option("--total", f.total,
                              "expected fourfold events per table; 0 for exact probabilities only");
  f.o_vis = cmd->add_option("--visibility", f.visibility, "white-noise visibility in [0,1]");
  f.o_qber = cmd->add_option("--qber-target", f.qber_target,
                             "target QBER; sets visibility via v = 1 - (4/3)*qber");
  f.o_hwp = cmd->add_option("--noise-hwp", f.noise_hwp, "noise half-wave plate angle, degrees");
  f.o_qwp = cmd->add_option("--noise-qwp", f.noise_qwp, "noise quarter-wave plate angle, degrees");
  f.o_pauli = cmd->add_option("--noise-pauli", f.noise_pauli,
                              "noise unitary as 8 reals: re im for the id, z, y, x coefficients")
                  ->expected(8);
  f.o_haar = cmd->add_option("--haar-seed", f.haar_seed, "seed for Haar-random noise / sweeps");
  f.o_format = cmd->add_option("--format", f.format, "output format")
                   ->check(CLI::IsMember({"csv", "json"}));
  f.o_out = cmd->add_option("--out", f.out, "output path (default stdout)");
  if (with_draws) f.o_draws = cmd->add_option("--draws", f.draws, "number of Haar draws");
  if (with_tau) f.o_tau = cmd->add_option("--tau", f.tau, "per-pulse pair amplitude");
}

dfsim::RunConfig build_config(const CommonFlags& f) {
  dfsim::RunConfig cfg;
  if (f.o_config->count()) cfg = dfsim::load_config_file(f.config_path, cfg);

  int noise_groups = 0;
  const bool plates_given = f.o_hwp->count() > 0 || f.o_qwp->count() > 0;
  if (plates_given) ++noise_groups;
  if (f.o_pauli->count()) ++noise_groups;
  if (f.o_haar->count()) ++noise_groups;
  if (noise_groups > 1)
    throw std::runtime_error("choose one noise specification: plates, pauli, or haar");
  if (plates_given) {
    cfg.noise_kind = dfsim::NoiseKind::Waveplates;
    cfg.plates = {{dfsim::PlateKind::HWP, f.noise_hwp}, {dfsim::PlateKind::QWP, f.noise_qwp}};
  } else if (f.o_pauli->count()) {
    cfg.noise_kind = dfsim::NoiseKind::Pauli;
    cfg.pauli = {{f.noise_pauli[0], f.noise_pauli[1]},
                 {f.noise_pauli[2], f.noise_pauli[3]},
                 {f.noise_pauli[4], f.noise_pauli[5]},
                 {f.noise_pauli[6], f.noise_pauli[7]}};
  } else if (f.o_haar->count()) {
    cfg.noise_kind = dfsim::NoiseKind::Haar;
    cfg.haar_seed = f.haar_seed;
  }

  if (f.o_seed->count()) cfg.seed = f.seed;
  if (f.o_total->count()) {
    if (f.total < 0.0) throw std::runtime_error("--total must be >= 0");
    cfg.total_expected = f.total;
  }
  if (f.o_vis->count()) cfg.visibility = f.visibility;
  if (f.o_qber->count()) cfg.qber_target = f.qber_target;
  if (f.o_format->count()) cfg.format = f.format;
  if (f.o_out->count()) cfg.out_path = f.out;
  if (f.o_draws && f.o_draws->count()) cfg.draws = f.draws;
  if (f.o_haar->count()) cfg.haar_seed = f.haar_seed;
  if (f.o_tau && f.o_tau->count()) cfg.tau = f.tau;
  return cfg;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"dfsim: four-photon decoherence-free subspace simulation"};
  app.require_subcommand(1);

  CommonFlags f_states, f_fig2, f_fig3, f_fig4, f_sweep, f_spdc;
  CLI::App* c_states = app.add_subcommand("states", "amplitude tables of the DF states (csv)");
  CLI::App* c_fig2 = app.add_subcommand("fig2", "HVHV-basis count tables, ideal and noisy");
  CLI::App* c_fig3 = app.add_subcommand("fig3", "mixed-basis readout tables with classification");
  CLI::App* c_fig4 = app.add_subcommand("fig4", "logical tomography before/after noise (json)");
  CLI::App* c_sweep = app.add_subcommand("invariance-sweep", "Haar sweep of collective channels");
  CLI::App* c_spdc = app.add_subcommand("spdc-verify", "source-model checks and rate ratio");
  attach_flags(c_states, f_states, false, false);
  attach_flags(c_fig2, f_fig2, false, false);
  attach_flags(c_fig3, f_fig3, false, false);
  attach_flags(c_fig4, f_fig4, false, false);
  attach_flags(c_sweep, f_sweep, true, false);
  attach_flags(c_spdc, f_spdc, false, true);

  try {
    app.parse(argc, argv);
    dfsim::RunConfig cfg;
    std::string text;
    if (*c_states) {
      cfg = build_config(f_states);
      text = dfsim::run_states(cfg);
    } else if (*c_fig2) {
      cfg = build_config(f_fig2);
      text = dfsim::run_fig2(cfg);
    } else if (*c_fig3) {
      cfg = build_config(f_fig3);
      text = dfsim::run_fig3(cfg);
    } else if (*c_fig4) {
      cfg = build_config(f_fig4);
      text = dfsim::run_fig4(cfg);
    } else if (*c_sweep) {
      cfg = build_config(f_sweep);
      text = dfsim::run_invariance_sweep(cfg);
    } else {
      cfg = build_config(f_spdc);
      text = dfsim::run_spdc_verify(cfg);
    }
    dfsim::write_output(cfg, text);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  }
  return 0;
}
