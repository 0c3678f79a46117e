#include "bo/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <nlohmann/json.hpp>
#include <sstream>

#include "bo/errors.hpp"
#include "bo/flow.hpp"
#include "bo/io.hpp"
#include "bo/parallel.hpp"
#include "bo/pde.hpp"
#include "bo/sampling.hpp"

namespace bo {

// ---------------------------------------------------------------- config

ExperimentConfig ExperimentConfig::load(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw std::runtime_error("config: cannot open " + path);
  ExperimentConfig cfg;
  std::string line;
  while (std::getline(f, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    auto eq = line.find('=');
    if (eq == std::string::npos) continue;
    auto trim = [](std::string s) {
      size_t a = s.find_first_not_of(" \t\r");
      size_t b = s.find_last_not_of(" \t\r");
      return a == std::string::npos ? std::string() : s.substr(a, b - a + 1);
    };
    std::string key = trim(line.substr(0, eq));
    std::string val = trim(line.substr(eq + 1));
    if (key.empty()) continue;
    if (key == "experiment")
      cfg.experiment = val;
    else if (key == "out")
      cfg.out_dir = val;
    else
      cfg.params[key] = val;
  }
  return cfg;
}

double ExperimentConfig::num(const std::string& key, double fallback) const {
  auto it = params.find(key);
  return it == params.end() ? fallback : std::stod(it->second);
}

int ExperimentConfig::integer(const std::string& key, int fallback) const {
  auto it = params.find(key);
  return it == params.end() ? fallback : std::stoi(it->second);
}

std::uint64_t ExperimentConfig::seed(const std::string& key,
                                     std::uint64_t fallback) const {
  auto it = params.find(key);
  return it == params.end() ? fallback : std::stoull(it->second);
}

std::string ExperimentConfig::str(const std::string& key,
                                  const std::string& fallback) const {
  auto it = params.find(key);
  return it == params.end() ? fallback : it->second;
}

void ExperimentConfig::validate() const {
  double s = num("s", 0.0);
  if (experiment == "illposedness") {
    if (!(s > 0.5))
      throw std::invalid_argument("illposedness requires s > 1/2");
  } else if (!(s >= 0.0 && s < 0.5)) {
    throw std::invalid_argument(experiment + " requires s in [0, 1/2)");
  }
}

// ---------------------------------------------------------------- helpers

namespace {

double weight_neg(int n, double s) {  // <n>^{-2s}
  double an = std::max(1.0, std::abs(double(n)));
  return std::pow(an, -2.0 * s);
}

// || v - u(.+tau) ||_{-s} through coefficients.
double shifted_distance(const RealPotential& v, const RealPotential& u,
                        double tau, double s) {
  int m = std::max(v.mode_cutoff(), u.mode_cutoff());
  double acc = 0.0;
  for (int n = 1; n <= m; ++n) {
    double ang = double(n) * tau;
    cplx d = v.coef(n) - u.coef(n) * cplx{std::cos(ang), std::sin(ang)};
    acc += 2.0 * weight_neg(n, s) * std::norm(d);
  }
  double dm = v.mean() - u.mean();
  acc += dm * dm;
  return std::sqrt(acc);
}

// min over translations: coarse scan then golden-section to 1e-10 in tau.
double orbit_distance(const RealPotential& v, const RealPotential& u, double s,
                      int coarse = 256) {
  double best = std::numeric_limits<double>::infinity();
  double tau_best = 0.0;
  for (int j = 0; j < coarse; ++j) {
    double tau = 2.0 * M_PI * double(j) / double(coarse);
    double d = shifted_distance(v, u, tau, s);
    if (d < best) {
      best = d;
      tau_best = tau;
    }
  }
  const double step = 2.0 * M_PI / double(coarse);
  double a = tau_best - step, b = tau_best + step;
  const double gr = 0.5 * (std::sqrt(5.0) - 1.0);
  double c = b - gr * (b - a), d = a + gr * (b - a);
  double fc = shifted_distance(v, u, c, s);
  double fd = shifted_distance(v, u, d, s);
  while (b - a > 1e-10) {
    if (fc < fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - gr * (b - a);
      fc = shifted_distance(v, u, c, s);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + gr * (b - a);
      fd = shifted_distance(v, u, d, s);
    }
  }
  return std::min({best, fc, fd});
}

// Least-squares slope of unwrapped phases over times. Sample spacing must
// keep |omega| dt < pi or the branch tracking is ambiguous.
double phase_slope(const std::vector<double>& t, const std::vector<double>& phase) {
  const size_t n = t.size();
  std::vector<double> ph(n);
  double offset = 0.0;
  ph[0] = phase[0];
  for (size_t i = 1; i < n; ++i) {
    double d = phase[i] + offset - ph[i - 1];
    offset -= 2.0 * M_PI * std::round(d / (2.0 * M_PI));
    ph[i] = phase[i] + offset;
  }
  double st = 0.0, sp = 0.0, stt = 0.0, stp = 0.0;
  for (size_t i = 0; i < n; ++i) {
    st += t[i];
    sp += ph[i];
    stt += t[i] * t[i];
    stp += t[i] * ph[i];
  }
  double denom = double(n) * stt - st * st;
  return (double(n) * stp - st * sp) / denom;
}

RealPotential config_datum(const ExperimentConfig& cfg, int default_modes,
                           double default_norm) {
  std::string kind = cfg.str("datum", "one_gap");
  if (kind == "one_gap") {
    double q = cfg.num("q", 0.5);
    int m = cfg.integer("m", q > 0.0 ? std::max(8, int(std::ceil(std::log(1e-14) / std::log(q)))) : 8);
    return one_gap_potential(q, m);
  }
  if (kind == "random") {
    return random_smooth_potential(cfg.seed("seed", 11), cfg.integer("modes", default_modes),
                                   cfg.num("norm", default_norm));
  }
  if (kind == "coeffs") return io::read_coefficients(cfg.str("coeffs", ""));
  throw std::invalid_argument("unknown datum kind: " + kind);
}

void write_csv(const std::string& path, const std::string& header,
               const std::vector<std::vector<double>>& rows) {
  std::ofstream f(path);
  if (!f) throw std::runtime_error("cannot open " + path);
  f.precision(17);
  f << "# " << header << "\n";
  for (const auto& r : rows) {
    for (size_t i = 0; i < r.size(); ++i) f << (i ? "," : "") << r[i];
    f << "\n";
  }
}

CheckResult check_le(const std::string& name, double value, double threshold) {
  return CheckResult{name, value <= threshold, value, threshold};
}

}  // namespace

// ------------------------------------------------------- phase_validation

Report run_phase_validation(const ExperimentConfig& cfg) {
  Report rep{"phase_validation", {}, {}};
  io::ensure_directory(cfg.out_dir);

  RealPotential u0 = config_datum(cfg, 6, 0.75).zero_mean();
  const int m_pde = cfg.integer("m_pde", 64);
  const int m_cut = cfg.integer("m_cut", 32);
  const int n_lax = cfg.integer("n_lax", 192);
  const int n_max = cfg.integer("n_max", 5);
  const double t_max = cfg.num("t_max", 1.0);
  const double dt = cfg.num("dt", 5e-4);
  const int samples = cfg.integer("samples", 81);
  const double tol = cfg.num("tol", 1e-4);
  const double active_tol = cfg.num("active_tol", 1e-5);

  GridSpec grid = GridSpec::make(m_cut, n_lax);
  SpectralData s0 = spectral_analysis(u0.resized(m_cut), grid);
  BirkhoffSeq z0 = birkhoff_coordinates(s0);
  std::vector<double> omega = frequencies(z0.actions(), n_max);

  std::vector<double> times(static_cast<size_t>(samples));
  for (int i = 0; i < samples; ++i)
    times[static_cast<size_t>(i)] = t_max * double(i) / double(samples - 1);
  std::vector<PdeState> traj = pde_evolve(u0.resized(m_pde), t_max, dt, times);

  std::vector<BirkhoffSeq> zs(traj.size());
  parallel::for_range(static_cast<int>(traj.size()), [&](int i) {
    zs[static_cast<size_t>(i)] = birkhoff_coordinates(
        spectral_analysis_fixed(traj[static_cast<size_t>(i)].u.resized(m_cut),
                                grid, s0.converged));
  });

  std::vector<double> ts(traj.size());
  for (size_t i = 0; i < traj.size(); ++i) ts[i] = traj[i].t;
  io::write_zeta_trajectory(cfg.out_dir + "/zeta_trajectory.csv", ts, zs);

  std::vector<std::vector<double>> rows;
  for (int n = 1; n <= n_max; ++n) {
    if (n > z0.count() || std::norm(z0.at(n)) < active_tol) continue;
    std::vector<double> ph(traj.size());
    for (size_t i = 0; i < traj.size(); ++i) ph[i] = std::arg(zs[i].at(n));
    double slope = phase_slope(ts, ph);
    double dev = std::abs(slope - omega[static_cast<size_t>(n - 1)]);
    rows.push_back({double(n), omega[static_cast<size_t>(n - 1)], slope, dev});
    rep.checks.push_back(check_le("phase_slope_n" + std::to_string(n), dev, tol));
  }
  write_csv(cfg.out_dir + "/phase_table.csv",
            "n,omega_formula,omega_measured,deviation", rows);

  rep.metadata["m_pde"] = m_pde;
  rep.metadata["dt"] = dt;
  rep.metadata["n_lax"] = n_lax;
  rep.metadata["active_modes"] = double(rows.size());
  return rep;
}

// -------------------------------------------------------- traveling_wave

Report run_traveling_wave(const ExperimentConfig& cfg) {
  Report rep{"traveling_wave", {}, {}};
  io::ensure_directory(cfg.out_dir);

  const double q = cfg.num("q", 0.5);
  const double t_max = cfg.num("t_max", 1.0);
  const int m_pde = cfg.integer("m_pde", 64);
  const double dt = cfg.num("dt", 5e-4);
  const int samples = cfg.integer("samples", 11);
  const double tol = cfg.num("tol", 1e-6);

  RealPotential u0 = one_gap_potential(q, m_pde);
  double omega1 = q > 0.0 ? (1.0 - 3.0 * q * q) / (1.0 - q * q) : 1.0;

  std::vector<double> times(static_cast<size_t>(samples));
  for (int i = 0; i < samples; ++i)
    times[static_cast<size_t>(i)] = t_max * double(i) / double(std::max(1, samples - 1));
  std::vector<PdeState> traj = pde_evolve(u0, t_max, dt, times);

  double worst = 0.0;
  std::vector<std::vector<double>> rows;
  for (const auto& st : traj) {
    RealPotential ref = u0.translated(omega1 * st.t);
    double err = 0.0;
    for (int n = 1; n <= m_pde; ++n)
      err += 2.0 * std::norm(st.u.coef(n) - ref.coef(n));
    err = std::sqrt(err);
    worst = std::max(worst, err);
    rows.push_back({st.t, err});
  }
  write_csv(cfg.out_dir + "/traveling_wave_error.csv", "t,l2_error", rows);
  rep.checks.push_back(check_le("max_l2_error", worst, tol));
  rep.metadata["q"] = q;
  rep.metadata["omega1"] = omega1;
  rep.metadata["dt"] = dt;
  rep.metadata["m_pde"] = m_pde;
  return rep;
}

// ----------------------------------------------------- orbital_stability

Report run_orbital_stability(const ExperimentConfig& cfg) {
  Report rep{"orbital_stability", {}, {}};
  io::ensure_directory(cfg.out_dir);

  const double q = cfg.num("q", 0.5);
  const double delta = cfg.num("delta", 1e-3);
  const double s = cfg.num("s", 0.0);
  const double t_max = cfg.num("t_max", 5.0);
  const int mode = cfg.integer("perturb_mode", 2);
  const int m_pde = cfg.integer("m_pde", 64);
  const double dt = cfg.num("dt", 5e-4);
  const double bound = cfg.num("bound", 5e-3);

  RealPotential u0 = one_gap_potential(q, m_pde);
  RealPotential v0 = u0;
  v0.set_coef(mode, v0.coef(mode) + delta);  // delta * 2cos(mode x)

  // Quasi-periodic phases must not alias between samples.
  std::vector<double> acts = birkhoff_coordinates(
      spectral_analysis(v0.resized(32), GridSpec::make(32, 160))).actions();
  double omega_max = 1.0;
  std::vector<double> om = frequencies(acts, 4);
  for (int n = 1; n <= 4; ++n)
    if (n - 1 < static_cast<int>(acts.size()) && acts[static_cast<size_t>(n - 1)] > 1e-10)
      omega_max = std::max(omega_max, std::abs(om[static_cast<size_t>(n - 1)]));
  int samples = std::min(2501, int(std::ceil(t_max * omega_max / 0.01)) + 1);
  samples = std::max(samples, 11);

  std::vector<double> times(static_cast<size_t>(samples));
  for (int i = 0; i < samples; ++i)
    times[static_cast<size_t>(i)] = t_max * double(i) / double(samples - 1);
  std::vector<PdeState> traj = pde_evolve(v0, t_max, dt, times);

  std::vector<double> dist(traj.size());
  parallel::for_range(static_cast<int>(traj.size()), [&](int i) {
    dist[static_cast<size_t>(i)] = orbit_distance(traj[static_cast<size_t>(i)].u, u0, s);
  });

  double sup = 0.0;
  std::vector<std::vector<double>> rows;
  for (size_t i = 0; i < traj.size(); ++i) {
    sup = std::max(sup, dist[i]);
    rows.push_back({traj[i].t, dist[i]});
  }
  write_csv(cfg.out_dir + "/orbit_distance.csv", "t,distance", rows);
  rep.checks.push_back(check_le("sup_orbit_distance", sup, bound));
  rep.metadata["delta"] = delta;
  rep.metadata["s"] = s;
  rep.metadata["samples"] = samples;
  rep.metadata["dt"] = dt;
  return rep;
}

// --------------------------------------------------------- illposedness

Report run_illposedness(const ExperimentConfig& cfg) {
  Report rep{"illposedness", {}, {}};
  io::ensure_directory(cfg.out_dir);

  const double s = cfg.num("s", 0.6);
  const double t = cfg.num("t", 0.3);
  const int k_max = cfg.integer("k_max", 8);
  const int spectral_k = cfg.integer("spectral_k", 3);

  auto q_of = [](int k) { return 1.0 - std::pow(2.0, -double(k)); };
  auto omega_of = [](double q) { return (1.0 - 3.0 * q * q) / (1.0 - q * q); };
  auto cutoff_of = [](double q) {
    return std::max(8, int(std::ceil(std::log(1e-14) / std::log(q))));
  };

  std::vector<std::vector<double>> rows;
  double prev_d0 = std::numeric_limits<double>::infinity();
  bool monotone = true;
  double min_evolved = std::numeric_limits<double>::infinity();
  for (int k = 1; k < k_max; ++k) {
    double q1 = q_of(k), q2 = q_of(k + 1);
    RealPotential u1 = one_gap_potential(q1, cutoff_of(q1));
    RealPotential u2 = one_gap_potential(q2, cutoff_of(q2));
    double om1 = omega_of(q1), om2 = omega_of(q2);
    double d0 = shifted_distance(u1, u2, 0.0, s);
    // One-gap data evolve as exact traveling waves.
    RealPotential v1 = u1.translated(om1 * t);
    RealPotential v2 = u2.translated(om2 * t);
    double dt_ = shifted_distance(v1, v2, 0.0, s);
    monotone = monotone && (d0 < prev_d0);
    prev_d0 = d0;
    min_evolved = std::min(min_evolved, dt_);
    rows.push_back({double(k), q1, om1, d0, dt_});
  }
  write_csv(cfg.out_dir + "/illposedness_table.csv",
            "k,q,omega1,initial_distance,evolved_distance", rows);

  // Spectral cross-check of the closed-form gap for the tractable prefix.
  double gap_err = 0.0;
  for (int k = 1; k <= std::min(spectral_k, k_max); ++k) {
    double q = q_of(k);
    int m = cutoff_of(q);
    SpectralData sd = spectral_analysis_auto(one_gap_potential(q, m), m, 1);
    gap_err = std::max(gap_err,
                       std::abs(sd.gamma[0] - q * q / (1.0 - q * q)));
  }

  double om_last = omega_of(q_of(k_max));
  double om_floor = cfg.num("omega_floor", -100.0);
  rep.checks.push_back(CheckResult{"initial_distances_monotone", monotone,
                                   monotone ? 1.0 : 0.0, 1.0});
  rep.checks.push_back(CheckResult{"evolved_distance_floor",
                                   min_evolved > cfg.num("floor", 0.1),
                                   min_evolved, cfg.num("floor", 0.1)});
  rep.checks.push_back(CheckResult{"omega_divergence", om_last < om_floor,
                                   om_last, om_floor});
  rep.checks.push_back(check_le("spectral_gap_error", gap_err, 1e-9));
  rep.metadata["s"] = s;
  rep.metadata["t"] = t;
  rep.metadata["k_max"] = k_max;
  return rep;
}

// ----------------------------------------------------------- recurrence

Report run_recurrence(const ExperimentConfig& cfg) {
  Report rep{"recurrence", {}, {}};
  io::ensure_directory(cfg.out_dir);

  const double s = cfg.num("s", 0.0);
  const double eps = cfg.num("eps", 1e-6);
  const double t_max = cfg.num("t_max", 60.0);
  const int samples = cfg.integer("samples", 6001);
  const bool reconstruct = cfg.integer("reconstruct", 1) != 0;

  // Initial coordinates: either extracted from a datum or synthetic actions.
  BirkhoffSeq z0;
  GridSpec grid = GridSpec::make(32, 160);
  std::string kind = cfg.str("datum", "one_gap");
  if (kind == "two_gap") {
    z0 = BirkhoffSeq(2);
    z0.at(1) = std::sqrt(cfg.num("a1", 0.5));
    z0.at(2) = std::sqrt(cfg.num("a2", 1.0));
  } else {
    RealPotential u0 = config_datum(cfg, 4, 0.4).zero_mean();
    z0 = birkhoff_coordinates(u0.resized(32), grid);
  }

  // Sequence-space scan; moduli are flow-invariant so the torus diagnostic
  // stays at zero by construction.
  std::vector<double> mod0 = z0.moduli();
  double torus_diag = 0.0;
  std::vector<std::vector<double>> rows;
  double best_d = std::numeric_limits<double>::infinity();
  double best_t = 0.0;
  std::vector<std::pair<double, double>> returns;  // (distance, t)
  std::vector<double> dist(static_cast<size_t>(samples));
  std::vector<double> times(static_cast<size_t>(samples));
  for (int i = 0; i < samples; ++i)
    times[static_cast<size_t>(i)] = t_max * double(i) / double(samples - 1);
  parallel::for_range(samples, [&](int i) {
    BirkhoffSeq zt = flow_birkhoff(z0, times[static_cast<size_t>(i)]);
    double acc = 0.0;
    for (int n = 1; n <= z0.count(); ++n)
      acc += std::pow(double(n), 1.0 - 2.0 * s) * std::norm(zt.at(n) - z0.at(n));
    dist[static_cast<size_t>(i)] = std::sqrt(acc);
  });
  for (int i = 1; i < samples; ++i) {
    double d = dist[static_cast<size_t>(i)];
    bool local_min = d <= dist[static_cast<size_t>(i - 1)] &&
                     (i + 1 >= samples || d <= dist[static_cast<size_t>(i + 1)]);
    if (local_min && d < eps) {
      returns.emplace_back(d, times[static_cast<size_t>(i)]);
    }
    if (d < best_d && times[static_cast<size_t>(i)] > times[1]) {
      best_d = d;
      best_t = times[static_cast<size_t>(i)];
    }
    rows.push_back({times[static_cast<size_t>(i)], d});
  }
  std::sort(returns.begin(), returns.end());
  if (returns.size() > 5) returns.resize(5);
  write_csv(cfg.out_dir + "/recurrence_scan.csv", "t,seq_distance", rows);

  std::vector<std::vector<double>> ret_rows;
  double u_dist_best = std::numeric_limits<double>::infinity();
  for (const auto& [d, tr] : returns) {
    double u_dist = std::numeric_limits<double>::quiet_NaN();
    if (reconstruct) {
      BirkhoffSeq zt = flow_birkhoff(z0, tr);
      RealPotential ur = invert(zt, {}, grid);
      RealPotential u0r = invert(z0, {}, grid);
      u_dist = shifted_distance(ur, u0r, 0.0, s);
      u_dist_best = std::min(u_dist_best, u_dist);
      BirkhoffSeq zcheck = birkhoff_coordinates(ur, grid);
      std::vector<double> m0(mod0);
      m0.resize(static_cast<size_t>(zcheck.count()), 0.0);
      torus_diag = std::max(torus_diag, torus_distance(zcheck, m0, s));
    }
    ret_rows.push_back({tr, d, u_dist});
  }
  write_csv(cfg.out_dir + "/best_returns.csv", "t,seq_distance,u_distance",
            ret_rows);

  bool found = !returns.empty();
  rep.checks.push_back(CheckResult{"return_found", found,
                                   found ? returns.front().first : best_d, eps});
  if (reconstruct && found)
    rep.checks.push_back(check_le("best_u_distance", u_dist_best,
                                  cfg.num("u_tol", 1e-6)));
  if (reconstruct)
    rep.checks.push_back(check_le("torus_diagnostic", torus_diag, 1e-10));
  rep.metadata["t_max"] = t_max;
  rep.metadata["samples"] = samples;
  rep.metadata["eps"] = eps;
  return rep;
}

// ------------------------------------------------------- isospectrality

Report run_isospectrality(const ExperimentConfig& cfg) {
  Report rep{"isospectrality", {}, {}};
  io::ensure_directory(cfg.out_dir);

  const double t_max = cfg.num("t_max", 1.0);
  const int m_pde = cfg.integer("m_pde", 64);
  const int m_cut = cfg.integer("m_cut", 32);
  const int n_lax = cfg.integer("n_lax", 192);
  const double dt = cfg.num("dt", 5e-4);
  const int n_gaps = cfg.integer("n_gaps", 10);
  const int samples = cfg.integer("samples", 5);
  const double tol = cfg.num("tol", 1e-6);
  const double drift_tol = cfg.num("drift_tol", 1e-8);

  RealPotential u0 = config_datum(cfg, 6, 0.75).zero_mean().resized(m_pde);
  GridSpec grid = GridSpec::make(m_cut, n_lax);
  SpectralData s0 = spectral_analysis(u0.resized(m_cut), grid);
  Conserved c0 = conserved(PdeState{u0, 0.0});

  std::vector<double> times(static_cast<size_t>(samples));
  for (int i = 0; i < samples; ++i)
    times[static_cast<size_t>(i)] = t_max * double(i + 1) / double(samples);
  std::vector<PdeState> traj = pde_evolve(u0, t_max, dt, times);

  double worst_gap = 0.0, worst_drift = 0.0;
  std::vector<std::vector<double>> rows;
  for (const auto& st : traj) {
    SpectralData sd = spectral_analysis_fixed(st.u.resized(m_cut), grid,
                                              s0.converged);
    double gmax = 0.0;
    for (int n = 1; n <= std::min(n_gaps, s0.converged); ++n)
      gmax = std::max(gmax, std::abs(sd.gamma[static_cast<size_t>(n - 1)] -
                                     s0.gamma[static_cast<size_t>(n - 1)]));
    Conserved c = conserved(st);
    double drift = std::max(
        {std::abs(c.mean - c0.mean) / std::max(1.0, std::abs(c0.mean)),
         std::abs(c.half_l2 - c0.half_l2) / std::max(1.0, std::abs(c0.half_l2)),
         std::abs(c.energy - c0.energy) / std::max(1.0, std::abs(c0.energy))});
    worst_gap = std::max(worst_gap, gmax);
    worst_drift = std::max(worst_drift, drift);
    rows.push_back({st.t, gmax, drift});
  }
  write_csv(cfg.out_dir + "/gap_drift.csv", "t,max_gap_drift,conserved_drift",
            rows);
  rep.checks.push_back(check_le("max_gap_drift", worst_gap, tol));
  rep.checks.push_back(check_le("conserved_drift", worst_drift, drift_tol));
  rep.metadata["dt"] = dt;
  rep.metadata["m_pde"] = m_pde;
  rep.metadata["t_max"] = t_max;
  return rep;
}

// -------------------------------------------------------- apriori_bound

Report run_apriori_bound(const ExperimentConfig& cfg) {
  Report rep{"apriori_bound", {}, {}};
  io::ensure_directory(cfg.out_dir);

  const int count = cfg.integer("count", 50);
  const int modes = cfg.integer("modes", 8);
  const double norm = cfg.num("norm", 1.5);
  const std::uint64_t seed = cfg.seed("seed", 2024);
  const double s = cfg.num("s", 0.25);
  const int n_lax = cfg.integer("n_lax", 128);

  // lambda_n <= n and gamma_n >= 0 across a random family. The asserted
  // tolerance is 1e-9, so indices are admitted only where the N vs 2N
  // eigenvalue agreement is an order below that (finite sections
  // overestimate eigenvalues by roughly that agreement).
  double worst_upper = -std::numeric_limits<double>::infinity();
  double worst_gap = std::numeric_limits<double>::infinity();
  std::vector<std::vector<double>> rows(static_cast<size_t>(count));
  GridSpec grid = GridSpec::make(modes, n_lax);
  GridSpec wide = GridSpec::make(modes, 2 * n_lax);
  std::vector<double> uppers(static_cast<size_t>(count));
  std::vector<double> mingaps(static_cast<size_t>(count));
  parallel::for_range(count, [&](int i) {
    RealPotential u = random_smooth_potential(seed + std::uint64_t(i), modes, norm);
    Eigen::VectorXd lam = eigenvalues_only(build_lax_matrix(u, grid));
    Eigen::VectorXd lam2 = eigenvalues_only(build_lax_matrix(u, wide));
    int kstrict = -1;
    while (kstrict + 1 < grid.hardy_dim &&
           std::abs(lam[kstrict + 1] - lam2[kstrict + 1]) < 1e-10)
      ++kstrict;
    double up = -std::numeric_limits<double>::infinity();
    for (int n = 0; n <= kstrict; ++n) up = std::max(up, lam[n] - double(n));
    double mg = std::numeric_limits<double>::infinity();
    for (int n = 1; n <= kstrict; ++n)
      mg = std::min(mg, lam[n] - lam[n - 1] - 1.0);
    uppers[static_cast<size_t>(i)] = up;
    mingaps[static_cast<size_t>(i)] = mg;
    rows[static_cast<size_t>(i)] = {double(i), up, mg, double(kstrict)};
  });
  for (int i = 0; i < count; ++i) {
    worst_upper = std::max(worst_upper, uppers[static_cast<size_t>(i)]);
    worst_gap = std::min(worst_gap, mingaps[static_cast<size_t>(i)]);
  }
  write_csv(cfg.out_dir + "/spectral_sweep.csv",
            "sample,max_lambda_minus_n,min_raw_gap,strict_range", rows);

  // || zeta(t) ||_{1/2 - s} is exactly constant under the Birkhoff flow.
  RealPotential u = random_smooth_potential(seed, modes, norm);
  BirkhoffSeq z0 = birkhoff_coordinates(u, grid);
  double w0 = weighted_norm(z0, 0.5 - s);
  double vary = 0.0;
  for (int j = 1; j <= 16; ++j) {
    double t = 1e5 * double(j) / 16.0;
    vary = std::max(vary, std::abs(weighted_norm(flow_birkhoff(z0, t), 0.5 - s) - w0));
  }

  rep.checks.push_back(check_le("lambda_upper_bound", worst_upper, 1e-9));
  rep.checks.push_back(CheckResult{"gap_nonnegative", worst_gap >= -1e-10,
                                   worst_gap, -1e-10});
  rep.checks.push_back(check_le("flow_norm_constancy", vary / std::max(1.0, w0), 1e-13));
  rep.metadata["count"] = count;
  rep.metadata["norm"] = norm;
  rep.metadata["s"] = s;
  return rep;
}

// -------------------------------------------------------------- summary

Report run_experiment(const ExperimentConfig& cfg) {
  cfg.validate();
  Report rep;
  if (cfg.experiment == "phase_validation")
    rep = run_phase_validation(cfg);
  else if (cfg.experiment == "traveling_wave")
    rep = run_traveling_wave(cfg);
  else if (cfg.experiment == "orbital_stability")
    rep = run_orbital_stability(cfg);
  else if (cfg.experiment == "illposedness")
    rep = run_illposedness(cfg);
  else if (cfg.experiment == "recurrence")
    rep = run_recurrence(cfg);
  else if (cfg.experiment == "isospectrality")
    rep = run_isospectrality(cfg);
  else if (cfg.experiment == "apriori_bound")
    rep = run_apriori_bound(cfg);
  else
    throw std::invalid_argument("unknown experiment: " + cfg.experiment);
  write_summary(rep, cfg.out_dir);
  return rep;
}

void write_summary(const Report& report, const std::string& out_dir) {
  io::ensure_directory(out_dir);
  nlohmann::json j;
  j["experiment"] = report.experiment;
  j["all_pass"] = report.all_pass();
  j["checks"] = nlohmann::json::array();
  for (const auto& c : report.checks)
    j["checks"].push_back({{"name", c.name},
                           {"pass", c.pass},
                           {"value", c.value},
                           {"threshold", c.threshold}});
  j["metadata"] = report.metadata;
  std::ofstream f(out_dir + "/summary.json");
  if (!f) throw std::runtime_error("cannot write summary.json in " + out_dir);
  f << j.dump(2) << "\n";
}

}  // namespace bo
