// File formats and experiment configuration plumbing.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>

#include "bo/experiments.hpp"
#include "bo/inverse.hpp"
#include "bo/io.hpp"
#include "bo/sampling.hpp"

namespace fs = std::filesystem;
using bo::cplx;

namespace {
struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() /
           ("bo_test_" + std::to_string(std::rand()));
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
  std::string file(const std::string& name) const { return (path / name).string(); }
};
}  // namespace

TEST_CASE("coefficient CSV round-trips exactly") {
  TempDir dir;
  bo::RealPotential u = bo::random_smooth_potential(33, 7, 1.1);
  u.set_mean(-0.125);
  std::string path = dir.file("coeffs.csv");
  bo::io::write_coefficients(path, u);

  std::ifstream f(path);
  std::string header;
  std::getline(f, header);
  CHECK(header == "# mode,re,im");

  bo::RealPotential back = bo::io::read_coefficients(path);
  CHECK(back.mode_cutoff() == u.mode_cutoff());
  for (int n = 0; n <= 7; ++n) CHECK(back.coef(n) == u.coef(n));
}

TEST_CASE("spectrum and birkhoff dumps carry the declared columns") {
  TempDir dir;
  bo::RealPotential u = bo::one_gap_potential(0.4, 40);
  bo::GridSpec g = bo::GridSpec::make(40, 128);
  bo::SpectralData s = bo::spectral_analysis(u, g);
  bo::io::write_spectrum(dir.file("spectrum.csv"), s);
  bo::BirkhoffSeq z = bo::birkhoff_coordinates(s);
  bo::io::write_birkhoff(dir.file("birkhoff.csv"), z, &s);

  std::ifstream fs_(dir.file("spectrum.csv"));
  std::string line;
  std::getline(fs_, line);
  CHECK(line == "# n,lambda,gamma,kappa,re_inner,im_inner");

  std::ifstream fb(dir.file("birkhoff.csv"));
  std::getline(fb, line);
  CHECK(line == "# n,re_zeta,im_zeta,action,gamma,kappa");

  bo::BirkhoffSeq zr = bo::io::read_birkhoff(dir.file("birkhoff.csv"));
  REQUIRE(zr.count() == z.count());
  for (int n = 1; n <= z.count(); ++n) CHECK(zr.at(n) == z.at(n));
}

TEST_CASE("config parsing: keys, comments, validation") {
  TempDir dir;
  {
    std::ofstream f(dir.file("cfg.txt"));
    f << "# comment line\n"
      << "experiment = traveling_wave\n"
      << "q = 0.5   # inline comment\n"
      << "t_max=1.0\n"
      << "out = " << dir.file("out") << "\n";
  }
  bo::ExperimentConfig cfg = bo::ExperimentConfig::load(dir.file("cfg.txt"));
  CHECK(cfg.experiment == "traveling_wave");
  CHECK(cfg.num("q", 0.0) == 0.5);
  CHECK(cfg.num("t_max", 0.0) == 1.0);
  CHECK(cfg.num("missing", 7.5) == 7.5);
  cfg.validate();

  bo::ExperimentConfig bad;
  bad.experiment = "recurrence";
  bad.params["s"] = "0.7";
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);

  bo::ExperimentConfig ill;
  ill.experiment = "illposedness";
  ill.params["s"] = "0.3";
  CHECK_THROWS_AS(ill.validate(), std::invalid_argument);
  ill.params["s"] = "0.6";
  ill.validate();
}

TEST_CASE("summary.json layout") {
  TempDir dir;
  bo::Report rep;
  rep.experiment = "demo";
  rep.checks.push_back({"alpha", true, 0.5, 1.0});
  rep.checks.push_back({"beta", false, 2.0, 1.0});
  bo::write_summary(rep, dir.file(""));
  std::ifstream f(dir.file("summary.json"));
  std::string all((std::istreambuf_iterator<char>(f)),
                  std::istreambuf_iterator<char>());
  CHECK(all.find("\"experiment\": \"demo\"") != std::string::npos);
  CHECK(all.find("\"all_pass\": false") != std::string::npos);
  CHECK(all.find("\"alpha\"") != std::string::npos);
  CHECK(all.find("\"threshold\"") != std::string::npos);
}

TEST_CASE("experiments write bit-identical CSVs on rerun") {
  TempDir dir;
  bo::ExperimentConfig cfg;
  cfg.experiment = "illposedness";
  cfg.params["s"] = "0.6";
  cfg.params["k_max"] = "5";
  cfg.params["spectral_k"] = "2";
  cfg.params["omega_floor"] = "-20";  // k_max=5 only reaches -29.5
  cfg.out_dir = dir.file("a");
  bo::Report r1 = bo::run_experiment(cfg);
  cfg.out_dir = dir.file("b");
  bo::Report r2 = bo::run_experiment(cfg);
  CHECK(r1.all_pass());
  CHECK(r2.all_pass());

  auto slurp = [](const std::string& p) {
    std::ifstream f(p);
    return std::string((std::istreambuf_iterator<char>(f)),
                       std::istreambuf_iterator<char>());
  };
  std::string a = slurp(dir.file("a") + "/illposedness_table.csv");
  std::string b = slurp(dir.file("b") + "/illposedness_table.csv");
  CHECK(!a.empty());
  CHECK(a == b);
}
