#include "bo/io.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "bo/errors.hpp"

namespace bo::io {

namespace {
std::ofstream open_out(const std::string& path) {
  std::ofstream f(path);
  if (!f) throw std::runtime_error("io: cannot open " + path + " for writing");
  f.precision(17);
  return f;
}

std::ifstream open_in(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw std::runtime_error("io: cannot open " + path);
  return f;
}

bool data_line(std::istream& in, std::vector<double>& fields) {
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    for (auto& ch : line)
      if (ch == ',') ch = ' ';
    std::istringstream ss(line);
    fields.clear();
    double v;
    while (ss >> v) fields.push_back(v);
    if (!fields.empty()) return true;
  }
  return false;
}
}  // namespace

void write_coefficients(const std::string& path, const RealPotential& u) {
  auto f = open_out(path);
  f << "# mode,re,im\n";
  for (int n = -u.mode_cutoff(); n <= u.mode_cutoff(); ++n) {
    cplx c = u.coef(n);
    f << n << "," << c.real() << "," << c.imag() << "\n";
  }
}

RealPotential read_coefficients(const std::string& path) {
  auto f = open_in(path);
  std::vector<double> fields;
  int max_mode = 0;
  std::vector<std::pair<int, cplx>> rows;
  while (data_line(f, fields)) {
    if (fields.size() != 3)
      throw std::runtime_error("io: bad coefficient row in " + path);
    int n = static_cast<int>(std::lround(fields[0]));
    rows.emplace_back(n, cplx{fields[1], fields[2]});
    max_mode = std::max(max_mode, std::abs(n));
  }
  RealPotential u(max_mode);
  for (const auto& [n, c] : rows)
    if (n >= 0) u.set_coef(n, c);  // negative side is the conjugate mirror
  return u;
}

void write_spectrum(const std::string& path, const SpectralData& s) {
  auto f = open_out(path);
  f << "# n,lambda,gamma,kappa,re_inner,im_inner\n";
  for (int n = 0; n < s.grid.hardy_dim; ++n) {
    f << n << "," << s.lambda[n] << ",";
    if (n >= 1) f << s.gamma[static_cast<size_t>(n - 1)];
    f << ",";
    if (n >= 1 && n <= s.converged) f << s.kappa[static_cast<size_t>(n - 1)];
    f << "," << s.inner_one[static_cast<size_t>(n)].real() << ","
      << s.inner_one[static_cast<size_t>(n)].imag() << "\n";
  }
}

void write_birkhoff(const std::string& path, const BirkhoffSeq& z,
                    const SpectralData* s) {
  auto f = open_out(path);
  f << "# n,re_zeta,im_zeta,action,gamma,kappa\n";
  for (int n = 1; n <= z.count(); ++n) {
    f << n << "," << z.at(n).real() << "," << z.at(n).imag() << ","
      << std::norm(z.at(n)) << ",";
    if (s && n <= s->converged)
      f << s->gamma[static_cast<size_t>(n - 1)] << ","
        << s->kappa[static_cast<size_t>(n - 1)] << "\n";
    else
      f << ",\n";
  }
}

BirkhoffSeq read_birkhoff(const std::string& path) {
  auto f = open_in(path);
  std::vector<double> fields;
  std::vector<std::pair<int, cplx>> rows;
  int top = 0;
  while (data_line(f, fields)) {
    if (fields.size() < 3)
      throw std::runtime_error("io: bad birkhoff row in " + path);
    int n = static_cast<int>(std::lround(fields[0]));
    if (n < 1) throw std::runtime_error("io: birkhoff index must be >= 1");
    rows.emplace_back(n, cplx{fields[1], fields[2]});
    top = std::max(top, n);
  }
  BirkhoffSeq z(top);
  for (const auto& [n, c] : rows) z.at(n) = c;
  return z;
}

void write_zeta_trajectory(const std::string& path,
                           const std::vector<double>& times,
                           const std::vector<BirkhoffSeq>& zs) {
  if (times.size() != zs.size())
    throw DimensionError("write_zeta_trajectory: times/sequence mismatch");
  auto f = open_out(path);
  f << "# t,n,re_zeta,im_zeta\n";
  for (size_t i = 0; i < times.size(); ++i)
    for (int n = 1; n <= zs[i].count(); ++n)
      f << times[i] << "," << n << "," << zs[i].at(n).real() << ","
        << zs[i].at(n).imag() << "\n";
}

void write_state_trajectory(const std::string& path,
                            const std::vector<PdeState>& states) {
  auto f = open_out(path);
  f << "# t,n,re,im\n";
  for (const auto& s : states)
    for (int n = -s.u.mode_cutoff(); n <= s.u.mode_cutoff(); ++n)
      f << s.t << "," << n << "," << s.u.coef(n).real() << ","
        << s.u.coef(n).imag() << "\n";
}

void write_samples(const std::string& path, const RealPotential& u,
                   int num_points) {
  auto f = open_out(path);
  f << "# x,v\n";
  std::vector<double> s = synthesize(u, num_points);
  for (int j = 0; j < num_points; ++j)
    f << 2.0 * M_PI * double(j) / double(num_points) << ","
      << s[static_cast<size_t>(j)] << "\n";
}

void ensure_directory(const std::string& dir) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw std::runtime_error("io: cannot create directory " + dir);
}

}  // namespace bo::io
