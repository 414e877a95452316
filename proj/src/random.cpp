#include "mero/random.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>

namespace mero {

std::uint64_t mix_seed(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

Rng::Rng(std::uint64_t seed) : seed_(seed), engine_(mix_seed(seed)) {}

Rng Rng::split(std::uint64_t stream) const { return Rng(mix_seed(seed_ ^ mix_seed(stream + 1))); }

double Rng::uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(engine_); }

double Rng::normal() { return std::normal_distribution<double>(0.0, 1.0)(engine_); }

cd Rng::complex_normal() {
  const double re = normal();
  const double im = normal();
  return {re, im};
}

int Rng::integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(engine_); }

bool Rng::coin(double p) { return uniform() < p; }

cd Rng::in_disk(const Disk& disk, double frac) {
  const double rho = frac * disk.radius() * std::sqrt(uniform());
  const double theta = uniform(0.0, 2.0 * std::numbers::pi);
  return disk.center() + std::polar(rho, theta);
}

Polynomial random_polynomial(Rng& rng, int degree) {
  std::vector<cd> c(static_cast<std::size_t>(degree) + 1);
  for (auto& x : c) x = rng.complex_normal();
  return Polynomial(std::move(c));
}

Disk random_disk(Rng& rng) { return Disk({rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0)}, rng.uniform(0.5, 2.0)); }

MeroFunction random_meromorphic(Rng& rng, const Disk& disk, int max_poles, double pole_frac) {
  const int count = rng.integer(1, max_poles);
  std::vector<PrincipalPart> parts;
  while (static_cast<int>(parts.size()) < count) {
    const cd p = rng.in_disk(disk, pole_frac);
    bool clash = false;
    for (const auto& q : parts) clash = clash || std::abs(q.pole - p) < 0.05 * disk.radius();
    if (clash) continue;
    const int order = rng.coin(0.75) ? 1 : 2;
    std::vector<cd> coeffs;
    for (int j = 0; j < order; ++j) coeffs.push_back(rng.complex_normal() * std::pow(disk.radius(), j + 1));
    parts.push_back({p, std::move(coeffs)});
  }
  Remainder rem;
  rem.polynomial = random_polynomial(rng, rng.integer(0, 3)).taylor_shift(-disk.center());
  return MeroFunction(disk, std::move(parts), std::move(rem));
}

std::string random_rational_text(Rng& rng, int depth) {
  if (depth <= 0 || rng.coin(0.25)) {
    char buf[64];
    switch (rng.integer(0, 2)) {
      case 0: return "z";
      case 1:
        std::snprintf(buf, sizeof buf, "%.6g", rng.uniform(-3.0, 3.0));
        return buf;
      default:
        std::snprintf(buf, sizeof buf, "(%.6g*i)", rng.uniform(-3.0, 3.0));
        return buf;
    }
  }
  const std::string a = random_rational_text(rng, depth - 1);
  switch (rng.integer(0, 5)) {
    case 0: return "(" + a + " + " + random_rational_text(rng, depth - 1) + ")";
    case 1: return "(" + a + " - " + random_rational_text(rng, depth - 1) + ")";
    case 2: return "(" + a + ")*(" + random_rational_text(rng, depth - 1) + ")";
    case 3: return "(" + a + ")/(" + random_rational_text(rng, depth - 1) + ")";
    case 4: return "(" + a + ")^" + std::to_string(rng.integer(-2, 3));
    default: return "-(" + a + ")";
  }
}

}  // namespace mero
