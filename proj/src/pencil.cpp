#include "mero/pencil.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "mero/error.hpp"
#include "mero/optimize.hpp"

namespace mero {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr std::size_t kMaxPeaks = 16;
constexpr double kPeakBand = 0.02;
constexpr int kGoldenIterations = 28;

}  // namespace

PencilNorm::PencilNorm(const MeroFunction& f, const MeroFunction& g, std::size_t grid)
    : f_(f), g_(g), grid_(std::max<std::size_t>(grid, 16)) {
  if (!(f.disk() == g.disk())) throw DomainError("pencil norm needs functions on the same disk");
  q_.q = true;
  r_.q = false;
  for (Side* s : {&q_, &r_}) {
    s->a.resize(grid_);
    s->b.resize(grid_);
    for (std::size_t k = 0; k < grid_; ++k) {
      const double theta = kTwoPi * static_cast<double>(k) / static_cast<double>(grid_);
      s->a[k] = component(s->q, f_, theta);
      s->b[k] = component(s->q, g_, theta);
    }
  }
}

cd PencilNorm::component(bool q, const MeroFunction& h, double theta) const {
  const cd z = h.disk().boundary_point(theta);
  return q ? h.q(z) : h.analytic(z);
}

double PencilNorm::side_sup(const Side& s, cd mu, cd lambda, bool refine) const {
  const std::size_t n = grid_;
  std::vector<double> vals(n);
  double hi = 0.0, lo = INFINITY;
  for (std::size_t k = 0; k < n; ++k) {
    vals[k] = std::abs(mu * s.a[k] + lambda * s.b[k]);
    hi = std::max(hi, vals[k]);
    lo = std::min(lo, vals[k]);
  }
  if (!refine || hi - lo <= 1e-14 * hi) return hi;

  std::vector<std::size_t> peaks;
  const double floor = hi - kPeakBand * (hi - lo);
  for (std::size_t k = 0; k < n; ++k) {
    const double v = vals[k];
    if (v >= floor && v >= vals[(k + n - 1) % n] && v > vals[(k + 1) % n]) peaks.push_back(k);
  }
  if (peaks.size() > kMaxPeaks) {
    std::partial_sort(peaks.begin(), peaks.begin() + kMaxPeaks, peaks.end(),
                      [&](std::size_t a, std::size_t b) { return vals[a] > vals[b]; });
    peaks.resize(kMaxPeaks);
  }
  const double h = kTwoPi / static_cast<double>(n);
  auto at = [&](double theta) {
    return std::abs(mu * component(s.q, f_, theta) + lambda * component(s.q, g_, theta));
  };
  double best = hi;
  for (std::size_t k : peaks) {
    const double c = h * static_cast<double>(k);
    best = std::max(best, golden_section_max(at, c - h, c + h, 0.0, kGoldenIterations).value);
  }
  return best;
}

double PencilNorm::estimate(cd lambda) const {
  return side_sup(q_, 1.0, lambda, false) + side_sup(r_, 1.0, lambda, false);
}

double PencilNorm::operator()(cd lambda) const {
  return side_sup(q_, 1.0, lambda, true) + side_sup(r_, 1.0, lambda, true);
}

double PencilNorm::norm_direction() const { return side_sup(q_, 0.0, 1.0, true) + side_sup(r_, 0.0, 1.0, true); }

}  // namespace mero
