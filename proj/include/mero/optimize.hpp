#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>

namespace mero {

struct GoldenResult {
  double x;
  double value;
};

/// Golden-section search for a maximum of a unimodal f on [a, b].
template <class F>
GoldenResult golden_section_max(F&& f, double a, double b, double tol, int max_iter = 200) {
  constexpr double kInvPhi = 0.6180339887498949;
  double c = b - kInvPhi * (b - a);
  double d = a + kInvPhi * (b - a);
  double fc = f(c);
  double fd = f(d);
  for (int it = 0; it < max_iter && (b - a) > tol; ++it) {
    if (fc >= fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - kInvPhi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + kInvPhi * (b - a);
      fd = f(d);
    }
  }
  return fc >= fd ? GoldenResult{c, fc} : GoldenResult{d, fd};
}

/// Root of g on [a, b] where g(a) and g(b) have opposite signs; Illinois
/// variant of regula falsi with a bisection fallback.
template <class G>
double bracketed_root(G&& g, double a, double b, double ga, double gb, double tol, int max_iter = 100) {
  int side = 0;
  for (int it = 0; it < max_iter && std::abs(b - a) > tol; ++it) {
    double c = (a * gb - b * ga) / (gb - ga);
    if (!(c > std::min(a, b) && c < std::max(a, b))) c = 0.5 * (a + b);
    const double gc = g(c);
    if (gc == 0.0) return c;
    if ((gc > 0) == (gb > 0)) {
      b = c;
      gb = gc;
      if (side == -1) ga *= 0.5;
      side = -1;
    } else {
      a = c;
      ga = gc;
      if (side == 1) gb *= 0.5;
      side = 1;
    }
  }
  return std::abs(ga) < std::abs(gb) ? a : b;
}

struct NelderMeadOptions {
  int max_evals = 400;
  double x_tol = 1e-13;  // absolute simplex diameter
  double f_tol = 1e-16;  // absolute spread of vertex values
};

struct NelderMeadResult {
  std::array<double, 2> x;
  double value;
  int evals;
};

/// Nelder-Mead in the plane, started from the right triangle with legs `step`.
NelderMeadResult nelder_mead_2d(const std::function<double(double, double)>& f, std::array<double, 2> x0,
                                double step, const NelderMeadOptions& options = {});

}  // namespace mero
