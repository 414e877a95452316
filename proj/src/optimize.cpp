#include "mero/optimize.hpp"

#include <algorithm>

namespace mero {

NelderMeadResult nelder_mead_2d(const std::function<double(double, double)>& f, std::array<double, 2> x0,
                                double step, const NelderMeadOptions& options) {
  using P = std::array<double, 2>;
  struct Vertex {
    P x;
    double v;
  };
  int evals = 0;
  auto eval = [&](const P& p) {
    ++evals;
    return f(p[0], p[1]);
  };
  std::array<Vertex, 3> s{Vertex{x0, 0.0}, Vertex{{x0[0] + step, x0[1]}, 0.0}, Vertex{{x0[0], x0[1] + step}, 0.0}};
  for (auto& vx : s) vx.v = eval(vx.x);

  auto lerp = [](const P& a, const P& b, double t) { return P{a[0] + t * (b[0] - a[0]), a[1] + t * (b[1] - a[1])}; };
  // Ties broken by coordinates so the walk is reproducible.
  auto less = [](const Vertex& a, const Vertex& b) {
    if (a.v != b.v) return a.v < b.v;
    return a.x < b.x;
  };

  while (evals < options.max_evals) {
    std::sort(s.begin(), s.end(), less);
    const double diam = std::max({std::hypot(s[1].x[0] - s[0].x[0], s[1].x[1] - s[0].x[1]),
                                  std::hypot(s[2].x[0] - s[0].x[0], s[2].x[1] - s[0].x[1])});
    if (diam <= options.x_tol || s[2].v - s[0].v <= options.f_tol) break;

    const P centroid{0.5 * (s[0].x[0] + s[1].x[0]), 0.5 * (s[0].x[1] + s[1].x[1])};
    const P xr = lerp(centroid, s[2].x, -1.0);
    const double vr = eval(xr);
    if (vr < s[0].v) {
      const P xe = lerp(centroid, s[2].x, -2.0);
      const double ve = eval(xe);
      s[2] = ve < vr ? Vertex{xe, ve} : Vertex{xr, vr};
    } else if (vr < s[1].v) {
      s[2] = {xr, vr};
    } else {
      const bool outside = vr < s[2].v;
      const P xc = lerp(centroid, outside ? xr : s[2].x, 0.5);
      const double vc = eval(xc);
      if (vc < (outside ? vr : s[2].v)) {
        s[2] = {xc, vc};
      } else {
        for (int k = 1; k < 3; ++k) {
          s[k].x = lerp(s[0].x, s[k].x, 0.5);
          s[k].v = eval(s[k].x);
        }
      }
    }
  }
  const auto best = *std::min_element(s.begin(), s.end(), less);
  return {best.x, best.v, evals};
}

}  // namespace mero
