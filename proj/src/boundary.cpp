#include "mero/boundary.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "mero/error.hpp"
#include "mero/optimize.hpp"

namespace mero {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

class BoundarySampler {
 public:
  BoundarySampler(const Component& g, const Disk& disk) : g_(g), disk_(disk) {}

  cd value(cd z, double theta) const {
    cd v;
    try {
      v = g_.value(z);
    } catch (const EvalError& e) {
      if (e.kind() == EvalError::Kind::non_finite) throw BoundaryOverflowError(theta, e.what());
      throw IllPosedError(e.what());
    }
    if (!std::isfinite(std::abs(v))) throw BoundaryOverflowError(theta, "component overflows on the boundary");
    return v;
  }

  double abs_at(double theta) const { return std::abs(value(disk_.boundary_point(theta), theta)); }

  /// d/dtheta |g|^2
  double slope_at(double theta) const {
    const cd z = disk_.boundary_point(theta);
    const cd dz = cd{0.0, 1.0} * (z - disk_.center());
    return 2.0 * std::real(std::conj(value(z, theta)) * g_.derivative(z) * dz);
  }

  bool has_derivative() const { return static_cast<bool>(g_.derivative); }

 private:
  const Component& g_;
  const Disk& disk_;
};

/// Golden-section refinement on the two grid cells around a local maximum,
/// then a root of the angular slope when a derivative is available.
AttainedPoint refine(const BoundarySampler& s, double left, double right, double angle_tol) {
  const GoldenResult gold = golden_section_max([&](double t) { return s.abs_at(t); }, left, right, angle_tol);
  AttainedPoint best{gold.x, gold.value};
  if (!s.has_derivative()) return best;
  const double ga = s.slope_at(left);
  const double gb = s.slope_at(right);
  if (!(ga > 0.0 && gb < 0.0)) return best;
  const double root = bracketed_root([&](double t) { return s.slope_at(t); }, left, right, ga, gb, angle_tol);
  // Values this close to the peak are indistinguishable; the slope root
  // locates the maximizer far more precisely than the value comparison.
  const double v = s.abs_at(root);
  if (v >= best.value * (1.0 - 1e-14)) best = {root, std::max(v, best.value)};
  return best;
}

std::vector<cd> interior_points(const Disk& disk, std::size_t count) {
  std::vector<cd> pts;
  pts.reserve(count);
  for (std::size_t k = 0; k < count; ++k) {
    const double rho = (k % 2 == 0 ? 0.37 : 0.71) * disk.radius();
    const double theta = kTwoPi * (static_cast<double>(k) + 0.31) / static_cast<double>(count);
    pts.push_back(disk.center() + std::polar(rho, theta));
  }
  return pts;
}

double snap_angle(double theta, double angle_tol) {
  const double t = wrap_angle(theta);
  return kTwoPi - t <= angle_tol ? 0.0 : t;
}

}  // namespace

std::string_view to_string(AttainmentKind kind) {
  switch (kind) {
    case AttainmentKind::singleton: return "singleton";
    case AttainmentKind::finite: return "finite";
    case AttainmentKind::arc: return "arc";
    case AttainmentKind::whole_boundary: return "whole-boundary";
    case AttainmentKind::whole_disk: return "whole-disk";
  }
  return "unknown";
}

double wrap_angle(double theta) {
  double t = std::fmod(theta, kTwoPi);
  if (t < 0.0) t += kTwoPi;
  if (t >= kTwoPi || t == 0.0) t = 0.0;
  return t;
}

double angle_distance(double a, double b) {
  const double d = wrap_angle(a - b);
  return std::min(d, kTwoPi - d);
}

Component q_component(const MeroFunction& f) {
  return {[p = f.q_polynomial()](cd z) { return p(z); }, [d = f.q_polynomial().derivative()](cd z) { return d(z); }};
}

Component r_component(const MeroFunction& f) {
  const double step = 1e-3 * f.disk().radius();
  return {[&f](cd z) { return f.analytic(z); }, [&f, step](cd z) { return f.remainder().derivative(z, step); }};
}

AttainmentSet sup_on_disk(const Component& g, const Disk& disk, const BoundaryOptions& options) {
  const std::size_t n = std::max<std::size_t>(options.grid, 16);
  const double h = kTwoPi / static_cast<double>(n);
  const BoundarySampler sampler(g, disk);

  std::vector<double> vals(n);
  for (std::size_t k = 0; k < n; ++k) vals[k] = sampler.abs_at(options.phase + h * static_cast<double>(k));
  const auto [min_it, max_it] = std::minmax_element(vals.begin(), vals.end());
  const double grid_min = *min_it;
  const double grid_max = *max_it;

  AttainmentSet out;
  out.angle_tol = options.angle_tol;

  // Constancy over the grid and the interior.
  double lo = grid_min, hi = grid_max;
  for (cd z : interior_points(disk, options.interior_samples)) {
    const double v = std::abs(sampler.value(z, std::arg(z - disk.center())));
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }
  if (hi - lo <= options.constancy_tol * (1.0 + hi)) {
    out.kind = AttainmentKind::whole_disk;
    out.sup_value = grid_max;
    out.value_tol = options.value_tol * (1.0 + grid_max);
    return out;
  }

  // Grid local maxima, highest first.
  std::vector<std::size_t> peaks;
  for (std::size_t k = 0; k < n; ++k) {
    const double prev = vals[(k + n - 1) % n];
    const double next = vals[(k + 1) % n];
    if (vals[k] >= prev && vals[k] > next) peaks.push_back(k);
  }
  std::stable_sort(peaks.begin(), peaks.end(), [&](std::size_t a, std::size_t b) { return vals[a] > vals[b]; });
  const std::size_t refined_count = std::min(peaks.size(), options.max_refined);

  std::vector<AttainedPoint> refined;
  double sup = grid_max;
  for (std::size_t i = 0; i < refined_count; ++i) {
    const double centre = options.phase + h * static_cast<double>(peaks[i]);
    AttainedPoint p = refine(sampler, centre - h, centre + h, options.angle_tol);
    if (p.value < vals[peaks[i]]) p = {centre, vals[peaks[i]]};
    refined.push_back(p);
    sup = std::max(sup, p.value);
  }
  const double tol = options.value_tol * (1.0 + sup);
  out.sup_value = sup;
  out.value_tol = tol;
  const double threshold = sup - tol;

  if (grid_min >= threshold) {
    out.kind = AttainmentKind::whole_boundary;
    return out;
  }

  // Best value among local maxima that are not attained.
  double second = -1.0;
  for (std::size_t i = refined_count; i < peaks.size(); ++i) second = std::max(second, vals[peaks[i]]);

  // Contiguous runs of attained grid points; the grid is not all attained,
  // so start the scan just after a non-attained point.
  std::size_t start = 0;
  while (vals[start] >= threshold) ++start;
  std::vector<std::pair<std::size_t, std::size_t>> long_runs;  // (first index, length)
  for (std::size_t i = 1; i <= n;) {
    const std::size_t k = (start + i) % n;
    if (vals[k] < threshold) {
      ++i;
      continue;
    }
    std::size_t len = 0;
    while (i + len <= n && vals[(start + i + len) % n] >= threshold) ++len;
    if (len >= n / 16) long_runs.push_back({k, len});
    i += len;
  }
  if (!long_runs.empty()) {
    out.kind = AttainmentKind::arc;
    for (const auto& [first, len] : long_runs) {
      const double a = snap_angle(options.phase + h * static_cast<double>(first), options.angle_tol);
      const double b = snap_angle(options.phase + h * static_cast<double>(first + len - 1), options.angle_tol);
      out.arcs.push_back({a, b});
      out.points.push_back({a, vals[first]});
      out.points.push_back({b, vals[(first + len - 1) % n]});
    }
    for (const auto& p : refined)
      if (p.value < threshold) second = std::max(second, p.value);
    out.margin = sup - (second >= 0.0 ? second : grid_min);
    return out;
  }

  // Clusters of refined maxima.
  std::vector<AttainedPoint> clusters;
  for (const auto& p : refined) {
    if (p.value < threshold) {
      second = std::max(second, p.value);
      continue;
    }
    const bool merged = std::any_of(clusters.begin(), clusters.end(), [&](const AttainedPoint& c) {
      return angle_distance(c.theta, p.theta) <= options.merge_radius;
    });
    if (!merged) clusters.push_back(p);
  }
  for (auto& c : clusters) c.theta = snap_angle(c.theta, options.angle_tol);
  std::sort(clusters.begin(), clusters.end(), [](const AttainedPoint& a, const AttainedPoint& b) { return a.theta < b.theta; });
  out.points = std::move(clusters);
  out.kind = out.points.size() >= 2 ? AttainmentKind::finite : AttainmentKind::singleton;
  out.margin = sup - (second >= 0.0 ? second : grid_min);
  return out;
}

NormBundle norm(const MeroFunction& f, const BoundaryOptions& options) {
  const double q = sup_on_disk(q_component(f), f.disk(), options).sup_value;
  const double r = sup_on_disk(r_component(f), f.disk(), options).sup_value;
  return {q, r, q + r};
}

AttainmentProduct attainment_product(const MeroFunction& f, const BoundaryOptions& options) {
  AttainmentProduct out{sup_on_disk(q_component(f), f.disk(), options), sup_on_disk(r_component(f), f.disk(), options),
                        false};
  out.singleton_product = out.q.is_singleton() && out.r.is_singleton();
  return out;
}

std::vector<ProfileRow> profile(const MeroFunction& f, std::size_t n) {
  if (n == 0) return {};
  const Component q = q_component(f);
  const Component r = r_component(f);
  std::vector<ProfileRow> rows(n);
  for (std::size_t k = 0; k < n; ++k) {
    const double theta = kTwoPi * static_cast<double>(k) / static_cast<double>(n);
    const cd z = f.disk().boundary_point(theta);
    rows[k] = {theta, std::abs(q.value(z)), std::abs(r.value(z))};
  }
  return rows;
}

}  // namespace mero
