#pragma once

#include <functional>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "mero/funcrep.hpp"

namespace mero {

enum class AttainmentKind { singleton, finite, arc, whole_boundary, whole_disk };

std::string_view to_string(AttainmentKind kind);

struct BoundaryOptions {
  std::size_t grid = 4096;
  /// Attained means within value_tol * (1 + sup) of the sup.
  double value_tol = 1e-9;
  double angle_tol = 1e-12;
  double merge_radius = 1e-6;
  /// Constant when max - min of |g| over grid and interior samples is at most
  /// constancy_tol * (1 + max).
  double constancy_tol = 1e-10;
  std::size_t interior_samples = 64;
  /// Rotates the sampling grid: theta_k = phase + 2 pi k / grid.
  double phase = 0.0;
  /// Local maxima refined per component (highest grid values first).
  std::size_t max_refined = 64;
};

struct AttainedPoint {
  double theta;  // in [0, 2 pi)
  double value;
};

struct AttainmentSet {
  AttainmentKind kind = AttainmentKind::whole_disk;
  /// Cluster representatives (singleton / finite) or arc endpoints (arc).
  std::vector<AttainedPoint> points;
  /// Arcs as (start, end) angles traversed counterclockwise; arc kind only.
  std::vector<std::pair<double, double>> arcs;
  double sup_value = 0.0;
  /// Absolute value tolerance actually used and the angle tolerance.
  double value_tol = 0.0;
  double angle_tol = 0.0;
  /// sup minus the best non-attained local maximum (or the grid minimum when
  /// there is none); empty for whole-disk and whole-boundary.
  std::optional<double> margin;

  bool is_singleton() const noexcept { return kind == AttainmentKind::singleton; }
  bool is_point_kind() const noexcept {
    return kind == AttainmentKind::singleton || kind == AttainmentKind::finite || kind == AttainmentKind::arc;
  }
};

/// A component function (f_Q or f_R) with an optional derivative used to
/// polish maximizer angles.
struct Component {
  std::function<cd(cd)> value;
  std::function<cd(cd)> derivative;
};

Component q_component(const MeroFunction& f);
Component r_component(const MeroFunction& f);

/// Throws BoundaryOverflowError when |g| is not finite on the grid.
AttainmentSet sup_on_disk(const Component& g, const Disk& disk, const BoundaryOptions& options = {});

struct NormBundle {
  double norm_q;
  double norm_r;
  double norm_total;
};

NormBundle norm(const MeroFunction& f, const BoundaryOptions& options = {});

struct AttainmentProduct {
  AttainmentSet q;
  AttainmentSet r;
  bool singleton_product;
};

AttainmentProduct attainment_product(const MeroFunction& f, const BoundaryOptions& options = {});

struct ProfileRow {
  double theta;
  double abs_q;
  double abs_r;
};

/// |f_Q| and |f_R| at n uniformly spaced boundary angles starting at 0.
std::vector<ProfileRow> profile(const MeroFunction& f, std::size_t n);

/// Reduces an angle to [0, 2 pi).
double wrap_angle(double theta);
/// Distance between two angles on the circle.
double angle_distance(double a, double b);

}  // namespace mero
