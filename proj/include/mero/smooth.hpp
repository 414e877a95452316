#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mero/boundary.hpp"
#include "mero/funcrep.hpp"
#include "mero/ortho.hpp"

namespace mero {

enum class SmoothReason { singleton_product, non_singleton_q, non_singleton_r, constant_component };
enum class SmoothStatus { smooth, not_smooth, inconclusive };

std::string_view to_string(SmoothReason r);
std::string_view to_string(SmoothStatus s);

struct DirectionalSummary {
  int directions = 0;
  /// max over directions and phases of |D+ + D-| / ||g||
  double max_gap = 0.0;
  bool agreement = false;   // max_gap <= 1e-4
  bool kink_found = false;  // max_gap > 1e-2
  std::uint64_t seed = 0;
  std::vector<double> gaps;  // per direction, max over phases
};

struct SmoothVerdict {
  SmoothStatus status = SmoothStatus::inconclusive;
  SmoothReason reason = SmoothReason::singleton_product;
  /// Every reason that applies, in precedence order.
  std::vector<SmoothReason> reasons;
  AttainmentSet q;
  AttainmentSet r;
  std::optional<DirectionalSummary> oracle;
  std::vector<std::string> notes;

  bool smooth() const noexcept { return status == SmoothStatus::smooth; }
};

/// Smooth iff both attainment sets are singletons. A singleton verdict whose
/// margin is within 100 value tolerances is reported inconclusive.
///
/// Throws IllPosedError for the zero function.
SmoothVerdict classify(const MeroFunction& f, const BoundaryOptions& options = {});

inline constexpr double kAgreementGap = 1e-4;
inline constexpr double kKinkGap = 1e-2;

/// One-sided derivatives of t -> ||f + t e^{i phi} g|| at t = 0 for random
/// rational directions g, extrapolated from t = 1e-3, 1e-4, 1e-5.
DirectionalSummary directional_derivative_oracle(const MeroFunction& f, int trials, std::uint64_t seed);

/// Two-sided gap |D+ + D-| / ||g|| for one direction and phase.
double directional_gap(const MeroFunction& f, const MeroFunction& g, double phase);

struct WitnessPair {
  MeroFunction g1;
  MeroFunction g2;
  /// f perp g1, f perp g2, f not perp (g1 + g2).
  std::array<OrthoVerdict, 3> checks;
  bool valid = false;
  /// Component whose attainment set supplies the two interpolation points.
  char split_component = 'Q';
  double theta_first = 0.0;   // first point of the split component
  double theta_second = 0.0;  // second point of the split component
  double theta_other = 0.0;   // point of the other component
  /// max over 50 points of |g1 + g2 - f| / (1 + |f|)
  double sum_residual = 0.0;
};

/// g1, g2 with f perp g1, f perp g2 and g1 + g2 = f.
///
/// Throws DomainError when f is smooth.
WitnessPair build_witness(const MeroFunction& f, const OrthoOptions& options = {});

struct SuitePart {
  std::string name;
  int instances = 0;
  int conforming = 0;
  std::vector<std::string> failures;

  bool passed() const noexcept { return conforming == instances; }
};

struct CorollaryReport {
  std::array<SuitePart, 4> parts;
  bool passed() const noexcept;
};

/// (a) analytic functions, (b) Moebius maps, (c) the split f = f_R + f_P,
/// (d) f / (z - center) for analytic f; every instance must be non-smooth.
CorollaryReport corollary_suite(std::uint64_t seed);

}  // namespace mero
