#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mero/boundary.hpp"
#include "mero/funcrep.hpp"

namespace mero {

/// ((z, w), (u, v)) in C^2 x C^2. For a function pair at attainment points
/// z1 of f_Q and w1 of f_R: z = f_Q(z1), w = g_Q(z1), u = f_R(w1), v = g_R(w1).
struct OrthoTuple {
  cd z, w, u, v;
};

enum class Verdict { orthogonal, not_orthogonal, inconclusive };
enum class OrthoPath { exact_l1, exact_eocs_singleton, oracle, trivial };

std::string_view to_string(Verdict v);
std::string_view to_string(OrthoPath p);

struct OrthoVerdict {
  Verdict verdict = Verdict::inconclusive;
  OrthoPath path = OrthoPath::trivial;
  /// Case of the l1 characterization (1..4) or condition (i)..(iv) of the
  /// singleton test (1..4); 0 when no condition holds.
  int condition = 0;
  std::string certificate;
  /// The scalar a (or b) of the l1 cases with one zero entry.
  std::optional<cd> witness_scalar;
  /// Violating lambda when not orthogonal, oracle minimizer otherwise.
  std::optional<cd> lambda;
  /// Norm at lambda.
  std::optional<double> value;
  /// Norm at lambda = 0.
  double reference = 0.0;
  std::vector<std::string> notes;

  bool orthogonal() const noexcept { return verdict == Verdict::orthogonal; }
};

/// (z, u) perpendicular to (w, v) in C^2 with the sum-of-moduli norm.
OrthoVerdict bj_l1(cd z, cd u, cd w, cd v);

/// Singleton family {t} covers C, decided by the four-condition test.
OrthoVerdict eocs_singleton(const OrthoTuple& t);

struct SamplingPlan {
  int grid = 101;               // grid x grid points on the square
  double half_width = 8.0;      // square half width, in units of the family scale
  int rays = 360;
  int radii = 16;               // geometric radii from scale/256 to 128*scale
  std::vector<cd> extra;        // extra lambdas tried first
};

struct CoverageResult {
  bool covered;                 // sampled coverage only; true does not certify
  std::optional<cd> uncovered;  // a lambda outside every region
};

/// Every sampled lambda lies in at least one region
/// {lambda : |z + lambda w| + |u + lambda v| >= |z| + |u|}.
CoverageResult eocs_family_sampled(const std::vector<OrthoTuple>& family, const SamplingPlan& plan = {});

/// Same test for pairs (z, w) and regions {lambda : |z + lambda w| >= |z|}.
CoverageResult ocs_family_sampled(const std::vector<std::pair<cd, cd>>& family, const SamplingPlan& plan = {});

/// The (z, w) pairs of a family whose (u, v) entries all vanish; nullopt
/// when some tuple has a nonzero (u, v).
std::optional<std::vector<std::pair<cd, cd>>> eocs_as_ocs(const std::vector<OrthoTuple>& family);

enum class OrthoMode { automatic, exact, oracle };

struct OracleOptions {
  std::size_t pencil_grid = 1024;
  int coarse = 21;
  int max_evals = 250;
  double violation_tol = 1e-9;   // relative decrease that refutes orthogonality
  double orthogonal_tol = 1e-11; // relative decrease still read as orthogonal
  /// Rotates the order in which the multi-starts run.
  unsigned start_rotation = 0;
};

struct OrthoOptions {
  OrthoMode mode = OrthoMode::automatic;
  /// Run the oracle too when the exact path applies and note disagreement.
  bool cross_check = false;
  BoundaryOptions boundary;
  OracleOptions oracle;
};

struct OracleMinimum {
  cd lambda;
  double value;
  double reference;  // ||f||
  double norm_g;
  int evals;
};

/// min over lambda of ||f + lambda g|| by multi-start Nelder-Mead on the
/// disk |lambda| <= 2 ||f|| / ||g||.
OracleMinimum oracle_minimum(const MeroFunction& f, const MeroFunction& g, const OracleOptions& options = {});

/// f perpendicular to g. The exact path needs singleton attainment sets for
/// both components of f; the oracle path always applies.
///
/// Throws DomainError for a zero f or a disk mismatch.
OrthoVerdict bj_function(const MeroFunction& f, const MeroFunction& g, const OrthoOptions& options = {});

}  // namespace mero
