#include "mero/ortho.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "mero/error.hpp"
#include "mero/optimize.hpp"
#include "mero/pencil.hpp"

namespace mero {

namespace {

constexpr double kExactTol = 1e-12;

double l1_value(cd z, cd u, cd w, cd v, cd lambda) { return std::abs(z + lambda * w) + std::abs(u + lambda * v); }

bool lex_less(cd a, cd b) {
  if (a.real() != b.real()) return a.real() < b.real();
  return a.imag() < b.imag();
}

/// Best of the kink points -z/w, -u/v and their halves. The minimum of
/// |w||lambda - p| + |v||lambda - q| sits at one of the two kinks.
std::pair<cd, double> best_l1_candidate(cd z, cd u, cd w, cd v) {
  std::vector<cd> cands;
  if (w != cd{}) {
    cands.push_back(-z / w);
    cands.push_back(-z / (2.0 * w));
  }
  if (v != cd{}) {
    cands.push_back(-u / v);
    cands.push_back(-u / (2.0 * v));
  }
  std::pair<cd, double> best{0.0, l1_value(z, u, w, v, 0.0)};
  for (cd c : cands) {
    const double val = l1_value(z, u, w, v, c);
    if (val < best.second || (val == best.second && lex_less(c, best.first))) best = {c, val};
  }
  return best;
}

void attach_violation(OrthoVerdict& out, cd z, cd u, cd w, cd v) {
  const auto [lambda, value] = best_l1_candidate(z, u, w, v);
  out.lambda = lambda;
  out.value = value;
}

std::string format_scalar(cd c) {
  char buf[96];
  std::snprintf(buf, sizeof buf, "%.17g%+.17gi", c.real(), c.imag());
  return buf;
}

bool tuple_uncovered(const OrthoTuple& t, cd lambda) {
  const double base = std::abs(t.z) + std::abs(t.u);
  const double slack = kExactTol * (base + std::abs(lambda) * (std::abs(t.w) + std::abs(t.v)));
  return l1_value(t.z, t.u, t.w, t.v, lambda) < base - slack;
}

bool pair_uncovered(const std::pair<cd, cd>& p, cd lambda) {
  const double base = std::abs(p.first);
  const double slack = kExactTol * (base + std::abs(lambda) * std::abs(p.second));
  return std::abs(p.first + lambda * p.second) < base - slack;
}

/// Sample lambdas of a plan at the given scale; extras and per-family
/// candidates first.
std::vector<cd> plan_points(const SamplingPlan& plan, double scale, std::vector<cd> front) {
  std::vector<cd> pts = plan.extra;
  pts.insert(pts.end(), front.begin(), front.end());
  const double hw = plan.half_width * scale;
  for (int i = 0; i < plan.grid; ++i)
    for (int j = 0; j < plan.grid; ++j) {
      const double x = plan.grid > 1 ? -hw + 2.0 * hw * i / (plan.grid - 1) : 0.0;
      const double y = plan.grid > 1 ? -hw + 2.0 * hw * j / (plan.grid - 1) : 0.0;
      pts.emplace_back(x, y);
    }
  for (int k = 0; k < plan.radii; ++k) {
    const double rho = scale / 256.0 * std::pow(32768.0, plan.radii > 1 ? double(k) / (plan.radii - 1) : 0.0);
    for (int a = 0; a < plan.rays; ++a) pts.push_back(std::polar(rho, 2.0 * std::numbers::pi * a / plan.rays));
  }
  return pts;
}

}  // namespace

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::orthogonal: return "orthogonal";
    case Verdict::not_orthogonal: return "not-orthogonal";
    case Verdict::inconclusive: return "inconclusive-at-tolerance";
  }
  return "unknown";
}

std::string_view to_string(OrthoPath p) {
  switch (p) {
    case OrthoPath::exact_l1: return "exact-l1";
    case OrthoPath::exact_eocs_singleton: return "exact-eocs-singleton";
    case OrthoPath::oracle: return "oracle";
    case OrthoPath::trivial: return "trivial";
  }
  return "unknown";
}

OrthoVerdict bj_l1(cd z, cd u, cd w, cd v) {
  OrthoVerdict out;
  out.path = OrthoPath::exact_l1;
  const double fs = std::abs(z) + std::abs(u);
  const double gs = std::abs(w) + std::abs(v);
  out.reference = fs;
  const bool z0 = std::abs(z) <= kExactTol * fs;
  const bool u0 = std::abs(u) <= kExactTol * fs;
  const bool w0 = std::abs(w) <= kExactTol * gs;
  const bool v0 = std::abs(v) <= kExactTol * gs;
  bool orth = false;

  if (z0 && u0) {
    out.condition = 4;
    out.certificate = "z = u = 0: orthogonal to every (w, v)";
    orth = true;
  } else if (!z0 && !u0) {
    out.condition = 1;
    const cd s = std::conj(z) / std::abs(z) * w + std::conj(u) / std::abs(u) * v;
    orth = std::abs(s) <= kExactTol * gs;
    out.certificate = "conj(z)/|z| w + conj(u)/|u| v = " + format_scalar(s);
  } else if (z0) {
    out.condition = 2;
    const cd su = std::conj(u) / std::abs(u);
    if (!w0) {
      const cd a = -su * v / w;
      out.witness_scalar = a;
      orth = std::abs(a) <= 1.0 + kExactTol;
      out.certificate = "a w + conj(u)/|u| v = 0 with a = " + format_scalar(a);
    } else {
      orth = v0;
      if (orth) out.witness_scalar = cd{};
      out.certificate = "z = 0, w = 0: the case equation reduces to v = 0";
      out.notes.push_back("boundary subcase z = 0, w = 0 resolved by the case equation");
    }
  } else {
    out.condition = 3;
    const cd sz = std::conj(z) / std::abs(z);
    if (!v0) {
      const cd b = -sz * w / v;
      out.witness_scalar = b;
      orth = std::abs(b) <= 1.0 + kExactTol;
      out.certificate = "conj(z)/|z| w + b v = 0 with b = " + format_scalar(b);
    } else {
      orth = w0;
      if (orth) out.witness_scalar = cd{};
      out.certificate = "u = 0, v = 0: the case equation reduces to w = 0";
      out.notes.push_back("boundary subcase u = 0, v = 0 resolved by the case equation");
    }
  }
  out.verdict = orth ? Verdict::orthogonal : Verdict::not_orthogonal;
  if (!orth) attach_violation(out, z, u, w, v);
  return out;
}

OrthoVerdict eocs_singleton(const OrthoTuple& t) {
  OrthoVerdict out;
  out.path = OrthoPath::exact_eocs_singleton;
  const double az = std::abs(t.z), au = std::abs(t.u), aw = std::abs(t.w), av = std::abs(t.v);
  out.reference = az + au;
  const double ftol = kExactTol * (1.0 + az + au);
  const double gtol = kExactTol * (aw + av);
  const bool z0 = az <= ftol;
  const bool u0 = au <= ftol;

  bool eocs = false;
  if (z0 && u0) {
    out.condition = 1;
    out.certificate = "(i) z = 0, u = 0";
    eocs = true;
  } else if (z0) {
    eocs = aw >= av - gtol;
    out.condition = eocs ? 2 : 0;
    out.certificate = eocs ? "(ii) z = 0, u != 0, |w| >= |v|" : "negation (1): z = 0, u != 0, |w| < |v|";
  } else if (u0) {
    eocs = aw <= av + gtol;
    out.condition = eocs ? 3 : 0;
    out.certificate = eocs ? "(iii) z != 0, u = 0, |w| <= |v|" : "negation (2): z != 0, u = 0, |w| > |v|";
  } else {
    const double residual = std::abs(t.w * std::conj(t.z) * au + t.v * std::conj(t.u) * az);
    eocs = residual <= gtol * az * au;
    out.condition = eocs ? 4 : 0;
    out.certificate = eocs ? "(iv) w = -(conj(u)/|u|)(|z|/conj(z)) v"
                           : "negation (3): z != 0, u != 0, w != -(conj(u)/|u|)(|z|/conj(z)) v";
  }
  out.verdict = eocs ? Verdict::orthogonal : Verdict::not_orthogonal;
  if (!eocs) attach_violation(out, t.z, t.u, t.w, t.v);
  return out;
}

CoverageResult eocs_family_sampled(const std::vector<OrthoTuple>& family, const SamplingPlan& plan) {
  if (family.empty()) throw DomainError("empty family");
  double scale = 0.0;
  std::vector<cd> front;
  for (const auto& t : family) {
    const double gs = std::abs(t.w) + std::abs(t.v);
    if (gs > 0.0) scale = std::max(scale, (std::abs(t.z) + std::abs(t.u)) / gs);
    if (t.w != cd{}) {
      front.push_back(-t.z / t.w);
      front.push_back(-t.z / (2.0 * t.w));
    }
    if (t.v != cd{}) {
      front.push_back(-t.u / t.v);
      front.push_back(-t.u / (2.0 * t.v));
    }
  }
  if (!(scale > 0.0)) scale = 1.0;
  for (cd lambda : plan_points(plan, scale, std::move(front))) {
    const bool all = std::all_of(family.begin(), family.end(), [&](const OrthoTuple& t) { return tuple_uncovered(t, lambda); });
    if (all) return {false, lambda};
  }
  return {true, std::nullopt};
}

CoverageResult ocs_family_sampled(const std::vector<std::pair<cd, cd>>& family, const SamplingPlan& plan) {
  if (family.empty()) throw DomainError("empty family");
  double scale = 0.0;
  std::vector<cd> front;
  for (const auto& [z, w] : family) {
    if (w != cd{}) {
      scale = std::max(scale, std::abs(z) / std::abs(w));
      front.push_back(-z / w);
      front.push_back(-z / (2.0 * w));
    }
  }
  if (!(scale > 0.0)) scale = 1.0;
  for (cd lambda : plan_points(plan, scale, std::move(front))) {
    const bool all = std::all_of(family.begin(), family.end(), [&](const auto& p) { return pair_uncovered(p, lambda); });
    if (all) return {false, lambda};
  }
  return {true, std::nullopt};
}

std::optional<std::vector<std::pair<cd, cd>>> eocs_as_ocs(const std::vector<OrthoTuple>& family) {
  std::vector<std::pair<cd, cd>> out;
  for (const auto& t : family) {
    if (t.u != cd{} || t.v != cd{}) return std::nullopt;
    out.emplace_back(t.z, t.w);
  }
  return out;
}

OracleMinimum oracle_minimum(const MeroFunction& f, const MeroFunction& g, const OracleOptions& options) {
  const PencilNorm pencil(f, g, options.pencil_grid);
  const double nf = pencil(0.0);
  const double ng = pencil.norm_direction();
  if (!(ng > 0.0)) return {0.0, nf, nf, ng, 0};
  const double radius = 2.0 * nf / ng;
  const double delta = 0.1 * nf / ng;

  // Coarse seeding grid on |lambda| <= radius.
  struct Seed {
    cd lambda;
    double value;
  };
  std::vector<Seed> seeds;
  const int m = std::max(options.coarse, 2);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      const cd lambda{radius * (-1.0 + 2.0 * i / (m - 1)), radius * (-1.0 + 2.0 * j / (m - 1))};
      if (std::abs(lambda) <= radius) seeds.push_back({lambda, pencil.estimate(lambda)});
    }
  std::sort(seeds.begin(), seeds.end(), [](const Seed& a, const Seed& b) {
    if (a.value != b.value) return a.value < b.value;
    return lex_less(a.lambda, b.lambda);
  });

  std::vector<cd> starts{0.0, delta, -delta, cd{0.0, delta}, cd{0.0, -delta}};
  for (std::size_t k = 0; k < 4 && k < seeds.size(); ++k) starts.push_back(seeds[k].lambda);
  std::rotate(starts.begin(), starts.begin() + static_cast<std::ptrdiff_t>(options.start_rotation % starts.size()),
              starts.end());

  const auto phi = [&](double x, double y) { return pencil(cd{x, y}); };
  NelderMeadOptions nm;
  nm.max_evals = options.max_evals;
  nm.x_tol = 1e-12 * radius;
  nm.f_tol = 1e-15 * nf;

  OracleMinimum best{0.0, nf, nf, ng, 0};
  for (cd s : starts) {
    const NelderMeadResult r = nelder_mead_2d(phi, {s.real(), s.imag()}, 0.5 * delta, nm);
    best.evals += r.evals;
    const cd lambda{r.x[0], r.x[1]};
    if (r.value < best.value || (r.value == best.value && lex_less(lambda, best.lambda))) {
      best.lambda = lambda;
      best.value = r.value;
    }
  }
  return best;
}

OrthoVerdict bj_function(const MeroFunction& f, const MeroFunction& g, const OrthoOptions& options) {
  if (!(f.disk() == g.disk())) throw DomainError("orthogonality test needs functions on the same disk");
  if (f.is_zero()) throw DomainError("orthogonality test needs a nonzero f");

  OrthoVerdict out;
  if (g.is_zero()) {
    out.verdict = Verdict::orthogonal;
    out.path = OrthoPath::trivial;
    out.certificate = "g is the zero function";
    out.notes.push_back("g = 0 is orthogonal to every f");
    out.reference = norm(f, options.boundary).norm_total;
    return out;
  }

  auto run_oracle = [&]() {
    OrthoVerdict v;
    v.path = OrthoPath::oracle;
    const OracleMinimum m = oracle_minimum(f, g, options.oracle);
    v.reference = m.reference;
    v.lambda = m.lambda;
    v.value = m.value;
    const double decrease = (m.reference - m.value) / m.reference;
    if (decrease > options.oracle.violation_tol) {
      v.verdict = Verdict::not_orthogonal;
      v.certificate = "violating lambda with ||f + lambda g|| < ||f||";
    } else if (decrease <= options.oracle.orthogonal_tol) {
      v.verdict = Verdict::orthogonal;
      v.certificate = "oracle minimum of ||f + lambda g|| equals ||f||";
    } else {
      v.verdict = Verdict::inconclusive;
      v.certificate = "oracle minimum within the decision margin";
    }
    char buf[64];
    std::snprintf(buf, sizeof buf, "relative decrease %.3e", decrease);
    v.notes.push_back(buf);
    return v;
  };

  bool exact_ok = false;
  AttainmentProduct ap;
  if (options.mode != OrthoMode::oracle) {
    ap = attainment_product(f, options.boundary);
    exact_ok = ap.singleton_product;
    if (!exact_ok && options.mode == OrthoMode::exact)
      throw DomainError("exact path needs singleton attainment sets for f_Q and f_R");
  }
  if (!exact_ok) return run_oracle();

  const cd z1 = f.disk().boundary_point(ap.q.points.front().theta);
  const cd w1 = f.disk().boundary_point(ap.r.points.front().theta);
  const OrthoTuple t{f.q(z1), g.q(z1), f.analytic(w1), g.analytic(w1)};
  out = eocs_singleton(t);
  out.reference = ap.q.sup_value + ap.r.sup_value;
  if (!out.orthogonal()) {
    // Shrink the tuple-level witness until it violates for the functions.
    const PencilNorm pencil(f, g, options.oracle.pencil_grid);
    const double nf = pencil(0.0);
    const cd base = out.lambda.value_or(cd{});
    out.lambda.reset();
    out.value.reset();
    cd lambda = base;
    for (int k = 0; k < 48 && base != cd{}; ++k, lambda *= 0.5) {
      const double val = pencil(lambda);
      if (val < nf * (1.0 - 1e-12)) {
        out.lambda = lambda;
        out.value = val;
        break;
      }
    }
    if (!out.lambda) out.notes.push_back("no function-level violating lambda found along the tuple witness");
  }
  if (options.cross_check) {
    const OrthoVerdict o = run_oracle();
    if (o.verdict != out.verdict)
      out.notes.push_back(std::string("oracle path disagrees: ") + std::string(to_string(o.verdict)));
    else
      out.notes.push_back("oracle path agrees");
  }
  return out;
}

}  // namespace mero
