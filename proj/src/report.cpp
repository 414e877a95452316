#include "mero/report.hpp"

#include <chrono>
#include <ctime>

namespace mero {

namespace {

std::string utc_now() {
  const std::time_t t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

AttainmentKind kind_from_string(const std::string& s) {
  for (auto k : {AttainmentKind::singleton, AttainmentKind::finite, AttainmentKind::arc, AttainmentKind::whole_boundary,
                 AttainmentKind::whole_disk})
    if (to_string(k) == s) return k;
  throw std::invalid_argument("unknown attainment kind " + s);
}

json optional_number(const std::optional<double>& v) { return v ? json(*v) : json(nullptr); }

}  // namespace

json report_header(const std::string& command, std::uint64_t seed) {
  json j;
  j["schema"] = kSchemaVersion;
  j["tool"] = "mero";
  j["version"] = kToolVersion;
  j["command"] = command;
  j["seed"] = seed;
  j["timestamp"] = utc_now();
  return j;
}

json to_json(cd c) { return json::array({c.real(), c.imag()}); }

cd complex_from_json(const json& j) { return {j.at(0).get<double>(), j.at(1).get<double>()}; }

json to_json(const Disk& d) { return {{"center", to_json(d.center())}, {"radius", d.radius()}}; }

json to_json(const FunctionFile& input) {
  json poles = json::array();
  for (const auto& p : input.poles) poles.push_back({{"location", to_json(p.location)}, {"max_order", p.max_order}});
  json j{{"expr", input.expr}, {"disk", to_json(input.disk)}, {"poles", poles}};
  j["rescaled"] = input.rescaled ? json(*input.rescaled) : json(nullptr);
  return j;
}

json decomposition_json(const MeroFunction& f) {
  json parts = json::array();
  for (const auto& p : f.parts()) {
    json coeffs = json::array();
    for (cd a : p.coeffs) coeffs.push_back(to_json(a));
    parts.push_back({{"pole", to_json(p.pole)}, {"order", p.order()}, {"coefficients", coeffs}});
  }
  json q = json::array();
  for (cd c : f.q_polynomial().coeffs()) q.push_back(to_json(c));
  const Remainder& rem = f.remainder();
  json rpoly = json::array();
  for (cd c : rem.polynomial.coeffs()) rpoly.push_back(to_json(c));
  json outer = json::array();
  for (const auto& p : rem.outer) {
    json coeffs = json::array();
    for (cd a : p.coeffs) coeffs.push_back(to_json(a));
    outer.push_back({{"pole", to_json(p.pole)}, {"order", p.order()}, {"coefficients", coeffs}});
  }
  json terms = json::array();
  for (const auto& t : rem.terms) terms.push_back({{"weight", to_json(t.weight)}, {"expr", t.expr.to_string()}});
  json contour = json::array();
  for (const auto& c : f.contour())
    contour.push_back({{"pole", to_json(c.pole)}, {"radius", c.radius}, {"nodes", c.nodes}});
  return {{"poles", parts},
          {"q_coefficients", q},
          {"remainder", {{"polynomial", rpoly}, {"outer_poles", outer}, {"expression_terms", terms}}},
          {"contour", contour}};
}

json to_json(const NormBundle& n) { return {{"norm_q", n.norm_q}, {"norm_r", n.norm_r}, {"norm_total", n.norm_total}}; }

json to_json(const AttainmentSet& s) {
  json pts = json::array();
  for (const auto& p : s.points) pts.push_back({{"theta", p.theta}, {"value", p.value}});
  json arcs = json::array();
  for (const auto& [a, b] : s.arcs) arcs.push_back(json::array({a, b}));
  return {{"kind", std::string(to_string(s.kind))}, {"sup", s.sup_value}, {"points", pts},
          {"arcs", arcs}, {"margin", optional_number(s.margin)},
          {"tolerances", {{"value_tol", s.value_tol}, {"angle_tol", s.angle_tol}}}};
}

AttainmentSet attainment_from_json(const json& j) {
  AttainmentSet s;
  s.kind = kind_from_string(j.at("kind").get<std::string>());
  s.sup_value = j.at("sup").get<double>();
  for (const auto& p : j.at("points")) s.points.push_back({p.at("theta").get<double>(), p.at("value").get<double>()});
  for (const auto& a : j.at("arcs")) s.arcs.emplace_back(a.at(0).get<double>(), a.at(1).get<double>());
  if (!j.at("margin").is_null()) s.margin = j.at("margin").get<double>();
  s.value_tol = j.at("tolerances").at("value_tol").get<double>();
  s.angle_tol = j.at("tolerances").at("angle_tol").get<double>();
  return s;
}

json to_json(const OrthoVerdict& v) {
  json j{{"verdict", std::string(to_string(v.verdict))},
         {"path", std::string(to_string(v.path))},
         {"condition", v.condition},
         {"certificate", v.certificate}};
  j["witness_scalar"] = v.witness_scalar ? to_json(*v.witness_scalar) : json(nullptr);
  j["lambda"] = v.lambda ? to_json(*v.lambda) : json(nullptr);
  j["value"] = optional_number(v.value);
  j["reference"] = v.reference;
  j["notes"] = v.notes;
  return j;
}

json to_json(const DirectionalSummary& d) {
  return {{"directions", d.directions}, {"max_gap", d.max_gap}, {"agreement", d.agreement},
          {"kink_found", d.kink_found},  {"seed", d.seed},        {"gaps", d.gaps}};
}

json to_json(const SmoothVerdict& v) {
  json reasons = json::array();
  for (auto r : v.reasons) reasons.push_back(std::string(to_string(r)));
  json j{{"status", std::string(to_string(v.status))},
         {"smooth", v.smooth()},
         {"reason", std::string(to_string(v.reason))},
         {"reasons", reasons},
         {"attainment_q", to_json(v.q)},
         {"attainment_r", to_json(v.r)}};
  j["oracle"] = v.oracle ? to_json(*v.oracle) : json(nullptr);
  j["notes"] = v.notes;
  return j;
}

json to_json(const WitnessPair& w) {
  json checks = json::array();
  for (const auto& c : w.checks) checks.push_back(to_json(c));
  return {{"valid", w.valid},
          {"split_component", std::string(1, w.split_component)},
          {"theta_first", w.theta_first},
          {"theta_second", w.theta_second},
          {"theta_other", w.theta_other},
          {"sum_residual", w.sum_residual},
          {"checks", checks},
          {"g1", decomposition_json(w.g1)},
          {"g2", decomposition_json(w.g2)}};
}

json to_json(const CorollaryReport& r) {
  json parts = json::array();
  for (const auto& p : r.parts)
    parts.push_back({{"name", p.name}, {"instances", p.instances}, {"conforming", p.conforming}, {"failures", p.failures}});
  return {{"passed", r.passed()}, {"parts", parts}};
}

json strip_timestamp(json report) {
  report.erase("timestamp");
  return report;
}

}  // namespace mero
