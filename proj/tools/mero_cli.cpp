// mero: decomposition, norms, attainment sets, smoothness and orthogonality
// of meromorphic functions on a disk.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "mero/boundary.hpp"
#include "mero/error.hpp"
#include "mero/function_file.hpp"
#include "mero/ortho.hpp"
#include "mero/report.hpp"
#include "mero/selftest.hpp"
#include "mero/smooth.hpp"

namespace {

using namespace mero;

constexpr int kExitUsage = 64;
constexpr int kExitParse = 65;
constexpr int kExitIllPosed = 66;
constexpr int kExitInconclusive = 2;

struct Settings {
  bool json = false;
  std::size_t grid = 4096;
  double value_tol = 1e-9;
  double angle_tol = 1e-12;
  std::uint64_t seed = 42;
};

BoundaryOptions boundary_options(const Settings& s) {
  BoundaryOptions o;
  o.grid = s.grid;
  o.value_tol = s.value_tol;
  o.angle_tol = s.angle_tol;
  return o;
}

struct Loaded {
  FunctionFile file;
  MeroFunction f;
};

Loaded load(const std::string& path) {
  FunctionFile file = read_function_file(path);
  MeroFunction f = load_function(file);
  return {std::move(file), std::move(f)};
}

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

std::string fmt(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string fmt(cd c) {
  char buf[96];
  std::snprintf(buf, sizeof buf, "%.17g%+.17gi", c.real(), c.imag());
  return buf;
}

void print_attainment(const char* label, const AttainmentSet& s) {
  std::cout << label << ": " << to_string(s.kind) << "  sup " << fmt(s.sup_value);
  if (!s.points.empty()) {
    std::cout << "  theta {";
    for (std::size_t k = 0; k < s.points.size(); ++k) std::cout << (k ? ", " : "") << fmt(s.points[k].theta);
    std::cout << "}";
  }
  std::cout << "  margin " << (s.margin ? fmt(*s.margin) : std::string("n/a")) << "  value_tol " << fmt(s.value_tol)
            << "  angle_tol " << fmt(s.angle_tol) << "\n";
}

void print_decomposition(const MeroFunction& f) {
  std::cout << "poles inside the disk: " << f.parts().size() << "\n";
  for (const auto& p : f.parts()) {
    std::cout << "  pole " << fmt(p.pole) << "  order " << p.order() << "\n";
    for (std::size_t j = 0; j < p.coeffs.size(); ++j) std::cout << "    a" << j + 1 << " = " << fmt(p.coeffs[j]) << "\n";
  }
  std::cout << "f_Q coefficients (ascending):";
  for (cd c : f.q_polynomial().coeffs()) std::cout << " " << fmt(c);
  std::cout << "\nf_R polynomial (ascending):";
  for (cd c : f.remainder().polynomial.coeffs()) std::cout << " " << fmt(c);
  std::cout << "\n";
  if (!f.remainder().outer.empty()) std::cout << "f_R poles outside the disk: " << f.remainder().outer.size() << "\n";
  for (const auto& t : f.remainder().terms) std::cout << "f_R expression term: " << fmt(t.weight) << " * " << t.expr.to_string() << "\n";
}

json base_report(const std::string& command, const Settings& s, const Loaded& in) {
  json j = report_header(command, s.seed);
  j["input"] = to_json(in.file);
  if (in.file.rescaled) j["notes"] = json::array({"rescaled input: " + *in.file.rescaled});
  return j;
}

int cmd_decompose(const Settings& s, const std::string& path) {
  const Loaded in = load(path);
  if (s.json) {
    json j = base_report("decompose", s, in);
    j["decomposition"] = decomposition_json(in.f);
    emit(j);
  } else {
    print_decomposition(in.f);
  }
  return 0;
}

int cmd_norm(const Settings& s, const std::string& path) {
  const Loaded in = load(path);
  const NormBundle n = norm(in.f, boundary_options(s));
  if (s.json) {
    json j = base_report("norm", s, in);
    j["norms"] = to_json(n);
    emit(j);
  } else {
    std::cout << "||f_Q|| = " << fmt(n.norm_q) << "\n||f_R|| = " << fmt(n.norm_r) << "\n||f||   = " << fmt(n.norm_total)
              << "\n";
  }
  return 0;
}

int cmd_attain(const Settings& s, const std::string& path) {
  const Loaded in = load(path);
  const AttainmentProduct ap = attainment_product(in.f, boundary_options(s));
  if (s.json) {
    json j = base_report("attain", s, in);
    j["attainment_q"] = to_json(ap.q);
    j["attainment_r"] = to_json(ap.r);
    j["singleton_product"] = ap.singleton_product;
    emit(j);
  } else {
    print_attainment("M_Q", ap.q);
    print_attainment("M_R", ap.r);
    std::cout << "singleton product: " << (ap.singleton_product ? "yes" : "no") << "\n";
  }
  return 0;
}

int cmd_smooth(const Settings& s, const std::string& path, int oracle_trials) {
  const Loaded in = load(path);
  SmoothVerdict v = classify(in.f, boundary_options(s));
  if (oracle_trials > 0) v.oracle = directional_derivative_oracle(in.f, oracle_trials, s.seed);
  if (s.json) {
    json j = base_report("smooth", s, in);
    j["decomposition"] = decomposition_json(in.f);
    j["norms"] = {{"norm_q", v.q.sup_value}, {"norm_r", v.r.sup_value}, {"norm_total", v.q.sup_value + v.r.sup_value}};
    j["smoothness"] = to_json(v);
    emit(j);
  } else {
    std::cout << "verdict: " << to_string(v.status) << "  reason " << to_string(v.reason) << "\n";
    print_attainment("M_Q", v.q);
    print_attainment("M_R", v.r);
    if (v.oracle)
      std::cout << "directional oracle: max gap " << fmt(v.oracle->max_gap) << " over " << v.oracle->directions
                << " directions\n";
    for (const auto& n : v.notes) std::cout << "note: " << n << "\n";
    if (in.file.rescaled) std::cout << "note: rescaled input: " << *in.file.rescaled << "\n";
  }
  switch (v.status) {
    case SmoothStatus::smooth: return 0;
    case SmoothStatus::not_smooth: return 1;
    case SmoothStatus::inconclusive: return kExitInconclusive;
  }
  return kExitInconclusive;
}

int cmd_ortho(const Settings& s, const std::string& path_f, const std::string& path_g, const std::string& mode,
              bool cross_check) {
  const Loaded f = load(path_f);
  const Loaded g = load(path_g);
  OrthoOptions o;
  o.boundary = boundary_options(s);
  o.cross_check = cross_check;
  o.mode = mode == "exact" ? OrthoMode::exact : mode == "oracle" ? OrthoMode::oracle : OrthoMode::automatic;
  const OrthoVerdict v = bj_function(f.f, g.f, o);
  if (s.json) {
    json j = report_header("ortho", s.seed);
    j["input_f"] = to_json(f.file);
    j["input_g"] = to_json(g.file);
    j["orthogonality"] = to_json(v);
    emit(j);
  } else {
    std::cout << "verdict: " << to_string(v.verdict) << "  path " << to_string(v.path) << "\n";
    std::cout << "certificate: " << v.certificate << "\n";
    if (v.lambda) std::cout << "lambda: " << fmt(*v.lambda) << "\n";
    if (v.value) std::cout << "||f + lambda g|| = " << fmt(*v.value) << "  ||f|| = " << fmt(v.reference) << "\n";
    for (const auto& n : v.notes) std::cout << "note: " << n << "\n";
  }
  switch (v.verdict) {
    case Verdict::orthogonal: return 0;
    case Verdict::not_orthogonal: return 1;
    case Verdict::inconclusive: return kExitInconclusive;
  }
  return kExitInconclusive;
}

int cmd_witness(const Settings& s, const std::string& path, std::string prefix) {
  const Loaded in = load(path);
  OrthoOptions o;
  o.boundary = boundary_options(s);
  const WitnessPair w = build_witness(in.f, o);
  if (prefix.empty()) prefix = std::filesystem::path(path).replace_extension().string();
  const std::string g1_path = prefix + ".g1.fn";
  const std::string g2_path = prefix + ".g2.fn";
  std::ofstream(g1_path) << format_function_file(to_function_file(w.g1));
  std::ofstream(g2_path) << format_function_file(to_function_file(w.g2));
  json j = base_report("witness", s, in);
  j["witness"] = to_json(w);
  j["files"] = {{"g1", g1_path}, {"g2", g2_path}};
  std::ofstream(prefix + ".checks.json") << j.dump(2) << "\n";
  if (s.json) {
    emit(j);
  } else {
    std::cout << "witness " << (w.valid ? "valid" : "INVALID") << "  split component " << w.split_component << "\n";
    const char* names[3] = {"f perp g1", "f perp g2", "f perp g1+g2"};
    for (int k = 0; k < 3; ++k) std::cout << "  " << names[k] << ": " << to_string(w.checks[k].verdict) << "\n";
    std::cout << "wrote " << g1_path << ", " << g2_path << ", " << prefix << ".checks.json\n";
  }
  return w.valid ? 0 : kExitInconclusive;
}

int cmd_profile(const std::string& path, std::size_t n) {
  const Loaded in = load(path);
  std::cout << "theta,abs_fq,abs_fr\n";
  for (const auto& row : profile(in.f, n)) {
    std::printf("%.17g,%.17g,%.17g\n", row.theta, row.abs_q, row.abs_r);
  }
  return 0;
}

int cmd_selftest(const Settings& s) {
  const auto checks = run_selftest(s.seed);
  bool ok = true;
  for (const auto& c : checks) ok = ok && c.passed;
  if (s.json) {
    json j = report_header("selftest", s.seed);
    json arr = json::array();
    for (const auto& c : checks)
      arr.push_back({{"module", c.module}, {"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
    j["checks"] = arr;
    j["passed"] = ok;
    emit(j);
  } else {
    for (const auto& c : checks)
      std::cout << (c.passed ? "PASS " : "FAIL ") << c.module << ": " << c.name << " (" << c.detail << ")\n";
    std::cout << (ok ? "selftest passed" : "selftest FAILED") << "\n";
  }
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Meromorphic functions on a disk: decomposition, norms, smoothness, orthogonality"};
  app.set_version_flag("--version", std::string(kToolVersion));
  app.require_subcommand(1);
  app.fallthrough();

  Settings s;
  app.add_flag("--json", s.json, "Emit a JSON report");
  app.add_option("--grid", s.grid, "Boundary grid size")->check(CLI::Range(std::size_t{16}, std::size_t{1} << 24));
  app.add_option("--value-tol", s.value_tol, "Relative value tolerance for attainment")->check(CLI::PositiveNumber);
  app.add_option("--angle-tol", s.angle_tol, "Angle tolerance (radians)")->check(CLI::PositiveNumber);
  app.add_option("--seed", s.seed, "Random seed");

  std::string file, file_g, mode = "auto", prefix;
  std::size_t profile_n = 0;
  int oracle_trials = 0;
  bool cross_check = false;

  auto* decompose = app.add_subcommand("decompose", "Principal parts, f_Q and f_R");
  decompose->add_option("file", file)->required();
  auto* norm_cmd = app.add_subcommand("norm", "||f_Q||, ||f_R|| and ||f||");
  norm_cmd->add_option("file", file)->required();
  auto* attain = app.add_subcommand("attain", "Attainment sets of f_Q and f_R");
  attain->add_option("file", file)->required();
  auto* smooth = app.add_subcommand("smooth", "Gateaux differentiability");
  smooth->add_option("file", file)->required();
  smooth->add_option("--oracle-trials", oracle_trials, "Directional-derivative directions to sample")->check(CLI::NonNegativeNumber);
  auto* ortho = app.add_subcommand("ortho", "Birkhoff-James orthogonality of f and g");
  ortho->add_option("file_f", file)->required();
  ortho->add_option("file_g", file_g)->required();
  ortho->add_option("--mode", mode, "auto, exact or oracle")->check(CLI::IsMember({"auto", "exact", "oracle"}));
  ortho->add_flag("--cross-check", cross_check, "Also run the oracle when the exact path applies");
  auto* witness = app.add_subcommand("witness", "Witness pair refuting right-additivity");
  witness->add_option("file", file)->required();
  witness->add_option("--out", prefix, "Output path prefix (default: input path without extension)");
  auto* profile_cmd = app.add_subcommand("profile", "CSV of |f_Q| and |f_R| on the boundary");
  profile_cmd->add_option("file", file)->required();
  profile_cmd->add_option("--n", profile_n, "Number of samples")->required()->check(CLI::PositiveNumber);
  auto* selftest = app.add_subcommand("selftest", "Run the invariant suites");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*decompose) return cmd_decompose(s, file);
    if (*norm_cmd) return cmd_norm(s, file);
    if (*attain) return cmd_attain(s, file);
    if (*smooth) return cmd_smooth(s, file, oracle_trials);
    if (*ortho) return cmd_ortho(s, file, file_g, mode, cross_check);
    if (*witness) return cmd_witness(s, file, prefix);
    if (*profile_cmd) return cmd_profile(file, profile_n);
    if (*selftest) return cmd_selftest(s);
  } catch (const mero::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitParse;
  } catch (const FileFormatError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitParse;
  } catch (const IllPosedError& e) {
    std::cerr << "ill-posed input: " << e.what() << "\n";
    return kExitIllPosed;
  } catch (const DomainError& e) {
    std::cerr << "ill-posed input: " << e.what() << "\n";
    return kExitIllPosed;
  } catch (const BoundaryOverflowError& e) {
    std::cerr << "ill-posed input: " << e.what() << "\n";
    return kExitIllPosed;
  } catch (const EvalError& e) {
    std::cerr << "ill-posed input: " << e.what() << "\n";
    return kExitIllPosed;
  }
  return kExitUsage;
}
