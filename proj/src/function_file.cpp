#include "mero/function_file.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "mero/error.hpp"

namespace mero {

namespace {

std::string_view trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::vector<std::string_view> fields(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
    const std::size_t j = i;
    while (i < s.size() && s[i] != ' ' && s[i] != '\t') ++i;
    if (i > j) out.push_back(s.substr(j, i - j));
  }
  return out;
}

double number(std::string_view s, std::size_t line, const char* what) {
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size() || !std::isfinite(v))
    throw FileFormatError(line, std::string("bad ") + what + " '" + std::string(s) + "'");
  return v;
}

std::string fmt(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

}  // namespace

FunctionFile parse_function_file(std::string_view text) {
  FunctionFile out;
  bool have_disk = false, have_expr = false;
  std::size_t line_no = 0;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    const std::string_view raw = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++line_no;
    const std::string_view line = trim(raw);
    if (line.empty() || line.front() == '#') continue;
    const auto sp = line.find_first_of(" \t");
    const std::string_view key = line.substr(0, sp);
    const std::string_view rest = sp == std::string_view::npos ? std::string_view{} : trim(line.substr(sp));

    if (key == "disk") {
      if (have_disk) throw FileFormatError(line_no, "duplicate disk line");
      const auto f = fields(rest);
      if (f.size() != 3) throw FileFormatError(line_no, "disk needs <center_re> <center_im> <radius>");
      const double r = number(f[2], line_no, "radius");
      if (!(r > 0.0)) throw FileFormatError(line_no, "radius must be positive");
      out.disk = Disk({number(f[0], line_no, "center"), number(f[1], line_no, "center")}, r);
      have_disk = true;
    } else if (key == "expr") {
      if (!have_disk) throw FileFormatError(line_no, "expected disk line first");
      if (have_expr) throw FileFormatError(line_no, "duplicate expr line");
      if (rest.empty()) throw FileFormatError(line_no, "empty expression");
      out.expr = std::string(rest);
      have_expr = true;
    } else if (key == "pole") {
      if (!have_expr) throw FileFormatError(line_no, "pole lines must follow the expr line");
      const auto f = fields(rest);
      if (f.size() != 3) throw FileFormatError(line_no, "pole needs <re> <im> <max_order>");
      unsigned order = 0;
      const auto [ptr, ec] = std::from_chars(f[2].data(), f[2].data() + f[2].size(), order);
      if (ec != std::errc{} || ptr != f[2].data() + f[2].size() || order < 1 || order > 64)
        throw FileFormatError(line_no, "max_order must be an integer in 1..64");
      out.poles.push_back({{number(f[0], line_no, "pole"), number(f[1], line_no, "pole")}, order});
    } else if (key == "rescaled") {
      out.rescaled = std::string(rest);
    } else {
      throw FileFormatError(line_no, "unknown directive '" + std::string(key) + "'");
    }
  }
  if (!have_disk) throw FileFormatError(line_no, "missing disk line");
  if (!have_expr) throw FileFormatError(line_no, "missing expr line");
  return out;
}

FunctionFile read_function_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FileFormatError(0, "cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_function_file(ss.str());
}

std::string format_function_file(const FunctionFile& file) {
  std::string out = "disk " + fmt(file.disk.center().real()) + " " + fmt(file.disk.center().imag()) + " " +
                    fmt(file.disk.radius()) + "\n";
  out += "expr " + file.expr + "\n";
  for (const auto& p : file.poles)
    out += "pole " + fmt(p.location.real()) + " " + fmt(p.location.imag()) + " " + std::to_string(p.max_order) + "\n";
  if (file.rescaled) out += "rescaled " + *file.rescaled + "\n";
  return out;
}

MeroFunction load_function(const FunctionFile& file) {
  const Expr e = Expr::parse(file.expr);
  if (file.poles.empty()) return from_expr(e, file.disk);
  return from_expr_with_poles(e, file.poles, file.disk);
}

FunctionFile to_function_file(const MeroFunction& f) {
  FunctionText text = to_text(f);
  FunctionFile out;
  out.disk = f.disk();
  out.expr = std::move(text.expr);
  out.poles = std::move(text.poles);
  return out;
}

}  // namespace mero
