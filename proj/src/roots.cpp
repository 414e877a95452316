#include "mero/roots.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <numeric>

namespace mero {

namespace {

std::vector<cd> companion_eigenvalues(const Polynomial& p) {
  const int n = p.degree();
  if (n < 1) return {};
  if (n == 1) return {-p[0] / p[1]};
  Eigen::MatrixXcd companion = Eigen::MatrixXcd::Zero(n, n);
  const cd lead = p.leading();
  for (int i = 1; i < n; ++i) companion(i, i - 1) = 1.0;
  for (int i = 0; i < n; ++i) companion(i, n - 1) = -p[static_cast<std::size_t>(i)] / lead;
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(companion, /*computeEigenvectors=*/false);
  std::vector<cd> out(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) out[static_cast<std::size_t>(i)] = solver.eigenvalues()(i);
  return out;
}

cd newton_step(const Polynomial& p, const Polynomial& dp, cd x) {
  const cd d = dp(x);
  if (d == cd{}) return x;
  const cd next = x - p(x) / d;
  // Keep the step only if it does not make the residual worse.
  return std::abs(p(next)) <= std::abs(p(x)) ? next : x;
}

/// Eigenvalues of an m-fold root scatter by about eps^(1/m), so m >= 3 is
/// missed by the tight clustering. Groups linked within kLooseClusterTol are
/// merged when p(z + c), c the mean of the whole component, has its first m
/// Taylor coefficients at round-off level.
std::vector<std::vector<cd>> merge_split_multiple_roots(const Polynomial& p, std::vector<std::vector<cd>> groups) {
  constexpr double kLooseClusterTol = 1e-2;
  constexpr double kMultipleRootTol = 1e-9;
  auto mean_of = [](const std::vector<cd>& g) { return std::accumulate(g.begin(), g.end(), cd{}) / static_cast<double>(g.size()); };
  const std::size_t n = groups.size();
  std::vector<cd> means(n);
  for (std::size_t i = 0; i < n; ++i) means[i] = mean_of(groups[i]);
  std::vector<std::size_t> component(n);
  std::iota(component.begin(), component.end(), std::size_t{0});
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (std::abs(means[i] - means[j]) <= kLooseClusterTol * (1.0 + std::max(std::abs(means[i]), std::abs(means[j])))) {
        const std::size_t from = component[j], to = component[i];
        for (auto& c : component)
          if (c == from) c = to;
      }

  std::vector<std::vector<cd>> out;
  for (std::size_t root = 0; root < n; ++root) {
    std::vector<std::size_t> members;
    for (std::size_t i = 0; i < n; ++i)
      if (component[i] == root) members.push_back(i);
    if (members.empty()) continue;
    std::vector<cd> joint;
    for (std::size_t i : members) joint.insert(joint.end(), groups[i].begin(), groups[i].end());
    bool multiple = members.size() > 1;
    if (multiple) {
      const cd c = mean_of(joint);
      const Polynomial shifted = p.taylor_shift(c);
      double scale = 0.0, power = 1.0;
      for (std::size_t k = 0; k < p.size(); ++k, power *= 1.0 + std::abs(c)) scale += std::abs(p[k]) * power;
      for (std::size_t k = 0; k < joint.size(); ++k) multiple = multiple && std::abs(shifted[k]) <= kMultipleRootTol * scale;
    }
    if (multiple) out.push_back(std::move(joint));
    else
      for (std::size_t i : members) out.push_back(std::move(groups[i]));
  }
  return out;
}

}  // namespace

std::vector<Root> find_roots(const Polynomial& p) {
  std::vector<Root> roots;
  if (p.degree() < 1) return roots;

  std::size_t zeros = 0;
  while (zeros < p.size() && p[zeros] == cd{}) ++zeros;
  if (zeros > 0) roots.push_back({0.0, static_cast<unsigned>(zeros)});
  const Polynomial reduced(std::vector<cd>(p.coeffs().begin() + static_cast<std::ptrdiff_t>(zeros), p.coeffs().end()));

  // Clustering uses the raw eigenvalues: their mean over an m-fold cluster is
  // accurate, while individual Newton steps would skew it.
  const std::vector<cd> eig = companion_eigenvalues(reduced);

  // Single-linkage clustering.
  const std::size_t n = eig.size();
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t i) {
    while (parent[i] != i) i = parent[i] = parent[parent[i]];
    return i;
  };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (std::abs(eig[i] - eig[j]) <= kRootClusterTol * (1.0 + std::max(std::abs(eig[i]), std::abs(eig[j]))))
        parent[find(i)] = find(j);

  std::vector<std::vector<cd>> groups;
  std::vector<std::ptrdiff_t> group_of(n, -1);
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t r = find(i);
    if (group_of[r] < 0) {
      group_of[r] = static_cast<std::ptrdiff_t>(groups.size());
      groups.emplace_back();
    }
    groups[static_cast<std::size_t>(group_of[r])].push_back(eig[i]);
  }

  groups = merge_split_multiple_roots(reduced, std::move(groups));

  for (const auto& g : groups) {
    cd mean = std::accumulate(g.begin(), g.end(), cd{}) / static_cast<double>(g.size());
    const unsigned m = static_cast<unsigned>(g.size());
    const Polynomial dm1 = reduced.derivative(m - 1);
    mean = newton_step(m > 1 ? dm1 : reduced, dm1.derivative(), mean);
    roots.push_back({mean, m});
  }
  std::sort(roots.begin(), roots.end(), [](const Root& a, const Root& b) {
    if (a.value.real() != b.value.real()) return a.value.real() < b.value.real();
    return a.value.imag() < b.value.imag();
  });
  return roots;
}

}  // namespace mero
