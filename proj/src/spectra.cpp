#include "signet/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace signet {

std::vector<double> symmetric_eigenvalues(std::vector<std::vector<double>> a) {
  const size_t n = a.size();
  for (const auto& row : a)
    if (row.size() != n) throw std::invalid_argument("symmetric_eigenvalues: not square");
  if (n == 0) return {};

  auto off_norm = [&] {
    double s = 0;
    for (size_t i = 0; i < n; ++i)
      for (size_t j = i + 1; j < n; ++j) s += a[i][j] * a[i][j];
    return s;
  };

  double scale = 0;
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) scale = std::max(scale, std::abs(a[i][j]));
  if (scale == 0) return std::vector<double>(n, 0.0);

  const double eps = 1e-30 * scale * scale;
  for (int sweep = 0; sweep < 100 && off_norm() > eps; ++sweep) {
    for (size_t p = 0; p < n; ++p) {
      for (size_t q = p + 1; q < n; ++q) {
        if (a[p][q] == 0.0) continue;
        const double theta = (a[q][q] - a[p][p]) / (2.0 * a[p][q]);
        const double t = (theta >= 0 ? 1.0 : -1.0) /
                         (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        for (size_t k = 0; k < n; ++k) {
          const double akp = a[k][p], akq = a[k][q];
          a[k][p] = c * akp - s * akq;
          a[k][q] = s * akp + c * akq;
        }
        for (size_t k = 0; k < n; ++k) {
          const double apk = a[p][k], aqk = a[q][k];
          a[p][k] = c * apk - s * aqk;
          a[q][k] = s * apk + c * aqk;
        }
      }
    }
  }

  std::vector<double> ev(n);
  for (size_t i = 0; i < n; ++i) ev[i] = a[i][i];
  std::sort(ev.begin(), ev.end());
  return ev;
}

FloatInertia float_crosscheck(const SignedGraph& g, double tol) {
  if (tol <= 0) throw std::invalid_argument("float_crosscheck: tol must be positive");
  const int n = g.vertex_count();
  std::vector<std::vector<double>> a(n, std::vector<double>(n, 0.0));
  for (const auto& e : g.edges()) {
    a[e.u][e.v] = e.sign.value();
    a[e.v][e.u] = e.sign.value();
  }
  FloatInertia out;
  for (double lambda : symmetric_eigenvalues(std::move(a))) {
    const double m = std::abs(lambda);
    if (m >= tol && m < 10 * tol) out.ambiguous = true;
    if (m < tol)
      out.inertia.nullity++;
    else if (lambda > 0)
      out.inertia.i_plus++;
    else
      out.inertia.i_minus++;
  }
  return out;
}

}  // namespace signet
