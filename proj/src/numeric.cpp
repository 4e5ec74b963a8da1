#include "supershape/numeric.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "supershape/error.hpp"

namespace supershape {

SymmetricEigenResult jacobi_eigendecompose(std::vector<double> a, int n) {
  if (n < 1 || a.size() != static_cast<size_t>(n) * n)
    throw DimensionError("jacobi: matrix size does not match n*n");

  std::vector<double> v(static_cast<size_t>(n) * n, 0.0);
  for (int i = 0; i < n; ++i) v[static_cast<size_t>(i) * n + i] = 1.0;

  auto A = [&](int r, int c) -> double& {
    return a[static_cast<size_t>(r) * n + c];
  };

  double total_sq = 0.0;
  for (double x : a) total_sq += x * x;
  const double off_tol_sq = total_sq * 1e-30;

  const int max_sweeps = 100;
  for (int sweep = 0; sweep < max_sweeps; ++sweep) {
    double off_sq = 0.0;
    for (int p = 0; p < n; ++p)
      for (int q = p + 1; q < n; ++q) off_sq += 2.0 * A(p, q) * A(p, q);
    if (off_sq <= off_tol_sq) break;

    for (int p = 0; p < n - 1; ++p) {
      for (int q = p + 1; q < n; ++q) {
        const double apq = A(p, q);
        if (apq == 0.0) continue;
        const double theta = (A(q, q) - A(p, p)) / (2.0 * apq);
        double t;
        if (std::abs(theta) > 1e150) {
          t = 1.0 / (2.0 * theta);
        } else {
          t = ((theta >= 0.0) ? 1.0 : -1.0) /
              (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        }
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;

        for (int k = 0; k < n; ++k) {
          if (k == p || k == q) continue;
          const double akp = A(k, p);
          const double akq = A(k, q);
          A(k, p) = c * akp - s * akq;
          A(p, k) = A(k, p);
          A(k, q) = s * akp + c * akq;
          A(q, k) = A(k, q);
        }
        A(p, p) -= t * apq;
        A(q, q) += t * apq;
        A(p, q) = 0.0;
        A(q, p) = 0.0;

        for (int k = 0; k < n; ++k) {
          double& vkp = v[static_cast<size_t>(k) * n + p];
          double& vkq = v[static_cast<size_t>(k) * n + q];
          const double tp = vkp;
          vkp = c * tp - s * vkq;
          vkq = s * tp + c * vkq;
        }
      }
    }
  }

  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](int i, int j) { return A(i, i) > A(j, j); });

  SymmetricEigenResult result;
  result.eigenvalues.resize(n);
  result.eigenvectors.assign(n, std::vector<double>(n));
  for (int k = 0; k < n; ++k) {
    const int src = order[k];
    result.eigenvalues[k] = A(src, src);
    for (int i = 0; i < n; ++i)
      result.eigenvectors[k][i] = v[static_cast<size_t>(i) * n + src];
  }
  return result;
}

}  // namespace supershape
