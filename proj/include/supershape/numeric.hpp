#pragma once

#include <vector>

namespace supershape {

/// Eigenvalues (descending) and matching unit eigenvectors of a symmetric
/// matrix. eigenvectors[k] pairs with eigenvalues[k].
struct SymmetricEigenResult {
  std::vector<double> eigenvalues;
  std::vector<std::vector<double>> eigenvectors;
};

/// Cyclic Jacobi eigendecomposition of a dense symmetric matrix, given
/// row-major as n*n values. Converges to ~1e-15 of the Frobenius norm; sized
/// for the small systems used here (up to a few hundred rows).
SymmetricEigenResult jacobi_eigendecompose(std::vector<double> matrix, int n);

}  // namespace supershape
