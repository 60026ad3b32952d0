#pragma once

#include <vector>

#include "qpt/complex_matrix.hpp"

namespace qpt {

struct EigenResult {
    std::vector<double> eigenvalues;  // sorted ascending
    ComplexMatrix eigenvectors;       // column k pairs with eigenvalues[k]
};

// Full spectral decomposition of a Hermitian matrix by cyclic Jacobi
// rotations. Converged when the off-diagonal Frobenius norm drops below
// 1e-12 * dim; throws after 100 sweeps without convergence.
EigenResult eig_hermitian(const ComplexMatrix& a,
                          double hermiticity_tol = kDefaultTol);

}  // namespace qpt
