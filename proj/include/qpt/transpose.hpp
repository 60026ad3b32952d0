#pragma once

#include <optional>

#include "qpt/complex_matrix.hpp"
#include "qpt/states.hpp"

namespace qpt {

// Result of partially transposing a bipartite state. Hermitian and unit-trace
// whenever the source was, but possibly indefinite; a negative eigenvalue
// certifies entanglement of the source.
struct PartialTransposed {
    ComplexMatrix matrix;
    int n_dim = 0;
    bool hermitian = false;
    std::optional<double> min_eigenvalue;  // filled by solve_min_eigenvalue
};

// Transpose the particle-1 indices of a bipartite matrix:
//   out[(n1,n2),(m1,m2)] = in[(m1,n2),(n1,m2)]
// under the composite index (a, b) -> a*N + b. Defined on raw matrices so it
// applies to observables as well as states.
ComplexMatrix partial_transpose_1(const ComplexMatrix& a, int n_dim);

PartialTransposed pt_state(const DensityMatrix& rho);

// Minimum eigenvalue of the partially transposed matrix; cached on the
// struct. This is the costly step, so it only runs on demand.
double solve_min_eigenvalue(PartialTransposed& pt);

// Tr(rho * a).
Complex expectation(const ComplexMatrix& rho_matrix, const ComplexMatrix& a);

// Both routes to the expectation value of an observable in a partially
// transposed state: Tr(rho^T1 A) computed directly, and Tr(rho A^T1) which
// uses only the physical state.
struct Theorem1Result {
    Complex lhs;  // Tr(rho^T1 * A)
    Complex rhs;  // Tr(rho * A^T1)
    bool agree = false;
};

Theorem1Result theorem1_check(const DensityMatrix& rho, const ComplexMatrix& a);

}  // namespace qpt
