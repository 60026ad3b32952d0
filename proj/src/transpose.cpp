#include "qpt/transpose.hpp"

#include <cmath>
#include <stdexcept>

#include "qpt/eig.hpp"

namespace qpt {

ComplexMatrix partial_transpose_1(const ComplexMatrix& a, int n_dim) {
    if (n_dim < 2 || a.dim() != n_dim * n_dim) {
        throw std::invalid_argument(
            "partial_transpose_1: matrix dimension must be n_dim^2");
    }
    ComplexMatrix out(a.dim());
    for (int n1 = 0; n1 < n_dim; ++n1) {
        for (int n2 = 0; n2 < n_dim; ++n2) {
            for (int m1 = 0; m1 < n_dim; ++m1) {
                for (int m2 = 0; m2 < n_dim; ++m2) {
                    out.at(n1 * n_dim + n2, m1 * n_dim + m2) =
                        a.at(m1 * n_dim + n2, n1 * n_dim + m2);
                }
            }
        }
    }
    return out;
}

PartialTransposed pt_state(const DensityMatrix& rho) {
    if (rho.shape().kind != SystemKind::bipartite) {
        throw std::invalid_argument("pt_state: state must be bipartite");
    }
    PartialTransposed pt;
    pt.n_dim = rho.shape().n_dim;
    pt.matrix = partial_transpose_1(rho.matrix(), pt.n_dim);
    pt.hermitian = is_hermitian(pt.matrix, kDefaultTol);
    return pt;
}

double solve_min_eigenvalue(PartialTransposed& pt) {
    if (!pt.min_eigenvalue) {
        const EigenResult res = eig_hermitian(pt.matrix);
        pt.min_eigenvalue = res.eigenvalues.front();
    }
    return *pt.min_eigenvalue;
}

Complex expectation(const ComplexMatrix& rho_matrix, const ComplexMatrix& a) {
    if (rho_matrix.dim() != a.dim()) {
        throw std::invalid_argument("expectation: dimension mismatch");
    }
    // Tr(rho * a) without forming the product.
    Complex acc{0.0, 0.0};
    const int n = a.dim();
    for (int i = 0; i < n; ++i) {
        for (int k = 0; k < n; ++k) {
            acc += rho_matrix.at(i, k) * a.at(k, i);
        }
    }
    return acc;
}

Theorem1Result theorem1_check(const DensityMatrix& rho,
                              const ComplexMatrix& a) {
    if (rho.shape().kind != SystemKind::bipartite) {
        throw std::invalid_argument("theorem1_check: state must be bipartite");
    }
    if (a.dim() != rho.matrix().dim()) {
        throw std::invalid_argument("theorem1_check: dimension mismatch");
    }
    if (!is_hermitian(a, kDefaultTol)) {
        throw std::invalid_argument(
            "theorem1_check: observable must be Hermitian");
    }
    const int n = rho.shape().n_dim;
    Theorem1Result result;
    result.lhs = expectation(partial_transpose_1(rho.matrix(), n), a);
    result.rhs = expectation(rho.matrix(), partial_transpose_1(a, n));
    result.agree = std::abs(result.lhs - result.rhs) <= kDefaultTol;
    return result;
}

}  // namespace qpt
