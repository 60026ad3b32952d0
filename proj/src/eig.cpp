#include "qpt/eig.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace qpt {

namespace {

double offdiag_frobenius(const ComplexMatrix& a) {
    const int n = a.dim();
    double sum = 0.0;
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (i == j) continue;
            sum += std::norm(a.at(i, j));
        }
    }
    return std::sqrt(sum);
}

// One complex Jacobi rotation zeroing a(p,q). The 2x2 Hermitian block
// [[app, apq], [conj(apq), aqq]] is diagonalized by
//   U = [[c, -e^{i phi} s], [e^{-i phi} s, c]]
// with phi = arg(apq) and tan(2t) = 2|apq| / (app - aqq).
void rotate(ComplexMatrix& a, ComplexMatrix& v, int p, int q) {
    const Complex apq = a.at(p, q);
    const double mag = std::abs(apq);
    if (mag == 0.0) return;

    const double app = a.at(p, p).real();
    const double aqq = a.at(q, q).real();
    const double theta = 0.5 * std::atan2(2.0 * mag, app - aqq);
    const double c = std::cos(theta);
    const double s = std::sin(theta);
    const Complex phase = apq / mag;          // e^{i phi}
    const Complex ps = phase * s;             // e^{i phi} s
    const Complex cps = std::conj(ps);        // e^{-i phi} s

    const int n = a.dim();

    // Rows: a <- U^dagger a.
    for (int j = 0; j < n; ++j) {
        const Complex apj = a.at(p, j);
        const Complex aqj = a.at(q, j);
        a.at(p, j) = c * apj + ps * aqj;
        a.at(q, j) = -cps * apj + c * aqj;
    }
    // Columns: a <- a U.
    for (int i = 0; i < n; ++i) {
        const Complex aip = a.at(i, p);
        const Complex aiq = a.at(i, q);
        a.at(i, p) = c * aip + cps * aiq;
        a.at(i, q) = -ps * aip + c * aiq;
    }
    // Accumulate eigenvectors: v <- v U.
    for (int i = 0; i < n; ++i) {
        const Complex vip = v.at(i, p);
        const Complex viq = v.at(i, q);
        v.at(i, p) = c * vip + cps * viq;
        v.at(i, q) = -ps * vip + c * viq;
    }

    // The pivot is zero by construction; pin it to kill rounding residue.
    a.at(p, q) = Complex{0.0, 0.0};
    a.at(q, p) = Complex{0.0, 0.0};
    a.at(p, p) = Complex{a.at(p, p).real(), 0.0};
    a.at(q, q) = Complex{a.at(q, q).real(), 0.0};
}

}  // namespace

EigenResult eig_hermitian(const ComplexMatrix& input, double hermiticity_tol) {
    if (!is_hermitian(input, hermiticity_tol)) {
        throw std::invalid_argument("eig_hermitian: matrix is not Hermitian");
    }
    const int n = input.dim();
    ComplexMatrix a = input;
    ComplexMatrix v = ComplexMatrix::identity(n);

    const double threshold = 1e-12 * n;
    constexpr int kMaxSweeps = 100;

    bool converged = offdiag_frobenius(a) < threshold;
    for (int sweep = 0; sweep < kMaxSweeps && !converged; ++sweep) {
        for (int p = 0; p < n - 1; ++p) {
            for (int q = p + 1; q < n; ++q) {
                rotate(a, v, p, q);
            }
        }
        converged = offdiag_frobenius(a) < threshold;
    }
    if (!converged) {
        throw std::runtime_error("eig_hermitian: no convergence in 100 sweeps");
    }

    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int i, int j) {
        return a.at(i, i).real() < a.at(j, j).real();
    });

    EigenResult result;
    result.eigenvalues.resize(n);
    result.eigenvectors = ComplexMatrix(n);
    for (int k = 0; k < n; ++k) {
        result.eigenvalues[k] = a.at(order[k], order[k]).real();
        for (int i = 0; i < n; ++i) {
            result.eigenvectors.at(i, k) = v.at(i, order[k]);
        }
    }
    return result;
}

}  // namespace qpt
