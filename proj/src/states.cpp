#include "qpt/states.hpp"

#include <cmath>
#include <stdexcept>

#include "qpt/eig.hpp"
#include "qpt/schwinger.hpp"

namespace qpt {

namespace {

constexpr double kPsdTol = 1e-9;
constexpr double kRealnessTol = 1e-10;

}  // namespace

DensityMatrix DensityMatrix::from_matrix(ComplexMatrix matrix,
                                         SystemShape shape,
                                         Validation validation) {
    if (shape.n_dim < 2) {
        throw std::invalid_argument("DensityMatrix: dimension must be >= 2");
    }
    if (matrix.dim() != shape.matrix_dim()) {
        throw std::invalid_argument(
            "DensityMatrix: matrix dimension does not match shape");
    }
    if (!all_finite(matrix)) {
        throw std::invalid_argument("DensityMatrix: entries must be finite");
    }
    if (!is_hermitian(matrix, kDefaultTol)) {
        throw std::invalid_argument("DensityMatrix: matrix is not Hermitian");
    }
    const Complex tr = trace(matrix);
    if (std::abs(tr - Complex{1.0, 0.0}) > kDefaultTol) {
        throw std::invalid_argument("DensityMatrix: trace must equal 1");
    }

    bool validated = false;
    switch (validation) {
        case Validation::none:
            break;
        case Validation::assume_psd:
            validated = true;
            break;
        case Validation::check_psd: {
            const EigenResult res = eig_hermitian(matrix);
            if (res.eigenvalues.front() < -kPsdTol) {
                throw std::invalid_argument(
                    "DensityMatrix: matrix is not positive semidefinite");
            }
            validated = true;
            break;
        }
    }
    return DensityMatrix(std::move(matrix), shape, validated);
}

DensityMatrix bell_state(int n_dim) {
    if (n_dim < 2) {
        throw std::invalid_argument("bell_state: dimension must be >= 2");
    }
    const int dim = n_dim * n_dim;
    ComplexMatrix m(dim);
    const double w = 1.0 / n_dim;
    for (int q = 0; q < n_dim; ++q) {
        for (int qp = 0; qp < n_dim; ++qp) {
            m.at(q * n_dim + q, qp * n_dim + qp) = Complex{w, 0.0};
        }
    }
    // Rank-one projector: positive by construction.
    return DensityMatrix::from_matrix(
        std::move(m), SystemShape{SystemKind::bipartite, n_dim},
        Validation::assume_psd);
}

DensityMatrix isotropic(int n_dim, double r, bool permissive) {
    if (n_dim < 2) {
        throw std::invalid_argument("isotropic: dimension must be >= 2");
    }
    const double n2 = static_cast<double>(n_dim) * n_dim;
    const double lo = permissive ? -1.0 / (n2 - 1.0) : 0.0;
    if (r < lo - 1e-12 || r > 1.0 + 1e-12) {
        throw std::domain_error("isotropic: mixing parameter r out of range");
    }

    const int dim = n_dim * n_dim;
    ComplexMatrix m(dim);
    const double bell_w = r / n_dim;
    const double mixed_w = (1.0 - r) / n2;
    for (int q = 0; q < n_dim; ++q) {
        for (int qp = 0; qp < n_dim; ++qp) {
            m.at(q * n_dim + q, qp * n_dim + qp) += Complex{bell_w, 0.0};
        }
    }
    for (int i = 0; i < dim; ++i) {
        m.at(i, i) += Complex{mixed_w, 0.0};
    }
    // Spectrum is r + (1-r)/N^2 on the Bell vector and (1-r)/N^2 elsewhere;
    // nonnegative on the whole accepted range.
    return DensityMatrix::from_matrix(
        std::move(m), SystemShape{SystemKind::bipartite, n_dim},
        Validation::assume_psd);
}

MomentumDistribution momentum_distribution_of(const ComplexMatrix& matrix,
                                              SystemShape shape) {
    if (matrix.dim() != shape.matrix_dim()) {
        throw std::invalid_argument(
            "momentum_distribution_of: matrix dimension does not match shape");
    }
    const int n = shape.n_dim;
    MomentumDistribution dist;
    dist.n_dim = n;
    dist.kind = shape.kind;

    if (shape.kind == SystemKind::single) {
        dist.values.resize(n);
        for (int p = 0; p < n; ++p) {
            Complex acc{0.0, 0.0};
            for (int a = 0; a < n; ++a) {
                for (int b = 0; b < n; ++b) {
                    acc += matrix.at(a, b) *
                           omega_power(n, static_cast<long long>(p) * (b - a));
                }
            }
            acc /= static_cast<double>(n);
            if (std::abs(acc.imag()) > kRealnessTol) {
                throw std::runtime_error(
                    "momentum_distribution: non-real probability (input not "
                    "Hermitian?)");
            }
            dist.values[p] = acc.real();
        }
        return dist;
    }

    dist.values.resize(static_cast<std::size_t>(n) * n);
    for (int p1 = 0; p1 < n; ++p1) {
        for (int p2 = 0; p2 < n; ++p2) {
            Complex acc{0.0, 0.0};
            for (int a1 = 0; a1 < n; ++a1) {
                for (int a2 = 0; a2 < n; ++a2) {
                    for (int b1 = 0; b1 < n; ++b1) {
                        for (int b2 = 0; b2 < n; ++b2) {
                            acc += matrix.at(a1 * n + a2, b1 * n + b2) *
                                   omega_power(
                                       n, static_cast<long long>(p1) * (b1 - a1) +
                                              static_cast<long long>(p2) *
                                                  (b2 - a2));
                        }
                    }
                }
            }
            acc /= static_cast<double>(n) * n;
            if (std::abs(acc.imag()) > kRealnessTol) {
                throw std::runtime_error(
                    "momentum_distribution: non-real probability (input not "
                    "Hermitian?)");
            }
            dist.values[static_cast<std::size_t>(p1) * n + p2] = acc.real();
        }
    }
    return dist;
}

MomentumDistribution momentum_distribution(const DensityMatrix& rho) {
    if (!rho.validated()) {
        throw std::invalid_argument(
            "momentum_distribution: state has not been validated");
    }
    return momentum_distribution_of(rho.matrix(), rho.shape());
}

std::vector<double> position_distribution(const DensityMatrix& rho) {
    const ComplexMatrix& m = rho.matrix();
    std::vector<double> diag(m.dim());
    for (int i = 0; i < m.dim(); ++i) {
        const Complex e = m.at(i, i);
        if (std::abs(e.imag()) > 1e-12) {
            throw std::runtime_error(
                "position_distribution: non-real diagonal entry");
        }
        diag[i] = e.real();
    }
    return diag;
}

}  // namespace qpt
