#include "qpt/witness.hpp"

#include <cmath>
#include <iostream>
#include <stdexcept>

#include "qpt/eig.hpp"
#include "qpt/schwinger.hpp"
#include "qpt/states.hpp"
#include "qpt/transpose.hpp"

namespace qpt {

namespace {

constexpr double kSecondMomentImagTol = 1e-8;
constexpr int kMatrixOracleMaxDim = 12;
constexpr int kPptMaxDim = 50;
constexpr int kPptWarnDim = 12;

void check_r_range(int n_dim, double r) {
    const double n2 = static_cast<double>(n_dim) * n_dim;
    if (r < -1.0 / (n2 - 1.0) - 1e-12 || r > 1.0 + 1e-12) {
        throw std::domain_error("witness moments: r out of accepted range");
    }
}

double real_second_moment(Complex value) {
    if (std::abs(value.imag()) > kSecondMomentImagTol) {
        throw std::runtime_error("witness moments: second moment not real");
    }
    return value.real();
}

}  // namespace

WitnessSpec WitnessSpec::all_ones(int n_dim) {
    if (n_dim < 2) {
        throw std::invalid_argument("WitnessSpec: dimension must be >= 2");
    }
    WitnessSpec spec;
    spec.n_dim = n_dim;
    spec.coeffs.assign(static_cast<std::size_t>(n_dim) * n_dim,
                       Complex{1.0, 0.0});
    return spec;
}

ComplexMatrix build_omega(const WitnessSpec& spec) {
    const int n = spec.n_dim;
    const SchwingerPair pair = build_schwinger(n);
    ComplexMatrix omega(n * n);
    for (int m = 0; m < n; ++m) {
        for (int l = 0; l < n; ++l) {
            const Complex x = spec.coeff(m, l);
            if (x == Complex{0.0, 0.0}) continue;
            const ComplexMatrix mono = monomial(pair, m, l);
            omega = add(omega, scale(x, kron(mono, adjoint(mono))));
        }
    }
    return omega;
}

std::pair<ComplexMatrix, ComplexMatrix> split_hk(const ComplexMatrix& omega) {
    const ComplexMatrix dag = adjoint(omega);
    ComplexMatrix h = scale(Complex{0.5, 0.0}, add(omega, dag));
    ComplexMatrix k = scale(Complex{0.0, -0.5}, sub(omega, dag));
    return {std::move(h), std::move(k)};
}

MomentReport moments_original_closed(const WitnessSpec& spec, double r) {
    const int n = spec.n_dim;
    check_r_range(n, r);

    // <Omega> = r sum_l x_{0l} [+ r sum_l x_{N/2,l} omega^{l N/2} for even N]
    //           + (1-r) x_{00}
    Complex mean{0.0, 0.0};
    for (int l = 0; l < n; ++l) mean += spec.coeff(0, l);
    if (n % 2 == 0) {
        const int h = n / 2;
        for (int l = 0; l < n; ++l) {
            mean += spec.coeff(h, l) *
                    omega_power(n, static_cast<long long>(l) * h);
        }
    }
    mean = r * mean + (1.0 - r) * spec.coeff(0, 0);

    // <Omega Omega^dagger> = r sum_{m,l,l'} x_{ml} x*_{ml'} omega^{(l'-l)m}
    //                        + (1-r) sum |x_{ml}|^2 + even-N coupling terms.
    // The (l'-l)m exponent comes from reducing the Bell-state expectation to
    // (1/N) Tr[B C^T] = omega^{l(m-m') - m'(l-l')} delta_{2(m-m'), 0 mod N};
    // the dense-matrix oracle pins this sign.
    Complex bell_part{0.0, 0.0};
    double sum_sq = 0.0;
    for (int m = 0; m < n; ++m) {
        for (int l = 0; l < n; ++l) {
            const Complex x = spec.coeff(m, l);
            sum_sq += std::norm(x);
            for (int lp = 0; lp < n; ++lp) {
                bell_part += x * std::conj(spec.coeff(m, lp)) *
                             omega_power(n, static_cast<long long>(lp - l) * m);
            }
        }
    }
    if (n % 2 == 0) {
        // Couples x_{ml} to x_{m', l'} with m' = m + N/2 (mod N), the single
        // residue class solving 2(m - m') = 0 besides m' = m. Phase
        // omega^{lm + (l' - 2l)(m + N/2)} is invariant under shifting the
        // representative by N.
        const int h = n / 2;
        Complex even_part{0.0, 0.0};
        for (int m = 0; m < n; ++m) {
            const int mp = (m + h) % n;
            for (int l = 0; l < n; ++l) {
                const Complex x = spec.coeff(m, l);
                for (int lp = 0; lp < n; ++lp) {
                    const long long expo =
                        static_cast<long long>(l) * m +
                        static_cast<long long>(lp - 2 * l) * (m + h);
                    even_part +=
                        x * std::conj(spec.coeff(mp, lp)) * omega_power(n, expo);
                }
            }
        }
        bell_part += even_part;
    }

    MomentReport report;
    report.basis = MomentBasis::original;
    report.method = MomentMethod::closed_form;
    report.mean = mean;
    report.second = real_second_moment(r * bell_part + (1.0 - r) * sum_sq);
    report.variance = report.second - std::norm(mean);
    return report;
}

MomentReport moments_pt_closed(const WitnessSpec& spec, double r) {
    const int n = spec.n_dim;
    check_r_range(n, r);

    Complex mean{0.0, 0.0};
    for (int m = 0; m < n; ++m) {
        for (int l = 0; l < n; ++l) mean += spec.coeff(m, l);
    }
    mean = r * mean + (1.0 - r) * spec.coeff(0, 0);

    Complex kernel{0.0, 0.0};
    double sum_sq = 0.0;
    for (int m = 0; m < n; ++m) {
        for (int l = 0; l < n; ++l) {
            const Complex x = spec.coeff(m, l);
            sum_sq += std::norm(x);
            for (int mp = 0; mp < n; ++mp) {
                for (int lp = 0; lp < n; ++lp) {
                    kernel += x * std::conj(spec.coeff(mp, lp)) *
                              omega_power(n,
                                          static_cast<long long>(m) * lp -
                                              static_cast<long long>(mp) * l);
                }
            }
        }
    }

    MomentReport report;
    report.basis = MomentBasis::partially_transposed;
    report.method = MomentMethod::closed_form;
    report.mean = mean;
    report.second = real_second_moment(r * kernel + (1.0 - r) * sum_sq);
    report.variance = report.second - std::norm(mean);
    return report;
}

MomentReport moments_matrix(const WitnessSpec& spec, double r,
                            MomentBasis basis) {
    const int n = spec.n_dim;
    if (n > kMatrixOracleMaxDim) {
        throw std::invalid_argument(
            "moments_matrix: dense evaluation limited to N <= 12");
    }
    check_r_range(n, r);

    const ComplexMatrix omega = build_omega(spec);
    const DensityMatrix rho = isotropic(n, r, /*permissive=*/true);
    const ComplexMatrix state =
        basis == MomentBasis::original
            ? rho.matrix()
            : partial_transpose_1(rho.matrix(), n);

    MomentReport report;
    report.basis = basis;
    report.method = MomentMethod::matrix;
    report.mean = expectation(state, omega);
    report.second = real_second_moment(
        expectation(state, matmul(omega, adjoint(omega))));
    report.variance = report.second - std::norm(report.mean);
    return report;
}

double r0_threshold(int n_dim) {
    if (n_dim < 2) {
        throw std::invalid_argument("r0_threshold: dimension must be >= 2");
    }
    const double n2 = static_cast<double>(n_dim) * n_dim;

    // S = sum_{m,l,m',l'} omega^{m l' - m' l}, evaluated by the full O(N^4)
    // loop; its analytic value N^2 is asserted by tests, not assumed here.
    Complex s_acc{0.0, 0.0};
    for (int m = 0; m < n_dim; ++m) {
        for (int l = 0; l < n_dim; ++l) {
            for (int mp = 0; mp < n_dim; ++mp) {
                for (int lp = 0; lp < n_dim; ++lp) {
                    s_acc += omega_power(n_dim,
                                         static_cast<long long>(m) * lp -
                                             static_cast<long long>(mp) * l);
                }
            }
        }
    }
    if (std::abs(s_acc.imag()) > 1e-8) {
        throw std::runtime_error("r0_threshold: trace kernel sum not real");
    }
    const double s = s_acc.real();

    // Var(r) = r S + (1-r) N^2 - [r N^2 + (1-r)]^2 = a r^2 + b r + c.
    const double a = -(n2 - 1.0) * (n2 - 1.0);
    const double b = s - n2 - 2.0 * (n2 - 1.0);
    const double c = n2 - 1.0;
    const double disc = b * b - 4.0 * a * c;
    if (disc < 0.0) {
        throw std::runtime_error("r0_threshold: no real root");
    }
    const double sq = std::sqrt(disc);
    const double qq = -0.5 * (b + std::copysign(sq, b));
    const double root1 = qq / a;
    const double root2 = c / qq;

    double analytic = -1.0;
    for (double root : {root1, root2}) {
        if (root > 0.0 && root < 1.0) analytic = root;
    }
    if (analytic < 0.0) {
        throw std::runtime_error("r0_threshold: no root in (0, 1)");
    }

    // Bisection cross-check on the same variance expression.
    auto var_at = [&](double r) {
        const double u = r * n2 + (1.0 - r);
        return r * s + (1.0 - r) * n2 - u * u;
    };
    double lo = 0.0;
    double hi = 1.0;
    if (var_at(lo) <= 0.0 || var_at(hi) >= 0.0) {
        throw std::runtime_error("r0_threshold: no sign change on [0, 1]");
    }
    while (hi - lo > 1e-13) {
        const double mid = 0.5 * (lo + hi);
        if (var_at(mid) > 0.0) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    const double bisected = 0.5 * (lo + hi);
    if (std::abs(bisected - analytic) > 5e-12) {
        throw std::runtime_error(
            "r0_threshold: analytic and bisected roots disagree");
    }
    return analytic;
}

double ppt_min_eigenvalue(int n_dim, double r) {
    if (n_dim < 2 || n_dim > kPptMaxDim) {
        throw std::invalid_argument(
            "ppt_min_eigenvalue: dimension must be in [2, 50]");
    }
    if (n_dim > kPptWarnDim) {
        std::cerr << "ppt_min_eigenvalue: N = " << n_dim
                  << " implies a dense eigensolve of dimension "
                  << n_dim * n_dim << "; this may take a while\n";
    }
    const DensityMatrix rho = isotropic(n_dim, r, /*permissive=*/true);
    PartialTransposed pt = pt_state(rho);
    return solve_min_eigenvalue(pt);
}

}  // namespace qpt
