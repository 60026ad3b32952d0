#include "qpt/wigner.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

#include "qpt/schwinger.hpp"

namespace qpt {

namespace {

constexpr double kRealnessTol = 1e-10;

void require_odd_prime(int n) {
    if (!is_odd_prime(n)) {
        throw std::invalid_argument("Wigner function: N must be an odd prime");
    }
}

// All (q', q'') with q' + q'' == 2q (mod N), found by testing the congruence
// directly. Exactly N pairs per q.
std::vector<std::pair<int, int>> line_pairs(int n, int q) {
    std::vector<std::pair<int, int>> pairs;
    pairs.reserve(n);
    const int target = (2 * q) % n;
    for (int qp = 0; qp < n; ++qp) {
        for (int qpp = 0; qpp < n; ++qpp) {
            if ((qp + qpp) % n == target) pairs.emplace_back(qp, qpp);
        }
    }
    return pairs;
}

double real_or_throw(Complex value) {
    if (std::abs(value.imag()) > kRealnessTol) {
        throw std::runtime_error(
            "Wigner function: non-real value (input not Hermitian?)");
    }
    return value.real();
}

}  // namespace

bool is_odd_prime(int n) {
    if (n < 3 || n % 2 == 0) return false;
    for (int d = 3; static_cast<long long>(d) * d <= n; d += 2) {
        if (n % d == 0) return false;
    }
    return true;
}

WignerGrid wigner_two(const ComplexMatrix& rho_matrix, int n_dim) {
    require_odd_prime(n_dim);
    if (rho_matrix.dim() != n_dim * n_dim) {
        throw std::invalid_argument(
            "wigner_two: matrix dimension must be n_dim^2");
    }
    const int n = n_dim;

    std::vector<Complex> w(n);
    for (int k = 0; k < n; ++k) w[k] = omega_power(n, k);
    auto wpow = [&](long long k) {
        long long r = k % n;
        if (r < 0) r += n;
        return w[static_cast<int>(r)];
    };

    std::vector<std::vector<std::pair<int, int>>> pairs(n);
    for (int q = 0; q < n; ++q) pairs[q] = line_pairs(n, q);

    WignerGrid grid;
    grid.n_dim = n;
    grid.kind = SystemKind::bipartite;
    grid.values.resize(static_cast<std::size_t>(n) * n * n * n);

    std::size_t idx = 0;
    for (int q1 = 0; q1 < n; ++q1) {
        for (int q2 = 0; q2 < n; ++q2) {
            for (int p1 = 0; p1 < n; ++p1) {
                for (int p2 = 0; p2 < n; ++p2) {
                    Complex acc{0.0, 0.0};
                    for (const auto& [q1p, q1pp] : pairs[q1]) {
                        const Complex w1 =
                            wpow(static_cast<long long>(p1) * (q1pp - q1p));
                        for (const auto& [q2p, q2pp] : pairs[q2]) {
                            acc += rho_matrix.at(q1p * n + q2p,
                                                 q1pp * n + q2pp) *
                                   w1 *
                                   wpow(static_cast<long long>(p2) *
                                        (q2pp - q2p));
                        }
                    }
                    grid.values[idx++] = real_or_throw(acc);
                }
            }
        }
    }
    return grid;
}

WignerGrid wigner_two(const DensityMatrix& rho) {
    if (rho.shape().kind != SystemKind::bipartite) {
        throw std::invalid_argument("wigner_two: state must be bipartite");
    }
    return wigner_two(rho.matrix(), rho.shape().n_dim);
}

WignerGrid wigner_two(const PartialTransposed& pt) {
    return wigner_two(pt.matrix, pt.n_dim);
}

WignerGrid wigner_one(const ComplexMatrix& rho_matrix) {
    const int n = rho_matrix.dim();
    require_odd_prime(n);

    std::vector<std::vector<std::pair<int, int>>> pairs(n);
    for (int q = 0; q < n; ++q) pairs[q] = line_pairs(n, q);

    WignerGrid grid;
    grid.n_dim = n;
    grid.kind = SystemKind::single;
    grid.values.resize(static_cast<std::size_t>(n) * n);

    std::size_t idx = 0;
    for (int q = 0; q < n; ++q) {
        for (int p = 0; p < n; ++p) {
            Complex acc{0.0, 0.0};
            for (const auto& [qp, qpp] : pairs[q]) {
                acc += rho_matrix.at(qp, qpp) *
                       omega_power(n, static_cast<long long>(p) * (qpp - qp));
            }
            grid.values[idx++] = real_or_throw(acc);
        }
    }
    return grid;
}

WignerGrid wigner_one(const DensityMatrix& rho) {
    if (rho.shape().kind != SystemKind::single) {
        throw std::invalid_argument("wigner_one: state must be single-particle");
    }
    return wigner_one(rho.matrix());
}

WignerGrid reflect_p1(const WignerGrid& grid) {
    const int n = grid.n_dim;
    WignerGrid out;
    out.n_dim = n;
    out.kind = grid.kind;
    out.values.resize(grid.values.size());

    if (grid.kind == SystemKind::single) {
        for (int q = 0; q < n; ++q) {
            for (int p = 0; p < n; ++p) {
                out.values[static_cast<std::size_t>(q) * n + p] =
                    grid.at(q, (n - p) % n);
            }
        }
        return out;
    }

    std::size_t idx = 0;
    for (int q1 = 0; q1 < n; ++q1) {
        for (int q2 = 0; q2 < n; ++q2) {
            for (int p1 = 0; p1 < n; ++p1) {
                for (int p2 = 0; p2 < n; ++p2) {
                    out.values[idx++] = grid.at(q1, q2, (n - p1) % n, p2);
                }
            }
        }
    }
    return out;
}

}  // namespace qpt
