#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "qpt/schwinger.hpp"
#include "qpt/states.hpp"
#include "qpt/transpose.hpp"
#include "support/random_states.hpp"

using namespace qpt;
using qpt::testing::random_density;

namespace {

// |p=0> = (1/sqrt(N)) sum_q |q>, as a single-particle density matrix.
DensityMatrix zero_momentum_state(int n) {
    ComplexMatrix m(n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) m.at(i, j) = Complex{1.0 / n, 0.0};
    }
    return DensityMatrix::from_matrix(m, SystemShape{SystemKind::single, n},
                                      Validation::check_psd);
}

}  // namespace

TEST_CASE("bell state entries for two qubits") {
    const DensityMatrix rho = bell_state(2);
    const ComplexMatrix& m = rho.matrix();
    for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 4; ++j) {
            const bool corner = (i == 0 || i == 3) && (j == 0 || j == 3);
            CHECK(std::abs(m.at(i, j) - Complex{corner ? 0.5 : 0.0, 0.0}) <
                  1e-15);
        }
    }
}

TEST_CASE("bell state is pure and normalized") {
    for (int n : {2, 3, 5}) {
        const DensityMatrix rho = bell_state(n);
        CHECK(std::abs(trace(rho.matrix()) - Complex{1.0, 0.0}) < 1e-12);
        const Complex purity = trace(matmul(rho.matrix(), rho.matrix()));
        CHECK(std::abs(purity - Complex{1.0, 0.0}) < 1e-12);
        CHECK(rho.validated());
    }
}

TEST_CASE("isotropic state endpoints") {
    for (int n : {2, 3}) {
        CHECK(approx_equal(isotropic(n, 1.0).matrix(), bell_state(n).matrix(),
                           1e-15));
        CHECK(approx_equal(
            isotropic(n, 0.0).matrix(),
            scale(Complex{1.0 / (n * n), 0.0},
                  ComplexMatrix::identity(n * n)),
            1e-15));
    }
}

TEST_CASE("isotropic matrix elements") {
    // <00|rho|11> picks up only the r/N term.
    const DensityMatrix rho = isotropic(2, 0.5);
    CHECK(std::abs(rho.matrix().at(0, 3) - Complex{0.25, 0.0}) < 1e-15);

    // Entry-by-entry rebuild from the defining deltas, summed for the trace.
    const int n = 3;
    const double r = 0.5;
    const DensityMatrix rho3 = isotropic(n, r);
    Complex trace_acc{0.0, 0.0};
    for (int q1 = 0; q1 < n; ++q1) {
        for (int q2 = 0; q2 < n; ++q2) {
            for (int q1p = 0; q1p < n; ++q1p) {
                for (int q2p = 0; q2p < n; ++q2p) {
                    const double want =
                        (q1 == q2 && q1p == q2p ? r / n : 0.0) +
                        (q1 == q1p && q2 == q2p ? (1.0 - r) / (n * n) : 0.0);
                    const Complex got =
                        rho3.matrix().at(q1 * n + q2, q1p * n + q2p);
                    CHECK(std::abs(got - Complex{want, 0.0}) < 1e-15);
                    if (q1 == q1p && q2 == q2p) trace_acc += got;
                }
            }
        }
    }
    CHECK(std::abs(trace_acc - Complex{1.0, 0.0}) < 1e-12);
    CHECK(std::abs(trace(rho3.matrix()) - trace_acc) < 1e-12);
}

TEST_CASE("isotropic r-range validation") {
    CHECK_THROWS_AS(isotropic(3, -0.01), std::domain_error);
    CHECK_THROWS_AS(isotropic(3, 1.01), std::domain_error);
    // Permissive mode accepts the full positivity range [-1/(N^2-1), 1].
    CHECK_NOTHROW(isotropic(3, -1.0 / 8.0, /*permissive=*/true));
    CHECK_THROWS_AS(isotropic(3, -1.0 / 8.0 - 1e-6, /*permissive=*/true),
                    std::domain_error);
}

TEST_CASE("isotropic states are positive across the accepted range") {
    for (int n : {2, 3, 5}) {
        for (double r : {0.0, 0.25, 0.5, 0.75, 1.0}) {
            const DensityMatrix rho = isotropic(n, r);
            CHECK_NOTHROW(DensityMatrix::from_matrix(
                rho.matrix(), rho.shape(), Validation::check_psd));
        }
    }
}

TEST_CASE("state validation catches defects") {
    // Not unit trace.
    CHECK_THROWS_AS(
        DensityMatrix::from_matrix(ComplexMatrix::identity(4),
                                   SystemShape{SystemKind::bipartite, 2},
                                   Validation::none),
        std::invalid_argument);
    // Hermitian, unit trace, but indefinite.
    ComplexMatrix m = ComplexMatrix(4);
    m.at(0, 0) = Complex{1.5, 0.0};
    m.at(1, 1) = Complex{-0.5, 0.0};
    CHECK_THROWS_AS(
        DensityMatrix::from_matrix(m, SystemShape{SystemKind::bipartite, 2},
                                   Validation::check_psd),
        std::invalid_argument);
    // Same matrix passes without the positivity check, but stays unvalidated.
    const DensityMatrix rho = DensityMatrix::from_matrix(
        m, SystemShape{SystemKind::bipartite, 2}, Validation::none);
    CHECK_FALSE(rho.validated());
    CHECK_THROWS_AS(momentum_distribution(rho), std::invalid_argument);
}

TEST_CASE("momentum distribution of the maximally mixed state is flat") {
    const int n = 3;
    const DensityMatrix rho = DensityMatrix::from_matrix(
        scale(Complex{1.0 / n, 0.0}, ComplexMatrix::identity(n)),
        SystemShape{SystemKind::single, n}, Validation::assume_psd);
    const MomentumDistribution dist = momentum_distribution(rho);
    for (int p = 0; p < n; ++p) {
        CHECK(dist.at(p) == doctest::Approx(1.0 / n).epsilon(1e-12));
    }
}

TEST_CASE("momentum distribution of a momentum eigenstate is a point mass") {
    const MomentumDistribution dist =
        momentum_distribution(zero_momentum_state(3));
    CHECK(dist.at(0) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(std::abs(dist.at(1)) < 1e-12);
    CHECK(std::abs(dist.at(2)) < 1e-12);
}

TEST_CASE("bell state momenta are anticorrelated") {
    // P(p1, p2) = (1/3) on p1 + p2 = 0 (mod 3), zero elsewhere.
    const MomentumDistribution dist = momentum_distribution(bell_state(3));
    for (int p1 = 0; p1 < 3; ++p1) {
        for (int p2 = 0; p2 < 3; ++p2) {
            const double want = ((p1 + p2) % 3 == 0) ? 1.0 / 3.0 : 0.0;
            CHECK(dist.at(p1, p2) == doctest::Approx(want).epsilon(1e-10));
        }
    }
}

TEST_CASE("momentum distributions are normalized and nonnegative") {
    std::mt19937_64 rng(101);
    for (int n : {2, 3, 5}) {
        for (int trial = 0; trial < 5; ++trial) {
            const DensityMatrix rho =
                random_density(rng, SystemShape{SystemKind::bipartite, n});
            const MomentumDistribution dist = momentum_distribution(rho);
            double sum = 0.0;
            for (double v : dist.values) {
                CHECK(v >= -1e-12);
                sum += v;
            }
            CHECK(sum == doctest::Approx(1.0).epsilon(1e-9));
        }
    }
}

TEST_CASE("partial transposition flips the sign of p1") {
    std::mt19937_64 rng(103);
    for (int n : {3, 5, 7}) {
        for (int trial = 0; trial < 5; ++trial) {
            const SystemShape shape{SystemKind::bipartite, n};
            const DensityMatrix rho = random_density(rng, shape);
            const MomentumDistribution orig = momentum_distribution(rho);
            const MomentumDistribution flipped =
                momentum_distribution_of(pt_state(rho).matrix, shape);
            for (int p1 = 0; p1 < n; ++p1) {
                for (int p2 = 0; p2 < n; ++p2) {
                    CHECK(std::abs(flipped.at(p1, p2) -
                                   orig.at((n - p1) % n, p2)) < 1e-10);
                }
            }
        }
    }
}

TEST_CASE("transposition flips the sign of single-particle momentum") {
    std::mt19937_64 rng(107);
    for (int n : {3, 5}) {
        for (int trial = 0; trial < 5; ++trial) {
            const SystemShape shape{SystemKind::single, n};
            const DensityMatrix rho = random_density(rng, shape);
            const MomentumDistribution orig = momentum_distribution(rho);
            const MomentumDistribution flipped =
                momentum_distribution_of(transpose(rho.matrix()), shape);
            for (int p = 0; p < n; ++p) {
                CHECK(std::abs(flipped.at(p) - orig.at((n - p) % n)) < 1e-10);
            }
        }
    }
}

// For N = 2 the momentum labels satisfy |p> = |-p>, so the sign flip is the
// identity map and the property is vacuous there, not false.
TEST_CASE("momentum sign flip at N = 2" * doctest::skip()) {
    CHECK(true);
}

TEST_CASE("position distribution examples") {
    const int n = 3;
    const DensityMatrix mixed = isotropic(n, 0.0);
    for (double v : position_distribution(mixed)) {
        CHECK(v == doctest::Approx(1.0 / (n * n)).epsilon(1e-12));
    }

    const std::vector<double> bell_diag = position_distribution(bell_state(2));
    CHECK(bell_diag[0] == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(std::abs(bell_diag[1]) < 1e-15);
    CHECK(std::abs(bell_diag[2]) < 1e-15);
    CHECK(bell_diag[3] == doctest::Approx(0.5).epsilon(1e-12));

    // Diagonal entries with q1 = q2 carry r/N + (1-r)/N^2.
    const std::vector<double> iso_diag =
        position_distribution(isotropic(3, 0.5));
    for (int q = 0; q < 3; ++q) {
        CHECK(iso_diag[q * 3 + q] ==
              doctest::Approx(0.5 / 3.0 + 0.5 / 9.0).epsilon(1e-12));
    }
    double sum = 0.0;
    for (double v : iso_diag) sum += v;
    CHECK(sum == doctest::Approx(1.0).epsilon(1e-12));
}
