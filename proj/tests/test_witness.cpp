#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "qpt/pauli_demo.hpp"
#include "qpt/schwinger.hpp"
#include "qpt/witness.hpp"
#include "support/random_states.hpp"

using namespace qpt;

namespace {

WitnessSpec random_spec(std::mt19937_64& rng, int n) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    WitnessSpec spec;
    spec.n_dim = n;
    spec.coeffs.reserve(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n * n; ++i) {
        spec.coeffs.push_back(Complex{gauss(rng), gauss(rng)});
    }
    return spec;
}

void check_reports_close(const MomentReport& a, const MomentReport& b,
                         double tol) {
    CHECK(std::abs(a.mean - b.mean) <= tol);
    CHECK(std::abs(a.second - b.second) <= tol);
    CHECK(std::abs(a.variance - b.variance) <= tol);
}

}  // namespace

TEST_CASE("omega operator from a single coefficient is the identity") {
    WitnessSpec spec;
    spec.n_dim = 3;
    spec.coeffs.assign(9, Complex{0.0, 0.0});
    spec.coeffs[0] = Complex{1.0, 0.0};
    CHECK(approx_equal(build_omega(spec), ComplexMatrix::identity(9), 1e-12));
}

TEST_CASE("all-ones omega at N = 2 is I plus the Pauli exchange observable") {
    const ComplexMatrix omega = build_omega(WitnessSpec::all_ones(2));
    const ComplexMatrix expected =
        add(ComplexMatrix::identity(4), pauli_dot_product());
    CHECK(approx_equal(omega, expected, 1e-12));
}

TEST_CASE("only the (0,0) monomial contributes to the trace of omega") {
    const ComplexMatrix omega = build_omega(WitnessSpec::all_ones(3));
    CHECK(std::abs(trace(omega) - Complex{9.0, 0.0}) < 1e-10);
}

TEST_CASE("hermitian split") {
    std::mt19937_64 rng(401);
    const ComplexMatrix h_in = qpt::testing::random_hermitian(rng, 4);
    auto [h1, k1] = split_hk(h_in);
    CHECK(approx_equal(h1, h_in, 1e-13));
    CHECK(approx_equal(k1, ComplexMatrix(4), 1e-13));

    const ComplexMatrix anti = scale(Complex{0.0, 1.0}, h_in);
    auto [h2, k2] = split_hk(anti);
    CHECK(approx_equal(h2, ComplexMatrix(4), 1e-13));
    CHECK(approx_equal(k2, h_in, 1e-13));

    const ComplexMatrix omega = build_omega(random_spec(rng, 3));
    auto [h, k] = split_hk(omega);
    CHECK(is_hermitian(h, 1e-12));
    CHECK(is_hermitian(k, 1e-12));
    CHECK(max_abs_diff(add(h, scale(Complex{0.0, 1.0}, k)), omega) < 1e-13);
}

TEST_CASE("all-ones closed-form moments in the original state") {
    for (int n : {2, 3, 4, 5}) {
        const WitnessSpec spec = WitnessSpec::all_ones(n);
        for (double r : {0.0, 0.3, 1.0}) {
            const MomentReport rep = moments_original_closed(spec, r);
            CHECK(std::abs(rep.mean - Complex{r * n + (1.0 - r), 0.0}) <
                  1e-10);
            CHECK(rep.second ==
                  doctest::Approx(static_cast<double>(n) * n).epsilon(1e-10));
            CHECK(rep.variance == doctest::Approx(rep.second -
                                                  std::norm(rep.mean))
                                      .epsilon(1e-12));
        }
        CHECK(moments_original_closed(spec, 1.0).variance ==
              doctest::Approx(0.0).epsilon(1e-10));
    }
}

TEST_CASE("all-ones closed-form moments in the PT state") {
    for (int n : {2, 3, 5}) {
        const WitnessSpec spec = WitnessSpec::all_ones(n);
        const double n2 = static_cast<double>(n) * n;
        for (double r : {0.0, 0.5, 1.0}) {
            const MomentReport rep = moments_pt_closed(spec, r);
            // Trace kernel sums to N^2 for all-ones coefficients.
            const double want_var =
                r * n2 + (1.0 - r) * n2 -
                std::pow(r * n2 + (1.0 - r), 2);
            CHECK(rep.variance == doctest::Approx(want_var).epsilon(1e-10));
        }
    }
    // Matches the Pauli demo: Omega = I + A at N = 2, variance -12 at r = 1.
    CHECK(moments_pt_closed(WitnessSpec::all_ones(2), 1.0).variance ==
          doctest::Approx(-12.0).epsilon(1e-12));
}

TEST_CASE("the incoherent state never shows a negative PT variance") {
    std::mt19937_64 rng(409);
    for (int n : {2, 3, 4}) {
        const WitnessSpec spec = random_spec(rng, n);
        const MomentReport rep = moments_pt_closed(spec, 0.0);
        double sum_sq = 0.0;
        for (const Complex& x : spec.coeffs) sum_sq += std::norm(x);
        CHECK(rep.variance ==
              doctest::Approx(sum_sq - std::norm(spec.coeff(0, 0)))
                  .epsilon(1e-10));
        CHECK(rep.variance >= -1e-9);
    }
}

TEST_CASE("dense-matrix moments at a known point") {
    const MomentReport rep = moments_matrix(WitnessSpec::all_ones(2), 1.0,
                                            MomentBasis::partially_transposed);
    CHECK(rep.second == doctest::Approx(4.0).epsilon(1e-12));
    CHECK(std::abs(rep.mean - Complex{4.0, 0.0}) < 1e-12);
    CHECK(rep.variance == doctest::Approx(-12.0).epsilon(1e-12));
}

TEST_CASE("dense evaluation is guarded") {
    CHECK_THROWS_AS(
        moments_matrix(WitnessSpec::all_ones(13), 0.5, MomentBasis::original),
        std::invalid_argument);
}

TEST_CASE("closed forms agree with the dense-matrix route") {
    // Exercises both parities; the even-N coupling branch runs at N = 2, 4.
    std::mt19937_64 rng(419);
    for (int n : {2, 3, 4, 5}) {
        for (int trial = 0; trial < 10; ++trial) {
            const WitnessSpec spec = random_spec(rng, n);
            for (double r : {0.0, 0.3, 0.7, 1.0}) {
                check_reports_close(
                    moments_original_closed(spec, r),
                    moments_matrix(spec, r, MomentBasis::original), 1e-9);
                check_reports_close(
                    moments_pt_closed(spec, r),
                    moments_matrix(spec, r, MomentBasis::partially_transposed),
                    1e-9);
            }
        }
    }
}

TEST_CASE("original-state variance is never negative") {
    std::mt19937_64 rng(421);
    for (int n : {2, 3, 4, 5}) {
        for (int trial = 0; trial < 10; ++trial) {
            const WitnessSpec spec = random_spec(rng, n);
            for (double r : {0.0, 0.3, 0.7, 1.0}) {
                CHECK(moments_original_closed(spec, r).variance >= -1e-9);
            }
        }
    }
}

TEST_CASE("r out of range is rejected") {
    const WitnessSpec spec = WitnessSpec::all_ones(3);
    CHECK_THROWS_AS(moments_original_closed(spec, 1.5), std::domain_error);
    CHECK_THROWS_AS(moments_pt_closed(spec, -0.5), std::domain_error);
}

TEST_CASE("PT variance changes sign exactly at r0 = 1/(N+1)") {
    for (int n : {2, 3, 5, 9}) {
        const WitnessSpec spec = WitnessSpec::all_ones(n);
        const double r0 = 1.0 / (n + 1);
        for (int k = 0; k <= 1000; ++k) {
            const double r = k / 1000.0;
            const double var = moments_pt_closed(spec, r).variance;
            if (r <= r0) {
                CHECK(var >= -1e-9);
            } else if (r > r0 + 1e-9) {
                CHECK(var < 0.0);
            }
        }
    }
}

TEST_CASE("threshold values") {
    for (int n : {2, 3, 4, 5, 9, 20, 50}) {
        CHECK(std::abs(r0_threshold(n) - 1.0 / (n + 1)) <= 1e-12);
    }
    CHECK_THROWS_AS(r0_threshold(1), std::invalid_argument);
}

TEST_CASE("PT minimum eigenvalue of the isotropic family") {
    CHECK(ppt_min_eigenvalue(3, 0.0) ==
          doctest::Approx(1.0 / 9.0).epsilon(1e-10));
    CHECK(std::abs(ppt_min_eigenvalue(3, 0.25)) <= 1e-10);  // r = 1/(N+1)
    CHECK(ppt_min_eigenvalue(3, 1.0) ==
          doctest::Approx(-1.0 / 3.0).epsilon(1e-10));
    CHECK_THROWS_AS(ppt_min_eigenvalue(51, 0.5), std::invalid_argument);
}

TEST_CASE("eigensolver and closed form agree on the PT spectrum floor") {
    for (int n : {2, 3, 5}) {
        for (double r : {0.1, 0.5, 0.9}) {
            const double analytic =
                -r / n + (1.0 - r) / (static_cast<double>(n) * n);
            CHECK(std::abs(ppt_min_eigenvalue(n, r) - analytic) <= 1e-10);
        }
    }
}

TEST_CASE("eigenvalue and variance witnesses cross zero together") {
    for (int n : {2, 3, 5}) {
        double lo = 0.0, hi = 1.0;
        while (hi - lo > 1e-10) {
            const double mid = 0.5 * (lo + hi);
            (ppt_min_eigenvalue(n, mid) > 0.0 ? lo : hi) = mid;
        }
        CHECK(std::abs(0.5 * (lo + hi) - r0_threshold(n)) < 1e-8);
    }
}
