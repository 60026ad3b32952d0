#pragma once

#include <utility>
#include <vector>

#include "qpt/complex_matrix.hpp"

namespace qpt {

// N x N table of complex coefficients x_{ml} (m indexes the X-power, l the
// Z-power) defining the monomial-sum operator
//   Omega = sum_{m,l} x_{ml} (X1^m Z1^l) (X2^m Z2^l)^dagger.
struct WitnessSpec {
    int n_dim = 0;
    std::vector<Complex> coeffs;  // row-major, coeffs[m*n_dim + l]

    static WitnessSpec all_ones(int n_dim);

    Complex coeff(int m, int l) const {
        return coeffs[static_cast<std::size_t>(m) * n_dim + l];
    }
};

enum class MomentBasis { original, partially_transposed };
enum class MomentMethod { closed_form, matrix };

// Mean, second moment <Omega Omega^dagger> and variance of Omega in an
// isotropic state (or its partial transpose). The variance convention for
// non-Hermitian Omega is <Omega Omega^dagger> - |<Omega>|^2.
struct MomentReport {
    Complex mean;
    double second = 0.0;
    double variance = 0.0;
    MomentBasis basis = MomentBasis::original;
    MomentMethod method = MomentMethod::closed_form;
};

// Dense N^2 x N^2 realization of Omega.
ComplexMatrix build_omega(const WitnessSpec& spec);

// Hermitian split Omega = H + iK with H = (Omega + Omega^dagger)/2 and
// K = (Omega - Omega^dagger)/(2i); both observables.
std::pair<ComplexMatrix, ComplexMatrix> split_hk(const ComplexMatrix& omega);

// Closed-form moments in the isotropic state rho_r. The even-N corrections
// couple x_{ml} to x_{m +- N/2, l'}; indices are reduced mod N, with one term
// per m (the two +-N/2 shifts address the same residue class).
MomentReport moments_original_closed(const WitnessSpec& spec, double r);

// Closed-form moments in the partially transposed isotropic state, built on
// the omega^{m l' - m' l} trace kernel. Exact for every N.
MomentReport moments_pt_closed(const WitnessSpec& spec, double r);

// Dense-matrix evaluation of the same moments: builds Omega and rho_r (or its
// partial transpose) explicitly and traces. Independent cross-check for the
// closed forms; guarded to N <= 12.
MomentReport moments_matrix(const WitnessSpec& spec, double r,
                            MomentBasis basis);

// The root r0 in (0, 1) of Var(Omega)_{rho_r^T1} = 0 for the all-ones
// coefficient table: negative variance for r > r0 certifies entanglement.
// Solved analytically from the quadratic in r and cross-checked by bisection;
// equals 1/(N+1).
double r0_threshold(int n_dim);

// Minimum eigenvalue of rho_r^T1, via the Jacobi eigensolver. Analytically
// -r/N + (1-r)/N^2; crosses zero at the same r0 as the variance witness.
double ppt_min_eigenvalue(int n_dim, double r);

}  // namespace qpt
