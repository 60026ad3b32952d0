#pragma once

#include <vector>

#include "qpt/complex_matrix.hpp"
#include "qpt/states.hpp"
#include "qpt/transpose.hpp"

namespace qpt {

// Real quasi-probability over the phase-space lattice, unnormalized: the grid
// sums to N * Tr(rho) for one particle and N^2 * Tr(rho) for two. Defined
// only for prime N > 2, where 2 is invertible mod N.
struct WignerGrid {
    int n_dim = 0;
    SystemKind kind = SystemKind::single;
    std::vector<double> values;

    double at(int q, int p) const {
        return values[static_cast<std::size_t>(q) * n_dim + p];
    }
    double at(int q1, int q2, int p1, int p2) const {
        const std::size_t n = static_cast<std::size_t>(n_dim);
        return values[((static_cast<std::size_t>(q1) * n + q2) * n + p1) * n +
                      p2];
    }
};

bool is_odd_prime(int n);

// Two-particle Wigner function
//   W(q1,q2,p1,p2) = sum <q1' q2'|rho|q1'' q2''>
//                    delta_{q1''+q1', 2 q1} delta_{q2''+q2', 2 q2}
//                    omega^{p1 (q1''-q1')} omega^{p2 (q2''-q2')}
// with all congruences mod N.
WignerGrid wigner_two(const DensityMatrix& rho);
WignerGrid wigner_two(const PartialTransposed& pt);
WignerGrid wigner_two(const ComplexMatrix& rho_matrix, int n_dim);

// One-variable restriction of the same sum.
WignerGrid wigner_one(const DensityMatrix& rho);
WignerGrid wigner_one(const ComplexMatrix& rho_matrix);

// Reindex p1 -> (N - p1) mod N (or p for one-particle grids).
WignerGrid reflect_p1(const WignerGrid& grid);

}  // namespace qpt
