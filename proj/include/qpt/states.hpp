#pragma once

#include <vector>

#include "qpt/complex_matrix.hpp"

namespace qpt {

enum class SystemKind { single, bipartite };

// One particle of dimension N, or two particles of dimension N each. The
// bipartite matrix dimension is N^2 under the composite index n1*N + n2.
struct SystemShape {
    SystemKind kind = SystemKind::single;
    int n_dim = 0;

    int matrix_dim() const {
        return kind == SystemKind::single ? n_dim : n_dim * n_dim;
    }
};

enum class Validation {
    none,        // Hermiticity/trace checks only; validated flag stays false
    assume_psd,  // caller guarantees positivity (e.g. G G^dagger construction)
    check_psd,   // eigensolve and require min eigenvalue >= -1e-9
};

// Hermitian, unit-trace matrix with system-shape metadata. `validated` means
// positivity has been established (analytically or by eigensolve).
class DensityMatrix {
public:
    static DensityMatrix from_matrix(ComplexMatrix matrix, SystemShape shape,
                                     Validation validation);

    const ComplexMatrix& matrix() const { return matrix_; }
    SystemShape shape() const { return shape_; }
    bool validated() const { return validated_; }

private:
    DensityMatrix(ComplexMatrix matrix, SystemShape shape, bool validated)
        : matrix_(std::move(matrix)), shape_(shape), validated_(validated) {}

    ComplexMatrix matrix_;
    SystemShape shape_;
    bool validated_ = false;
};

// Probability distribution over the momentum label p in Z_N (single) or the
// pair (p1, p2) in Z_N x Z_N (bipartite).
struct MomentumDistribution {
    int n_dim = 0;
    SystemKind kind = SystemKind::single;
    std::vector<double> values;

    double at(int p) const { return values[static_cast<std::size_t>(p)]; }
    double at(int p1, int p2) const {
        return values[static_cast<std::size_t>(p1) * n_dim + p2];
    }
};

// (1/N) sum_{q,q'} |qq><q'q'|: the maximally entangled two-particle state.
DensityMatrix bell_state(int n_dim);

// Isotropic state: r times the Bell projector plus (1-r) times I/N^2, with
// matrix elements (r/N) delta_{q1 q2} delta_{q1' q2'}
//               + ((1-r)/N^2) delta_{q1 q1'} delta_{q2 q2'}.
// Accepted r-range is [0, 1]; `permissive` widens it to the full positivity
// range [-1/(N^2-1), 1].
DensityMatrix isotropic(int n_dim, double r, bool permissive = false);

// Joint momentum distribution
//   P(p1,p2) = (1/N^2) sum <n1 n2|rho|n1' n2'> omega^{p1(n1'-n1)}
//                                              omega^{p2(n2'-n2)},
// or its one-variable restriction for single-particle states.
MomentumDistribution momentum_distribution(const DensityMatrix& rho);

// Same quadratic form evaluated on a raw matrix (no state validation); used
// for partially transposed matrices, which need not be positive.
MomentumDistribution momentum_distribution_of(const ComplexMatrix& matrix,
                                              SystemShape shape);

// Diagonal of rho in the reference basis; real and summing to 1.
std::vector<double> position_distribution(const DensityMatrix& rho);

}  // namespace qpt
