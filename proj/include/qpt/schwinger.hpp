#pragma once

#include "qpt/complex_matrix.hpp"

namespace qpt {

// The shift/clock pair generating the operator algebra of an N-dimensional
// Hilbert space over the reference (position) basis |q>, q = 0..N-1:
//   Z|q> = omega^q |q>,   X|q> = |q+1 mod N>,   omega = e^{2 pi i / N},
// with X^N = Z^N = I and ZX = omega XZ.
struct SchwingerPair {
    int n_dim = 0;
    ComplexMatrix x_op;  // cyclic shift
    ComplexMatrix z_op;  // clock, diag(omega^0, ..., omega^{N-1})
    Complex omega;
};

SchwingerPair build_schwinger(int n_dim);

// omega^k = exp(2 pi i k / N) with k reduced mod N before evaluating, so
// large exponents carry no phase drift.
Complex omega_power(int n_dim, long long k);

// X^m Z^l with both exponents reduced mod N. Order is fixed: X-power first,
// then Z-power; swapping would introduce omega phases.
ComplexMatrix monomial(const SchwingerPair& pair, int m, int l);

// (1/N) Tr[(X^m Z^l)(X^m2 Z^l2)^dagger]; equals delta_{m,m2} delta_{l,l2}.
Complex trace_pair_identity(const SchwingerPair& pair, int m, int l, int m2,
                            int l2);

// (1/N) Tr[(X^m Z^l)(X^m2 Z^l2)^dagger (X^m Z^l)^dagger (X^m2 Z^l2)];
// equals omega^{m*l2 - m2*l}.
Complex trace_quad_identity(const SchwingerPair& pair, int m, int l, int m2,
                            int l2);

}  // namespace qpt
