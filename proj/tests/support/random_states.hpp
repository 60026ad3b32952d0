#pragma once

// Seeded generators shared by the unit and acceptance suites. States are
// built as G G^dagger / Tr(G G^dagger) from complex Gaussian G, so they are
// positive by construction; observables as (G + G^dagger) / 2.

#include <random>

#include "qpt/complex_matrix.hpp"
#include "qpt/states.hpp"

namespace qpt::testing {

inline ComplexMatrix random_complex_matrix(std::mt19937_64& rng, int dim) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    ComplexMatrix m(dim);
    for (int i = 0; i < dim; ++i) {
        for (int j = 0; j < dim; ++j) {
            m.at(i, j) = Complex{gauss(rng), gauss(rng)};
        }
    }
    return m;
}

inline ComplexMatrix random_hermitian(std::mt19937_64& rng, int dim) {
    const ComplexMatrix g = random_complex_matrix(rng, dim);
    return scale(Complex{0.5, 0.0}, add(g, adjoint(g)));
}

inline ComplexMatrix random_state_matrix(std::mt19937_64& rng, int dim) {
    const ComplexMatrix g = random_complex_matrix(rng, dim);
    const ComplexMatrix gg = matmul(g, adjoint(g));
    return scale(Complex{1.0 / trace(gg).real(), 0.0}, gg);
}

inline DensityMatrix random_density(std::mt19937_64& rng, SystemShape shape) {
    return DensityMatrix::from_matrix(
        random_state_matrix(rng, shape.matrix_dim()), shape,
        Validation::assume_psd);
}

}  // namespace qpt::testing
