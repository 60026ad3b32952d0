#include "qpt/schwinger.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace qpt {

namespace {

int reduce_mod(long long k, int n) {
    long long r = k % n;
    if (r < 0) r += n;
    return static_cast<int>(r);
}

}  // namespace

Complex omega_power(int n_dim, long long k) {
    const int r = reduce_mod(k, n_dim);
    const double angle = 2.0 * std::numbers::pi_v<double> * r / n_dim;
    return Complex{std::cos(angle), std::sin(angle)};
}

SchwingerPair build_schwinger(int n_dim) {
    if (n_dim < 2) {
        throw std::invalid_argument("build_schwinger: dimension must be >= 2");
    }
    SchwingerPair pair;
    pair.n_dim = n_dim;
    pair.omega = omega_power(n_dim, 1);
    pair.x_op = ComplexMatrix(n_dim);
    pair.z_op = ComplexMatrix(n_dim);
    for (int q = 0; q < n_dim; ++q) {
        pair.x_op.at((q + 1) % n_dim, q) = Complex{1.0, 0.0};
        pair.z_op.at(q, q) = omega_power(n_dim, q);
    }
    return pair;
}

ComplexMatrix monomial(const SchwingerPair& pair, int m, int l) {
    const int n = pair.n_dim;
    const int mr = reduce_mod(m, n);
    const int lr = reduce_mod(l, n);
    return matmul(matpow(pair.x_op, mr), matpow(pair.z_op, lr));
}

Complex trace_pair_identity(const SchwingerPair& pair, int m, int l, int m2,
                            int l2) {
    const ComplexMatrix a = monomial(pair, m, l);
    const ComplexMatrix b = monomial(pair, m2, l2);
    return trace(matmul(a, adjoint(b))) / static_cast<double>(pair.n_dim);
}

Complex trace_quad_identity(const SchwingerPair& pair, int m, int l, int m2,
                            int l2) {
    const ComplexMatrix a = monomial(pair, m, l);
    const ComplexMatrix b = monomial(pair, m2, l2);
    const ComplexMatrix prod =
        matmul(matmul(a, adjoint(b)), matmul(adjoint(a), b));
    return trace(prod) / static_cast<double>(pair.n_dim);
}

}  // namespace qpt
