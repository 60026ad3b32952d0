#include "qpt/complex_matrix.hpp"

#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>

namespace qpt {

ComplexMatrix::ComplexMatrix(int dim) : dim_(dim) {
    if (dim < 1) {
        throw std::invalid_argument("ComplexMatrix: dimension must be >= 1");
    }
    entries_.assign(static_cast<std::size_t>(dim) * dim, Complex{0.0, 0.0});
}

ComplexMatrix::ComplexMatrix(int dim, std::vector<Complex> entries)
    : dim_(dim), entries_(std::move(entries)) {
    if (dim < 1) {
        throw std::invalid_argument("ComplexMatrix: dimension must be >= 1");
    }
    if (entries_.size() != static_cast<std::size_t>(dim) * dim) {
        throw std::invalid_argument("ComplexMatrix: entry count must be dim^2");
    }
    if (!all_finite(*this)) {
        throw std::invalid_argument("ComplexMatrix: entries must be finite");
    }
}

ComplexMatrix ComplexMatrix::identity(int dim) {
    ComplexMatrix m(dim);
    for (int i = 0; i < dim; ++i) m.at(i, i) = Complex{1.0, 0.0};
    return m;
}

ComplexMatrix matmul(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.dim() != b.dim()) {
        throw std::invalid_argument("matmul: dimension mismatch");
    }
    const int n = a.dim();
    ComplexMatrix out(n);
    for (int i = 0; i < n; ++i) {
        for (int k = 0; k < n; ++k) {
            const Complex aik = a.at(i, k);
            if (aik == Complex{0.0, 0.0}) continue;
            for (int j = 0; j < n; ++j) {
                out.at(i, j) += aik * b.at(k, j);
            }
        }
    }
    return out;
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
    const int na = a.dim();
    const int nb = b.dim();
    ComplexMatrix out(na * nb);
    for (int i1 = 0; i1 < na; ++i1) {
        for (int j1 = 0; j1 < na; ++j1) {
            const Complex aij = a.at(i1, j1);
            if (aij == Complex{0.0, 0.0}) continue;
            for (int i2 = 0; i2 < nb; ++i2) {
                for (int j2 = 0; j2 < nb; ++j2) {
                    out.at(i1 * nb + i2, j1 * nb + j2) = aij * b.at(i2, j2);
                }
            }
        }
    }
    return out;
}

ComplexMatrix adjoint(const ComplexMatrix& a) {
    const int n = a.dim();
    ComplexMatrix out(n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            out.at(i, j) = std::conj(a.at(j, i));
        }
    }
    return out;
}

ComplexMatrix transpose(const ComplexMatrix& a) {
    const int n = a.dim();
    ComplexMatrix out(n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            out.at(i, j) = a.at(j, i);
        }
    }
    return out;
}

Complex trace(const ComplexMatrix& a) {
    Complex t{0.0, 0.0};
    for (int i = 0; i < a.dim(); ++i) t += a.at(i, i);
    return t;
}

ComplexMatrix add(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.dim() != b.dim()) {
        throw std::invalid_argument("add: dimension mismatch");
    }
    ComplexMatrix out(a.dim());
    const int n = a.dim();
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) out.at(i, j) = a.at(i, j) + b.at(i, j);
    }
    return out;
}

ComplexMatrix sub(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.dim() != b.dim()) {
        throw std::invalid_argument("sub: dimension mismatch");
    }
    ComplexMatrix out(a.dim());
    const int n = a.dim();
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) out.at(i, j) = a.at(i, j) - b.at(i, j);
    }
    return out;
}

ComplexMatrix scale(Complex c, const ComplexMatrix& a) {
    ComplexMatrix out(a.dim());
    const int n = a.dim();
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) out.at(i, j) = c * a.at(i, j);
    }
    return out;
}

ComplexMatrix matpow(const ComplexMatrix& a, int k) {
    if (k < 0) {
        throw std::invalid_argument("matpow: exponent must be >= 0");
    }
    ComplexMatrix out = ComplexMatrix::identity(a.dim());
    for (int i = 0; i < k; ++i) out = matmul(out, a);
    return out;
}

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.dim() != b.dim()) {
        throw std::invalid_argument("max_abs_diff: dimension mismatch");
    }
    double worst = 0.0;
    const int n = a.dim();
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            worst = std::max(worst, std::abs(a.at(i, j) - b.at(i, j)));
        }
    }
    return worst;
}

bool approx_equal(const ComplexMatrix& a, const ComplexMatrix& b, double tol) {
    return max_abs_diff(a, b) <= tol;
}

bool is_hermitian(const ComplexMatrix& a, double tol) {
    const int n = a.dim();
    for (int i = 0; i < n; ++i) {
        for (int j = i; j < n; ++j) {
            if (std::abs(a.at(i, j) - std::conj(a.at(j, i))) > tol) return false;
        }
    }
    return true;
}

bool all_finite(const ComplexMatrix& a) {
    for (const Complex& c : a.entries()) {
        if (!std::isfinite(c.real()) || !std::isfinite(c.imag())) return false;
    }
    return true;
}

}  // namespace qpt
