#pragma once

#include <complex>
#include <vector>

namespace qpt {

using Complex = std::complex<double>;

// Absolute tolerance for entrywise matrix comparisons. All operators and
// states handled here have O(1) entries, exact up to rounding of root-of-unity
// phases, so a single absolute tolerance is adequate.
inline constexpr double kDefaultTol = 1e-10;

// Dense square complex matrix, row-major storage. The universal carrier for
// operators and density matrices. Composite two-particle indices follow the
// global convention (n1, n2) -> n1*N + n2.
class ComplexMatrix {
public:
    ComplexMatrix() = default;
    explicit ComplexMatrix(int dim);
    ComplexMatrix(int dim, std::vector<Complex> entries);

    static ComplexMatrix identity(int dim);

    int dim() const { return dim_; }

    Complex& at(int i, int j) {
        return entries_[static_cast<std::size_t>(i) * dim_ + j];
    }
    const Complex& at(int i, int j) const {
        return entries_[static_cast<std::size_t>(i) * dim_ + j];
    }

    const std::vector<Complex>& entries() const { return entries_; }

private:
    int dim_ = 0;
    std::vector<Complex> entries_;
};

ComplexMatrix matmul(const ComplexMatrix& a, const ComplexMatrix& b);

// Tensor product: entry ((i1,i2),(j1,j2)) = a(i1,j1) * b(i2,j2) with composite
// index i1*b.dim() + i2.
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

ComplexMatrix adjoint(const ComplexMatrix& a);
ComplexMatrix transpose(const ComplexMatrix& a);
Complex trace(const ComplexMatrix& a);

ComplexMatrix add(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix sub(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix scale(Complex c, const ComplexMatrix& a);

// a^k by repeated multiplication, k >= 0.
ComplexMatrix matpow(const ComplexMatrix& a, int k);

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);
bool approx_equal(const ComplexMatrix& a, const ComplexMatrix& b,
                  double tol = kDefaultTol);

bool is_hermitian(const ComplexMatrix& a, double tol = kDefaultTol);
bool all_finite(const ComplexMatrix& a);

}  // namespace qpt
