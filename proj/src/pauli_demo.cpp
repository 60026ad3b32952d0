#include "qpt/pauli_demo.hpp"

#include <array>
#include <cmath>
#include <cstdio>
#include <stdexcept>

#include "qpt/states.hpp"
#include "qpt/transpose.hpp"

namespace qpt {

namespace {

constexpr double kExactTol = 1e-12;

double real_expectation(const ComplexMatrix& state, const ComplexMatrix& op) {
    const Complex value = expectation(state, op);
    if (std::abs(value.imag()) > kExactTol) {
        throw std::runtime_error("pauli demo: expectation value not real");
    }
    return value.real();
}

}  // namespace

ComplexMatrix pauli_x() {
    ComplexMatrix m(2);
    m.at(0, 1) = Complex{1.0, 0.0};
    m.at(1, 0) = Complex{1.0, 0.0};
    return m;
}

ComplexMatrix pauli_y() {
    ComplexMatrix m(2);
    m.at(0, 1) = Complex{0.0, -1.0};
    m.at(1, 0) = Complex{0.0, 1.0};
    return m;
}

ComplexMatrix pauli_z() {
    ComplexMatrix m(2);
    m.at(0, 0) = Complex{1.0, 0.0};
    m.at(1, 1) = Complex{-1.0, 0.0};
    return m;
}

ComplexMatrix pauli_dot_product() {
    ComplexMatrix a = kron(pauli_x(), pauli_x());
    a = add(a, kron(pauli_y(), pauli_y()));
    a = add(a, kron(pauli_z(), pauli_z()));
    return a;
}

PauliReport run_pauli_demo() {
    const DensityMatrix rho = bell_state(2);
    const ComplexMatrix a = pauli_dot_product();
    const ComplexMatrix a2 = matmul(a, a);

    PauliReport report;
    report.mean_original = real_expectation(rho.matrix(), a);
    report.second_original = real_expectation(rho.matrix(), a2);
    report.var_original =
        report.second_original - report.mean_original * report.mean_original;

    const PartialTransposed pt = pt_state(rho);
    report.mean_pt = real_expectation(pt.matrix, a);
    report.second_pt = real_expectation(pt.matrix, a2);
    report.var_pt = report.second_pt - report.mean_pt * report.mean_pt;

    const ComplexMatrix a_t1 = partial_transpose_1(a, 2);
    report.second_of_pt_op =
        real_expectation(rho.matrix(), matmul(a_t1, a_t1));
    return report;
}

bool check_operator_identities() {
    const ComplexMatrix a = pauli_dot_product();
    const ComplexMatrix a2 = matmul(a, a);
    const ComplexMatrix id3 = scale(Complex{3.0, 0.0},
                                    ComplexMatrix::identity(4));

    // A^2 = 3 - 2A
    if (!approx_equal(a2, sub(id3, scale(Complex{2.0, 0.0}, a)), kExactTol)) {
        return false;
    }

    const ComplexMatrix a_t1 = partial_transpose_1(a, 2);
    const ComplexMatrix a2_t1 = partial_transpose_1(a2, 2);

    // (A^2)^T1 = 3 - 2 A^T1
    if (!approx_equal(a2_t1, sub(id3, scale(Complex{2.0, 0.0}, a_t1)),
                      kExactTol)) {
        return false;
    }
    // (A^T1)^2 = 3 + 2 A^T1
    const ComplexMatrix a_t1_sq = matmul(a_t1, a_t1);
    if (!approx_equal(a_t1_sq, add(id3, scale(Complex{2.0, 0.0}, a_t1)),
                      kExactTol)) {
        return false;
    }
    // The two orderings of squaring and transposing genuinely differ.
    return max_abs_diff(a2_t1, a_t1_sq) > 0.5;
}

bool pauli_report_matches(const PauliReport& report) {
    const std::array<std::pair<double, double>, 7> got_want = {{
        {report.mean_original, 1.0},
        {report.second_original, 1.0},
        {report.var_original, 0.0},
        {report.mean_pt, 3.0},
        {report.second_pt, -3.0},
        {report.second_of_pt_op, 9.0},
        {report.var_pt, -12.0},
    }};
    for (const auto& [got, want] : got_want) {
        if (std::abs(got - want) > kExactTol) return false;
    }
    return true;
}

std::string format_pauli_report(const PauliReport& report) {
    struct Row {
        const char* label;
        double value;
        double expected;
    };
    const Row rows[] = {
        {"<A>_rho", report.mean_original, 1.0},
        {"<A^2>_rho", report.second_original, 1.0},
        {"Var(A)_rho", report.var_original, 0.0},
        {"<A>_rho^T1", report.mean_pt, 3.0},
        {"<A^2>_rho^T1", report.second_pt, -3.0},
        {"<(A^T1)^2>_rho", report.second_of_pt_op, 9.0},
        {"Var(A)_rho^T1", report.var_pt, -12.0},
    };
    std::string out;
    char line[128];
    for (const Row& row : rows) {
        const bool ok = std::abs(row.value - row.expected) <= kExactTol;
        std::snprintf(line, sizeof(line), "%-16s = %6.2f (expected %6.2f) %s\n",
                      row.label, row.value, row.expected,
                      ok ? "PASS" : "FAIL");
        out += line;
    }
    return out;
}

}  // namespace qpt
