#pragma once

#include <string>

#include "qpt/complex_matrix.hpp"

namespace qpt {

ComplexMatrix pauli_x();
ComplexMatrix pauli_y();  // [[0, -i], [i, 0]]
ComplexMatrix pauli_z();

// A = sigma_x sigma_x + sigma_y sigma_y + sigma_z sigma_z on two qubits;
// satisfies A^2 = 3 - 2A.
ComplexMatrix pauli_dot_product();

// Moments of A in the Bell state and in its partial transpose. The Bell state
// is an eigenstate of A with eigenvalue 1, so the original-state variance
// vanishes; the PT-state variance is negative, certifying entanglement.
struct PauliReport {
    double mean_original = 0.0;    // <A>_rho           = 1
    double second_original = 0.0;  // <A^2>_rho         = 1
    double var_original = 0.0;     //                   = 0
    double mean_pt = 0.0;          // <A>_{rho^T1}      = 3
    double second_pt = 0.0;        // <A^2>_{rho^T1}    = -3
    double second_of_pt_op = 0.0;  // <(A^T1)^2>_rho    = 9
    double var_pt = 0.0;           //                   = -12
};

// Builds rho = Bell projector and A from Pauli matrices and computes all
// seven numbers through the partial-transpose machinery; nothing is
// hand-coded.
PauliReport run_pauli_demo();

// Verifies A^2 = 3 - 2A, (A^2)^T1 = 3 - 2 A^T1 and (A^T1)^2 = 3 + 2 A^T1
// entrywise, and that (A^2)^T1 and (A^T1)^2 differ (max-entry gap > 0.5).
bool check_operator_identities();

// Aligned text rendering of the report with expected values and a PASS/FAIL
// verdict per line.
std::string format_pauli_report(const PauliReport& report);

// True iff every report entry matches its expected value within 1e-12.
bool pauli_report_matches(const PauliReport& report);

}  // namespace qpt
