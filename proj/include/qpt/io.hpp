#pragma once

#include <iosfwd>
#include <string>

#include "qpt/pauli_demo.hpp"
#include "qpt/states.hpp"
#include "qpt/wigner.hpp"
#include "qpt/witness.hpp"

namespace qpt {

// State files:   {"n_dim": N, "shape": "single"|"bipartite",
//                 "entries": [[re, im], ...]}  (row-major, length dim^2)
// Witness files: {"n_dim": N, "coeffs": [[[re, im], ...], ...]}
//                (row m, column l)
DensityMatrix load_state_json(const std::string& path,
                              Validation validation = Validation::check_psd);
void save_state_json(const DensityMatrix& rho, const std::string& path);

WitnessSpec load_witness_json(const std::string& path);
void save_witness_json(const WitnessSpec& spec, const std::string& path);

// Fixed 12-significant-digit rendering; keeps CSV output byte-stable.
std::string format_sig12(double value);

// Header "q1,q2,p1,p2,w" (or "q,p,w"), one row per grid point in
// lexicographic index order.
void write_wigner_csv(const WignerGrid& grid, std::ostream& os);

std::string pauli_report_json(const PauliReport& report);

}  // namespace qpt
