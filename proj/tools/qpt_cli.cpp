// Command-line front end: threshold table, Pauli demo, Wigner grids, witness
// scans over the isotropic family, and PPT checks of imported states.
//
// Exit codes: 0 success, 1 usage/input error, 2 scientific-check failure.

#include <atomic>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "qpt/io.hpp"
#include "qpt/pauli_demo.hpp"
#include "qpt/states.hpp"
#include "qpt/transpose.hpp"
#include "qpt/wigner.hpp"
#include "qpt/witness.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitCheckFailed = 2;

struct OutputTarget {
    std::optional<std::string> path;

    // Returns the stream to write to; file if --out was given, else stdout.
    std::ostream& open(std::ofstream& file) const {
        if (!path) return std::cout;
        file.open(*path);
        if (!file) {
            throw std::runtime_error("cannot write file: " + *path);
        }
        return file;
    }
};

std::vector<double> parse_r_spec(const std::string& spec) {
    std::vector<double> values;
    if (spec.find(':') != std::string::npos) {
        double start = 0.0, end = 0.0, step = 0.0;
        char sep1 = 0, sep2 = 0;
        std::istringstream in(spec);
        if (!(in >> start >> sep1 >> end >> sep2 >> step) || sep1 != ':' ||
            sep2 != ':') {
            throw std::invalid_argument("bad r grid, expected start:end:step");
        }
        if (!(start < end) || !(step > 0.0)) {
            throw std::invalid_argument(
                "bad r grid: need start < end and step > 0");
        }
        for (long long i = 0;; ++i) {
            const double r = start + i * step;
            if (r > end + step * 0.5) break;
            values.push_back(std::min(r, end));
        }
        return values;
    }
    std::istringstream in(spec);
    std::string token;
    while (std::getline(in, token, ',')) {
        values.push_back(std::stod(token));
    }
    if (values.empty()) {
        throw std::invalid_argument("empty r specification");
    }
    return values;
}

int cmd_table1(const std::vector<int>& n_list, double tol,
               const OutputTarget& target) {
    std::ofstream file;
    std::ostream& os = target.open(file);
    os << "N, r0, analytic\n";
    bool all_ok = true;
    for (int n : n_list) {
        const double r0 = qpt::r0_threshold(n);
        const double analytic = 1.0 / (n + 1);
        os << n << ", " << qpt::format_sig12(r0) << ", 1/" << (n + 1) << '\n';
        if (std::abs(r0 - analytic) > tol) {
            std::cerr << "threshold mismatch at N = " << n << ": computed "
                      << qpt::format_sig12(r0) << ", analytic "
                      << qpt::format_sig12(analytic) << '\n';
            all_ok = false;
        }
    }
    return all_ok ? kExitOk : kExitCheckFailed;
}

int cmd_wigner(const std::string& state_path, bool check_reflection,
               double tol, const OutputTarget& target) {
    const qpt::DensityMatrix rho = qpt::load_state_json(state_path);
    const int n = rho.shape().n_dim;
    if (!qpt::is_odd_prime(n)) {
        std::cerr << "N must be an odd prime (got N = " << n << ")\n";
        return kExitUsage;
    }

    const bool bipartite = rho.shape().kind == qpt::SystemKind::bipartite;
    const qpt::WignerGrid grid =
        bipartite ? qpt::wigner_two(rho) : qpt::wigner_one(rho);

    std::ofstream file;
    std::ostream& os = target.open(file);
    qpt::write_wigner_csv(grid, os);

    if (!check_reflection) return kExitOk;

    qpt::WignerGrid transposed_grid =
        bipartite ? qpt::wigner_two(qpt::pt_state(rho))
                  : qpt::wigner_one(qpt::transpose(rho.matrix()));
    const qpt::WignerGrid reflected = qpt::reflect_p1(grid);
    double worst = 0.0;
    for (std::size_t i = 0; i < reflected.values.size(); ++i) {
        worst = std::max(worst, std::abs(transposed_grid.values[i] -
                                         reflected.values[i]));
    }
    const bool ok = worst <= tol;
    std::cerr << "reflection check: max deviation " << qpt::format_sig12(worst)
              << " (tolerance " << qpt::format_sig12(tol) << ") "
              << (ok ? "PASS" : "FAIL") << '\n';
    return ok ? kExitOk : kExitCheckFailed;
}

struct ScanRow {
    double r = 0.0;
    double var_original = 0.0;
    double var_pt = 0.0;
    std::optional<double> ppt_min_eig;
    bool entangled = false;
};

int cmd_scan(int n_dim, const std::string& r_spec,
             const std::optional<std::string>& witness_path,
             const std::string& format, const OutputTarget& target) {
    const std::vector<double> rs = parse_r_spec(r_spec);
    const qpt::WitnessSpec spec = witness_path
                                      ? qpt::load_witness_json(*witness_path)
                                      : qpt::WitnessSpec::all_ones(n_dim);
    if (spec.n_dim != n_dim) {
        throw std::invalid_argument("witness dimension does not match --n");
    }
    const bool with_ppt = n_dim <= 12;

    std::vector<ScanRow> rows(rs.size());
    std::atomic<std::size_t> next{0};
    std::exception_ptr first_error;
    std::mutex error_mutex;

    auto worker = [&] {
        for (std::size_t i = next++; i < rs.size(); i = next++) {
            try {
                ScanRow row;
                row.r = rs[i];
                row.var_original =
                    qpt::moments_original_closed(spec, row.r).variance;
                row.var_pt = qpt::moments_pt_closed(spec, row.r).variance;
                if (with_ppt) {
                    row.ppt_min_eig = qpt::ppt_min_eigenvalue(n_dim, row.r);
                }
                row.entangled = row.var_pt < 0.0;
                rows[i] = row;
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!first_error) first_error = std::current_exception();
            }
        }
    };

    const std::size_t n_threads = std::max<std::size_t>(
        1, std::min<std::size_t>(std::thread::hardware_concurrency(),
                                 rs.size()));
    std::vector<std::thread> pool;
    for (std::size_t t = 0; t < n_threads; ++t) pool.emplace_back(worker);
    for (std::thread& t : pool) t.join();
    if (first_error) std::rethrow_exception(first_error);

    std::ofstream file;
    std::ostream& os = target.open(file);
    if (format == "json") {
        os << "[\n";
        for (std::size_t i = 0; i < rows.size(); ++i) {
            const ScanRow& row = rows[i];
            os << "  {\"r\": " << qpt::format_sig12(row.r)
               << ", \"var_original\": " << qpt::format_sig12(row.var_original)
               << ", \"var_pt\": " << qpt::format_sig12(row.var_pt);
            if (row.ppt_min_eig) {
                os << ", \"ppt_min_eig\": "
                   << qpt::format_sig12(*row.ppt_min_eig);
            }
            os << ", \"entangled\": " << (row.entangled ? "true" : "false")
               << '}' << (i + 1 < rows.size() ? "," : "") << '\n';
        }
        os << "]\n";
        return kExitOk;
    }

    os << (with_ppt ? "r,var_original,var_pt,ppt_min_eig,entangled_flag\n"
                    : "r,var_original,var_pt,entangled_flag\n");
    for (const ScanRow& row : rows) {
        os << qpt::format_sig12(row.r) << ','
           << qpt::format_sig12(row.var_original) << ','
           << qpt::format_sig12(row.var_pt) << ',';
        if (row.ppt_min_eig) os << qpt::format_sig12(*row.ppt_min_eig) << ',';
        os << (row.entangled ? "true" : "false") << '\n';
    }
    return kExitOk;
}

int cmd_pauli(const std::string& format, bool corrupt,
              const OutputTarget& target) {
    qpt::PauliReport report = qpt::run_pauli_demo();
    if (corrupt) report.var_pt += 1e-3;  // negative-path probe

    std::ofstream file;
    std::ostream& os = target.open(file);
    if (format == "json") {
        os << qpt::pauli_report_json(report) << '\n';
    } else {
        os << qpt::format_pauli_report(report);
    }
    const bool ok =
        qpt::pauli_report_matches(report) && qpt::check_operator_identities();
    if (!ok) std::cerr << "pauli demo deviates from expected values\n";
    return ok ? kExitOk : kExitCheckFailed;
}

int cmd_ppt(const std::string& state_path) {
    const qpt::DensityMatrix rho = qpt::load_state_json(state_path);
    if (rho.shape().kind != qpt::SystemKind::bipartite) {
        std::cerr << "PPT check needs a bipartite state\n";
        return kExitUsage;
    }
    qpt::PartialTransposed pt = qpt::pt_state(rho);
    const double min_eig = qpt::solve_min_eigenvalue(pt);
    std::cout << "min eigenvalue of partial transpose: "
              << qpt::format_sig12(min_eig) << '\n';
    if (min_eig < -1e-9) {
        std::cout << "PPT violated: state is entangled\n";
    } else {
        std::cout << "no PPT violation (separable, or entanglement not "
                     "detected by this criterion)\n";
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Partial transposition, Wigner functions and entanglement "
                 "witnesses for N-dimensional one- and two-particle systems"};
    app.require_subcommand(1);

    int seed = 0;
    app.add_option("--seed", seed,
                   "Random seed (all current commands are deterministic)");

    // table1
    auto* table1 = app.add_subcommand(
        "table1", "Entanglement threshold r0 vs dimension N for the "
                  "all-ones witness on isotropic states");
    std::vector<int> table1_n;
    double table1_tol = 1e-10;
    std::string table1_out;
    table1->add_option("--n", table1_n, "Dimensions to tabulate")
        ->check(CLI::Range(2, 1000));
    table1->add_option("--tol", table1_tol, "Mismatch tolerance");
    table1->add_option("--out", table1_out, "Output path (default stdout)");

    // wigner
    auto* wigner = app.add_subcommand(
        "wigner", "Emit the Wigner grid of a state as CSV (prime N > 2)");
    std::string wigner_state;
    std::string wigner_out;
    bool wigner_check = false;
    double wigner_tol = 1e-10;
    wigner->add_option("--state", wigner_state, "State JSON file")
        ->required();
    wigner->add_option("--out", wigner_out, "Output path (default stdout)");
    wigner->add_flag("--check-reflection", wigner_check,
                     "Verify the partial-transpose momentum reflection "
                     "identity on this state");
    wigner->add_option("--tol", wigner_tol, "Reflection check tolerance");

    // scan
    auto* scan = app.add_subcommand(
        "scan", "Sweep r over the isotropic family; report witness variances "
                "and (N <= 12) the PT minimum eigenvalue");
    int scan_n = 0;
    std::string scan_r = "0:1:0.001";
    std::string scan_witness;
    std::string scan_out;
    std::string scan_format = "csv";
    scan->add_option("--n", scan_n, "Hilbert space dimension per particle")
        ->required()
        ->check(CLI::Range(2, 1000));
    scan->add_option("--r", scan_r, "r value, comma list, or start:end:step");
    scan->add_option("--witness", scan_witness,
                     "Witness JSON file (default all-ones coefficients)");
    scan->add_option("--out", scan_out, "Output path (default stdout)");
    scan->add_option("--format", scan_format, "Output format")
        ->check(CLI::IsMember({"csv", "json"}));

    // pauli
    auto* pauli = app.add_subcommand(
        "pauli", "Two-qubit demo: moments of the Pauli exchange observable "
                 "in the Bell state and its partial transpose");
    std::string pauli_format = "text";
    std::string pauli_out;
    bool pauli_corrupt = false;
    pauli->add_option("--format", pauli_format, "Output format")
        ->check(CLI::IsMember({"text", "json"}));
    pauli->add_option("--out", pauli_out, "Output path (default stdout)");
    pauli
        ->add_flag("--self-test-corrupt", pauli_corrupt,
                   "Perturb one value to exercise the failure exit path")
        ->group("");  // hidden

    // ppt
    auto* ppt = app.add_subcommand(
        "ppt", "Check an imported bipartite state for PPT violation");
    std::string ppt_state;
    ppt->add_option("--state", ppt_state, "State JSON file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    auto target = [](const std::string& path) {
        OutputTarget t;
        if (!path.empty()) t.path = path;
        return t;
    };

    try {
        if (table1->parsed()) {
            std::vector<int> ns =
                table1_n.empty() ? std::vector<int>{2, 3, 4, 5, 9, 20, 50}
                                 : table1_n;
            return cmd_table1(ns, table1_tol, target(table1_out));
        }
        if (wigner->parsed()) {
            return cmd_wigner(wigner_state, wigner_check, wigner_tol,
                              target(wigner_out));
        }
        if (scan->parsed()) {
            std::optional<std::string> witness;
            if (!scan_witness.empty()) witness = scan_witness;
            return cmd_scan(scan_n, scan_r, witness, scan_format,
                            target(scan_out));
        }
        if (pauli->parsed()) {
            return cmd_pauli(pauli_format, pauli_corrupt, target(pauli_out));
        }
        if (ppt->parsed()) {
            return cmd_ppt(ppt_state);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}
