#include "qpt/io.hpp"

#include <cstdio>
#include <fstream>
#include <ostream>
#include <stdexcept>

#include <json.hpp>

namespace qpt {

namespace {

using nlohmann::json;

json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("cannot open file: " + path);
    }
    json j;
    in >> j;
    return j;
}

void write_json_file(const json& j, const std::string& path) {
    std::ofstream out(path);
    if (!out) {
        throw std::runtime_error("cannot write file: " + path);
    }
    out << j.dump(2) << '\n';
}

json complex_to_json(const Complex& c) {
    return json::array({c.real(), c.imag()});
}

Complex complex_from_json(const json& j) {
    if (!j.is_array() || j.size() != 2) {
        throw std::runtime_error("expected [re, im] pair");
    }
    return Complex{j[0].get<double>(), j[1].get<double>()};
}

}  // namespace

DensityMatrix load_state_json(const std::string& path, Validation validation) {
    const json j = load_json_file(path);
    const int n_dim = j.at("n_dim").get<int>();
    const std::string shape_name = j.at("shape").get<std::string>();

    SystemShape shape;
    shape.n_dim = n_dim;
    if (shape_name == "single") {
        shape.kind = SystemKind::single;
    } else if (shape_name == "bipartite") {
        shape.kind = SystemKind::bipartite;
    } else {
        throw std::runtime_error("state shape must be single or bipartite");
    }

    const json& entries = j.at("entries");
    const int dim = shape.matrix_dim();
    if (!entries.is_array() ||
        entries.size() != static_cast<std::size_t>(dim) * dim) {
        throw std::runtime_error("state entries must have length dim^2");
    }
    std::vector<Complex> data;
    data.reserve(entries.size());
    for (const json& e : entries) data.push_back(complex_from_json(e));
    return DensityMatrix::from_matrix(ComplexMatrix(dim, std::move(data)),
                                      shape, validation);
}

void save_state_json(const DensityMatrix& rho, const std::string& path) {
    json entries = json::array();
    for (const Complex& c : rho.matrix().entries()) {
        entries.push_back(complex_to_json(c));
    }
    const json j = {
        {"n_dim", rho.shape().n_dim},
        {"shape",
         rho.shape().kind == SystemKind::single ? "single" : "bipartite"},
        {"entries", std::move(entries)},
    };
    write_json_file(j, path);
}

WitnessSpec load_witness_json(const std::string& path) {
    const json j = load_json_file(path);
    const int n_dim = j.at("n_dim").get<int>();
    if (n_dim < 2) {
        throw std::runtime_error("witness n_dim must be >= 2");
    }
    const json& rows = j.at("coeffs");
    if (!rows.is_array() || rows.size() != static_cast<std::size_t>(n_dim)) {
        throw std::runtime_error("witness coeffs must have n_dim rows");
    }
    WitnessSpec spec;
    spec.n_dim = n_dim;
    spec.coeffs.reserve(static_cast<std::size_t>(n_dim) * n_dim);
    for (const json& row : rows) {
        if (!row.is_array() || row.size() != static_cast<std::size_t>(n_dim)) {
            throw std::runtime_error("witness coeff rows must have n_dim cols");
        }
        for (const json& e : row) spec.coeffs.push_back(complex_from_json(e));
    }
    return spec;
}

void save_witness_json(const WitnessSpec& spec, const std::string& path) {
    json rows = json::array();
    for (int m = 0; m < spec.n_dim; ++m) {
        json row = json::array();
        for (int l = 0; l < spec.n_dim; ++l) {
            row.push_back(complex_to_json(spec.coeff(m, l)));
        }
        rows.push_back(std::move(row));
    }
    const json j = {{"n_dim", spec.n_dim}, {"coeffs", std::move(rows)}};
    write_json_file(j, path);
}

std::string format_sig12(double value) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", value);
    return buf;
}

void write_wigner_csv(const WignerGrid& grid, std::ostream& os) {
    const int n = grid.n_dim;
    if (grid.kind == SystemKind::single) {
        os << "q,p,w\n";
        for (int q = 0; q < n; ++q) {
            for (int p = 0; p < n; ++p) {
                os << q << ',' << p << ',' << format_sig12(grid.at(q, p))
                   << '\n';
            }
        }
        return;
    }
    os << "q1,q2,p1,p2,w\n";
    for (int q1 = 0; q1 < n; ++q1) {
        for (int q2 = 0; q2 < n; ++q2) {
            for (int p1 = 0; p1 < n; ++p1) {
                for (int p2 = 0; p2 < n; ++p2) {
                    os << q1 << ',' << q2 << ',' << p1 << ',' << p2 << ','
                       << format_sig12(grid.at(q1, q2, p1, p2)) << '\n';
                }
            }
        }
    }
}

std::string pauli_report_json(const PauliReport& report) {
    const json j = {
        {"mean_original", report.mean_original},
        {"second_original", report.second_original},
        {"var_original", report.var_original},
        {"mean_pt", report.mean_pt},
        {"second_pt", report.second_pt},
        {"second_of_pt_op", report.second_of_pt_op},
        {"var_pt", report.var_pt},
        {"matches_expected", pauli_report_matches(report)},
    };
    return j.dump(2);
}

}  // namespace qpt
