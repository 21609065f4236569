#pragma once

#include <cstdio>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "massbound/bounds.hpp"
#include "massbound/errors.hpp"
#include "massbound/estimation.hpp"
#include "massbound/matrix.hpp"
#include "massbound/modal.hpp"

namespace massbound::io {

// JSON carries 17 significant digits (bit-exact double round trips), CSV 9.
inline constexpr int kJsonDigits = 17;
inline constexpr int kCsvDigits = 9;

inline std::string format_number(double v, int significant_digits) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.*g", significant_digits, v);
    return buf;
}

namespace detail {

inline std::string number_list(std::span<const double> v, int digits) {
    std::string out = "[";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ", ";
        out += format_number(v[i], digits);
    }
    out += "]";
    return out;
}

inline std::string matrix_rows(const Matrix& m, int digits, const std::string& indent) {
    std::string out = "[\n";
    for (std::size_t i = 0; i < m.rows(); ++i) {
        out += indent + "  [";
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (j) out += ", ";
            out += format_number(m(i, j), digits);
        }
        out += "]";
        if (i + 1 < m.rows()) out += ",";
        out += "\n";
    }
    out += indent + "]";
    return out;
}

inline std::string matrix_columns(const Matrix& m, int digits, const std::string& indent) {
    std::string out = "[\n";
    for (std::size_t j = 0; j < m.cols(); ++j) {
        out += indent + "  " + number_list(m.col(j), digits);
        if (j + 1 < m.cols()) out += ",";
        out += "\n";
    }
    out += indent + "]";
    return out;
}

inline nlohmann::json parse_text(const std::string& text, const std::string& what) {
    nlohmann::json j = nlohmann::json::parse(text, nullptr, false);
    if (j.is_discarded()) throw ParseError(what + ": malformed JSON");
    return j;
}

inline nlohmann::json parse_file(const std::string& path, const std::string& what) {
    std::ifstream in(path);
    if (!in) throw ParseError(what + ": cannot open " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_text(ss.str(), what);
}

inline Matrix matrix_from_rows_json(const nlohmann::json& rows, const std::string& what) {
    if (!rows.is_array() || rows.empty() || !rows.front().is_array())
        throw ParseError(what + ": expected an array of row arrays");
    Matrix m(rows.size(), rows.front().size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const auto& row = rows[i];
        if (!row.is_array() || row.size() != m.cols())
            throw ParseError(what + ": ragged rows");
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (!row[j].is_number()) throw ParseError(what + ": non-numeric entry");
            m(i, j) = row[j].get<double>();
        }
    }
    return m;
}

inline std::vector<double> vector_from_json(const nlohmann::json& arr, const std::string& what) {
    if (!arr.is_array()) throw ParseError(what + ": expected an array");
    std::vector<double> v;
    v.reserve(arr.size());
    for (const auto& x : arr) {
        if (!x.is_number()) throw ParseError(what + ": non-numeric entry");
        v.push_back(x.get<double>());
    }
    return v;
}

}  // namespace detail

// ---- system files -----------------------------------------------------------
//
// Either explicit matrices:
//   {"n": 5, "mass": [[...], ...], "stiffness": [[...], ...]}
// or a chain description:
//   {"chain": {"masses": [...], "springs": [...]}}

inline MassStiffnessSystem system_from_json(const nlohmann::json& j) {
    if (j.contains("chain")) {
        const auto& c = j.at("chain");
        if (!c.contains("masses") || !c.contains("springs"))
            throw ParseError("system: chain needs masses and springs");
        return build_chain(detail::vector_from_json(c.at("masses"), "system.chain.masses"),
                           detail::vector_from_json(c.at("springs"), "system.chain.springs"));
    }
    if (!j.contains("n") || !j.contains("mass") || !j.contains("stiffness"))
        throw ParseError("system: need n, mass and stiffness (or a chain block)");
    const Matrix mass = detail::matrix_from_rows_json(j.at("mass"), "system.mass");
    const Matrix stiffness = detail::matrix_from_rows_json(j.at("stiffness"), "system.stiffness");
    const auto n = j.at("n").get<std::size_t>();
    if (mass.rows() != n || stiffness.rows() != n)
        throw ParseError("system: matrix dimensions disagree with n");
    try {
        return MassStiffnessSystem(SymmetricMatrix::from_full(mass),
                                   SymmetricMatrix::from_full(stiffness));
    } catch (const InvalidArgument& e) {
        throw ParseError(std::string("system: ") + e.what());
    } catch (const DimensionMismatch& e) {
        throw ParseError(std::string("system: ") + e.what());
    }
}

inline MassStiffnessSystem load_system(const std::string& path) {
    return system_from_json(detail::parse_file(path, "system"));
}

inline std::string system_to_json_text(const MassStiffnessSystem& sys) {
    std::string out = "{\n";
    out += "  \"n\": " + std::to_string(sys.n()) + ",\n";
    out += "  \"mass\": " + detail::matrix_rows(sys.mass().to_matrix(), kJsonDigits, "  ") + ",\n";
    out += "  \"stiffness\": " + detail::matrix_rows(sys.stiffness().to_matrix(), kJsonDigits, "  ") + "\n";
    out += "}\n";
    return out;
}

// ---- modal data files -------------------------------------------------------
//
//   {"k": 3, "eigenvalues": [...], "right": [[col], ...], "left": [[col], ...]}
//
// right/left are column-major: one inner array per retained eigenvector.

inline ModalData modal_from_json(const nlohmann::json& j) {
    if (!j.contains("k") || !j.contains("eigenvalues") || !j.contains("right") || !j.contains("left"))
        throw ParseError("modal: need k, eigenvalues, right and left");
    const auto k = j.at("k").get<std::size_t>();
    const std::vector<double> vals = detail::vector_from_json(j.at("eigenvalues"), "modal.eigenvalues");
    const auto read_cols = [k](const nlohmann::json& arr, const std::string& what) {
        if (!arr.is_array() || arr.size() != k)
            throw ParseError(what + ": expected k column arrays");
        std::vector<std::vector<double>> cols;
        cols.reserve(k);
        for (const auto& c : arr) cols.push_back(detail::vector_from_json(c, what));
        return Matrix::from_columns(cols);
    };
    if (vals.size() != k) throw ParseError("modal.eigenvalues: length must equal k");
    try {
        return ModalData(vals, read_cols(j.at("right"), "modal.right"),
                         read_cols(j.at("left"), "modal.left"));
    } catch (const Error& e) {
        throw ParseError(std::string("modal: ") + e.what());
    }
}

inline ModalData load_modal(const std::string& path) {
    return modal_from_json(detail::parse_file(path, "modal"));
}

inline std::string modal_to_json_text(const ModalData& modal) {
    std::string out = "{\n";
    out += "  \"k\": " + std::to_string(modal.k()) + ",\n";
    out += "  \"eigenvalues\": " + detail::number_list(modal.eigenvalues(), kJsonDigits) + ",\n";
    out += "  \"right\": " + detail::matrix_columns(modal.right_vectors(), kJsonDigits, "  ") + ",\n";
    out += "  \"left\": " + detail::matrix_columns(modal.left_vectors(), kJsonDigits, "  ") + "\n";
    out += "}\n";
    return out;
}

// ---- symmetric matrix files (mass deltas) -----------------------------------
//
// Either a bare array of rows or {"delta_mass": [[...], ...]}.

inline SymmetricMatrix symmetric_matrix_from_json(const nlohmann::json& j) {
    const nlohmann::json& rows = j.is_object() && j.contains("delta_mass") ? j.at("delta_mass") : j;
    const Matrix m = detail::matrix_from_rows_json(rows, "matrix");
    try {
        return SymmetricMatrix::from_full(m);
    } catch (const InvalidArgument& e) {
        throw ParseError(std::string("matrix: ") + e.what());
    } catch (const DimensionMismatch& e) {
        throw ParseError(std::string("matrix: ") + e.what());
    }
}

inline SymmetricMatrix load_symmetric_matrix(const std::string& path) {
    return symmetric_matrix_from_json(detail::parse_file(path, "matrix"));
}

// ---- sweep output -----------------------------------------------------------

inline std::string validity_label(const std::optional<bool>& valid) {
    if (!valid) return "unknown";
    return *valid ? "true" : "false";
}

inline std::string sweep_to_csv(const SweepResult& s) {
    std::string out = "alpha,F_alpha,valid\n";
    for (const BoundEvaluation& e : s.samples) {
        out += format_number(e.alpha, kCsvDigits);
        out += ",";
        out += format_number(e.value, kCsvDigits);
        out += ",";
        out += validity_label(e.valid);
        out += "\n";
    }
    return out;
}

inline std::string sweep_to_json_text(const SweepResult& s) {
    std::string out = "{\n  \"samples\": [\n";
    for (std::size_t i = 0; i < s.samples.size(); ++i) {
        const BoundEvaluation& e = s.samples[i];
        out += "    {\"alpha\": " + format_number(e.alpha, kJsonDigits) +
               ", \"F_alpha\": " + format_number(e.value, kJsonDigits) +
               ", \"valid\": \"" + validity_label(e.valid) + "\"";
        if (e.window_margin)
            out += ", \"window_margin\": " + format_number(*e.window_margin, kJsonDigits);
        out += "}";
        if (i + 1 < s.samples.size()) out += ",";
        out += "\n";
    }
    out += "  ],\n";
    if (s.best_index) {
        const BoundEvaluation& b = s.samples[*s.best_index];
        out += "  \"best\": {\"alpha\": " + format_number(b.alpha, kJsonDigits) +
               ", \"F_alpha\": " + format_number(b.value, kJsonDigits) + "}\n";
    } else {
        out += "  \"best\": null\n";
    }
    out += "}\n";
    return out;
}

inline std::string estimate_to_json_text(const MassEstimate& est) {
    std::string out = "{\n";
    out += "  \"k\": " + std::to_string(est.k()) + ",\n";
    out += "  \"rho\": " + format_number(est.rho(), kJsonDigits) + ",\n";
    out += "  \"recommended_alpha\": " + format_number(est.recommended_alpha(), kJsonDigits) + ",\n";
    out += "  \"m_prime\": " + detail::matrix_rows(est.m_prime(), kJsonDigits, "  ") + "\n";
    out += "}\n";
    return out;
}

inline void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ParseError("cannot open for writing: " + path);
    out << text;
    if (!out) throw ParseError("write failed: " + path);
}

}  // namespace massbound::io
