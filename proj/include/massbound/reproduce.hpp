#pragma once

#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "massbound/bounds.hpp"
#include "massbound/estimation.hpp"
#include "massbound/io.hpp"
#include "massbound/modal.hpp"
#include "massbound/reference_systems.hpp"
#include "massbound/sym_eigen.hpp"

namespace massbound {

// One truncation level of the reproduction run.
struct ReproduceRun {
    std::size_t k = 0;
    double rho = 0.0;
    double recommended_alpha = 0.0;
    double f_at_recommended = 0.0;
    bool window_valid = false;
    double window_margin = 0.0;
};

struct ReproduceSystem {
    std::string name;
    double true_w1 = 0.0;
    double w2 = 0.0;
    double window_edge = 0.0;
    double reference_lower_bound = 0.0;
    std::vector<ReproduceRun> runs;  // k = 1, 3, 5
    double sweep_max = 0.0;
    double sweep_argmax = 0.0;
    bool recommended_matches = false;  // |f_at_recommended(k=3) - reference| <= tolerance
    bool sweep_matches = false;        // |sweep_max - reference| <= tolerance
    bool pass = false;
    std::string alpha_selection_note;  // nonempty when neither recipe matches
};

struct ReproduceReport {
    double tolerance = 0.5;
    std::vector<ReproduceSystem> systems;
};

// Deterministic end-to-end reproduction of the two reference chains at
// k = 1, 3, 5: recommended alpha = rho/2 from the reconstructed mass, the
// bound there, and the sweep maximum over the certified window.  Each k = 3
// result is compared against the published reference lower bound; when
// neither recipe lands within tolerance the discrepancy is documented
// instead of silently dropped.
inline ReproduceReport reproduce() {
    ReproduceReport report;
    const struct {
        const char* name;
        double reference;
    } targets[] = {{"M1", 6.8}, {"M2", 18.22}};

    for (const auto& target : targets) {
        const MassStiffnessSystem sys = reference_system(target.name);
        const ModalData modal = solve_pencil(sys);
        const std::vector<double> w = sym_eigen(sys.mass()).values;
        const std::vector<double> g1 = modal.left(0);
        const std::vector<double> v1 = modal.right(0);

        ReproduceSystem out;
        out.name = target.name;
        out.reference_lower_bound = target.reference;
        out.true_w1 = w[0];
        out.w2 = w[1];
        out.window_edge = 0.5 * (w[0] + w[1]);

        // oracle-mode default grid: the window edge at two thirds of the span
        const double hi = 1.5 * out.window_edge;
        std::vector<double> grid(601);
        for (std::size_t i = 0; i < grid.size(); ++i) grid[i] = static_cast<double>(i) * hi / 600.0;
        const SweepResult swept = sweep(g1, v1, grid, std::span<const double>(w));
        out.sweep_max = swept.best()->value;
        out.sweep_argmax = swept.best()->alpha;

        for (std::size_t k : {std::size_t{1}, std::size_t{3}, std::size_t{5}}) {
            const ModalData part = modal.truncated(k);
            const MassEstimate est = estimate_mass(part.left_vectors(), part.right_vectors());
            ReproduceRun run;
            run.k = k;
            run.rho = est.rho();
            run.recommended_alpha = est.recommended_alpha();
            run.f_at_recommended = f_alpha(g1, v1, run.recommended_alpha);
            const WindowCheck wc = validity_window(w, run.recommended_alpha);
            run.window_valid = wc.valid;
            run.window_margin = wc.margin;
            out.runs.push_back(run);
        }

        const ReproduceRun& k3 = out.runs[1];
        out.recommended_matches =
            std::abs(k3.f_at_recommended - target.reference) <= report.tolerance;
        out.sweep_matches = std::abs(out.sweep_max - target.reference) <= report.tolerance;
        out.pass = out.recommended_matches || out.sweep_matches;
        if (!out.pass) {
            const ReproduceRun& k5 = out.runs[2];
            out.alpha_selection_note =
                "neither recipe reproduces the reference lower bound " +
                io::format_number(target.reference, 6) + " at k = 3: F(alpha = rho/2) gives " +
                io::format_number(k3.f_at_recommended, 9) +
                " and the certified-window sweep maximum gives " +
                io::format_number(out.sweep_max, 9) + ".";
            if (std::abs(k5.f_at_recommended - target.reference) <= report.tolerance)
                out.alpha_selection_note +=
                    " The k = 5 recommended-alpha run gives " +
                    io::format_number(k5.f_at_recommended, 9) +
                    ", inside the tolerance, so the reference value most likely stems from"
                    " the complete-information recipe; which alpha selection produced the"
                    " reference number is ambiguous.";
        }
        report.systems.push_back(std::move(out));
    }
    return report;
}

inline std::string reproduce_to_json_text(const ReproduceReport& r) {
    std::string out = "{\n";
    out += "  \"tolerance\": " + io::format_number(r.tolerance, io::kJsonDigits) + ",\n";
    out += "  \"systems\": [\n";
    for (std::size_t s = 0; s < r.systems.size(); ++s) {
        const ReproduceSystem& sys = r.systems[s];
        out += "    {\n";
        out += "      \"name\": \"" + sys.name + "\",\n";
        out += "      \"true_w1\": " + io::format_number(sys.true_w1, io::kJsonDigits) + ",\n";
        out += "      \"w2\": " + io::format_number(sys.w2, io::kJsonDigits) + ",\n";
        out += "      \"window_edge\": " + io::format_number(sys.window_edge, io::kJsonDigits) + ",\n";
        out += "      \"reference_lower_bound\": " +
               io::format_number(sys.reference_lower_bound, io::kJsonDigits) + ",\n";
        out += "      \"runs\": [\n";
        for (std::size_t i = 0; i < sys.runs.size(); ++i) {
            const ReproduceRun& run = sys.runs[i];
            out += "        {\"k\": " + std::to_string(run.k) +
                   ", \"rho\": " + io::format_number(run.rho, io::kJsonDigits) +
                   ", \"recommended_alpha\": " +
                   io::format_number(run.recommended_alpha, io::kJsonDigits) +
                   ", \"f_at_recommended\": " +
                   io::format_number(run.f_at_recommended, io::kJsonDigits) +
                   ", \"window_valid\": " + (run.window_valid ? "true" : "false") +
                   ", \"window_margin\": " + io::format_number(run.window_margin, io::kJsonDigits) +
                   "}";
            if (i + 1 < sys.runs.size()) out += ",";
            out += "\n";
        }
        out += "      ],\n";
        out += "      \"sweep_max\": " + io::format_number(sys.sweep_max, io::kJsonDigits) + ",\n";
        out += "      \"sweep_argmax\": " + io::format_number(sys.sweep_argmax, io::kJsonDigits) + ",\n";
        out += "      \"recommended_matches\": " + std::string(sys.recommended_matches ? "true" : "false") + ",\n";
        out += "      \"sweep_matches\": " + std::string(sys.sweep_matches ? "true" : "false") + ",\n";
        out += "      \"pass\": " + std::string(sys.pass ? "true" : "false") + ",\n";
        out += "      \"alpha_selection_note\": \"" + sys.alpha_selection_note + "\"\n";
        out += "    }";
        if (s + 1 < r.systems.size()) out += ",";
        out += "\n";
    }
    out += "  ]\n}\n";
    return out;
}

inline std::string reproduce_to_table_text(const ReproduceReport& r) {
    const auto f = [](double v) {
        char buf[40];
        std::snprintf(buf, sizeof(buf), "%12.6f", v);
        return std::string(buf);
    };
    std::string out;
    out += "system   k          rho   alpha=rho/2      F(alpha)  window\n";
    for (const ReproduceSystem& sys : r.systems) {
        for (const ReproduceRun& run : sys.runs) {
            char margin[48];
            std::snprintf(margin, sizeof(margin), "%s (margin %.6f)",
                          run.window_valid ? "valid" : "invalid", run.window_margin);
            out += sys.name + "       " + std::to_string(run.k) + " " + f(run.rho) + "  " +
                   f(run.recommended_alpha) + "  " + f(run.f_at_recommended) + "  " + margin + "\n";
        }
    }
    out += "\n";
    for (const ReproduceSystem& sys : r.systems) {
        out += sys.name + ": true w1 = " + io::format_number(sys.true_w1, 9) +
               ", window edge (w1+w2)/2 = " + io::format_number(sys.window_edge, 9) + "\n";
        out += sys.name + ": sweep maximum inside window = " + io::format_number(sys.sweep_max, 9) +
               " at alpha = " + io::format_number(sys.sweep_argmax, 9) + "\n";
        const ReproduceRun& k3 = sys.runs[1];
        out += sys.name + ": reference lower bound " +
               io::format_number(sys.reference_lower_bound, 6) + " vs k=3 recipes: alpha=rho/2 -> " +
               io::format_number(k3.f_at_recommended, 9) +
               (sys.recommended_matches ? " [match]" : " [miss]") + ", sweep max -> " +
               io::format_number(sys.sweep_max, 9) + (sys.sweep_matches ? " [match]" : " [miss]") +
               " => " + (sys.pass ? "PASS" : "FAIL (documented)") + "\n";
        if (!sys.alpha_selection_note.empty())
            out += sys.name + ": note: " + sys.alpha_selection_note + "\n";
    }
    return out;
}

}  // namespace massbound
