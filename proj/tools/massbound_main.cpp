// massbound: certified lower bounds on the least mass-matrix eigenvalue from
// left/right eigenvector pairs, plus admissibility checks for mass deltas.
//
// Exit codes: 0 success (or admissible), 1 input error, 2 numerical failure,
// 3 perturbation not certified.

#include <cstdio>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "massbound/massbound.hpp"

namespace {

using namespace massbound;

std::vector<double> make_grid(double lo, double hi, double step) {
    if (!(step > 0.0)) throw InvalidArgument("alpha-step must be positive");
    if (!(lo < hi)) throw InvalidArgument("alpha-min must be below alpha-max");
    std::vector<double> grid;
    for (double a = lo; a <= hi + 0.5 * step; a += step) grid.push_back(a);
    return grid;
}

struct SweepConfig {
    std::string modal_path;
    std::string system_path;
    std::string mode = "auto";
    double alpha_min = 0.0, alpha_max = 0.0, alpha_step = 0.0;
    bool grid_given = false;
    std::string out_path;
    std::string plot_path;
    std::string format = "csv";
};

void run_sweep(const SweepConfig& cfg) {
    const ModalData modal = io::load_modal(cfg.modal_path);
    const std::vector<double> g1 = modal.left(0);
    const std::vector<double> v1 = modal.right(0);

    std::string mode = cfg.mode;
    if (mode == "auto") mode = cfg.system_path.empty() ? "blind" : "oracle";
    if (mode == "oracle" && cfg.system_path.empty())
        throw InvalidArgument("oracle mode needs --system");

    std::optional<std::vector<double>> spectrum;
    if (mode == "oracle")
        spectrum = sym_eigen(io::load_system(cfg.system_path).mass()).values;

    std::vector<double> grid;
    if (cfg.grid_given) {
        grid = make_grid(cfg.alpha_min, cfg.alpha_max, cfg.alpha_step);
    } else if (spectrum) {
        const double hi = 1.5 * 0.5 * ((*spectrum)[0] + (*spectrum)[1]);
        grid = make_grid(0.0, hi, hi / 600.0);
    } else {
        const MassEstimate est = estimate_mass(modal.left_vectors(), modal.right_vectors());
        const double hi = 1.2 * est.recommended_alpha() * 2.0;
        if (!(hi > 0.0))
            throw InvalidArgument("degenerate default grid; pass --alpha-min/--alpha-max/--alpha-step");
        grid = make_grid(0.0, hi, hi / 600.0);
    }

    SweepResult result = sweep(
        g1, v1, grid,
        spectrum ? std::optional<std::span<const double>>(*spectrum) : std::nullopt);

    const std::string text =
        cfg.format == "json" ? io::sweep_to_json_text(result) : io::sweep_to_csv(result);
    if (cfg.out_path.empty())
        std::cout << text;
    else
        io::write_file(cfg.out_path, text);

    if (!cfg.plot_path.empty()) {
        std::optional<double> marker;
        if (spectrum) marker = (*spectrum)[0];
        io::write_file(cfg.plot_path, svg::render_sweep(result, marker));
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"lower bounds on the least eigenvalue of an unobserved mass matrix"};
    app.require_subcommand(1);

    // gen
    std::string gen_name, gen_out;
    CLI::App* gen = app.add_subcommand("gen", "write a built-in reference system (M1 or M2)");
    gen->add_option("name", gen_name, "system name: M1 or M2")->required();
    gen->add_option("--out", gen_out, "output system JSON path")->required();
    gen->callback([&] { io::write_file(gen_out, io::system_to_json_text(reference_system(gen_name))); });

    // modal
    std::string modal_system, modal_out;
    std::size_t modal_k = 0;
    CLI::App* modal = app.add_subcommand("modal", "solve a system and write truncated modal data");
    modal->add_option("system", modal_system, "system JSON path")->required();
    modal->add_option("--k", modal_k, "retained pairs (default: all)");
    modal->add_option("--out", modal_out, "output modal JSON path")->required();
    modal->callback([&] {
        const MassStiffnessSystem sys = io::load_system(modal_system);
        const std::size_t k = modal_k == 0 ? sys.n() : modal_k;
        if (k > sys.n()) throw InvalidArgument("--k exceeds system dimension");
        io::write_file(modal_out, io::modal_to_json_text(solve_pencil(sys).truncated(k)));
    });

    // sweep
    SweepConfig sweep_cfg;
    CLI::App* sw = app.add_subcommand("sweep", "evaluate the bound curve F(alpha) over a grid");
    sw->add_option("modal", sweep_cfg.modal_path, "modal JSON path")->required();
    sw->add_option("--system", sweep_cfg.system_path, "system JSON (enables oracle mode)");
    sw->add_option("--mode", sweep_cfg.mode, "oracle|blind (default: oracle when --system given)")
        ->check(CLI::IsMember({"oracle", "blind", "auto"}));
    CLI::Option* amin = sw->add_option("--alpha-min", sweep_cfg.alpha_min, "grid start");
    CLI::Option* amax = sw->add_option("--alpha-max", sweep_cfg.alpha_max, "grid end");
    CLI::Option* astep = sw->add_option("--alpha-step", sweep_cfg.alpha_step, "grid step");
    amin->needs(amax, astep);
    amax->needs(amin, astep);
    astep->needs(amin, amax);
    sw->add_option("--out", sweep_cfg.out_path, "output path (default: stdout)");
    sw->add_option("--plot", sweep_cfg.plot_path, "SVG plot path");
    sw->add_option("--format", sweep_cfg.format, "csv|json (default csv)")
        ->check(CLI::IsMember({"csv", "json"}));
    sw->callback([&] {
        sweep_cfg.grid_given = amin->count() > 0;
        run_sweep(sweep_cfg);
    });

    // estimate
    std::string est_modal, est_out;
    CLI::App* est = app.add_subcommand("estimate", "reconstruct M' = G V+ and recommend alpha");
    est->add_option("modal", est_modal, "modal JSON path")->required();
    est->add_option("--out", est_out, "output path (default: stdout)");
    est->callback([&] {
        const ModalData md = io::load_modal(est_modal);
        const std::string text =
            io::estimate_to_json_text(estimate_mass(md.left_vectors(), md.right_vectors()));
        if (est_out.empty())
            std::cout << text;
        else
            io::write_file(est_out, text);
    });

    // reproduce
    std::string rep_out;
    CLI::App* rep = app.add_subcommand("reproduce", "run both reference systems at k = 1, 3, 5");
    rep->add_option("--out", rep_out, "report JSON path");
    rep->callback([&] {
        const ReproduceReport report = reproduce();
        std::cout << reproduce_to_table_text(report);
        if (!rep_out.empty()) io::write_file(rep_out, reproduce_to_json_text(report));
    });

    // check-perturb
    std::string chk_delta;
    double chk_bound = 0.0;
    bool chk_admissible = false;
    CLI::App* chk = app.add_subcommand("check-perturb",
                                       "certify a mass delta against a lower bound on w1");
    chk->add_option("delta", chk_delta, "mass delta JSON path")->required();
    chk->add_option("--bound", chk_bound, "certified lower bound L <= w1(M)")->required();
    chk->callback([&] {
        const AdmissibilityVerdict v =
            admissible_perturbation(chk_bound, io::load_symmetric_matrix(chk_delta));
        std::cout << (v.admissible ? "admissible" : "not-certified") << " (margin "
                  << io::format_number(v.margin, io::kCsvDigits) << ")\n";
        chk_admissible = v.admissible;
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    } catch (const ParseError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 1;
    } catch (const InvalidArgument& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 1;
    } catch (const DimensionMismatch& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 1;
    } catch (const DuplicatePair& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 1;
    } catch (const PreconditionViolated& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 1;
    } catch (const Error& e) {
        std::cerr << "numerical failure: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 1;
    }
    if (app.got_subcommand("check-perturb") && !chk_admissible) return 3;
    return 0;
}
