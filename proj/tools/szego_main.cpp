// szego: Szego polynomials on the unit circle via the canonical
// representation, with an independent moment/recurrence oracle and the
// asymptotic predictions for Verblunsky coefficients and zero patterns.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <iostream>

#include "szego/canonical.hpp"
#include "szego/io.hpp"
#include "szego/parallel.hpp"

using namespace szego;

namespace {

struct CommonOpts {
    std::string config;
    std::string weight_path;
    std::string out;
    std::string zeros_path;
    std::string grid_path;
    std::string precision = "dd";
    std::string mode = "dominant";
    std::string window_box;  // x0,x1,y0,y1 for psi-grid
    int n = -1;
    int nmax = -1;
    int res = 200;
    double radius = -1.0;
    double window = -1.0;
};

// JSON config supplies defaults; explicit flags win
void apply_config(CLI::App* cmd, CommonOpts& o) {
    if (o.config.empty()) return;
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(read_text_file(o.config));
    } catch (const nlohmann::json::exception& e) {
        raise(ErrorKind::Config, std::string("run config parse failure: ") + e.what());
    }
    auto fill_str = [&](const char* flag, const char* key, std::string& slot) {
        if (cmd->count(flag) == 0 && j.contains(key)) slot = j[key].get<std::string>();
    };
    auto fill_int = [&](const char* flag, const char* key, int& slot) {
        if (cmd->count(flag) == 0 && j.contains(key)) slot = j[key].get<int>();
    };
    auto fill_dbl = [&](const char* flag, const char* key, double& slot) {
        if (cmd->count(flag) == 0 && j.contains(key)) slot = j[key].get<double>();
    };
    fill_str("--weight", "weight", o.weight_path);
    fill_str("--out", "out", o.out);
    fill_str("--zeros", "zeros", o.zeros_path);
    fill_str("--grid", "grid", o.grid_path);
    fill_str("--precision", "precision", o.precision);
    fill_str("--mode", "mode", o.mode);
    fill_str("--window-box", "window_box", o.window_box);
    fill_int("--n", "n", o.n);
    fill_int("--nmax", "nmax", o.nmax);
    fill_int("--res", "res", o.res);
    fill_dbl("--r", "r", o.radius);
    fill_dbl("--window", "window", o.window);
}

WeightSpec load_weight(const CommonOpts& o) {
    if (o.weight_path.empty()) raise(ErrorKind::Config, "--weight is required");
    return weight_from_json_file(o.weight_path);
}

double pick_radius(const CommonOpts& o, const SzegoData& data) {
    if (o.radius < 0.0) return default_radius(data.rho_hat);
    if (!(data.rho_hat < o.radius && o.radius < 1.0))
        raise(ErrorKind::Config, "radius must satisfy rho < r < 1");
    return o.radius;
}

void require(bool cond, const std::string& msg) {
    if (!cond) raise(ErrorKind::Config, msg);
}

void emit(const CommonOpts& o, const std::string& content) {
    if (o.out.empty()) {
        std::fputs(content.c_str(), stdout);
    } else {
        write_text_atomic(o.out, content);
    }
}

int alpha_start_degree(const SzegoData& data, double r) {
    const double lam = lambda_on_circle(data, r) * kLambdaSafety;
    return std::max(0, min_admissible_n(r, lam) - 1);
}

std::vector<Complex> zeros_from_option(const CommonOpts& o, const WeightSpec& w, int n) {
    if (!o.zeros_path.empty()) return read_point_csv(o.zeros_path);
    const auto result = oracle_run(w, n, PrecisionSpec::parse(o.precision));
    return zeros_aberth(result.monic_at(n));
}

int cmd_dump(const CommonOpts& o) {
    emit(o, szego_dump_json(build_szego(load_weight(o))));
    return 0;
}

int cmd_phi(const CommonOpts& o) {
    require(o.n >= 0, "--n is required");
    require(!o.grid_path.empty(), "--grid is required");
    const auto w = load_weight(o);
    const auto data = build_szego(w);
    const double r = pick_radius(o, data);
    const auto series = iterate(o.n, 40, data, r);
    const auto pts = read_point_csv(o.grid_path);
    std::vector<PhiRow> rows(pts.size());
    parallel_for(pts.size(), [&](std::size_t i) {
        const auto v = eval_phi(o.n, pts[i], series, data);
        rows[i] = {pts[i], v.value, v.bound};
    });
    emit(o, phi_csv(rows));
    return 0;
}

int cmd_verblunsky(const CommonOpts& o) {
    require(o.nmax >= 1, "--nmax is required");
    const auto w = load_weight(o);
    const auto data = build_szego(w);
    const double r = pick_radius(o, data);
    const int n0 = alpha_start_degree(data, r);
    if (n0 >= o.nmax) raise(ErrorKind::ConvergenceConditionViolated,
                            "no admissible degree below nmax; smallest usable n is " + std::to_string(n0));
    std::vector<VerblunskyEstimate> rows(static_cast<std::size_t>(o.nmax - n0));
    parallel_for(rows.size(), [&](std::size_t i) {
        rows[i] = verblunsky_canonical(n0 + static_cast<int>(i), data, r);
    });
    emit(o, verblunsky_csv(rows, n0));
    return 0;
}

int cmd_kappa(const CommonOpts& o) {
    require(o.nmax >= 1, "--nmax is required");
    const auto w = load_weight(o);
    const auto data = build_szego(w);
    const double r = pick_radius(o, data);
    const int n0 = alpha_start_degree(data, r);
    if (n0 > o.nmax) raise(ErrorKind::ConvergenceConditionViolated,
                           "no admissible degree at or below nmax; smallest usable n is " + std::to_string(n0));
    std::vector<RealWithBound> rows(static_cast<std::size_t>(o.nmax - n0 + 1));
    parallel_for(rows.size(), [&](std::size_t i) {
        rows[i] = kappa_canonical(n0 + static_cast<int>(i), data, r);
    });
    emit(o, kappa_csv(rows, n0));
    return 0;
}

int cmd_oracle(const CommonOpts& o) {
    require(o.nmax >= 1, "--nmax is required");
    emit(o, oracle_json(oracle_run(load_weight(o), o.nmax, PrecisionSpec::parse(o.precision))));
    return 0;
}

int cmd_compare(const CommonOpts& o) {
    require(o.nmax >= 1, "--nmax is required");
    const auto w = load_weight(o);
    const auto data = build_szego(w);
    const double r = pick_radius(o, data);
    const auto oracle = oracle_run(w, o.nmax, PrecisionSpec::parse(o.precision));

    CanonicalEstimates can;
    can.n_min = alpha_start_degree(data, r);
    if (can.n_min >= o.nmax)
        raise(ErrorKind::ConvergenceConditionViolated, "no admissible degrees below nmax");
    for (int n = can.n_min; n < o.nmax; ++n) {
        can.alphas.push_back(verblunsky_canonical(n, data, r));
        can.kappas.push_back(kappa_canonical(n, data, r));
        const auto series = iterate(n, 40, data, r);
        double bound = 0.0;
        can.monic.push_back(phi_coefficients(n, series, data, &bound));
        can.monic_bounds.push_back(bound);
    }
    const auto report = compare(can, oracle);
    emit(o, compare_json(report));
    std::fprintf(stderr, "compare: %zu degrees, all_within_bounds=%s\n", report.rows.size(),
                 report.all_within_bounds ? "true" : "false");
    return 0;
}

int cmd_zeros(const CommonOpts& o) {
    require(o.n >= 1, "--n is required");
    const auto w = load_weight(o);
    const auto result = oracle_run(w, o.n, PrecisionSpec::parse(o.precision));
    const auto roots = zeros_aberth(result.monic_at(o.n));
    emit(o, zero_clusters_csv(cluster_zeros(roots)));
    return 0;
}

int cmd_asymp(const CommonOpts& o) {
    require(o.n >= 0, "--n is required");
    require(!o.grid_path.empty(), "--grid is required");
    const auto w = load_weight(o);
    const auto data = build_szego(w);
    const auto pts = read_point_csv(o.grid_path);
    std::vector<PoleData> poles;
    if (w.has_closed_form()) poles = w.classify().de_poles;

    std::vector<ApproxRow> rows(pts.size());
    parallel_for(pts.size(), [&](std::size_t i) {
        Complex v;
        if (o.mode == "exterior")
            v = exterior_approx(o.n, pts[i], data);
        else if (o.mode == "residue")
            v = residue_approx(o.n, pts[i], poles, data);
        else if (o.mode == "dominant")
            v = dominant_approx(o.n, pts[i], poles, data);
        else
            raise(ErrorKind::Config, "mode must be exterior, residue or dominant");
        rows[i] = {pts[i], v};
    });
    emit(o, approx_csv(rows));
    return 0;
}

int cmd_clock(const CommonOpts& o) {
    require(o.n >= 1, "--n is required");
    const auto w = load_weight(o);
    const auto meta = w.classify();
    const auto pred = clock_predict(o.n, meta);
    const auto zeros = zeros_from_option(o, w, o.n);
    const double window = o.window > 0.0 ? o.window : 0.1 + std::max(0.0, pred.v_n - pred.radius);
    emit(o, clock_json(clock_report(zeros, pred, meta.de_poles, window), pred));
    return 0;
}

EssentialSign essential_kind_of(const WeightSpec& w) {
    require(w.kind() == WeightKind::EssentialExp, "this subcommand needs an essential weight");
    const Complex a = w.essential_center();
    if (std::abs(a.imag()) > kCircleTol || a.real() <= 0.0)
        raise(ErrorKind::Config, "saddle analysis assumes a real positive center; rotate the weight");
    return w.essential_sign();
}

int cmd_saddle(const CommonOpts& o) {
    require(o.n >= 4, "--n >= 4 is required");
    const auto w = load_weight(o);
    const auto kind = essential_kind_of(w);
    const auto saddle = saddle_solve(kind, w.essential_center().real(), o.n);
    emit(o, saddle_json(saddle, essential_verblunsky(saddle)));
    return 0;
}

int cmd_psi_grid(const CommonOpts& o) {
    require(o.n >= 4, "--n >= 4 is required");
    require(!o.window_box.empty(), "--window x0,x1,y0,y1 is required");
    const auto w = load_weight(o);
    const auto kind = essential_kind_of(w);
    const double a = w.essential_center().real();
    double x0, x1, y0, y1;
    require(std::sscanf(o.window_box.c_str(), "%lf,%lf,%lf,%lf", &x0, &x1, &y0, &y1) == 4,
            "--window must be x0,x1,y0,y1");
    const auto saddle = saddle_solve(kind, a, o.n);

    const int res = std::max(o.res, 2);
    std::vector<PsiRow> rows(static_cast<std::size_t>(res) * static_cast<std::size_t>(res));
    parallel_for(rows.size(), [&](std::size_t idx) {
        const int i = static_cast<int>(idx) % res;
        const int j = static_cast<int>(idx) / res;
        const Complex z(x0 + (x1 - x0) * i / (res - 1), y0 + (y1 - y0) * j / (res - 1));
        Complex v;
        if (std::abs(z) < 1e-12 || std::abs(z - Complex(a, 0.0)) < 1e-12) {
            v = {std::numeric_limits<double>::quiet_NaN(), 0.0};
        } else {
            v = psi_value(kind, a, o.n, z) - saddle.psi_at_saddle;
        }
        rows[idx] = {z, v};
    });
    emit(o, psi_csv(rows));
    return 0;
}

int cmd_plot_zeros(const CommonOpts& o) {
    require(o.n >= 1, "--n is required");
    const auto w = load_weight(o);
    const auto zeros = zeros_from_option(o, w, o.n);

    std::vector<GuideCircle> guides;
    std::vector<Complex> markers;
    if (w.has_closed_form()) {
        const auto meta = w.classify();
        if (!meta.de_poles.empty()) {
            guides.push_back({clock_predict(o.n, meta).radius, true});
            for (const auto& p : meta.de_poles) markers.push_back(p.location);
        }
        if (meta.has_essential) {
            guides.push_back({meta.rho, true});
            markers.push_back(w.essential_center());
        }
    }
    emit(o, render_svg_zeros(zeros, guides, markers));
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Szego polynomials via iterated Cauchy transforms, with oracle and asymptotics"};
    app.require_subcommand(1);

    CommonOpts o;
    std::string command;
    const struct {
        const char* name;
        const char* help;
        int (*run)(const CommonOpts&);
    } commands[] = {
        {"dump", "emit tau, log-weight Fourier coefficients, Laurent band of F and rho", cmd_dump},
        {"phi", "evaluate Phi_n with certified bounds on a point grid", cmd_phi},
        {"verblunsky", "canonical Verblunsky coefficients with bounds", cmd_verblunsky},
        {"kappa", "canonical leading coefficients with bounds", cmd_kappa},
        {"oracle", "moment/Levinson ground truth in the chosen precision", cmd_oracle},
        {"compare", "canonical-versus-oracle error report", cmd_compare},
        {"zeros", "oracle zeros of Phi_n with multiplicity clustering", cmd_zeros},
        {"asymp", "exterior/residue/dominant approximations on a grid", cmd_asymp},
        {"clock", "bulk-zero clock statistics against the prediction", cmd_clock},
        {"saddle", "saddle points and Verblunsky asymptotics of an essential weight", cmd_saddle},
        {"psi-grid", "grid export of Psi_n - Psi_n(t_+) for level-curve plots", cmd_psi_grid},
        {"plot-zeros", "deterministic SVG of zeros with guide circles", cmd_plot_zeros},
    };

    for (const auto& c : commands) {
        auto* cmd = app.add_subcommand(c.name, c.help);
        cmd->add_option("--config", o.config, "JSON run configuration; explicit flags override");
        cmd->add_option("--weight", o.weight_path, "weight JSON file");
        cmd->add_option("--out", o.out, "output path (stdout when omitted)");
        cmd->add_option("--zeros", o.zeros_path, "zeros CSV (re,im per line)");
        cmd->add_option("--grid", o.grid_path, "evaluation grid CSV (re,im per line)");
        cmd->add_option("--precision", o.precision, "oracle precision: f64 | dd | d<digits>");
        cmd->add_option("--mode", o.mode, "asymp mode: exterior | residue | dominant");
        cmd->add_option("--window-box", o.window_box, "psi-grid window x0,x1,y0,y1");
        cmd->add_option("--window", o.window, "clock radial window around v_n");
        cmd->add_option("--n", o.n, "polynomial degree");
        cmd->add_option("--nmax", o.nmax, "largest degree");
        cmd->add_option("--res", o.res, "psi-grid resolution per axis");
        cmd->add_option("--r", o.radius, "working radius override, rho < r < 1");
        cmd->callback([&command, name = std::string(c.name)] { command = name; });
    }

    CLI11_PARSE(app, argc, argv);

    try {
        for (const auto& c : commands) {
            if (command == c.name) {
                apply_config(app.get_subcommand(command.c_str()), o);
                return c.run(o);
            }
        }
        raise(ErrorKind::Config, "no subcommand selected");
    } catch (const Error& e) {
        nlohmann::json err{{"error", error_name(e.kind())}, {"message", e.what()}};
        std::cerr << err.dump() << "\n";
        return exit_code_for(e.kind());
    } catch (const std::exception& e) {
        nlohmann::json err{{"error", "Internal"}, {"message", e.what()}};
        std::cerr << err.dump() << "\n";
        return 1;
    }
}
