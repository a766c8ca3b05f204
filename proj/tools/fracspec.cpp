// Command-line front end: solve single problems, run convergence / penalty /
// eigenvalue sweeps and the diffusion simulation, and emit CSV data.

#include "fracspec/problems.hpp"
#include "fracspec/util.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>
#include <thread>

namespace fs = fracspec;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInputError = 1;
constexpr int kExitNumericalError = 2;

struct ProblemFlags {
    double alpha = 1.5;
    double p = 0.8;
    double c = 0.0;
    std::string deriv = "rl";
    std::string bc = "fdbc";
    std::string rhs = "manufactured-1mx2sq";
    bool g1_set = false, g2_set = false, wa_set = false, wb_set = false;
    double g1 = 0.0, g2 = 0.0, wa = 0.0, wb = 0.0;

    void add_to(CLI::App* cmd) {
        cmd->add_option("--alpha", alpha, "fractional order in (1,2)");
        cmd->add_option("--p", p, "left/right mixing weight in [0,1]");
        cmd->add_option("--c", c, "reaction coefficient (>= 0)");
        cmd->add_option("--deriv", deriv, "derivative kind: rl | caputo");
        cmd->add_option("--bc", bc, "boundary family: fdbc | rl-fnbc | dirichlet | caputo-fnbc");
        std::string rhs_help = "right-hand side registry name:";
        for (const auto& name : fs::rhs_registry_names()) rhs_help += " " + name;
        cmd->add_option("--rhs", rhs, rhs_help);
        cmd->add_option("--g1", g1, "left boundary datum")->each([this](const std::string&) { g1_set = true; });
        cmd->add_option("--g2", g2, "right boundary datum")->each([this](const std::string&) { g2_set = true; });
        cmd->add_option("--weight-a", wa, "inner-product weight exponent on (1-x)")
            ->each([this](const std::string&) { wa_set = true; });
        cmd->add_option("--weight-b", wb, "inner-product weight exponent on (1+x)")
            ->each([this](const std::string&) { wb_set = true; });
    }
};

fs::DerivKind parse_deriv(const std::string& s) {
    if (s == "rl" || s == "riemann-liouville") return fs::DerivKind::RiemannLiouville;
    if (s == "caputo") return fs::DerivKind::Caputo;
    throw std::invalid_argument("unknown derivative kind '" + s + "' (use rl | caputo)");
}

fs::BcKind parse_bc(const std::string& s) {
    if (s == "fdbc") return fs::BcKind::FracDirichlet;
    if (s == "rl-fnbc") return fs::BcKind::RlFracNeumann;
    if (s == "dirichlet") return fs::BcKind::Dirichlet;
    if (s == "caputo-fnbc") return fs::BcKind::CaputoFracNeumann;
    throw std::invalid_argument("unknown BC family '" + s +
                                "' (use fdbc | rl-fnbc | dirichlet | caputo-fnbc)");
}

fs::Method parse_method(const std::string& s) {
    if (s == "spm") return fs::Method::Spm;
    if (s == "tau") return fs::Method::PgsTau;
    throw std::invalid_argument("unknown method '" + s + "' (use spm | tau)");
}

std::function<double(double)> exact_for_rhs(const std::string& name) {
    if (name == "manufactured-1mx2sq") {
        return [](double x) { return (1.0 - x * x) * (1.0 - x * x); };
    }
    if (name == "manufactured-x3p1") {
        return [](double x) { return x * x * x + 1.0; };
    }
    if (name == "manufactured-cospi") {
        return [](double x) { return std::cos(3.14159265358979323846 * x); };
    }
    return {};
}

fs::ProblemSpec build_spec(const ProblemFlags& f) {
    fs::ProblemSpec spec;
    spec.alpha = f.alpha;
    spec.p = f.p;
    spec.c = f.c;
    spec.deriv = parse_deriv(f.deriv);
    spec.bc = parse_bc(f.bc);
    spec.weight = fs::default_weight(spec.bc, spec.alpha);
    if (f.wa_set) spec.weight.a = f.wa;
    if (f.wb_set) spec.weight.b = f.wb;
    spec.rhs = fs::make_rhs(f.rhs, spec.alpha, spec.p, spec.c, spec.deriv);

    // Manufactured runs default to the boundary data of their exact solution.
    if (f.rhs == "manufactured-1mx2sq") {
        const std::vector<double> cs{0.0, 0.0, 4.0, -4.0, 1.0};
        spec.g1 = fs::manufactured_boundary_value(spec.bc, cs, cs, spec.alpha, spec.p, -1);
        spec.g2 = fs::manufactured_boundary_value(spec.bc, cs, cs, spec.alpha, spec.p, +1);
    } else if (f.rhs == "manufactured-x3p1") {
        const std::vector<double> cl{0.0, 3.0, -3.0, 1.0}, cr{2.0, -3.0, 3.0, -1.0};
        spec.g1 = fs::manufactured_boundary_value(spec.bc, cl, cr, spec.alpha, spec.p, -1);
        spec.g2 = fs::manufactured_boundary_value(spec.bc, cl, cr, spec.alpha, spec.p, +1);
    } else if (f.rhs == "manufactured-cospi") {
        spec.g1 = spec.g2 = -1.0;
    }
    if (f.g1_set) spec.g1 = f.g1;
    if (f.g2_set) spec.g2 = f.g2;
    spec.validate();
    return spec;
}

std::string output_dir(const std::string& flag_dir) {
    if (!flag_dir.empty()) return flag_dir;
    if (const char* env = std::getenv("FRACSPEC_OUT_DIR")) return env;
    return ".";
}

std::string resolve_output(const std::string& out_flag, const std::string& dir, const std::string& fallback) {
    std::filesystem::path p = out_flag.empty() ? std::filesystem::path(fallback) : std::filesystem::path(out_flag);
    if (p.is_relative()) p = std::filesystem::path(output_dir(dir)) / p;
    std::error_code ec;
    std::filesystem::create_directories(p.parent_path(), ec);
    return p.string();
}

void write_metadata(std::ofstream& out, const std::map<std::string, std::string>& digest) {
    for (const auto& [k, v] : digest) out << "# " << k << '=' << v << '\n';
}

void write_convergence_csv(const std::string& path, const std::vector<fs::ConvergenceReport>& reports) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open output file " + path);
    if (!reports.empty()) write_metadata(out, reports.front().spec_digest);
    out << "method,N,alpha,p,c,bc,rho_minus,rho_plus,linf_error,decay_ratio\n";
    for (const auto& report : reports) {
        const auto& d = report.spec_digest;
        const char* method = report.method == fs::Method::Spm ? "spm" : "tau";
        for (const auto& row : report.rows) {
            out << method << ',' << row.order << ',' << d.at("alpha") << ',' << d.at("p") << ','
                << d.at("c") << ',' << d.at("bc") << ',' << fs::format_g17(row.rho_minus) << ','
                << fs::format_g17(row.rho_plus) << ',' << fs::format_g17(row.linf_error) << ','
                << fs::format_g17(row.decay_ratio) << '\n';
            std::cout << method << " N=" << row.order << " linf=" << fs::format_g17(row.linf_error)
                      << " ratio=" << fs::format_g17(row.decay_ratio) << '\n';
        }
    }
}

int default_threads() {
    const unsigned hc = std::thread::hardware_concurrency();
    return hc == 0 ? 1 : static_cast<int>(hc);
}

int run_selftest(unsigned seed);

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Spectral penalty and Petrov-Galerkin tau solvers for conservative two-sided "
                 "fractional differential equations"};
    app.require_subcommand(1);

    app.set_config("--config", "", "flat key=value config file; flags override file values");

    ProblemFlags flags;
    std::string out_flag, dir_flag;
    int threads = default_threads();
    unsigned seed = 12345;
    app.add_option("--out-dir", dir_flag, "output directory (default: FRACSPEC_OUT_DIR or '.')");
    app.add_option("--threads", threads, "worker pool size for sweeps");
    app.add_option("--seed", seed, "seed for randomized self-tests");

    auto* cmd_solve = app.add_subcommand("solve", "solve one problem and write x,u samples")->fallthrough();
    flags.add_to(cmd_solve);
    int solve_n = 32;
    std::string method_str = "spm";
    double rho_mult = 1.0;
    cmd_solve->add_option("--N", solve_n, "polynomial order");
    cmd_solve->add_option("--method", method_str, "spm | tau");
    cmd_solve->add_option("--rho-mult", rho_mult, "penalty parameter multiplier (SPM)");
    cmd_solve->add_option("--output", out_flag, "output CSV path");

    auto* cmd_conv = app.add_subcommand("converge", "L-infinity error sweep over N")->fallthrough();
    flags.add_to(cmd_conv);
    std::vector<int> n_list{8, 16, 32, 64};
    std::vector<std::string> methods{"spm"};
    int ref_n = 512;
    cmd_conv->add_option("--N-list", n_list, "orders, ascending");
    cmd_conv->add_option("--methods", methods, "any of: spm tau");
    cmd_conv->add_option("--ref-N", ref_n, "reference order when no exact solution exists");
    cmd_conv->add_option("--output", out_flag, "output CSV path");

    auto* cmd_pen = app.add_subcommand("penalty-sweep", "error at fixed N versus penalty multiplier")->fallthrough();
    flags.add_to(cmd_pen);
    int pen_n = 64;
    std::vector<double> rho_mults{1e-3, 1e-2, 1e-1, 1.0, 1e1, 1e2, 1e3};
    cmd_pen->add_option("--N", pen_n, "polynomial order");
    cmd_pen->add_option("--rho-mults", rho_mults, "multipliers applied to the theoretical rho");
    cmd_pen->add_option("--ref-N", ref_n, "reference order when no exact solution exists");
    cmd_pen->add_option("--output", out_flag, "output CSV path");

    auto* cmd_eig = app.add_subcommand("eigen-sweep", "minimum eigenvalue real part over (alpha, p)")->fallthrough();
    flags.add_to(cmd_eig);
    std::vector<double> alpha_list{1.1, 1.2, 1.3, 1.4, 1.5, 1.6, 1.7, 1.8, 1.9};
    std::vector<double> p_list{0.5, 0.8};
    int eig_n = 100;
    cmd_eig->add_option("--alpha-list", alpha_list, "fractional orders");
    cmd_eig->add_option("--p-list", p_list, "mixing weights");
    cmd_eig->add_option("--N", eig_n, "polynomial order");
    cmd_eig->add_option("--output", out_flag, "output CSV path");

    auto* cmd_diff = app.add_subcommand("diffuse", "implicit-Euler fractional diffusion with no-flux BCs")->fallthrough();
    std::string diff_deriv = "caputo";
    double diff_alpha = 1.5, diff_p = 0.25, diff_dt = 0.0025, diff_tend = 2.0;
    int diff_n = 100;
    std::vector<double> snapshot_times{0.0, 0.05, 0.1, 2.0};
    cmd_diff->add_option("--deriv", diff_deriv, "rl | caputo");
    cmd_diff->add_option("--alpha", diff_alpha, "fractional order");
    cmd_diff->add_option("--p", diff_p, "mixing weight");
    cmd_diff->add_option("--N", diff_n, "polynomial order");
    cmd_diff->add_option("--dt", diff_dt, "time step");
    cmd_diff->add_option("--t-end", diff_tend, "final time");
    cmd_diff->add_option("--snapshot-times", snapshot_times, "times to store full profiles");
    cmd_diff->add_option("--output", out_flag, "output prefix (writes <prefix>-snapshots.csv and <prefix>-mass.csv)");

    auto* cmd_self = app.add_subcommand("selftest", "quick internal consistency checks")->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitInputError;
    }

    try {
        if (cmd_solve->parsed()) {
            const fs::ProblemSpec spec = build_spec(flags);
            const fs::SolutionExpansion u = fs::solve(spec, solve_n, parse_method(method_str), rho_mult);
            const std::string path = resolve_output(out_flag, dir_flag, "solve.csv");
            std::ofstream out(path);
            if (!out) throw std::runtime_error("cannot open output file " + path);
            write_metadata(out, spec.digest());
            out << "# N=" << solve_n << "\n# method=" << method_str << "\nx,u\n";
            const fs::Vector xs = fs::error_grid();
            for (Eigen::Index i = 0; i < xs.size(); ++i) {
                out << fs::format_g17(xs[i]) << ',' << fs::format_g17(u.evaluate(xs[i])) << '\n';
            }
            const auto exact = exact_for_rhs(spec.rhs.name);
            if (exact) {
                std::cout << "N=" << solve_n << " linf=" << fs::format_g17(fs::linf_error(u, exact)) << '\n';
            }
            std::cout << "wrote " << path << '\n';
            return kExitOk;
        }

        if (cmd_conv->parsed() || cmd_pen->parsed()) {
            const fs::ProblemSpec spec = build_spec(flags);
            fs::ExperimentOptions opt;
            opt.reference_order = ref_n;
            opt.exact = exact_for_rhs(spec.rhs.name);
            opt.threads = threads;
            opt.cache_dir = output_dir(dir_flag) + "/refcache";
            std::vector<fs::ConvergenceReport> reports;
            std::string fallback;
            if (cmd_conv->parsed()) {
                for (const auto& m : methods) {
                    reports.push_back(fs::convergence_sweep(spec, n_list, parse_method(m), opt));
                }
                fallback = "converge.csv";
            } else {
                reports.push_back(fs::penalty_sweep(spec, pen_n, rho_mults, opt));
                fallback = "penalty-sweep.csv";
            }
            const std::string path = resolve_output(out_flag, dir_flag, fallback);
            write_convergence_csv(path, reports);
            std::cout << "wrote " << path << '\n';
            return kExitOk;
        }

        if (cmd_eig->parsed()) {
            const ProblemFlags base = flags;
            auto make_spec = [&base](double a, double p) {
                ProblemFlags f = base;
                f.alpha = a;
                f.p = p;
                f.rhs = "zero";
                return build_spec(f);
            };
            const auto rows = fs::eigen_sweep(make_spec, alpha_list, eig_n, p_list, threads);
            const std::string path = resolve_output(out_flag, dir_flag, "eigen-sweep.csv");
            std::ofstream out(path);
            if (!out) throw std::runtime_error("cannot open output file " + path);
            write_metadata(out, make_spec(flags.alpha, flags.p).digest());
            out << "alpha,p,N,min_real_part,min_symmetric_eig\n";
            for (const auto& r : rows) {
                out << fs::format_g17(r.alpha) << ',' << fs::format_g17(r.p) << ',' << eig_n << ','
                    << fs::format_g17(r.min_real_part) << ',' << fs::format_g17(r.min_symmetric_eig)
                    << '\n';
                std::cout << "alpha=" << r.alpha << " p=" << r.p
                          << " min_re=" << fs::format_g17(r.min_real_part) << '\n';
            }
            std::cout << "wrote " << path << '\n';
            return kExitOk;
        }

        if (cmd_diff->parsed()) {
            auto tent = [](double x) { return std::abs(x) < 0.2 ? 5.0 - 25.0 * std::abs(x) : 0.0; };
            const auto run = fs::diffusion_run(parse_deriv(diff_deriv), diff_alpha, diff_p, diff_n,
                                               diff_dt, diff_tend, tent, snapshot_times);
            const std::string prefix = out_flag.empty() ? "diffuse" : out_flag;
            const std::string snap_path =
                resolve_output(prefix + "-snapshots.csv", dir_flag, prefix + "-snapshots.csv");
            const std::string mass_path =
                resolve_output(prefix + "-mass.csv", dir_flag, prefix + "-mass.csv");
            std::ofstream snap(snap_path);
            if (!snap) throw std::runtime_error("cannot open output file " + snap_path);
            snap << "# deriv=" << diff_deriv << "\n# alpha=" << fs::format_g17(diff_alpha)
                 << "\n# p=" << fs::format_g17(diff_p) << "\n# N=" << diff_n
                 << "\n# dt=" << fs::format_g17(diff_dt) << "\ntime,x,u\n";
            const fs::Vector xs = fs::error_grid();
            for (const auto& [t, u] : run.snapshots) {
                for (Eigen::Index i = 0; i < xs.size(); ++i) {
                    snap << fs::format_g17(t) << ',' << fs::format_g17(xs[i]) << ','
                         << fs::format_g17(u.evaluate(xs[i])) << '\n';
                }
            }
            std::ofstream mass(mass_path);
            if (!mass) throw std::runtime_error("cannot open output file " + mass_path);
            mass << "time,mass\n";
            for (const auto& [t, m] : run.mass_series) {
                mass << fs::format_g17(t) << ',' << fs::format_g17(m) << '\n';
            }
            std::cout << "mass drift max |m-1| = ";
            double drift = 0.0;
            for (const auto& [t, m] : run.mass_series) drift = std::max(drift, std::abs(m - 1.0));
            std::cout << fs::format_g17(drift) << '\n';
            std::cout << "wrote " << snap_path << " and " << mass_path << '\n';
            return kExitOk;
        }

        if (cmd_self->parsed()) {
            return run_selftest(seed);
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "input error: " << e.what() << '\n';
        return kExitInputError;
    } catch (const std::domain_error& e) {
        std::cerr << "input error: " << e.what() << '\n';
        return kExitInputError;
    } catch (const std::exception& e) {
        std::cerr << "numerical failure: " << e.what() << '\n';
        return kExitNumericalError;
    }
    return kExitOk;
}

namespace {

int run_selftest(unsigned seed) {
    int failures = 0;
    auto check = [&failures](const std::string& name, bool ok) {
        std::cout << (ok ? "[PASS] " : "[FAIL] ") << name << '\n';
        if (!ok) ++failures;
    };

    // Gamma reflection.
    {
        bool ok = true;
        for (double x = 0.1; x < 0.95; x += 0.1) {
            const double r = fs::gamma_fn(x) * fs::gamma_fn(1.0 - x) * std::sin(3.14159265358979323846 * x) /
                             3.14159265358979323846;
            ok = ok && std::abs(r - 1.0) < 1e-12;
        }
        check("gamma reflection identity", ok);
    }

    // Quadrature weight sum against the Beta closed form.
    {
        const fs::JacobiParams ab{0.75, -0.25};
        const fs::QuadratureRule rule = fs::gauss_jacobi(24, ab);
        const double mass = std::pow(2.0, ab.a + ab.b + 1.0) * fs::gamma_fn(ab.a + 1.0) *
                            fs::gamma_fn(ab.b + 1.0) / fs::gamma_fn(ab.a + ab.b + 2.0);
        check("gauss-jacobi weight sum", std::abs(rule.weights.sum() - mass) < 1e-12 * mass);
    }

    // Compatibility solver residual across a grid.
    {
        bool ok = true;
        for (double alpha = 1.1; alpha < 1.95; alpha += 0.1) {
            for (double p = 0.0; p <= 1.0; p += 0.1) {
                const fs::FracParams fp = fs::solve_mu_nu(alpha, p);
                const double res = p * std::sin(3.14159265358979323846 * fp.mu) -
                                   (1.0 - p) * std::sin(3.14159265358979323846 * fp.nu);
                ok = ok && std::abs(res) < 1e-13 && std::abs(fp.mu + fp.nu - (alpha - 2.0)) < 1e-14;
            }
        }
        check("mu-nu compatibility residuals", ok);
    }

    // Penalty defining identity (Caputo FNBC) for random expansions.
    {
        std::mt19937 gen(seed);
        std::uniform_real_distribution<double> dist(-1.0, 1.0);
        const int n = 8;
        const fs::PenaltyConfig pen = fs::penalty_caputo_fnbc(n);
        const fs::QuadratureRule rule = fs::gauss_jacobi(n + 2, fs::JacobiParams{0.0, 0.0});
        bool ok = true;
        for (int trial = 0; trial < 5; ++trial) {
            fs::Vector c(n + 1);
            for (int k = 0; k <= n; ++k) c[k] = dist(gen);
            auto u = [&](double x) { return c.dot(fs::jacobi_all(n, fs::JacobiParams{0.0, 0.0}, x)); };
            double ip_minus = 0.0, ip_plus = 0.0;
            for (int q = 0; q < rule.size(); ++q) {
                ip_minus += rule.weights[q] * pen.q_minus.evaluate(rule.nodes[q]) * u(rule.nodes[q]);
                ip_plus += rule.weights[q] * pen.q_plus.evaluate(rule.nodes[q]) * u(rule.nodes[q]);
            }
            ok = ok && std::abs(pen.rho_minus * ip_minus + u(-1.0)) < 1e-11 &&
                 std::abs(pen.rho_plus * ip_plus - u(1.0)) < 1e-11;
        }
        check("caputo penalty zero-sum identity", ok);
    }

    // Zero data produces the zero solution.
    {
        fs::ProblemSpec spec;
        spec.alpha = 1.5;
        spec.p = 0.8;
        spec.c = 1.0;
        spec.deriv = fs::DerivKind::RiemannLiouville;
        spec.bc = fs::BcKind::FracDirichlet;
        spec.weight = fs::default_weight(spec.bc, spec.alpha);
        spec.rhs = fs::zero_rhs();
        const fs::SolutionExpansion u = fs::solve(spec, 16, fs::Method::Spm);
        check("zero problem yields zero solution", u.coeffs.cwiseAbs().maxCoeff() < 1e-12);
    }

    std::cout << (failures == 0 ? "selftest passed" : "selftest FAILED") << '\n';
    return failures == 0 ? kExitOk : kExitNumericalError;
}

}  // namespace
