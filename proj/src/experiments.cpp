#include "fracspec/experiments.hpp"

#include "fracspec/util.hpp"

#include <atomic>
#include <cmath>
#include <exception>
#include <filesystem>
#include <fstream>
#include <mutex>
#include <sstream>
#include <thread>

namespace fracspec {

namespace {

template <class F>
void parallel_for(int n, int threads, F&& body) {
    threads = std::max(1, std::min(threads, n));
    if (threads <= 1) {
        for (int i = 0; i < n; ++i) body(i);
        return;
    }
    std::atomic<int> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (int t = 0; t < threads; ++t) {
        pool.emplace_back([&] {
            for (int i = next.fetch_add(1); i < n; i = next.fetch_add(1)) {
                try {
                    body(i);
                } catch (...) {
                    std::lock_guard<std::mutex> lock(error_mutex);
                    if (!error) error = std::current_exception();
                    return;
                }
            }
        });
    }
    for (auto& th : pool) th.join();
    if (error) std::rethrow_exception(error);
}

}  // namespace

SolutionExpansion solve(const ProblemSpec& spec, int N, Method method, double rho_multiplier,
                        const AssemblyOptions& opt) {
    spec.validate();
    LinearSystem sys;
    if (method == Method::PgsTau) {
        sys = assemble_pgs_tau(spec, N, opt);
    } else {
        AssemblyOptions o = opt;
        o.rho_multiplier = rho_multiplier;
        sys = assemble_spm(spec, N, make_penalty(spec, N), o);
    }
    return SolutionExpansion{sys.basis, LuSolver(sys.matrix).solve(sys.rhs)};
}

Vector error_grid() {
    Vector x(1000);
    for (int j = 1; j <= 1000; ++j) x[j - 1] = -1.0 + 2.0 * j / 1001.0;
    return x;
}

double linf_error(const SolutionExpansion& u, const std::function<double(double)>& exact) {
    const Vector x = error_grid();
    double err = 0.0;
    for (Eigen::Index i = 0; i < x.size(); ++i) {
        err = std::max(err, std::abs(u.evaluate(x[i]) - exact(x[i])));
    }
    return err;
}

double linf_error(const SolutionExpansion& u, const SolutionExpansion& reference) {
    const Vector x = error_grid();
    double err = 0.0;
    for (Eigen::Index i = 0; i < x.size(); ++i) {
        err = std::max(err, std::abs(u.evaluate(x[i]) - reference.evaluate(x[i])));
    }
    return err;
}

namespace {

std::string cache_key(const ProblemSpec& spec, int N, Method method) {
    std::ostringstream os;
    for (const auto& [k, v] : spec.digest()) os << k << '=' << v << ';';
    os << "N=" << N << ";method=" << (method == Method::Spm ? "spm" : "tau") << ";v1";
    std::ostringstream hex;
    hex << std::hex << fnv1a(os.str());
    return hex.str();
}

std::filesystem::path cache_file(const std::string& dir, const std::string& key) {
    return std::filesystem::path(dir) / ("ref-" + key + ".txt");
}

void save_reference(const std::string& dir, const std::string& key, const ProblemSpec& spec,
                    const SolutionExpansion& u) {
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    std::ofstream out(cache_file(dir, key));
    if (!out) return;  // cache is best-effort
    for (const auto& [k, v] : spec.digest()) out << "# " << k << '=' << v << '\n';
    for (Eigen::Index i = 0; i < u.coeffs.size(); ++i) out << format_g17(u.coeffs[i]) << '\n';
}

bool load_reference(const std::string& dir, const std::string& key, SolutionExpansion& u) {
    std::ifstream in(cache_file(dir, key));
    if (!in) return false;
    std::vector<double> coeffs;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        coeffs.push_back(std::stod(line));
    }
    if (static_cast<int>(coeffs.size()) != u.basis.max_degree + 1) return false;
    u.coeffs = Eigen::Map<Vector>(coeffs.data(), coeffs.size());
    return true;
}

}  // namespace

SolutionExpansion reference_solution(const ProblemSpec& spec, const ExperimentOptions& opt) {
    const int N = opt.reference_order;
    if (!opt.cache_dir.empty()) {
        const std::string key = cache_key(spec, N, Method::Spm);
        const FracParams fp = solve_mu_nu(spec.alpha, spec.p);
        SolutionExpansion u;
        u.basis = BasisDescriptor{spec.deriv == DerivKind::RiemannLiouville ? BasisKind::PolyFractonomial
                                                                            : BasisKind::Legendre,
                                  N, fp};
        if (load_reference(opt.cache_dir, key, u)) return u;
        u = solve(spec, N, Method::Spm);
        save_reference(opt.cache_dir, key, spec, u);
        return u;
    }
    return solve(spec, N, Method::Spm);
}

namespace {

void fill_decay_ratios(std::vector<SweepRow>& rows) {
    for (std::size_t i = 0; i < rows.size(); ++i) {
        rows[i].decay_ratio =
            (i == 0 || rows[i - 1].linf_error == 0.0) ? 1.0 : rows[i].linf_error / rows[i - 1].linf_error;
    }
}

}  // namespace

ConvergenceReport convergence_sweep(const ProblemSpec& spec, const std::vector<int>& orders,
                                    Method method, const ExperimentOptions& opt) {
    for (std::size_t i = 1; i < orders.size(); ++i) {
        if (orders[i] <= orders[i - 1]) {
            throw std::invalid_argument("convergence_sweep: orders must be strictly increasing");
        }
    }
    ConvergenceReport report;
    report.method = method;
    report.spec_digest = spec.digest();

    std::function<double(double)> exact = opt.exact;
    SolutionExpansion reference;
    if (!exact) reference = reference_solution(spec, opt);

    report.rows.resize(orders.size());
    parallel_for(static_cast<int>(orders.size()), opt.threads, [&](int i) {
        const int N = orders[i];
        const SolutionExpansion u = solve(spec, N, method);
        SweepRow row;
        row.order = N;
        if (method == Method::Spm) {
            const PenaltyConfig pen = make_penalty(spec, N);
            row.rho_minus = pen.rho_minus;
            row.rho_plus = pen.rho_plus;
        }
        row.linf_error = exact ? linf_error(u, exact) : linf_error(u, reference);
        report.rows[i] = row;
    });
    fill_decay_ratios(report.rows);
    return report;
}

ConvergenceReport penalty_sweep(const ProblemSpec& spec, int N,
                                const std::vector<double>& rho_multipliers,
                                const ExperimentOptions& opt) {
    ConvergenceReport report;
    report.method = Method::Spm;
    report.spec_digest = spec.digest();
    if (rho_multipliers.empty()) return report;

    std::function<double(double)> exact = opt.exact;
    SolutionExpansion reference;
    if (!exact) reference = reference_solution(spec, opt);

    const PenaltyConfig pen = make_penalty(spec, N);
    report.rows.resize(rho_multipliers.size());
    parallel_for(static_cast<int>(rho_multipliers.size()), opt.threads, [&](int i) {
        const double m = rho_multipliers[i];
        const SolutionExpansion u = solve(spec, N, Method::Spm, m);
        SweepRow row;
        row.order = N;
        row.rho_minus = pen.rho_minus * m;
        row.rho_plus = pen.rho_plus * m;
        row.linf_error = exact ? linf_error(u, exact) : linf_error(u, reference);
        report.rows[i] = row;
    });
    fill_decay_ratios(report.rows);
    return report;
}

std::vector<EigenSweepRow> eigen_sweep(const std::function<ProblemSpec(double, double)>& make_spec,
                                       const std::vector<double>& alphas, int N,
                                       const std::vector<double>& p_list, int threads) {
    const int total = static_cast<int>(alphas.size() * p_list.size());
    std::vector<EigenSweepRow> rows(total);
    parallel_for(total, threads, [&](int idx) {
        const double alpha = alphas[idx / p_list.size()];
        const double p = p_list[idx % p_list.size()];
        ProblemSpec spec = make_spec(alpha, p);
        spec.rhs = zero_rhs();
        const LinearSystem sys = assemble_spm(spec, N, make_penalty(spec, N));
        const EigenSummary summary = eigen_summary(sys.matrix);
        rows[idx] = EigenSweepRow{alpha, p, summary.min_real_part, summary.min_symmetric_eig};
    });
    return rows;
}

SolutionExpansion project_initial(const BasisDescriptor& basis, const std::function<double(double)>& u0,
                                  const std::vector<double>& breakpoints) {
    const int N = basis.max_degree;
    // Panel edges: -1, interior breakpoints, 1. The projection integrand is
    // u0 P_k (the trial weight cancels against the orthogonality weight), so
    // plain Gauss panels aligned with the kinks integrate it accurately.
    std::vector<double> edges{-1.0};
    for (double b : breakpoints) {
        if (b > -1.0 && b < 1.0) edges.push_back(b);
    }
    edges.push_back(1.0);

    const JacobiParams params = basis.kind == BasisKind::PolyFractonomial
                                    ? JacobiParams{basis.frac.mu, basis.frac.nu}
                                    : JacobiParams{0.0, 0.0};
    const QuadratureRule panel = gauss_jacobi(32, JacobiParams{0.0, 0.0});
    Vector inner = Vector::Zero(N + 1);
    for (std::size_t e = 0; e + 1 < edges.size(); ++e) {
        const double half = 0.5 * (edges[e + 1] - edges[e]);
        const double mid = 0.5 * (edges[e + 1] + edges[e]);
        Vector xs = (half * panel.nodes.array() + mid).matrix();
        Vector fv(xs.size());
        for (Eigen::Index q = 0; q < xs.size(); ++q) fv[q] = u0(xs[q]) * panel.weights[q] * half;
        inner += jacobi_table(N, params, xs) * fv;
    }
    Vector coeffs(N + 1);
    for (int k = 0; k <= N; ++k) coeffs[k] = inner[k] / jacobi_norm(k, params);
    return SolutionExpansion{basis, std::move(coeffs)};
}

double expansion_mass(const SolutionExpansion& u) {
    if (u.basis.kind == BasisKind::Legendre) return 2.0 * u.coeffs[0];
    return u.coeffs[0] * jacobi_norm(0, JacobiParams{u.basis.frac.mu, u.basis.frac.nu});
}

DiffusionRun diffusion_run(DerivKind kind, double alpha, double p, int N, double dt, double t_end,
                           const std::function<double(double)>& initial,
                           const std::vector<double>& snapshot_times) {
    if (!(dt > 0.0) || !(t_end >= 0.0)) throw std::invalid_argument("diffusion_run: bad time parameters");
    const int steps = static_cast<int>(std::lround(t_end / dt));
    if (std::abs(steps * dt - t_end) > 1e-9) {
        throw std::invalid_argument("diffusion_run: t_end must be a multiple of dt");
    }

    ProblemSpec spec;
    spec.alpha = alpha;
    spec.p = p;
    spec.c = 0.0;
    spec.deriv = kind;
    spec.bc = kind == DerivKind::RiemannLiouville ? BcKind::RlFracNeumann : BcKind::CaputoFracNeumann;
    spec.rhs = zero_rhs();
    spec.weight = JacobiParams{0.0, 0.0};
    spec.validate_structure();

    const SpmOperator op = assemble_spm_parts(spec, N, make_penalty(spec, N));
    const LuSolver stepper(op.mass / dt - op.stiffness + op.boundary);

    SolutionExpansion u = project_initial(op.basis, initial);

    // Map requested snapshot times onto step indices.
    std::vector<std::pair<int, double>> snap_steps;
    for (double t : snapshot_times) {
        const int idx = static_cast<int>(std::lround(t / dt));
        if (idx < 0 || idx > steps || std::abs(idx * dt - t) > 1e-9) {
            throw std::invalid_argument("diffusion_run: snapshot times must be step multiples within range");
        }
        snap_steps.emplace_back(idx, t);
    }

    DiffusionRun run;
    run.dt = dt;
    run.steps = steps;
    run.mass_series.reserve(steps + 1);
    run.mass_series.emplace_back(0.0, expansion_mass(u));
    for (const auto& [idx, t] : snap_steps) {
        if (idx == 0) run.snapshots.emplace_back(t, u);
    }
    for (int n = 1; n <= steps; ++n) {
        u.coeffs = stepper.solve(op.mass * u.coeffs / dt);
        const double t = n * dt;
        run.mass_series.emplace_back(t, expansion_mass(u));
        for (const auto& [idx, ts] : snap_steps) {
            if (idx == n) run.snapshots.emplace_back(ts, u);
        }
    }
    return run;
}

}  // namespace fracspec
