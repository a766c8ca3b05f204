#pragma once

#include "fracspec/assembly.hpp"
#include "fracspec/linalg.hpp"

#include <utility>

namespace fracspec {

/// Solves one boundary-value problem; for SPM the theoretical penalty is
/// built per BC family with rho scaled by rho_multiplier.
SolutionExpansion solve(const ProblemSpec& spec, int N, Method method, double rho_multiplier = 1.0,
                        const AssemblyOptions& opt = {});

/// The 1000 uniformly spaced strictly interior points x_j = -1 + 2j/1001.
Vector error_grid();

double linf_error(const SolutionExpansion& u, const std::function<double(double)>& exact);
double linf_error(const SolutionExpansion& u, const SolutionExpansion& reference);

struct SweepRow {
    int order{};  // N
    double rho_minus{};
    double rho_plus{};
    double linf_error{};
    double decay_ratio{1.0};  // error(k) / error(k-1); 1 for the first row
};

struct ConvergenceReport {
    Method method{Method::Spm};
    std::vector<SweepRow> rows;
    std::map<std::string, std::string> spec_digest;
};

struct ExperimentOptions {
    int reference_order{512};
    std::function<double(double)> exact;  // empty: compare against SPM reference
    std::string cache_dir;                // empty: no on-disk reference cache
    int threads{1};
};

/// The SPM reference solution used when no exact solution is available;
/// cached to disk (content-keyed) when cache_dir is set.
SolutionExpansion reference_solution(const ProblemSpec& spec, const ExperimentOptions& opt);

ConvergenceReport convergence_sweep(const ProblemSpec& spec, const std::vector<int>& orders,
                                    Method method, const ExperimentOptions& opt = {});

/// Error at fixed N as rho_+- are scaled by each multiplier (SPM only).
ConvergenceReport penalty_sweep(const ProblemSpec& spec, int N,
                                const std::vector<double>& rho_multipliers,
                                const ExperimentOptions& opt = {});

struct EigenSweepRow {
    double alpha{};
    double p{};
    double min_real_part{};
    double min_symmetric_eig{};
};

/// Spectrum diagnostics of the assembled SPM matrix over an (alpha, p) grid.
/// make_spec builds the problem for each grid point (so weights that depend
/// on alpha follow the sweep).
std::vector<EigenSweepRow> eigen_sweep(const std::function<ProblemSpec(double, double)>& make_spec,
                                       const std::vector<double>& alphas, int N,
                                       const std::vector<double>& p_list, int threads = 1);

struct DiffusionRun {
    std::vector<std::pair<double, SolutionExpansion>> snapshots;
    std::vector<std::pair<double, double>> mass_series;  // one entry per step
    double dt{};
    int steps{};
};

/// Implicit-Euler time stepping of the conservative diffusion equation with
/// homogeneous fractional Neumann (no-flux) boundaries:
///   (M/dt - S + B) u^{n+1} = (M/dt) u^n,
/// assembled and LU-factored once.
DiffusionRun diffusion_run(DerivKind kind, double alpha, double p, int N, double dt, double t_end,
                           const std::function<double(double)>& initial,
                           const std::vector<double>& snapshot_times = {0.0, 0.05, 0.1, 2.0});

/// Weighted L2 projection of u0 onto the trial space, integrated by
/// composite Gauss panels split at the given interior breakpoints.
SolutionExpansion project_initial(const BasisDescriptor& basis, const std::function<double(double)>& u0,
                                  const std::vector<double>& breakpoints = {-0.2, 0.0, 0.2});

/// int_{-1}^{1} u_N dx in closed form: u_0 gamma_0^{mu,nu} for the
/// poly-fractonomial basis, 2 u_0 for Legendre.
double expansion_mass(const SolutionExpansion& u);

}  // namespace fracspec
