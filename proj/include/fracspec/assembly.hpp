#pragma once

#include "fracspec/penalty.hpp"

#include <functional>
#include <map>
#include <string>

namespace fracspec {

enum class DerivKind { RiemannLiouville, Caputo };

enum class BcKind {
    FracDirichlet,      // I_p^{2-alpha} u(+-1) prescribed (R-L)
    RlFracNeumann,      // D_p^{alpha-1} u(+-1) prescribed (R-L)
    Dirichlet,          // u(+-1) prescribed (Caputo)
    CaputoFracNeumann,  // cD_p^{alpha-1} u(+-1) prescribed (Caputo)
};

enum class Method { Spm, PgsTau };

/// Right-hand side f split into singular closed-form pieces (exact weighted
/// quadrature) and a smooth remainder (high-order quadrature).
struct RightHandSide {
    std::vector<WeightedJacobiSum> singular_parts;
    std::function<double(double)> smooth;
    std::string name{"custom"};

    double evaluate(double x) const;
};

RightHandSide zero_rhs();

struct ProblemSpec {
    double alpha{1.5};
    double p{0.8};
    double c{0.0};
    DerivKind deriv{DerivKind::RiemannLiouville};
    BcKind bc{BcKind::FracDirichlet};
    double g1{0.0};
    double g2{0.0};
    RightHandSide rhs;
    JacobiParams weight{0.0, 0.0};  // inner-product weight exponents

    /// Ranges, derivative/BC compatibility, weight restrictions.
    void validate_structure() const;
    /// validate_structure plus the stationary-only restrictions
    /// (R-L fractional Neumann requires c > 0).
    void validate() const;

    std::map<std::string, std::string> digest() const;
};

struct AssemblyOptions {
    double rule_scale{1.0};  // multiplies every quadrature size
    int rhs_rule_size{0};    // size for the smooth-f rule; 0 means 2N+16
    double rho_multiplier{1.0};
};

/// The pieces of the penalty scheme: system matrix is -S + cM + B and the
/// right-hand side is f_hat + f_tilde.
struct SpmOperator {
    BasisDescriptor basis;
    Matrix stiffness;
    Matrix mass;
    Matrix boundary;
    Vector f_hat;
    Vector f_tilde;

    Matrix system_matrix(double c) const { return -stiffness + c * mass + boundary; }
};

struct LinearSystem {
    Matrix matrix;
    Vector rhs;
    Method method{Method::Spm};
    BasisDescriptor basis;
};

/// Assembles the penalty-scheme blocks for either derivative kind. Does not
/// apply the stationary-only validation (the diffusion stepper reuses these
/// blocks with c = 0).
SpmOperator assemble_spm_parts(const ProblemSpec& spec, int N, const PenaltyConfig& penalty,
                               const AssemblyOptions& opt = {});

LinearSystem assemble_spm(const ProblemSpec& spec, int N, const PenaltyConfig& penalty,
                          const AssemblyOptions& opt = {});

/// Tau variant: Galerkin rows for test indices 0..N-2, exact boundary rows
/// in place of the last two equations.
LinearSystem assemble_pgs_tau(const ProblemSpec& spec, int N, const AssemblyOptions& opt = {});

/// Theoretical penalty for the problem's boundary family at order N.
PenaltyConfig make_penalty(const ProblemSpec& spec, int N);

/// Weighted inner products (g, phi_i)_w for i = 0..N against the scheme's
/// test functions phi_i = lam_i P_i^{test}; exposed for entry-level tests.
Vector weighted_inner(const WeightedJacobiSum& g, const JacobiParams& test_params, const Vector& lam,
                      const JacobiParams& outer_weight, int N, double rule_scale = 1.0);

}  // namespace fracspec
