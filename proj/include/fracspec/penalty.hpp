#pragma once

#include "fracspec/fracbasis.hpp"

namespace fracspec {

enum class PenaltyRep { JacobiModal, SingularWeighted, LegendreModal };

/// Penalty parameters rho_- / rho_+ and the normalized penalty functions
/// Q_N^- / Q_N^+; only the products rho * Q enter the assembled operator.
struct PenaltyConfig {
    double rho_minus{};
    double rho_plus{};
    WeightedJacobiSum q_minus;
    WeightedJacobiSum q_plus;
    PenaltyRep representation{};

    /// Moves a factor s from rho into Q; leaves the products unchanged.
    PenaltyConfig with_split_moved(double s) const {
        PenaltyConfig out = *this;
        out.rho_minus *= s;
        out.rho_plus *= s;
        out.q_minus = q_minus.scaled(1.0 / s);
        out.q_plus = q_plus.scaled(1.0 / s);
        return out;
    }
};

/// Boundary polynomial of the fractional-Dirichlet construction: degree N+2,
/// equal to 1 at the chosen endpoint, 0 at the other, and with a second
/// derivative orthogonal to P_N under w^{weight}. side is +1 or -1.
WeightedJacobiSum fdbc_lift_poly(int N, const JacobiParams& weight, int side);

/// Fractional Dirichlet family (Riemann-Liouville): rho_- = N^{2+q-b},
/// rho_+ = N^{2+q-a} with q = max(a,b)+2, and rho Q = D^2 of the lift
/// polynomials, expanded as two shifted-index Jacobi terms.
PenaltyConfig penalty_rl_fdbc(int N, const JacobiParams& weight);

/// Fractional Neumann family (Riemann-Liouville): rho_- = N^{2mu+2},
/// rho_+ = N^{2nu+2}; the products are stored in the singular-weighted
/// closed form rho Q = +- w^{nu,mu} h P_N^{...}.
PenaltyConfig penalty_rl_fnbc(int N, const FracParams& fp);

/// Modal form of the same products: sum_k J_k^{-nu,-mu}(x) P_k^{nu,mu}(side) / gamma_k.
/// Kept alongside the closed form as a consistency oracle. side is +1 or -1.
WeightedJacobiSum rl_fnbc_modal_sum(int N, const FracParams& fp, int side);

/// Caputo fractional Neumann family: rho_+- = N^2,
/// Q^+- = +-(1/N^2) sum_k L_k(x) L_k(+-1) / gamma_k.
PenaltyConfig penalty_caputo_fnbc(int N);

/// Caputo classical Dirichlet family: rho_+- = N^3 (heuristic scaling; no
/// coercivity proof backs this family), Q^+- = (1/N^2) sum_k L_k(x) L_k(+-1) / gamma_k.
PenaltyConfig penalty_caputo_dbc(int N);

}  // namespace fracspec
