#pragma once

#include "fracspec/special.hpp"

#include <vector>

namespace fracspec {

enum class Side { Left, Right };

/// Fractional order alpha in (1,2) and mixing weight p in [0,1], together
/// with the exponent pair (mu, nu) tied to them by
///   mu + nu = alpha - 2,   p sin(pi mu) = (1-p) sin(pi nu),
/// and the normalization c_alpha_p = (sin(pi mu) + sin(pi nu)) / sin(pi alpha).
struct FracParams {
    double alpha{};
    double p{};
    double mu{};
    double nu{};
    double c_alpha_p{};
};

/// Solves the compatibility conditions for (mu, nu) by bisection in mu over
/// (alpha-2, 0); p = 1 and p = 0 return the exact boundary pairs
/// (alpha-2, 0) and (0, alpha-2).
FracParams solve_mu_nu(double alpha, double p);

enum class BasisKind { PolyFractonomial, Legendre };

struct BasisDescriptor {
    BasisKind kind{BasisKind::Legendre};
    int max_degree{};    // N
    FracParams frac{};   // used by PolyFractonomial only
};

/// Coefficients u_0..u_N over either J_k^{-mu,-nu} or L_k.
struct SolutionExpansion {
    BasisDescriptor basis;
    Vector coeffs;

    /// Pointwise value. Poly-fractonomial expansions carry the singular
    /// weight factor (1-x)^mu (1+x)^nu and reject x = +-1.
    double evaluate(double x) const;
    Vector evaluate(const Vector& x) const;
};

/// One scaled Jacobi mode coeff * P_degree^{params}(x).
struct JacobiTerm {
    double coeff{};
    int degree{};
    JacobiParams params;

    double evaluate(double x) const;
};

/// (1-x)^{weight.a} (1+x)^{weight.b} times a sum of Jacobi terms. The
/// weight exponents may be zero (plain polynomial) or negative-but-integrable.
struct WeightedJacobiSum {
    JacobiParams weight{0.0, 0.0};
    std::vector<JacobiTerm> terms;

    double evaluate(double x) const;
    Vector evaluate(const Vector& x) const;
    int max_degree() const;
    WeightedJacobiSum scaled(double s) const;
};

/// I_p^{2-alpha} J_k^{-mu,-nu} = lambda_k P_k^{nu,mu} with
/// lambda_k = Gamma(k+alpha-1)/Gamma(k+1); note the swapped indices.
JacobiTerm frac_integral_image(const FracParams& fp, int k);

/// D_p^{order+alpha-2} J_k^{-mu,-nu} = C P_{k-order}^{nu+order, mu+order}
/// with C = Gamma(k+order+alpha-1) / (2^order Gamma(k+1)); order 1 gives the
/// flux operator D_p^{alpha-1}, order 2 the full derivative D_p^{alpha}.
/// Exactly zero for order > k.
JacobiTerm frac_derivative_image(const FracParams& fp, int k, int order);

/// One-sided Caputo images of a Legendre mode:
///   flux       = cD_side^{alpha-1} L_k   (vanishes at the side's endpoint),
///   flux_deriv = d/dx of the flux.
/// Two-sided compositions take C_{alpha,p} (p * left - (1-p) * right).
struct CaputoLegendreImage {
    WeightedJacobiSum flux;
    WeightedJacobiSum flux_deriv;
};
CaputoLegendreImage caputo_legendre_image(int k, Side side, double alpha);

enum class FracOp {
    IntegralTwoMinusAlpha,     // I^{2-alpha}
    RlDerivAlphaMinusOne,      // D^{alpha-1}
    CaputoDerivAlphaMinusOne,  // cD^{alpha-1}; zero on constants
    RlDerivAlpha,              // D^{alpha}
};

/// coeff * (1+x)^exponent for Side::Left, coeff * (1-x)^exponent for Side::Right.
struct PowerTerm {
    double coeff{};
    double exponent{};
};

/// Closed-form image of (1+x)^j (left) or (1-x)^j (right) under the chosen
/// one-sided operator, e.g. I^{2-alpha}(1+x)^j = G(j+1)/G(j+3-alpha) (1+x)^{j+2-alpha}.
PowerTerm frac_monomial_image(FracOp op, Side side, int j, double alpha);
double frac_monomial_eval(FracOp op, Side side, int j, double alpha, double x);

}  // namespace fracspec
