#pragma once

#include <Eigen/Dense>

#include <stdexcept>

namespace fracspec {

using Vector = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;

/// Exponent pair (a, b) of the Jacobi weight (1-x)^a (1+x)^b on (-1, 1).
struct JacobiParams {
    double a{0.0};
    double b{0.0};

    /// Throws unless a > -1 and b > -1 (weight integrability).
    void validate() const;
};

/// Gamma function (Lanczos approximation, reflection for x < 0.5).
/// Throws std::domain_error at non-positive integers.
double gamma_fn(double x);

/// log|Gamma(x)|, usable where Gamma itself would overflow.
double lgamma_abs(double x);

/// 1/Gamma(x); exactly zero at non-positive integers.
double rgamma(double x);

/// Gamma(num)/Gamma(den) for num, den > 0, computed in log space when either
/// argument is large enough to risk overflow.
double tgamma_ratio(double num, double den);

/// Jacobi polynomial P_n^{a,b}(x) by the three-term recurrence.
double jacobi(int n, const JacobiParams& ab, double x);

/// Values P_0^{a,b}(x) .. P_nmax^{a,b}(x).
Vector jacobi_all(int nmax, const JacobiParams& ab, double x);

/// Table V(n, q) = P_n^{a,b}(x_q) for n = 0..nmax over a set of points.
Matrix jacobi_table(int nmax, const JacobiParams& ab, const Vector& x);

/// P_n^{a,b}(+1) or P_n^{a,b}(-1) in closed form; side is +1 or -1.
double jacobi_endpoint(int n, const JacobiParams& ab, int side);

/// d_{n,k}^{a,b} in D^k P_n^{a,b} = d_{n,k}^{a,b} P_{n-k}^{a+k,b+k}.
/// Returns exact zero for k > n.
double jacobi_deriv_coeff(int n, int k, const JacobiParams& ab);

/// Orthogonality constant gamma_n^{a,b} = int_{-1}^{1} (P_n^{a,b})^2 w^{a,b} dx.
double jacobi_norm(int n, const JacobiParams& ab);

struct QuadratureRule {
    Vector nodes;    // strictly increasing, inside (-1, 1)
    Vector weights;  // positive
    JacobiParams params;

    int size() const { return static_cast<int>(nodes.size()); }

    template <class F>
    double integrate(F&& f) const {
        double s = 0.0;
        for (int q = 0; q < size(); ++q) s += weights[q] * f(nodes[q]);
        return s;
    }
};

/// n-point Gauss-Jacobi rule for the weight (1-x)^a (1+x)^b; exact for
/// polynomials of degree <= 2n-1 against that weight.
QuadratureRule gauss_jacobi(int n, const JacobiParams& ab);

/// Smallest rule size whose Gauss-Jacobi quadrature is exact for polynomial
/// integrands of the given total degree, padded by two points.
inline int rule_size_for_degree(int degree) {
    return (degree < 0 ? 0 : (degree + 2) / 2) + 2;
}

}  // namespace fracspec
