#include "fracspec/fracbasis.hpp"

#include <cmath>

namespace fracspec {

namespace {
constexpr double kPi = 3.14159265358979323846;
}

FracParams solve_mu_nu(double alpha, double p) {
    if (!(alpha > 1.0 && alpha < 2.0)) {
        throw std::invalid_argument("solve_mu_nu: alpha must lie in (1, 2)");
    }
    if (!(p >= 0.0 && p <= 1.0)) {
        throw std::invalid_argument("solve_mu_nu: p must lie in [0, 1]");
    }

    // The one-sided limits: a purely left-sided integral (p = 1) must raise
    // the (1+x) exponent from alpha-2 up to zero, so mu = 0, nu = alpha-2;
    // p = 0 mirrors it. (The bisection root tends to these pairs as p -> 0, 1.)
    double mu, nu;
    if (p == 1.0) {
        mu = 0.0;
        nu = alpha - 2.0;
    } else if (p == 0.0) {
        mu = alpha - 2.0;
        nu = 0.0;
    } else {
        auto g = [alpha, p](double m) {
            return p * std::sin(kPi * m) - (1.0 - p) * std::sin(kPi * (alpha - 2.0 - m));
        };
        const double eps = 1e-10;
        double lo = alpha - 2.0 + eps, hi = -eps;
        double glo = g(lo), ghi = g(hi);
        if (glo * ghi >= 0.0) {
            // p within roundoff of a boundary: the root sits inside the
            // bracket margin; snap to the matching one-sided pair.
            if (std::abs(ghi) <= std::abs(glo)) {
                mu = 0.0;
                nu = alpha - 2.0;
            } else {
                mu = alpha - 2.0;
                nu = 0.0;
            }
        } else {
            for (int it = 0; it < 200 && (hi - lo) > 1e-15; ++it) {
                const double mid = 0.5 * (lo + hi);
                const double gm = g(mid);
                if (glo * gm <= 0.0) {
                    hi = mid;
                } else {
                    lo = mid;
                    glo = gm;
                }
            }
            mu = 0.5 * (lo + hi);
            nu = alpha - 2.0 - mu;
        }
    }

    const double c = (std::sin(kPi * mu) + std::sin(kPi * nu)) / std::sin(kPi * alpha);
    return FracParams{alpha, p, mu, nu, c};
}

double SolutionExpansion::evaluate(double x) const {
    const int n = static_cast<int>(coeffs.size()) - 1;
    if (n < 0) throw std::invalid_argument("SolutionExpansion: empty coefficient vector");
    if (basis.kind == BasisKind::Legendre) {
        if (!(x >= -1.0 && x <= 1.0)) throw std::domain_error("evaluate: x outside [-1, 1]");
        return coeffs.dot(jacobi_all(n, JacobiParams{0.0, 0.0}, x));
    }
    if (!(x > -1.0 && x < 1.0)) {
        throw std::domain_error("evaluate: poly-fractonomial expansion is singular at x = +-1");
    }
    const FracParams& f = basis.frac;
    const double w = std::pow(1.0 - x, f.mu) * std::pow(1.0 + x, f.nu);
    return w * coeffs.dot(jacobi_all(n, JacobiParams{f.mu, f.nu}, x));
}

Vector SolutionExpansion::evaluate(const Vector& x) const {
    Vector out(x.size());
    for (Eigen::Index i = 0; i < x.size(); ++i) out[i] = evaluate(x[i]);
    return out;
}

double JacobiTerm::evaluate(double x) const { return coeff * jacobi(degree, params, x); }

double WeightedJacobiSum::evaluate(double x) const {
    if (terms.empty()) return 0.0;
    double s = 0.0;
    for (const auto& t : terms) s += t.evaluate(x);
    if (weight.a != 0.0) s *= std::pow(1.0 - x, weight.a);
    if (weight.b != 0.0) s *= std::pow(1.0 + x, weight.b);
    return s;
}

Vector WeightedJacobiSum::evaluate(const Vector& x) const {
    Vector out(x.size());
    for (Eigen::Index i = 0; i < x.size(); ++i) out[i] = evaluate(x[i]);
    return out;
}

int WeightedJacobiSum::max_degree() const {
    int d = 0;
    for (const auto& t : terms) d = std::max(d, t.degree);
    return d;
}

WeightedJacobiSum WeightedJacobiSum::scaled(double s) const {
    WeightedJacobiSum out = *this;
    for (auto& t : out.terms) t.coeff *= s;
    return out;
}

JacobiTerm frac_integral_image(const FracParams& fp, int k) {
    if (k < 0) throw std::invalid_argument("frac_integral_image: negative mode index");
    const double lambda = tgamma_ratio(k + fp.alpha - 1.0, k + 1.0);
    return JacobiTerm{lambda, k, JacobiParams{fp.nu, fp.mu}};
}

JacobiTerm frac_derivative_image(const FracParams& fp, int k, int order) {
    if (k < 0) throw std::invalid_argument("frac_derivative_image: negative mode index");
    if (order != 1 && order != 2) {
        throw std::invalid_argument("frac_derivative_image: order index must be 1 or 2");
    }
    const JacobiParams params{fp.nu + order, fp.mu + order};
    if (order > k) return JacobiTerm{0.0, 0, params};
    const double c = tgamma_ratio(k + order + fp.alpha - 1.0, k + 1.0) / std::pow(2.0, order);
    return JacobiTerm{c, k - order, params};
}

CaputoLegendreImage caputo_legendre_image(int k, Side side, double alpha) {
    if (k < 0) throw std::invalid_argument("caputo_legendre_image: negative degree");
    if (!(alpha > 1.0 && alpha < 2.0)) {
        throw std::invalid_argument("caputo_legendre_image: alpha must lie in (1, 2)");
    }
    CaputoLegendreImage img;
    if (side == Side::Left) {
        img.flux.weight = JacobiParams{0.0, 2.0 - alpha};
        img.flux_deriv.weight = JacobiParams{0.0, 1.0 - alpha};
    } else {
        img.flux.weight = JacobiParams{2.0 - alpha, 0.0};
        img.flux_deriv.weight = JacobiParams{1.0 - alpha, 0.0};
    }
    const JacobiParams deriv_params = (side == Side::Left) ? JacobiParams{alpha - 1.0, 1.0 - alpha}
                                                           : JacobiParams{1.0 - alpha, alpha - 1.0};
    const JacobiParams flux_params = (side == Side::Left) ? JacobiParams{alpha - 2.0, 2.0 - alpha}
                                                          : JacobiParams{2.0 - alpha, alpha - 2.0};
    // L_k' = sum_{n<k, n+k odd} (2n+1) L_n; the right-sided Caputo flux picks
    // up a sign from cD^{alpha-1} = -I^{2-alpha} D.
    const double flux_sign = (side == Side::Left) ? 1.0 : -1.0;
    for (int n = (k % 2 == 0) ? 1 : 0; n < k; n += 2) {
        const double common = 2.0 * n + 1.0;
        const double r = tgamma_ratio(n + 1.0, n + 2.0 - alpha);
        const double z = tgamma_ratio(n + 1.0, n + 3.0 - alpha);
        img.flux_deriv.terms.push_back(JacobiTerm{common * r, n, deriv_params});
        img.flux.terms.push_back(JacobiTerm{flux_sign * common * z, n, flux_params});
    }
    return img;
}

PowerTerm frac_monomial_image(FracOp op, Side side, int j, double alpha) {
    (void)side;  // formulas mirror exactly between (1+x)^j and (1-x)^j
    if (j < 0) throw std::invalid_argument("frac_monomial_image: negative power");
    if (!(alpha > 1.0 && alpha < 2.0)) {
        throw std::invalid_argument("frac_monomial_image: alpha must lie in (1, 2)");
    }
    const double gj = gamma_fn(j + 1.0);
    switch (op) {
        case FracOp::IntegralTwoMinusAlpha:
            return PowerTerm{gj * rgamma(j + 3.0 - alpha), j + 2.0 - alpha};
        case FracOp::RlDerivAlphaMinusOne:
            return PowerTerm{gj * rgamma(j + 2.0 - alpha), j + 1.0 - alpha};
        case FracOp::CaputoDerivAlphaMinusOne:
            if (j == 0) return PowerTerm{0.0, 0.0};
            return PowerTerm{gj * rgamma(j + 2.0 - alpha), j + 1.0 - alpha};
        case FracOp::RlDerivAlpha:
            return PowerTerm{gj * rgamma(j + 1.0 - alpha), j - alpha};
    }
    throw std::logic_error("frac_monomial_image: unknown operator");
}

double frac_monomial_eval(FracOp op, Side side, int j, double alpha, double x) {
    const PowerTerm t = frac_monomial_image(op, side, j, alpha);
    if (t.coeff == 0.0) return 0.0;
    const double base = (side == Side::Left) ? 1.0 + x : 1.0 - x;
    return t.coeff * std::pow(base, t.exponent);
}

}  // namespace fracspec
