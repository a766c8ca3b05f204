#include "support/oracles.hpp"

#include <algorithm>
#include <cmath>

namespace fracspec::testing {

double gamma_by_quadrature(double x) {
    if (!(x > 0.0 && x <= 50.0)) throw std::invalid_argument("gamma_by_quadrature: x in (0, 50]");
    // [0,1]: Gauss-Jacobi absorbs the t^{x-1} endpoint factor.
    const QuadratureRule head = gauss_jacobi(64, JacobiParams{0.0, x - 1.0});
    double total = 0.0;
    for (int q = 0; q < head.size(); ++q) {
        total += head.weights[q] * std::exp(-0.5 * (1.0 + head.nodes[q]));
    }
    total *= std::pow(0.5, x);
    // [1, 241]: composite panels of width 2; the tail beyond is < 1e-100.
    const QuadratureRule panel = gauss_jacobi(32, JacobiParams{0.0, 0.0});
    for (int k = 0; k < 120; ++k) {
        const double lo = 1.0 + 2.0 * k;
        for (int q = 0; q < panel.size(); ++q) {
            const double t = lo + 1.0 + panel.nodes[q];
            total += panel.weights[q] * std::pow(t, x - 1.0) * std::exp(-t);
        }
    }
    return total;
}

double jacobi_by_hypergeom(int n, const JacobiParams& ab, double x) {
    // P_n^{a,b}(x) = (Gamma(n+a+1)/(n! Gamma(a+1))) * sum_m ((-n)_m (n+a+b+1)_m / ((a+1)_m m!)) ((1-x)/2)^m
    const double z = 0.5 * (1.0 - x);
    double term = 1.0, sum = 1.0;
    for (int m = 0; m < n; ++m) {
        term *= (-(n - m)) * (n + ab.a + ab.b + 1.0 + m) / ((ab.a + 1.0 + m) * (m + 1.0)) * z;
        sum += term;
    }
    return tgamma_ratio(n + ab.a + 1.0, n + 1.0) / gamma_fn(ab.a + 1.0) * sum;
}

std::vector<double> jacobi_t_monomial_coeffs(int n, const JacobiParams& ab) {
    // P_n^{a,b}(2t-1) = (-1)^n (Gamma(n+b+1)/(n! Gamma(b+1))) * sum_m ((-n)_m (n+a+b+1)_m / ((b+1)_m m!)) t^m
    const double front =
        ((n % 2 == 0) ? 1.0 : -1.0) * tgamma_ratio(n + ab.b + 1.0, n + 1.0) / gamma_fn(ab.b + 1.0);
    std::vector<double> coeffs(n + 1);
    double term = 1.0;
    coeffs[0] = front;
    for (int m = 0; m < n; ++m) {
        term *= (-(n - m)) * (n + ab.a + ab.b + 1.0 + m) / ((ab.b + 1.0 + m) * (m + 1.0));
        coeffs[m + 1] = front * term;
    }
    return coeffs;
}

double twosided_integral_coeff(int k, int j, const FracParams& fp) {
    const double sign = ((k + j) % 2 == 0) ? 1.0 : -1.0;
    return sign * gamma_fn(j + fp.alpha - 1.0) * gamma_fn(fp.mu + 1.0) *
           rgamma(fp.alpha - 1.0 - fp.nu - k + j) / (gamma_fn(j + 1.0) * gamma_fn(k + 1.0 - j));
}

double weighted_monomial_integral_by_quadrature(const FracParams& fp, int k, double t, int rule_size) {
    if (!(t > 0.0 && t < 1.0)) throw std::invalid_argument("weighted_monomial_integral_by_quadrature: t in (0,1)");
    const double alpha = fp.alpha, mu = fp.mu, nu = fp.nu;
    // Left: substitute s = t*tau; weight (1-tau)^{1-alpha} tau^{nu+k}.
    const QuadratureRule left_rule = gauss_jacobi(rule_size, JacobiParams{1.0 - alpha, nu + k});
    double left = 0.0;
    for (int q = 0; q < left_rule.size(); ++q) {
        const double tau = 0.5 * (1.0 + left_rule.nodes[q]);
        left += left_rule.weights[q] * std::pow(1.0 - t * tau, mu);
    }
    left *= std::pow(t, 2.0 - alpha + nu + k) * std::pow(0.5, (1.0 - alpha) + (nu + k) + 1.0) /
            gamma_fn(2.0 - alpha);
    // Right: substitute s = t + (1-t)*tau; weight (1-tau)^{mu} tau^{1-alpha}.
    const QuadratureRule right_rule = gauss_jacobi(rule_size, JacobiParams{mu, 1.0 - alpha});
    double right = 0.0;
    for (int q = 0; q < right_rule.size(); ++q) {
        const double tau = 0.5 * (1.0 + right_rule.nodes[q]);
        right += right_rule.weights[q] * std::pow(t + (1.0 - t) * tau, nu + k);
    }
    right *= std::pow(1.0 - t, 2.0 - alpha + mu) * std::pow(0.5, mu + (1.0 - alpha) + 1.0) /
             gamma_fn(2.0 - alpha);
    return fp.c_alpha_p * (fp.p * left + (1.0 - fp.p) * right);
}

double left_frac_integral_by_quadrature(const FracParams& fp, int k, double x, int rule_size) {
    if (!(x > -1.0 && x < 1.0)) throw std::invalid_argument("oracle: x must be interior");
    const double alpha = fp.alpha, mu = fp.mu, nu = fp.nu;
    const JacobiParams pk{mu, nu};
    // y = -1 + (x+1) t:  (x-y) = (x+1)(1-t), (1+y) = (x+1) t, (1-y) = 2 - (x+1) t.
    const QuadratureRule rule = gauss_jacobi(rule_size, JacobiParams{1.0 - alpha, nu});
    double sum = 0.0;
    for (int q = 0; q < rule.size(); ++q) {
        const double t = 0.5 * (1.0 + rule.nodes[q]);
        const double y = -1.0 + (x + 1.0) * t;
        sum += rule.weights[q] * std::pow(2.0 - (x + 1.0) * t, mu) * jacobi(k, pk, y);
    }
    return sum * std::pow(x + 1.0, 2.0 - alpha + nu) * std::pow(0.5, (1.0 - alpha) + nu + 1.0) /
           gamma_fn(2.0 - alpha);
}

double right_frac_integral_by_quadrature(const FracParams& fp, int k, double x, int rule_size) {
    if (!(x > -1.0 && x < 1.0)) throw std::invalid_argument("oracle: x must be interior");
    const double alpha = fp.alpha, mu = fp.mu, nu = fp.nu;
    const JacobiParams pk{mu, nu};
    // y = 1 - (1-x) t:  (y-x) = (1-x)(1-t), (1-y) = (1-x) t, (1+y) = 2 - (1-x) t.
    const QuadratureRule rule = gauss_jacobi(rule_size, JacobiParams{1.0 - alpha, mu});
    double sum = 0.0;
    for (int q = 0; q < rule.size(); ++q) {
        const double t = 0.5 * (1.0 + rule.nodes[q]);
        const double y = 1.0 - (1.0 - x) * t;
        sum += rule.weights[q] * std::pow(2.0 - (1.0 - x) * t, nu) * jacobi(k, pk, y);
    }
    return sum * std::pow(1.0 - x, 2.0 - alpha + mu) * std::pow(0.5, (1.0 - alpha) + mu + 1.0) /
           gamma_fn(2.0 - alpha);
}

double frac_integral_by_quadrature(const FracParams& fp, int k, double x, int rule_size) {
    return fp.c_alpha_p * (fp.p * left_frac_integral_by_quadrature(fp, k, x, rule_size) +
                           (1.0 - fp.p) * right_frac_integral_by_quadrature(fp, k, x, rule_size));
}

double caputo_legendre_by_quadrature(int k, Side side, double alpha, double x) {
    if (!(x > -1.0 && x < 1.0)) throw std::invalid_argument("oracle: x must be interior");
    if (k == 0) return 0.0;
    const JacobiParams dp{1.0, 1.0};
    const double dcoef = 0.5 * (k + 1.0);
    const QuadratureRule rule = gauss_jacobi(k + 4, JacobiParams{1.0 - alpha, 0.0});
    double sum = 0.0;
    if (side == Side::Left) {
        // cD_left^{alpha-1} L_k = (1/G(2-a)) int_{-1}^x (x-y)^{1-alpha} L_k'(y) dy.
        for (int q = 0; q < rule.size(); ++q) {
            const double t = 0.5 * (1.0 + rule.nodes[q]);
            const double y = -1.0 + (x + 1.0) * t;
            sum += rule.weights[q] * dcoef * jacobi(k - 1, dp, y);
        }
        return sum * std::pow(x + 1.0, 2.0 - alpha) * std::pow(0.5, 2.0 - alpha) / gamma_fn(2.0 - alpha);
    }
    // cD_right^{alpha-1} L_k = -(1/G(2-a)) int_x^1 (y-x)^{1-alpha} L_k'(y) dy.
    for (int q = 0; q < rule.size(); ++q) {
        const double t = 0.5 * (1.0 + rule.nodes[q]);
        const double y = 1.0 - (1.0 - x) * t;
        sum += rule.weights[q] * dcoef * jacobi(k - 1, dp, y);
    }
    return -sum * std::pow(1.0 - x, 2.0 - alpha) * std::pow(0.5, 2.0 - alpha) / gamma_fn(2.0 - alpha);
}

double fd_derivative(const std::function<double(double)>& f, double x, double h) {
    return (-f(x + 2 * h) + 8 * f(x + h) - 8 * f(x - h) + f(x - 2 * h)) / (12 * h);
}

double fd_second_derivative(const std::function<double(double)>& f, double x, double h) {
    return (-f(x + 2 * h) + 16 * f(x + h) - 30 * f(x) + 16 * f(x - h) - f(x - 2 * h)) / (12 * h * h);
}

Vector symmetric_eigenvalues_jacobi(Matrix a) {
    const Eigen::Index n = a.rows();
    if (n != a.cols()) throw std::invalid_argument("symmetric_eigenvalues_jacobi: square input required");
    const double scale = std::max(a.cwiseAbs().maxCoeff(), 1e-300);
    for (int sweep = 0; sweep < 200; ++sweep) {
        double off = 0.0;
        for (Eigen::Index p = 0; p < n; ++p) {
            for (Eigen::Index q = p + 1; q < n; ++q) off += a(p, q) * a(p, q);
        }
        if (off < 1e-30 * scale * scale) break;
        for (Eigen::Index p = 0; p < n; ++p) {
            for (Eigen::Index q = p + 1; q < n; ++q) {
                if (std::abs(a(p, q)) < 1e-300) continue;
                const double theta = (a(q, q) - a(p, p)) / (2.0 * a(p, q));
                const double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                for (Eigen::Index i = 0; i < n; ++i) {
                    const double aip = a(i, p), aiq = a(i, q);
                    a(i, p) = c * aip - s * aiq;
                    a(i, q) = s * aip + c * aiq;
                }
                for (Eigen::Index i = 0; i < n; ++i) {
                    const double api = a(p, i), aqi = a(q, i);
                    a(p, i) = c * api - s * aqi;
                    a(q, i) = s * api + c * aqi;
                }
            }
        }
    }
    Vector eig = a.diagonal();
    std::sort(eig.data(), eig.data() + n);
    return eig;
}

}  // namespace fracspec::testing
