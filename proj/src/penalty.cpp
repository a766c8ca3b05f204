#include "fracspec/penalty.hpp"

#include <cmath>

namespace fracspec {

WeightedJacobiSum fdbc_lift_poly(int N, const JacobiParams& weight, int side) {
    if (N < 2) throw std::invalid_argument("fdbc_lift_poly: N must be at least 2");
    if (side != 1 && side != -1) throw std::invalid_argument("fdbc_lift_poly: side must be +-1");
    weight.validate();
    const double a = weight.a, b = weight.b;
    const double denom_scale = 2.0 * N + 4.0 + a + b;
    WeightedJacobiSum out;  // plain polynomial, weight exponents (0,0)
    const JacobiParams base{a, b};
    if (side == -1) {
        // (1-x) P_{N+1}^{a+1,b} / (2 P_{N+1}^{a+1,b}(-1)) expanded over P^{a,b}.
        const double denom = denom_scale * jacobi_endpoint(N + 1, JacobiParams{a + 1.0, b}, -1);
        out.terms.push_back(JacobiTerm{(N + 2.0 + a) / denom, N + 1, base});
        out.terms.push_back(JacobiTerm{-(N + 2.0) / denom, N + 2, base});
    } else {
        // (1+x) P_{N+1}^{a,b+1} / (2 P_{N+1}^{a,b+1}(1)).
        const double denom = denom_scale * jacobi_endpoint(N + 1, JacobiParams{a, b + 1.0}, +1);
        out.terms.push_back(JacobiTerm{(N + 2.0 + b) / denom, N + 1, base});
        out.terms.push_back(JacobiTerm{(N + 2.0) / denom, N + 2, base});
    }
    return out;
}

namespace {

// D^2 applied term-by-term: P_n^{a,b} -> d_{n,2} P_{n-2}^{a+2,b+2}.
WeightedJacobiSum second_derivative(const WeightedJacobiSum& poly) {
    WeightedJacobiSum out;
    for (const auto& t : poly.terms) {
        const double d = jacobi_deriv_coeff(t.degree, 2, t.params);
        if (d == 0.0) continue;
        out.terms.push_back(
            JacobiTerm{t.coeff * d, t.degree - 2, JacobiParams{t.params.a + 2.0, t.params.b + 2.0}});
    }
    return out;
}

}  // namespace

PenaltyConfig penalty_rl_fdbc(int N, const JacobiParams& weight) {
    if (N < 2) throw std::invalid_argument("penalty_rl_fdbc: N must be at least 2");
    weight.validate();
    if (!(weight.a < 1.0 && weight.b < 1.0)) {
        throw std::invalid_argument("penalty_rl_fdbc: weight exponents must lie in (-1, 1)");
    }
    const double q = std::max(weight.a, weight.b) + 2.0;
    PenaltyConfig cfg;
    cfg.representation = PenaltyRep::JacobiModal;
    cfg.rho_minus = std::pow(N, 2.0 + q - weight.b);
    cfg.rho_plus = std::pow(N, 2.0 + q - weight.a);
    cfg.q_minus = second_derivative(fdbc_lift_poly(N, weight, -1)).scaled(1.0 / cfg.rho_minus);
    cfg.q_plus = second_derivative(fdbc_lift_poly(N, weight, +1)).scaled(1.0 / cfg.rho_plus);
    return cfg;
}

PenaltyConfig penalty_rl_fnbc(int N, const FracParams& fp) {
    if (N < 2) throw std::invalid_argument("penalty_rl_fnbc: N must be at least 2");
    const double mu = fp.mu, nu = fp.nu;
    PenaltyConfig cfg;
    cfg.representation = PenaltyRep::SingularWeighted;
    cfg.rho_minus = std::pow(N, 2.0 * mu + 2.0);
    cfg.rho_plus = std::pow(N, 2.0 * nu + 2.0);
    // rho_- Q^- = -w^{nu,mu} h~ P_N^{nu,mu+1}, rho_+ Q^+ = +w^{nu,mu} h P_N^{nu+1,mu}.
    const double scale = std::pow(2.0, -nu - mu - 1.0) * tgamma_ratio(N + nu + mu + 2.0, N + mu + 1.0);
    const double h = scale / gamma_fn(nu + 1.0);
    const double h_tilde_mag =
        std::pow(2.0, -nu - mu - 1.0) * tgamma_ratio(N + nu + mu + 2.0, N + nu + 1.0) / gamma_fn(mu + 1.0);
    const double h_tilde = (N % 2 == 0) ? h_tilde_mag : -h_tilde_mag;
    cfg.q_minus.weight = JacobiParams{nu, mu};
    cfg.q_minus.terms.push_back(
        JacobiTerm{-h_tilde / cfg.rho_minus, N, JacobiParams{nu, mu + 1.0}});
    cfg.q_plus.weight = JacobiParams{nu, mu};
    cfg.q_plus.terms.push_back(JacobiTerm{h / cfg.rho_plus, N, JacobiParams{nu + 1.0, mu}});
    return cfg;
}

WeightedJacobiSum rl_fnbc_modal_sum(int N, const FracParams& fp, int side) {
    if (N < 0) throw std::invalid_argument("rl_fnbc_modal_sum: negative N");
    if (side != 1 && side != -1) throw std::invalid_argument("rl_fnbc_modal_sum: side must be +-1");
    const JacobiParams swapped{fp.nu, fp.mu};
    WeightedJacobiSum out;
    out.weight = swapped;
    for (int k = 0; k <= N; ++k) {
        const double c = jacobi_endpoint(k, swapped, side) / jacobi_norm(k, swapped);
        out.terms.push_back(JacobiTerm{c, k, swapped});
    }
    return out;
}

namespace {

// sum_{k<=N} L_k(x) L_k(s) / gamma_k with s = +-1; gamma_k = 2/(2k+1).
WeightedJacobiSum legendre_endpoint_kernel(int N, int side) {
    WeightedJacobiSum out;
    const JacobiParams leg{0.0, 0.0};
    for (int k = 0; k <= N; ++k) {
        double c = (2.0 * k + 1.0) / 2.0;
        if (side == -1 && k % 2 == 1) c = -c;
        out.terms.push_back(JacobiTerm{c, k, leg});
    }
    return out;
}

}  // namespace

PenaltyConfig penalty_caputo_fnbc(int N) {
    if (N < 2) throw std::invalid_argument("penalty_caputo_fnbc: N must be at least 2");
    PenaltyConfig cfg;
    cfg.representation = PenaltyRep::LegendreModal;
    cfg.rho_minus = cfg.rho_plus = static_cast<double>(N) * N;
    const double inv_n2 = 1.0 / (static_cast<double>(N) * N);
    cfg.q_minus = legendre_endpoint_kernel(N, -1).scaled(-inv_n2);
    cfg.q_plus = legendre_endpoint_kernel(N, +1).scaled(inv_n2);
    return cfg;
}

PenaltyConfig penalty_caputo_dbc(int N) {
    if (N < 2) throw std::invalid_argument("penalty_caputo_dbc: N must be at least 2");
    PenaltyConfig cfg;
    cfg.representation = PenaltyRep::LegendreModal;
    cfg.rho_minus = cfg.rho_plus = std::pow(static_cast<double>(N), 3);
    const double inv_n2 = 1.0 / (static_cast<double>(N) * N);
    cfg.q_minus = legendre_endpoint_kernel(N, -1).scaled(inv_n2);
    cfg.q_plus = legendre_endpoint_kernel(N, +1).scaled(inv_n2);
    return cfg;
}

}  // namespace fracspec
