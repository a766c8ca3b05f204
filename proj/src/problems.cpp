#include "fracspec/problems.hpp"

#include <cmath>

namespace fracspec {

namespace {

constexpr double kPi = 3.14159265358979323846;

// u = (1-x^2)^2 expanded in powers of (1+x) and, by symmetry, (1-x).
const std::vector<double> kQuarticCoeffs{0.0, 0.0, 4.0, -4.0, 1.0};
// u = x^3 + 1 in powers of (1+x) and of (1-x).
const std::vector<double> kCubicLeft{0.0, 3.0, -3.0, 1.0};
const std::vector<double> kCubicRight{2.0, -3.0, 3.0, -1.0};

double eval_monomials(const std::vector<double>& coeffs, Side side, double x) {
    const double base = side == Side::Left ? 1.0 + x : 1.0 - x;
    double s = 0.0, pw = 1.0;
    for (double c : coeffs) {
        s += c * pw;
        pw *= base;
    }
    return s;
}

// Image of the conservative operator (-d/dx of the two-sided flux) acting on
// a function given by matching one-sided monomial expansions. Both operator
// kinds reduce to
//   C [ p sum_j cl_j G(j+1)/G(j+1-alpha) (1+x)^{j-alpha}
//     + (1-p) sum_j cr_j G(j+1)/G(j+1-alpha) (1-x)^{j-alpha} ],
// with the j = 0 term dropped in the Caputo case.
std::vector<WeightedJacobiSum> conservative_op_terms(const std::vector<double>& left_coeffs,
                                                     const std::vector<double>& right_coeffs,
                                                     double alpha, double p, DerivKind deriv,
                                                     double outer_scale) {
    const FracParams fp = solve_mu_nu(alpha, p);
    const int j_min = deriv == DerivKind::Caputo ? 1 : 0;
    std::vector<WeightedJacobiSum> parts;
    auto add = [&parts](double coeff, double e_minus, double e_plus) {
        if (coeff == 0.0) return;
        WeightedJacobiSum part;
        part.weight = JacobiParams{e_minus, e_plus};
        part.terms.push_back(JacobiTerm{coeff, 0, JacobiParams{0.0, 0.0}});
        parts.push_back(std::move(part));
    };
    for (std::size_t j = j_min; j < left_coeffs.size(); ++j) {
        const double g = gamma_fn(j + 1.0) * rgamma(j + 1.0 - alpha);
        add(outer_scale * fp.c_alpha_p * p * left_coeffs[j] * g, 0.0, j - alpha);
    }
    for (std::size_t j = j_min; j < right_coeffs.size(); ++j) {
        const double g = gamma_fn(j + 1.0) * rgamma(j + 1.0 - alpha);
        add(outer_scale * fp.c_alpha_p * (1.0 - p) * right_coeffs[j] * g, j - alpha, 0.0);
    }
    return parts;
}

// Legendre coefficients of cos(pi x) (coefficients decay super-exponentially;
// 64 modes reach machine precision).
Vector cos_pi_legendre_coeffs(int modes) {
    const QuadratureRule rule = gauss_jacobi(128, JacobiParams{0.0, 0.0});
    Vector fv(rule.size());
    for (int q = 0; q < rule.size(); ++q) fv[q] = std::cos(kPi * rule.nodes[q]) * rule.weights[q];
    Vector inner = jacobi_table(modes, JacobiParams{0.0, 0.0}, rule.nodes) * fv;
    for (int k = 0; k <= modes; ++k) inner[k] *= (2.0 * k + 1.0) / 2.0;
    return inner;
}

// -D cD_p^{alpha-1} u for u given by Legendre coefficients: two singular
// parts (1+-x)^{1-alpha} times Jacobi sums.
std::vector<WeightedJacobiSum> caputo_op_legendre(const Vector& u_coeffs, double alpha, double p) {
    const FracParams fp = solve_mu_nu(alpha, p);
    const int modes = static_cast<int>(u_coeffs.size()) - 1;
    // u' = sum_n w_n L_n with w_n = (2n+1) sum_{k>n, n+k odd} u_k.
    Vector w = Vector::Zero(std::max(modes, 1));
    for (int n = 0; n < modes; ++n) {
        double s = 0.0;
        for (int k = n + 1; k <= modes; k += 2) s += u_coeffs[k];
        w[n] = (2.0 * n + 1.0) * s;
    }
    WeightedJacobiSum left, right;
    left.weight = JacobiParams{0.0, 1.0 - alpha};
    right.weight = JacobiParams{1.0 - alpha, 0.0};
    const JacobiParams lp{alpha - 1.0, 1.0 - alpha};
    const JacobiParams rp{1.0 - alpha, alpha - 1.0};
    for (int n = 0; n < modes; ++n) {
        const double r = tgamma_ratio(n + 1.0, n + 2.0 - alpha);
        left.terms.push_back(JacobiTerm{-fp.c_alpha_p * p * w[n] * r, n, lp});
        right.terms.push_back(JacobiTerm{fp.c_alpha_p * (1.0 - p) * w[n] * r, n, rp});
    }
    return {std::move(left), std::move(right)};
}

}  // namespace

JacobiParams default_weight(BcKind bc, double alpha) {
    if (bc == BcKind::FracDirichlet) return JacobiParams{0.5 * alpha, 0.5 * alpha};
    return JacobiParams{0.0, 0.0};
}

std::vector<std::string> rhs_registry_names() {
    return {"zero", "one-plus-cos-pi", "manufactured-1mx2sq", "manufactured-x3p1", "manufactured-cospi"};
}

RightHandSide make_rhs(const std::string& name, double alpha, double p, double c, DerivKind deriv) {
    RightHandSide rhs;
    rhs.name = name;
    if (name == "zero") {
        return rhs;
    }
    if (name == "one-plus-cos-pi") {
        rhs.smooth = [](double x) { return 1.0 + std::cos(kPi * x); };
        return rhs;
    }
    if (name == "manufactured-1mx2sq") {
        rhs.singular_parts = conservative_op_terms(kQuarticCoeffs, kQuarticCoeffs, alpha, p, deriv, -1.0);
        if (c != 0.0) {
            rhs.smooth = [c](double x) { return c * (1.0 - x * x) * (1.0 - x * x); };
        }
        return rhs;
    }
    if (name == "manufactured-x3p1") {
        rhs.singular_parts = conservative_op_terms(kCubicLeft, kCubicRight, alpha, p, deriv, -1.0);
        if (c != 0.0) {
            rhs.smooth = [c](double x) { return c * (x * x * x + 1.0); };
        }
        return rhs;
    }
    if (name == "manufactured-cospi") {
        if (deriv != DerivKind::Caputo) {
            throw std::invalid_argument("make_rhs: manufactured-cospi requires the Caputo operator");
        }
        rhs.singular_parts = caputo_op_legendre(cos_pi_legendre_coeffs(64), alpha, p);
        if (c != 0.0) {
            rhs.smooth = [c](double x) { return c * std::cos(kPi * x); };
        }
        return rhs;
    }
    throw std::invalid_argument("make_rhs: unknown right-hand side '" + name + "'");
}

double manufactured_boundary_value(BcKind bc, const std::vector<double>& left_coeffs,
                                   const std::vector<double>& right_coeffs, double alpha, double p,
                                   int side) {
    if (side != 1 && side != -1) throw std::invalid_argument("manufactured_boundary_value: side");
    if (bc == BcKind::Dirichlet) {
        return eval_monomials(left_coeffs, Side::Left, static_cast<double>(side));
    }
    const FracParams fp = solve_mu_nu(alpha, p);
    FracOp op{};
    double right_sign = 1.0;
    switch (bc) {
        case BcKind::FracDirichlet: op = FracOp::IntegralTwoMinusAlpha; break;
        case BcKind::RlFracNeumann:
            op = FracOp::RlDerivAlphaMinusOne;
            right_sign = -1.0;
            break;
        case BcKind::CaputoFracNeumann:
            op = FracOp::CaputoDerivAlphaMinusOne;
            right_sign = -1.0;
            break;
        default: throw std::logic_error("manufactured_boundary_value: unreachable");
    }
    const double x = static_cast<double>(side);
    double left_sum = 0.0, right_sum = 0.0;
    for (std::size_t j = 0; j < left_coeffs.size(); ++j) {
        if (left_coeffs[j] == 0.0) continue;
        left_sum += left_coeffs[j] * frac_monomial_eval(op, Side::Left, static_cast<int>(j), alpha, x);
    }
    for (std::size_t j = 0; j < right_coeffs.size(); ++j) {
        if (right_coeffs[j] == 0.0) continue;
        right_sum += right_coeffs[j] * frac_monomial_eval(op, Side::Right, static_cast<int>(j), alpha, x);
    }
    return fp.c_alpha_p * (p * left_sum + right_sign * (1.0 - p) * right_sum);
}

Benchmark make_benchmark(BcKind bc, BenchmarkCase kind, double alpha, double p, double c) {
    Benchmark bench;
    bench.spec.alpha = alpha;
    bench.spec.p = p;
    bench.spec.c = c;
    bench.spec.bc = bc;
    bench.spec.deriv = (bc == BcKind::FracDirichlet || bc == BcKind::RlFracNeumann)
                           ? DerivKind::RiemannLiouville
                           : DerivKind::Caputo;
    bench.spec.weight = default_weight(bc, alpha);

    const char* family = "";
    switch (bc) {
        case BcKind::FracDirichlet: family = "rl-fdbc"; break;
        case BcKind::RlFracNeumann: family = "rl-fnbc"; break;
        case BcKind::Dirichlet: family = "caputo-dbc"; break;
        case BcKind::CaputoFracNeumann: family = "caputo-fnbc"; break;
    }

    if (kind == BenchmarkCase::SmoothRhs) {
        bench.name = std::string(family) + "-smooth-rhs";
        bench.spec.rhs = make_rhs("one-plus-cos-pi", alpha, p, c, bench.spec.deriv);
        // Boundary data used in the experiments for each family.
        if (bc == BcKind::FracDirichlet || bc == BcKind::RlFracNeumann) {
            bench.spec.g1 = 2.0;
            bench.spec.g2 = 1.0;
        } else {
            bench.spec.g1 = 1.0;
            bench.spec.g2 = 2.0;
        }
        return bench;
    }

    bench.name = std::string(family) + "-manufactured";
    if (bench.spec.deriv == DerivKind::RiemannLiouville) {
        bench.spec.rhs = make_rhs("manufactured-1mx2sq", alpha, p, c, bench.spec.deriv);
        bench.exact = [](double x) { return (1.0 - x * x) * (1.0 - x * x); };
        bench.spec.g1 = manufactured_boundary_value(bc, kQuarticCoeffs, kQuarticCoeffs, alpha, p, -1);
        bench.spec.g2 = manufactured_boundary_value(bc, kQuarticCoeffs, kQuarticCoeffs, alpha, p, +1);
    } else if (bc == BcKind::Dirichlet) {
        bench.spec.rhs = make_rhs("manufactured-cospi", alpha, p, c, bench.spec.deriv);
        bench.exact = [](double x) { return std::cos(kPi * x); };
        bench.spec.g1 = -1.0;
        bench.spec.g2 = -1.0;
    } else {
        bench.spec.rhs = make_rhs("manufactured-x3p1", alpha, p, c, bench.spec.deriv);
        bench.exact = [](double x) { return x * x * x + 1.0; };
        bench.spec.g1 = manufactured_boundary_value(bc, kCubicLeft, kCubicRight, alpha, p, -1);
        bench.spec.g2 = manufactured_boundary_value(bc, kCubicLeft, kCubicRight, alpha, p, +1);
    }
    return bench;
}

}  // namespace fracspec
