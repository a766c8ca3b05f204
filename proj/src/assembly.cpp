#include "fracspec/assembly.hpp"

#include "fracspec/util.hpp"

#include <cmath>

namespace fracspec {

double RightHandSide::evaluate(double x) const {
    double s = 0.0;
    for (const auto& part : singular_parts) s += part.evaluate(x);
    if (smooth) s += smooth(x);
    return s;
}

RightHandSide zero_rhs() {
    RightHandSide r;
    r.name = "zero";
    return r;
}

void ProblemSpec::validate_structure() const {
    if (!(alpha > 1.0 && alpha < 2.0)) throw std::invalid_argument("ProblemSpec: alpha must lie in (1, 2)");
    if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("ProblemSpec: p must lie in [0, 1]");
    if (!(c >= 0.0)) throw std::invalid_argument("ProblemSpec: reaction coefficient c must be >= 0");
    if (deriv == DerivKind::RiemannLiouville) {
        if (bc != BcKind::FracDirichlet && bc != BcKind::RlFracNeumann) {
            throw std::invalid_argument("ProblemSpec: R-L derivative pairs with FDBC or R-L FNBC only");
        }
    } else {
        if (bc != BcKind::Dirichlet && bc != BcKind::CaputoFracNeumann) {
            throw std::invalid_argument(
                "ProblemSpec: Caputo derivative pairs with Dirichlet or Caputo FNBC only");
        }
        if (weight.a != 0.0 || weight.b != 0.0) {
            throw std::invalid_argument("ProblemSpec: Caputo scheme is formulated for unit weight");
        }
    }
    weight.validate();
    if (!(weight.a < 1.0 && weight.b < 1.0)) {
        throw std::invalid_argument("ProblemSpec: weight exponents must lie in (-1, 1)");
    }
}

void ProblemSpec::validate() const {
    validate_structure();
    if (bc == BcKind::RlFracNeumann && c == 0.0) {
        throw std::invalid_argument(
            "ProblemSpec: stationary R-L fractional Neumann problem needs c > 0 "
            "(c = 0 requires an extra mass constraint)");
    }
}

namespace {

const char* deriv_name(DerivKind d) {
    return d == DerivKind::RiemannLiouville ? "riemann-liouville" : "caputo";
}

const char* bc_name(BcKind bc) {
    switch (bc) {
        case BcKind::FracDirichlet: return "fdbc";
        case BcKind::RlFracNeumann: return "rl-fnbc";
        case BcKind::Dirichlet: return "dirichlet";
        case BcKind::CaputoFracNeumann: return "caputo-fnbc";
    }
    return "?";
}

}  // namespace

std::map<std::string, std::string> ProblemSpec::digest() const {
    return {
        {"alpha", format_g17(alpha)},
        {"p", format_g17(p)},
        {"c", format_g17(c)},
        {"deriv", deriv_name(deriv)},
        {"bc", bc_name(bc)},
        {"g1", format_g17(g1)},
        {"g2", format_g17(g2)},
        {"rhs", rhs.name},
        {"weight_a", format_g17(weight.a)},
        {"weight_b", format_g17(weight.b)},
    };
}

namespace {

JacobiParams combine(const JacobiParams& u, const JacobiParams& v) {
    const JacobiParams c{u.a + v.a, u.b + v.b};
    if (!(c.a > -1.0 && c.b > -1.0)) {
        throw std::invalid_argument("assembly: combined quadrature weight exponents fall to -1 or below");
    }
    return c;
}

int scaled_size(int base, double scale) { return std::max(1, static_cast<int>(std::lround(base * scale))); }

// Values of the polynomial factor of a WeightedJacobiSum at quadrature nodes.
Vector poly_part_values(const WeightedJacobiSum& g, const Vector& nodes) {
    Vector vals = Vector::Zero(nodes.size());
    // Terms usually share one parameter pair; build one table per distinct pair.
    std::vector<std::pair<JacobiParams, std::vector<const JacobiTerm*>>> groups;
    for (const auto& t : g.terms) {
        bool placed = false;
        for (auto& [params, members] : groups) {
            if (params.a == t.params.a && params.b == t.params.b) {
                members.push_back(&t);
                placed = true;
                break;
            }
        }
        if (!placed) groups.push_back({t.params, {&t}});
    }
    for (const auto& [params, members] : groups) {
        int maxdeg = 0;
        for (const auto* t : members) maxdeg = std::max(maxdeg, t->degree);
        const Matrix table = jacobi_table(maxdeg, params, nodes);
        for (const auto* t : members) vals += t->coeff * table.row(t->degree).transpose();
    }
    return vals;
}

}  // namespace

Vector weighted_inner(const WeightedJacobiSum& g, const JacobiParams& test_params, const Vector& lam,
                      const JacobiParams& outer_weight, int N, double rule_scale) {
    if (g.terms.empty()) return Vector::Zero(N + 1);
    const JacobiParams comb = combine(g.weight, outer_weight);
    const int degree = g.max_degree() + N;
    const QuadratureRule rule = gauss_jacobi(scaled_size(rule_size_for_degree(degree), rule_scale), comb);
    const Vector gv = poly_part_values(g, rule.nodes).cwiseProduct(rule.weights);
    const Matrix test_table = jacobi_table(N, test_params, rule.nodes);
    return lam.asDiagonal() * (test_table * gv);
}

namespace {

// Shared blocks of the Galerkin rows: stiffness, mass, boundary-operator
// values, and f inner products against the scheme's test functions.
struct CoreParts {
    BasisDescriptor basis;
    Matrix stiffness;
    Matrix mass;
    Vector bval_minus;  // (B_- basis_k)(-1)
    Vector bval_plus;   // (B_+ basis_k)(+1)
    Vector f_hat;
    JacobiParams test_params;
    Vector lam;  // phi_i = lam_i P_i^{test_params}
};

Vector rhs_inner_products(const ProblemSpec& spec, int N, const JacobiParams& test_params,
                          const Vector& lam, const AssemblyOptions& opt) {
    Vector f_hat = Vector::Zero(N + 1);
    for (const auto& part : spec.rhs.singular_parts) {
        f_hat += weighted_inner(part, test_params, lam, spec.weight, N, opt.rule_scale);
    }
    if (spec.rhs.smooth) {
        const int base = opt.rhs_rule_size > 0 ? opt.rhs_rule_size : 2 * N + 16;
        const QuadratureRule rule = gauss_jacobi(scaled_size(base, opt.rule_scale), spec.weight);
        Vector fv(rule.size());
        for (int q = 0; q < rule.size(); ++q) fv[q] = spec.rhs.smooth(rule.nodes[q]);
        fv = fv.cwiseProduct(rule.weights);
        f_hat += lam.asDiagonal() * (jacobi_table(N, test_params, rule.nodes) * fv);
    }
    return f_hat;
}

CoreParts rl_core(const ProblemSpec& spec, int N, const AssemblyOptions& opt) {
    const FracParams fp = solve_mu_nu(spec.alpha, spec.p);
    CoreParts core;
    core.basis = BasisDescriptor{BasisKind::PolyFractonomial, N, fp};
    core.test_params = JacobiParams{fp.nu, fp.mu};
    core.lam.resize(N + 1);
    for (int i = 0; i <= N; ++i) core.lam[i] = frac_integral_image(fp, i).coeff;

    // Stiffness: s_ik = Ctil_k lam_i (P_{k-2}^{nu+2,mu+2}, P_i^{nu,mu})_w.
    core.stiffness = Matrix::Zero(N + 1, N + 1);
    if (N >= 2) {
        const QuadratureRule rule =
            gauss_jacobi(scaled_size(rule_size_for_degree(2 * N - 2), opt.rule_scale), spec.weight);
        const Matrix t_test = jacobi_table(N, core.test_params, rule.nodes);
        const Matrix t_shift =
            jacobi_table(N - 2, JacobiParams{fp.nu + 2.0, fp.mu + 2.0}, rule.nodes);
        const Matrix inner = t_test * rule.weights.asDiagonal() * t_shift.transpose();
        for (int k = 2; k <= N; ++k) {
            const double ctil = frac_derivative_image(fp, k, 2).coeff;
            core.stiffness.col(k) = ctil * core.lam.cwiseProduct(inner.col(k - 2));
        }
    }

    // Mass: the trial factor (1-x)^mu (1+x)^nu joins the quadrature weight.
    {
        const JacobiParams comb = combine(JacobiParams{fp.mu, fp.nu}, spec.weight);
        const QuadratureRule rule =
            gauss_jacobi(scaled_size(rule_size_for_degree(2 * N), opt.rule_scale), comb);
        const Matrix t_test = jacobi_table(N, core.test_params, rule.nodes);
        const Matrix t_trial = jacobi_table(N, JacobiParams{fp.mu, fp.nu}, rule.nodes);
        core.mass = core.lam.asDiagonal() * (t_test * rule.weights.asDiagonal() * t_trial.transpose());
    }

    // Boundary-operator values per mode.
    core.bval_minus.resize(N + 1);
    core.bval_plus.resize(N + 1);
    for (int k = 0; k <= N; ++k) {
        if (spec.bc == BcKind::FracDirichlet) {
            const JacobiTerm img = frac_integral_image(fp, k);
            core.bval_minus[k] = img.coeff * jacobi_endpoint(k, img.params, -1);
            core.bval_plus[k] = img.coeff * jacobi_endpoint(k, img.params, +1);
        } else {
            const JacobiTerm img = frac_derivative_image(fp, k, 1);
            core.bval_minus[k] = k == 0 ? 0.0 : img.coeff * jacobi_endpoint(img.degree, img.params, -1);
            core.bval_plus[k] = k == 0 ? 0.0 : img.coeff * jacobi_endpoint(img.degree, img.params, +1);
        }
    }

    core.f_hat = rhs_inner_products(spec, N, core.test_params, core.lam, opt);
    return core;
}

CoreParts caputo_core(const ProblemSpec& spec, int N, const AssemblyOptions& opt) {
    const FracParams fp = solve_mu_nu(spec.alpha, spec.p);
    const double alpha = spec.alpha, p = spec.p, C = fp.c_alpha_p;
    CoreParts core;
    core.basis = BasisDescriptor{BasisKind::Legendre, N, fp};
    core.test_params = JacobiParams{0.0, 0.0};
    core.lam = Vector::Ones(N + 1);

    // Stiffness: (D cD_p^{alpha-1} L_k, L_i) assembled from the one-sided
    // images (1+-x)^{1-alpha} P_n^{...}; each side integrates exactly under
    // its own Gauss-Jacobi weight.
    {
        const int size = scaled_size(rule_size_for_degree(2 * N - 1), opt.rule_scale);
        const QuadratureRule rule_l = gauss_jacobi(size, JacobiParams{0.0, 1.0 - alpha});
        const QuadratureRule rule_r = gauss_jacobi(size, JacobiParams{1.0 - alpha, 0.0});
        const Matrix al = jacobi_table(N, JacobiParams{0.0, 0.0}, rule_l.nodes) *
                          rule_l.weights.asDiagonal() *
                          jacobi_table(N - 1, JacobiParams{alpha - 1.0, 1.0 - alpha}, rule_l.nodes)
                              .transpose();
        const Matrix ar = jacobi_table(N, JacobiParams{0.0, 0.0}, rule_r.nodes) *
                          rule_r.weights.asDiagonal() *
                          jacobi_table(N - 1, JacobiParams{1.0 - alpha, alpha - 1.0}, rule_r.nodes)
                              .transpose();
        Matrix comb_modes = Matrix::Zero(N, N + 1);  // row n, col k: (2n+1) r_n for n<k, n+k odd
        for (int k = 0; k <= N; ++k) {
            for (int n = (k % 2 == 0) ? 1 : 0; n < k; n += 2) {
                comb_modes(n, k) = (2.0 * n + 1.0) * tgamma_ratio(n + 1.0, n + 2.0 - alpha);
            }
        }
        core.stiffness = C * (p * al - (1.0 - p) * ar) * comb_modes;
    }

    core.mass = Matrix::Zero(N + 1, N + 1);
    for (int k = 0; k <= N; ++k) core.mass(k, k) = 2.0 / (2.0 * k + 1.0);

    core.bval_minus.resize(N + 1);
    core.bval_plus.resize(N + 1);
    if (spec.bc == BcKind::Dirichlet) {
        for (int k = 0; k <= N; ++k) {
            core.bval_minus[k] = (k % 2 == 0) ? 1.0 : -1.0;
            core.bval_plus[k] = 1.0;
        }
    } else {
        // cD_p^{alpha-1} L_k(+-1): the factor (1-+x)^{2-alpha} kills one side
        // at each endpoint, so the value comes from the opposite side alone.
        const double two_pow = std::pow(2.0, 2.0 - alpha);
        const JacobiParams left_params{alpha - 2.0, 2.0 - alpha};
        const JacobiParams right_params{2.0 - alpha, alpha - 2.0};
        for (int k = 0; k <= N; ++k) {
            double sum_left = 0.0, sum_right = 0.0;
            for (int n = (k % 2 == 0) ? 1 : 0; n < k; n += 2) {
                const double z = (2.0 * n + 1.0) * tgamma_ratio(n + 1.0, n + 3.0 - alpha);
                sum_left += z * jacobi_endpoint(n, left_params, +1);
                sum_right += z * jacobi_endpoint(n, right_params, -1);
            }
            core.bval_plus[k] = C * p * two_pow * sum_left;
            core.bval_minus[k] = C * (1.0 - p) * two_pow * sum_right;
        }
    }

    core.f_hat = rhs_inner_products(spec, N, core.test_params, core.lam, opt);
    return core;
}

CoreParts build_core(const ProblemSpec& spec, int N, const AssemblyOptions& opt) {
    spec.validate_structure();
    if (N < 2) throw std::invalid_argument("assembly: N must be at least 2");
    return spec.deriv == DerivKind::RiemannLiouville ? rl_core(spec, N, opt) : caputo_core(spec, N, opt);
}

void check_penalty_matches(const ProblemSpec& spec, const PenaltyConfig& penalty) {
    PenaltyRep expected{};
    switch (spec.bc) {
        case BcKind::FracDirichlet: expected = PenaltyRep::JacobiModal; break;
        case BcKind::RlFracNeumann: expected = PenaltyRep::SingularWeighted; break;
        case BcKind::Dirichlet:
        case BcKind::CaputoFracNeumann: expected = PenaltyRep::LegendreModal; break;
    }
    if (penalty.representation != expected) {
        throw std::invalid_argument("assembly: penalty representation does not match the BC family");
    }
}

}  // namespace

SpmOperator assemble_spm_parts(const ProblemSpec& spec, int N, const PenaltyConfig& penalty,
                               const AssemblyOptions& opt) {
    check_penalty_matches(spec, penalty);
    const CoreParts core = build_core(spec, N, opt);
    const double rho_minus = penalty.rho_minus * opt.rho_multiplier;
    const double rho_plus = penalty.rho_plus * opt.rho_multiplier;

    const Vector qv_minus =
        weighted_inner(penalty.q_minus, core.test_params, core.lam, spec.weight, N, opt.rule_scale);
    const Vector qv_plus =
        weighted_inner(penalty.q_plus, core.test_params, core.lam, spec.weight, N, opt.rule_scale);

    SpmOperator op;
    op.basis = core.basis;
    op.stiffness = core.stiffness;
    op.mass = core.mass;
    op.boundary = rho_minus * (qv_minus * core.bval_minus.transpose()) +
                  rho_plus * (qv_plus * core.bval_plus.transpose());
    op.f_hat = core.f_hat;
    op.f_tilde = rho_minus * spec.g1 * qv_minus + rho_plus * spec.g2 * qv_plus;
    return op;
}

LinearSystem assemble_spm(const ProblemSpec& spec, int N, const PenaltyConfig& penalty,
                          const AssemblyOptions& opt) {
    const SpmOperator op = assemble_spm_parts(spec, N, penalty, opt);
    return LinearSystem{op.system_matrix(spec.c), op.f_hat + op.f_tilde, Method::Spm, op.basis};
}

LinearSystem assemble_pgs_tau(const ProblemSpec& spec, int N, const AssemblyOptions& opt) {
    const CoreParts core = build_core(spec, N, opt);
    Matrix a = -core.stiffness + spec.c * core.mass;
    a.row(N - 1) = core.bval_minus.transpose();
    a.row(N) = core.bval_plus.transpose();
    Vector rhs = core.f_hat;
    rhs[N - 1] = spec.g1;
    rhs[N] = spec.g2;
    return LinearSystem{std::move(a), std::move(rhs), Method::PgsTau, core.basis};
}

PenaltyConfig make_penalty(const ProblemSpec& spec, int N) {
    switch (spec.bc) {
        case BcKind::FracDirichlet: return penalty_rl_fdbc(N, spec.weight);
        case BcKind::RlFracNeumann: return penalty_rl_fnbc(N, solve_mu_nu(spec.alpha, spec.p));
        case BcKind::Dirichlet: return penalty_caputo_dbc(N);
        case BcKind::CaputoFracNeumann: return penalty_caputo_fnbc(N);
    }
    throw std::logic_error("make_penalty: unknown BC kind");
}

}  // namespace fracspec
