#include "fracspec/special.hpp"

#include <algorithm>
#include <cmath>

namespace fracspec {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kSqrt2Pi = 2.50662827463100050242;
constexpr double kLogPi = 1.14472988584940017414;

// Lanczos approximation, g = 607/128, 15 coefficients.
constexpr double kLanczosG = 4.7421875;
constexpr double kLanczos[15] = {
    0.99999999999999709182,
    57.156235665862923517,
    -59.597960355475491248,
    14.136097974741747174,
    -0.49191381609762019978,
    0.33994649984811888699e-4,
    0.46523628927048575665e-4,
    -0.98374475304879564677e-4,
    0.15808870322491248884e-3,
    -0.21026444172410488319e-3,
    0.21743961811521264320e-3,
    -0.16431810653676389022e-3,
    0.84418223983852743293e-4,
    -0.26190838401581408670e-4,
    0.36899182659531622704e-5,
};

double lanczos_sum(double x) {
    double s = kLanczos[0];
    for (int k = 1; k < 15; ++k) s += kLanczos[k] / (x - 1.0 + k);
    return s;
}

bool is_nonpositive_integer(double x) { return x <= 0.0 && x == std::floor(x); }

}  // namespace

void JacobiParams::validate() const {
    if (!(a > -1.0) || !(b > -1.0)) {
        throw std::invalid_argument("JacobiParams: weight exponents must exceed -1");
    }
}

double gamma_fn(double x) {
    if (is_nonpositive_integer(x)) {
        throw std::domain_error("gamma_fn: pole at non-positive integer argument");
    }
    if (x < 0.5) {
        return kPi / (std::sin(kPi * x) * gamma_fn(1.0 - x));
    }
    const double t = x + kLanczosG - 0.5;
    return kSqrt2Pi * std::pow(t, x - 0.5) * std::exp(-t) * lanczos_sum(x);
}

double lgamma_abs(double x) {
    if (is_nonpositive_integer(x)) {
        throw std::domain_error("lgamma_abs: pole at non-positive integer argument");
    }
    if (x < 0.5) {
        return kLogPi - std::log(std::abs(std::sin(kPi * x))) - lgamma_abs(1.0 - x);
    }
    const double t = x + kLanczosG - 0.5;
    return 0.5 * std::log(2.0 * kPi) + (x - 0.5) * std::log(t) - t + std::log(lanczos_sum(x));
}

double rgamma(double x) {
    if (is_nonpositive_integer(x)) return 0.0;
    if (x < 0.5) return std::sin(kPi * x) * gamma_fn(1.0 - x) / kPi;
    if (x > 150.0) return std::exp(-lgamma_abs(x));
    return 1.0 / gamma_fn(x);
}

double tgamma_ratio(double num, double den) {
    if (!(num > 0.0) || !(den > 0.0)) {
        throw std::domain_error("tgamma_ratio: arguments must be positive");
    }
    if (num < 30.0 && den < 30.0) return gamma_fn(num) / gamma_fn(den);
    return std::exp(lgamma_abs(num) - lgamma_abs(den));
}

namespace {

// One step of the standard Jacobi three-term recurrence, m >= 2.
inline double jacobi_step(int m, double a, double b, double x, double pm1, double pm2) {
    const double s = 2.0 * m + a + b;
    const double c1 = 2.0 * m * (m + a + b) * (s - 2.0);
    const double c2 = (s - 1.0) * (a * a - b * b);
    const double c3 = (s - 2.0) * (s - 1.0) * s;
    const double c4 = 2.0 * (m + a - 1.0) * (m + b - 1.0) * s;
    return ((c2 + c3 * x) * pm1 - c4 * pm2) / c1;
}

}  // namespace

double jacobi(int n, const JacobiParams& ab, double x) {
    if (n < 0) throw std::invalid_argument("jacobi: degree must be non-negative");
    ab.validate();
    if (n == 0) return 1.0;
    double pm2 = 1.0;
    double pm1 = 0.5 * ((ab.a - ab.b) + (ab.a + ab.b + 2.0) * x);
    for (int m = 2; m <= n; ++m) {
        const double pm = jacobi_step(m, ab.a, ab.b, x, pm1, pm2);
        pm2 = pm1;
        pm1 = pm;
    }
    return pm1;
}

Vector jacobi_all(int nmax, const JacobiParams& ab, double x) {
    if (nmax < 0) throw std::invalid_argument("jacobi_all: degree must be non-negative");
    ab.validate();
    Vector v(nmax + 1);
    v[0] = 1.0;
    if (nmax == 0) return v;
    v[1] = 0.5 * ((ab.a - ab.b) + (ab.a + ab.b + 2.0) * x);
    for (int m = 2; m <= nmax; ++m) v[m] = jacobi_step(m, ab.a, ab.b, x, v[m - 1], v[m - 2]);
    return v;
}

Matrix jacobi_table(int nmax, const JacobiParams& ab, const Vector& x) {
    if (nmax < 0) throw std::invalid_argument("jacobi_table: degree must be non-negative");
    ab.validate();
    const auto q = x.size();
    Matrix t(nmax + 1, q);
    t.row(0).setOnes();
    if (nmax == 0) return t;
    t.row(1) = (0.5 * (ab.a + ab.b + 2.0) * x.array() + 0.5 * (ab.a - ab.b)).matrix().transpose();
    for (int m = 2; m <= nmax; ++m) {
        const double s = 2.0 * m + ab.a + ab.b;
        const double c1 = 2.0 * m * (m + ab.a + ab.b) * (s - 2.0);
        const double c2 = (s - 1.0) * (ab.a * ab.a - ab.b * ab.b);
        const double c3 = (s - 2.0) * (s - 1.0) * s;
        const double c4 = 2.0 * (m + ab.a - 1.0) * (m + ab.b - 1.0) * s;
        t.row(m) = ((c2 + c3 * x.transpose().array()) * t.row(m - 1).array() - c4 * t.row(m - 2).array()) / c1;
    }
    return t;
}

double jacobi_endpoint(int n, const JacobiParams& ab, int side) {
    if (n < 0) throw std::invalid_argument("jacobi_endpoint: degree must be non-negative");
    if (side != 1 && side != -1) throw std::invalid_argument("jacobi_endpoint: side must be +-1");
    ab.validate();
    if (side == 1) {
        return tgamma_ratio(n + ab.a + 1.0, n + 1.0) / gamma_fn(ab.a + 1.0);
    }
    const double mag = tgamma_ratio(n + ab.b + 1.0, n + 1.0) / gamma_fn(ab.b + 1.0);
    return (n % 2 == 0) ? mag : -mag;
}

double jacobi_deriv_coeff(int n, int k, const JacobiParams& ab) {
    if (n < 0 || k < 0) throw std::invalid_argument("jacobi_deriv_coeff: negative index");
    ab.validate();
    if (k > n) return 0.0;
    if (k == 0) return 1.0;
    return tgamma_ratio(n + k + ab.a + ab.b + 1.0, n + ab.a + ab.b + 1.0) / std::pow(2.0, k);
}

double jacobi_norm(int n, const JacobiParams& ab) {
    if (n < 0) throw std::invalid_argument("jacobi_norm: degree must be non-negative");
    ab.validate();
    const double a = ab.a, b = ab.b;
    if (n == 0) {
        // Beta-function form; avoids Gamma(a+b+1) which can sit at a pole.
        return std::pow(2.0, a + b + 1.0) * gamma_fn(a + 1.0) * gamma_fn(b + 1.0) / gamma_fn(a + b + 2.0);
    }
    return std::pow(2.0, a + b + 1.0) / (2.0 * n + a + b + 1.0) * tgamma_ratio(n + a + 1.0, n + 1.0) *
           tgamma_ratio(n + b + 1.0, n + a + b + 1.0);
}

QuadratureRule gauss_jacobi(int n, const JacobiParams& ab) {
    if (n < 1) throw std::invalid_argument("gauss_jacobi: rule size must be positive");
    ab.validate();
    const double a = ab.a, b = ab.b;

    // Golub-Welsch: eigenvalues of the symmetric tridiagonal recurrence matrix.
    Vector diag(n), sub(std::max(n - 1, 0));
    diag[0] = (b - a) / (a + b + 2.0);
    for (int k = 1; k < n; ++k) {
        const double s = 2.0 * k + a + b;
        diag[k] = (b * b - a * a) / (s * (s + 2.0));
    }
    for (int k = 1; k < n; ++k) {
        double beta;
        if (k == 1) {
            // (1+a+b) cancels against (2k+a+b-1); written cancel-free.
            beta = 4.0 * (1.0 + a) * (1.0 + b) / ((2.0 + a + b) * (2.0 + a + b) * (3.0 + a + b));
        } else {
            const double s = 2.0 * k + a + b;
            beta = 4.0 * k * (k + a) * (k + b) * (k + a + b) / (s * s * (s + 1.0) * (s - 1.0));
        }
        sub[k - 1] = std::sqrt(beta);
    }

    Eigen::SelfAdjointEigenSolver<Matrix> es;
    es.computeFromTridiagonal(diag, sub, Eigen::EigenvaluesOnly);
    if (es.info() != Eigen::Success) {
        throw std::runtime_error("gauss_jacobi: tridiagonal eigenvalue iteration failed");
    }
    Vector nodes = es.eigenvalues();

    // Newton polish of each node on P_n^{a,b}.
    const JacobiParams shifted{a + 1.0, b + 1.0};
    const double dcoef = 0.5 * (n + a + b + 1.0);
    for (int j = 0; j < n; ++j) {
        double x = nodes[j];
        bool converged = false;
        for (int it = 0; it < 100; ++it) {
            const double f = jacobi(n, ab, x);
            const double df = dcoef * jacobi(n - 1, shifted, x);
            const double dx = f / df;
            x -= dx;
            if (std::abs(dx) < 1e-14) {
                converged = true;
                break;
            }
        }
        if (!converged) {
            throw std::runtime_error("gauss_jacobi: Newton polish failed to converge for a node");
        }
        nodes[j] = x;
    }
    std::sort(nodes.data(), nodes.data() + n);
    if (a == b) {
        // Symmetric weight: enforce node symmetry exactly.
        for (int j = 0; j < n / 2; ++j) {
            const double m = 0.5 * (nodes[j] - nodes[n - 1 - j]);
            nodes[j] = m;
            nodes[n - 1 - j] = -m;
        }
        if (n % 2 == 1) nodes[n / 2] = 0.0;
    }

    const double c = std::pow(2.0, a + b + 1.0) * tgamma_ratio(n + a + 1.0, n + 1.0) *
                     tgamma_ratio(n + b + 1.0, n + a + b + 1.0);
    Vector weights(n);
    for (int j = 0; j < n; ++j) {
        const double x = nodes[j];
        const double dp = dcoef * jacobi(n - 1, shifted, x);
        weights[j] = c / ((1.0 - x * x) * dp * dp);
    }

    for (int j = 0; j < n; ++j) {
        if (!(nodes[j] > -1.0 && nodes[j] < 1.0) || !(weights[j] > 0.0) ||
            (j > 0 && !(nodes[j] > nodes[j - 1]))) {
            throw std::runtime_error("gauss_jacobi: rule failed validity checks");
        }
    }
    return QuadratureRule{std::move(nodes), std::move(weights), ab};
}

}  // namespace fracspec
