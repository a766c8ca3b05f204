#include "fracspec/special.hpp"

#include "support/oracles.hpp"

#include <doctest.h>

#include <cmath>

using namespace fracspec;

namespace {
constexpr double kPi = 3.14159265358979323846;

double beta_moment(const JacobiParams& ab, int m) {
    // I_m = int (1-x)^a (1+x)^b x^m dx, seeded by the Beta-function mass and
    // advanced by the integration-by-parts recurrence
    //   I_m = ((b-a) I_{m-1} + (m-1) I_{m-2}) / (a+b+m+1).
    double i_prev =
        std::pow(2.0, ab.a + ab.b + 1.0) * gamma_fn(ab.a + 1.0) * gamma_fn(ab.b + 1.0) /
        gamma_fn(ab.a + ab.b + 2.0);
    if (m == 0) return i_prev;
    double i_cur = (ab.b - ab.a) * i_prev / (ab.a + ab.b + 2.0);
    for (int k = 2; k <= m; ++k) {
        const double next = ((ab.b - ab.a) * i_cur + (k - 1) * i_prev) / (ab.a + ab.b + k + 1.0);
        i_prev = i_cur;
        i_cur = next;
    }
    return i_cur;
}
}  // namespace

TEST_CASE("gamma: known values") {
    CHECK(gamma_fn(1.0) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(gamma_fn(0.5) == doctest::Approx(1.7724538509055160).epsilon(1e-14));
    CHECK(gamma_fn(5.0) == doctest::Approx(24.0).epsilon(1e-14));
    CHECK(gamma_fn(-0.5) == doctest::Approx(-3.5449077018110320).epsilon(1e-13));
}

TEST_CASE("gamma: quadrature oracle on [ -10, 50 ] sample") {
    for (double x : {0.1, 0.7, 1.3, 2.5, 4.7, 9.2, 17.6, 33.0, 49.5}) {
        const double expected = testing::gamma_by_quadrature(x);
        CHECK(gamma_fn(x) == doctest::Approx(expected).epsilon(1e-13));
    }
    // Negative non-integer arguments through the reflection identity.
    for (double x : {-0.3, -1.7, -4.2, -9.6}) {
        const double refl = kPi / (std::sin(kPi * x) * testing::gamma_by_quadrature(1.0 - x));
        CHECK(gamma_fn(x) == doctest::Approx(refl).epsilon(1e-12));
    }
}

TEST_CASE("gamma: reflection identity") {
    for (int i = 1; i <= 9; ++i) {
        const double x = 0.1 * i;
        CHECK(gamma_fn(x) * gamma_fn(1.0 - x) * std::sin(kPi * x) / kPi ==
              doctest::Approx(1.0).epsilon(1e-12));
    }
}

TEST_CASE("gamma: poles rejected, reciprocal vanishes there") {
    CHECK_THROWS_AS(gamma_fn(0.0), std::domain_error);
    CHECK_THROWS_AS(gamma_fn(-3.0), std::domain_error);
    CHECK(rgamma(0.0) == 0.0);
    CHECK(rgamma(-7.0) == 0.0);
    CHECK(rgamma(2.5) == doctest::Approx(1.0 / gamma_fn(2.5)).epsilon(1e-14));
}

TEST_CASE("log-gamma tracks gamma and survives large arguments") {
    for (double x : {0.2, 1.5, 10.0, 80.0}) {
        CHECK(lgamma_abs(x) == doctest::Approx(std::log(std::abs(gamma_fn(x)))).epsilon(1e-12));
    }
    // Ratio with arguments far beyond double overflow of Gamma itself.
    const double r = tgamma_ratio(500.3, 500.0);
    CHECK(std::isfinite(r));
    CHECK(r == doctest::Approx(std::exp(0.3 * std::log(499.9))).epsilon(1e-3));
}

TEST_CASE("jacobi: low-degree closed forms") {
    const JacobiParams ab{0.3, -0.6};
    CHECK(jacobi(0, ab, 0.42) == 1.0);
    for (double x : {-0.9, 0.0, 0.55}) {
        CHECK(jacobi(1, ab, x) ==
              doctest::Approx(0.5 * ((ab.a + ab.b + 2.0) * x + ab.a - ab.b)).epsilon(1e-14));
    }
}

TEST_CASE("jacobi: hypergeometric oracle at degree 5") {
    const JacobiParams ab{0.6, 0.75};
    const double expected = testing::jacobi_by_hypergeom(5, ab, 0.3);
    CHECK(jacobi(5, ab, 0.3) == doctest::Approx(expected).epsilon(1e-12));
    // Stability spot-check at high degree (n = 1024 stays finite and matches
    // the all-degrees recurrence).
    const Vector all = jacobi_all(1024, ab, -0.37);
    CHECK(std::isfinite(all[1024]));
    CHECK(jacobi(1024, ab, -0.37) == doctest::Approx(all[1024]).epsilon(1e-13));
}

TEST_CASE("jacobi_table agrees with pointwise evaluation") {
    const JacobiParams ab{-0.25, 0.8};
    Vector x(3);
    x << -0.7, 0.1, 0.9;
    const Matrix t = jacobi_table(6, ab, x);
    for (int n = 0; n <= 6; ++n) {
        for (int q = 0; q < 3; ++q) CHECK(t(n, q) == doctest::Approx(jacobi(n, ab, x[q])).epsilon(1e-13));
    }
}

TEST_CASE("jacobi_endpoint: closed forms") {
    CHECK(jacobi_endpoint(0, JacobiParams{0.37, -0.2}, +1) == doctest::Approx(1.0));
    CHECK(jacobi_endpoint(3, JacobiParams{0.0, 0.0}, +1) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(jacobi_endpoint(3, JacobiParams{0.0, 0.0}, -1) == doctest::Approx(-1.0).epsilon(1e-14));
    // Extrapolation cross-check just inside the endpoint.
    const JacobiParams ab{0.9, 0.3};
    CHECK(jacobi_endpoint(4, ab, -1) == doctest::Approx(jacobi(4, ab, -1.0 + 1e-12)).epsilon(1e-9));
    CHECK(jacobi_endpoint(7, ab, +1) == doctest::Approx(jacobi(7, ab, 1.0)).epsilon(1e-13));
}

TEST_CASE("jacobi_deriv_coeff: trivial and finite-difference oracle") {
    CHECK(jacobi_deriv_coeff(5, 0, JacobiParams{0.1, 0.9}) == 1.0);
    CHECK(jacobi_deriv_coeff(1, 1, JacobiParams{0.0, 0.0}) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(jacobi_deriv_coeff(3, 5, JacobiParams{0.5, 0.5}) == 0.0);

    const JacobiParams ab{0.6, 0.3};
    const double d72 = jacobi_deriv_coeff(7, 2, ab);
    const JacobiParams shifted{ab.a + 2.0, ab.b + 2.0};
    for (double x : {-0.5, 0.0, 0.4}) {
        const double fd = testing::fd_second_derivative([&](double y) { return jacobi(7, ab, y); }, x);
        CHECK(d72 * jacobi(5, shifted, x) == doctest::Approx(fd).epsilon(1e-6));
    }
}

TEST_CASE("jacobi derivative identity at 50 interior points") {
    const JacobiParams ab{0.8, -0.5};
    for (int n : {1, 4, 9}) {
        const double c = 0.5 * (n + ab.a + ab.b + 1.0);
        const JacobiParams shifted{ab.a + 1.0, ab.b + 1.0};
        for (int i = 1; i <= 50; ++i) {
            const double x = -0.98 + 1.96 * (i - 1) / 49.0;
            const double fd =
                (jacobi(n, ab, x + 1e-6) - jacobi(n, ab, x - 1e-6)) / 2e-6;
            const double exact = c * jacobi(n - 1, shifted, x);
            CHECK(exact == doctest::Approx(fd).epsilon(1e-9));
        }
    }
}

TEST_CASE("jacobi_norm: Legendre and quadrature oracle") {
    CHECK(jacobi_norm(0, JacobiParams{0.0, 0.0}) == doctest::Approx(2.0).epsilon(1e-14));
    for (int n : {1, 2, 5, 9}) {
        CHECK(jacobi_norm(n, JacobiParams{0.0, 0.0}) ==
              doctest::Approx(2.0 / (2.0 * n + 1.0)).epsilon(1e-14));
    }
    const JacobiParams ab{-0.4, -0.1};
    const QuadratureRule rule = gauss_jacobi(8, ab);
    const double quad = rule.integrate([&](double x) {
        const double p = jacobi(3, ab, x);
        return p * p;
    });
    CHECK(jacobi_norm(3, ab) == doctest::Approx(quad).epsilon(1e-12));
}

TEST_CASE("gauss_jacobi: tiny Legendre rules") {
    const QuadratureRule r1 = gauss_jacobi(1, JacobiParams{0.0, 0.0});
    CHECK(r1.nodes[0] == doctest::Approx(0.0).epsilon(1e-15));
    CHECK(r1.weights[0] == doctest::Approx(2.0).epsilon(1e-14));

    const QuadratureRule r2 = gauss_jacobi(2, JacobiParams{0.0, 0.0});
    CHECK(r2.nodes[0] == doctest::Approx(-1.0 / std::sqrt(3.0)).epsilon(1e-14));
    CHECK(r2.nodes[1] == doctest::Approx(1.0 / std::sqrt(3.0)).epsilon(1e-14));
    CHECK(r2.weights[0] == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(r2.weights[1] == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("gauss_jacobi: moments against Beta closed forms") {
    const JacobiParams ab{0.75, -0.25};
    const QuadratureRule rule = gauss_jacobi(8, ab);
    for (int m = 0; m <= 15; ++m) {
        const double expected = beta_moment(ab, m);
        const double computed = rule.integrate([m](double x) { return std::pow(x, m); });
        CHECK(computed == doctest::Approx(expected).epsilon(1e-12));
    }
}

TEST_CASE("gauss_jacobi: weight sums and validity over parameter samples") {
    for (const JacobiParams& ab :
         {JacobiParams{0.0, 0.0}, JacobiParams{0.6, 0.6}, JacobiParams{-0.25, -0.25},
          JacobiParams{0.8, -0.5}, JacobiParams{2.3, -0.9}}) {
        for (int n : {1, 2, 7, 33}) {
            const QuadratureRule rule = gauss_jacobi(n, ab);
            const double mass = std::pow(2.0, ab.a + ab.b + 1.0) * gamma_fn(ab.a + 1.0) *
                                gamma_fn(ab.b + 1.0) / gamma_fn(ab.a + ab.b + 2.0);
            CHECK(rule.weights.sum() == doctest::Approx(mass).epsilon(1e-12));
            for (int j = 0; j < n; ++j) {
                CHECK(rule.nodes[j] > -1.0);
                CHECK(rule.nodes[j] < 1.0);
                CHECK(rule.weights[j] > 0.0);
                if (j > 0) CHECK(rule.nodes[j] > rule.nodes[j - 1]);
            }
        }
    }
}

TEST_CASE("orthogonality across parameter samples") {
    for (const JacobiParams& ab :
         {JacobiParams{0.0, 0.0}, JacobiParams{0.6, 0.6}, JacobiParams{-0.25, -0.25},
          JacobiParams{0.8, -0.5}}) {
        for (int n : {3, 11, 20}) {
            const QuadratureRule rule = gauss_jacobi(n + 2, ab);
            const Matrix table = jacobi_table(n, ab, rule.nodes);
            for (int m = 0; m < n; ++m) {
                const double off =
                    (table.row(m).array() * table.row(n).array() * rule.weights.transpose().array()).sum();
                CHECK(std::abs(off) < 1e-11);
            }
            const double diag =
                (table.row(n).array().square() * rule.weights.transpose().array()).sum();
            CHECK(diag == doctest::Approx(jacobi_norm(n, ab)).epsilon(1e-11));
        }
    }
}

TEST_CASE("invalid parameters are rejected") {
    CHECK_THROWS_AS(gauss_jacobi(0, JacobiParams{0.0, 0.0}), std::invalid_argument);
    CHECK_THROWS_AS(gauss_jacobi(4, JacobiParams{-1.0, 0.0}), std::invalid_argument);
    CHECK_THROWS_AS(jacobi(-1, JacobiParams{0.0, 0.0}, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(tgamma_ratio(-1.0, 2.0), std::domain_error);
}
