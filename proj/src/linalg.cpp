#include "fracspec/linalg.hpp"

#include <Eigen/Eigenvalues>

#include <cmath>

namespace fracspec {

LuSolver::LuSolver(Matrix a) : lu_([&] {
    if (a.rows() != a.cols() || a.rows() < 1) {
        throw std::invalid_argument("LuSolver: matrix must be square and non-empty");
    }
    return Eigen::PartialPivLU<Matrix>(std::move(a));
}()) {
    const auto& u = lu_.matrixLU();
    for (Eigen::Index i = 0; i < u.rows(); ++i) {
        if (std::abs(u(i, i)) < 1e-300) {
            throw std::runtime_error("LuSolver: matrix is numerically singular");
        }
    }
}

Vector LuSolver::solve(const Vector& b) const {
    if (b.size() != lu_.rows()) throw std::invalid_argument("LuSolver::solve: size mismatch");
    return lu_.solve(b);
}

double LuSolver::determinant() const { return lu_.determinant(); }

Vector lu_solve(const Matrix& a, const Vector& b) { return LuSolver(a).solve(b); }

Matrix balance(Matrix a) {
    const Eigen::Index n = a.rows();
    if (n != a.cols()) throw std::invalid_argument("balance: matrix must be square");
    const double radix = 2.0;
    bool done = false;
    while (!done) {
        done = true;
        for (Eigen::Index i = 0; i < n; ++i) {
            double c = 0.0, r = 0.0;
            for (Eigen::Index j = 0; j < n; ++j) {
                if (j == i) continue;
                c += std::abs(a(j, i));
                r += std::abs(a(i, j));
            }
            if (c == 0.0 || r == 0.0) continue;
            double f = 1.0;
            const double s = c + r;
            while (c < r / radix) {
                c *= radix;
                r /= radix;
                f *= radix;
            }
            while (c > r * radix) {
                c /= radix;
                r *= radix;
                f /= radix;
            }
            if ((c + r) < 0.95 * s && f != 1.0) {
                done = false;
                a.row(i) /= f;
                a.col(i) *= f;
            }
        }
    }
    return a;
}

EigenSummary eigen_summary(const Matrix& a) {
    if (a.rows() != a.cols() || a.rows() < 1) {
        throw std::invalid_argument("eigen_summary: matrix must be square and non-empty");
    }
    EigenSummary out;

    Eigen::EigenSolver<Matrix> es(balance(a), /*computeEigenvectors=*/false);
    if (es.info() != Eigen::Success) {
        throw std::runtime_error("eigen_summary: QR iteration failed to converge");
    }
    out.eigenvalues = es.eigenvalues();
    out.min_real_part = out.eigenvalues.real().minCoeff();

    const Matrix sym = 0.5 * (a + a.transpose());
    Eigen::SelfAdjointEigenSolver<Matrix> ses(sym, Eigen::EigenvaluesOnly);
    if (ses.info() != Eigen::Success) {
        throw std::runtime_error("eigen_summary: symmetric eigenvalue iteration failed");
    }
    out.min_symmetric_eig = ses.eigenvalues().minCoeff();
    return out;
}

}  // namespace fracspec
