#pragma once

#include "fracspec/special.hpp"

#include <complex>

namespace fracspec {

/// Partially pivoted LU with a singularity check; the factorization is
/// reusable across right-hand sides (time stepping).
class LuSolver {
  public:
    explicit LuSolver(Matrix a);

    Vector solve(const Vector& b) const;
    double determinant() const;
    Eigen::Index size() const { return lu_.rows(); }

  private:
    Eigen::PartialPivLU<Matrix> lu_;
};

/// One-shot convenience wrapper.
Vector lu_solve(const Matrix& a, const Vector& b);

struct EigenSummary {
    Eigen::VectorXcd eigenvalues;
    double min_real_part{};      // min over Re(lambda) of the full spectrum
    double min_symmetric_eig{};  // smallest eigenvalue of (A + A^T)/2
};

/// Diagonal similarity scaling (Parlett-Reinsch); reduces the dynamic range
/// induced by large penalty rows before the eigenvalue iteration.
Matrix balance(Matrix a);

/// Full spectrum of a real dense matrix plus the symmetric-part minimum
/// eigenvalue as a stricter coercivity certificate.
EigenSummary eigen_summary(const Matrix& a);

}  // namespace fracspec
