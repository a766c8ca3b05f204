#pragma once

#include "fracspec/experiments.hpp"

#include <optional>

namespace fracspec {

enum class BenchmarkCase {
    ManufacturedSolution,  // exact u known; data and forcing derived from it
    SmoothRhs,             // f = 1 + cos(pi x) with fixed boundary data
};

struct Benchmark {
    std::string name;
    ProblemSpec spec;
    std::function<double(double)> exact;  // empty when only f is prescribed
};

/// The weight used in the paper's experiments: (alpha/2, alpha/2) for the
/// fractional Dirichlet family, unit weight otherwise.
JacobiParams default_weight(BcKind bc, double alpha);

/// Named right-hand sides: "zero", "one-plus-cos-pi", "manufactured-1mx2sq",
/// "manufactured-x3p1", "manufactured-cospi". Manufactured entries derive
/// f = -(operator u) + c u in closed form for the given operator.
RightHandSide make_rhs(const std::string& name, double alpha, double p, double c, DerivKind deriv);

std::vector<std::string> rhs_registry_names();

/// One benchmark configuration (derivative kind, BC family, case) with the
/// boundary data the paper uses.
Benchmark make_benchmark(BcKind bc, BenchmarkCase kind, double alpha, double p, double c);

/// Boundary-operator value of the manufactured monomial expansions at an
/// endpoint: B u(side) where u = sum_j cl[j](1+x)^j = sum_j cr[j](1-x)^j.
double manufactured_boundary_value(BcKind bc, const std::vector<double>& left_coeffs,
                                   const std::vector<double>& right_coeffs, double alpha, double p,
                                   int side);

}  // namespace fracspec
