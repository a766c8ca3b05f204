// Self-consistency of the reference-solution protocol: the N = 512 and
// N = 384 SPM references agree to within 10x the measured N = 256 error for
// every smooth-RHS configuration.

#include "fracspec/experiments.hpp"

#include "fracspec/problems.hpp"

#include <doctest.h>

using namespace fracspec;

namespace {

struct Config {
    BcKind bc;
    double c;
};

}  // namespace

TEST_CASE("reference stability across orders for every smooth-RHS configuration") {
    const std::vector<Config> configs = {
        {BcKind::FracDirichlet, 0.0}, {BcKind::FracDirichlet, 1.0}, {BcKind::RlFracNeumann, 1.0},
        {BcKind::Dirichlet, 0.0},     {BcKind::CaputoFracNeumann, 1.0},
    };
    for (const Config& cfg : configs) {
        for (double alpha : {1.2, 1.8}) {
            CAPTURE(static_cast<int>(cfg.bc));
            CAPTURE(alpha);
            const Benchmark bench = make_benchmark(cfg.bc, BenchmarkCase::SmoothRhs, alpha, 0.8, cfg.c);
            const SolutionExpansion ref512 = solve(bench.spec, 512, Method::Spm);
            const SolutionExpansion ref384 = solve(bench.spec, 384, Method::Spm);
            const SolutionExpansion u256 = solve(bench.spec, 256, Method::Spm);
            const double err256 = linf_error(u256, ref512);
            const double drift = linf_error(ref384, ref512);
            CHECK(drift <= 10.0 * err256);
        }
    }
}
