#pragma once

#include <set>
#include <tuple>
#include <vector>

#include "scldpc/protograph.hpp"

namespace scldpc {

// Per-edge erasure probabilities of one BEC density-evolution run.
// Multiplicity-m protograph edges carry m independent message pairs.
struct DEState {
    double eps = 0.0;
    std::vector<double> v2c;       // per edge instance
    std::vector<double> c2v;
    std::vector<double> residual;  // per variable node
    int iterations = 0;
    bool converged = false;        // change fell below tol before max_iter
};

struct DEOptions {
    double delta = 1e-3;   // decoded criterion on residual erasure probability
    double tol = 1e-12;    // fixed-point change threshold
    int max_iter = 100000;
};

// (layer, chain, position) addressing for threshold targets.
using NodeAddress = std::tuple<int, int, int>;

struct ThresholdQuery {
    std::set<NodeAddress> target_nodes;
    double delta = 1e-3;
    double tol = 1e-5;  // bisection tolerance
};

// Flooding fixed-point iteration from the all-erased initialization.
// Punctured variables take prior erasure probability 1. Residuals decrease
// monotonically in the iteration count.
DEState de_fixed_point(const Protograph& p, double eps, const DEOptions& opts = {});

// Largest eps (within tol) at which every non-punctured residual converges
// below delta. Bisection on [0,1]; tol >= 1e-5 required.
double bp_threshold(const Protograph& p, double tol = 1e-5);

// Bisection where only the variables at the query's target positions
// (punctured excluded) must fall below delta.
double region_threshold(const Protograph& p, const ThresholdQuery& query);

// Predicate over all non-punctured variables in layers 1..T-1; T = 1 falls
// back to bp_threshold.
double cc_threshold(const Protograph& p, int T, double tol = 1e-5);

// Expand target addresses to variable ids (punctured excluded).
std::vector<std::uint32_t> target_variables(const Protograph& p,
                                            const std::set<NodeAddress>& targets);

// Cumulative DE iterations spent by the last threshold call on this thread
// (reported in CLI output).
std::int64_t last_threshold_iterations();

}  // namespace scldpc
