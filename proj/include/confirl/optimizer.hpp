#pragma once

#include <vector>

#include "confirl/common.hpp"
#include "confirl/environment.hpp"
#include "confirl/features.hpp"
#include "confirl/trajectory.hpp"

namespace confirl {

struct OptimizerConfig {
    int max_iters = 2000;
    double grad_tol = 1e-6;
    double backtrack_shrink = 0.5;
    double sufficient_decrease = 1e-4;
    // Penalty schedule for the minimal-effort correction solver.
    double kappa0 = 10.0;
    double kappa_growth = 10.0;
    double kappa_max = 1e6;

    void validate() const;
};

struct OptimizeResult {
    Trajectory traj;
    double cost = 0.0;
    int iters = 0;
    bool converged = false;
    std::vector<double> cost_log;  // accepted-iterate costs, nonincreasing
};

// Projected gradient descent with backtracking on the smooth features.
// Endpoints stay fixed at start/goal; interior waypoints stay inside the
// workspace box. Converges when the projected gradient norm drops below
// grad_tol; otherwise returns the best iterate with converged=false.
OptimizeResult optimize_trajectory(const Vec& theta, const EnvironmentSpec& env,
                                   const FeatureConfig& cfg,
                                   const OptimizerConfig& opt = {});

}  // namespace confirl
