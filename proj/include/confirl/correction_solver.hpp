#pragma once

#include <vector>

#include "confirl/deformation.hpp"
#include "confirl/features.hpp"
#include "confirl/optimizer.hpp"

namespace confirl {

struct CorrectionSolution {
    Vec u_star;
    Mat hessian;  // symmetrized, eigenvalue-clamped at 1e-8
    double constraint_residual = 0.0;
    bool converged = false;

    double log_det_hessian() const;
};

// Smallest-norm input reproducing the target feature values of a deformed
// trajectory:
//   minimize ||u||^2  s.t.  Phi(deform(traj, u, t)) = phi_target
// solved as an increasing-kappa penalty sweep, each stage minimized with a
// BFGS inner loop started from the previous stage (u = 0 initially, which
// violates the constraint). `active` restricts the constraint to a subset
// of feature indices; empty means all. The Hessian of the final penalized
// objective comes from central finite differences.
CorrectionSolution minimal_effort_correction(const Vec& phi_target,
                                             const Trajectory& robot_traj, int timestep,
                                             const DeformationOperator& op,
                                             const EnvironmentSpec& env,
                                             const FeatureConfig& cfg,
                                             const OptimizerConfig& opt = {},
                                             const std::vector<int>& active = {});

}  // namespace confirl
