#pragma once

#include "confirl/common.hpp"
#include "confirl/environment.hpp"
#include "confirl/trajectory.hpp"

namespace confirl {

// Total feature counts of a trajectory, one entry per enabled feature,
// each divided by its normalizer:
//   efficiency: sum_i ||(x^i - x^{i-1}) / dt||^2
//   table:      sum_i |x^i_vert - table_offset|        (unsigned plane distance)
//   laptop:     sum_i max(0, L - ||x^i - laptop_center||)
//   human:      sum_i max(0, R - ||x^i - human_center||)
// The raw hinge is what gets reported; the smooth variant blends the hinge
// corner over a band of width 0.05*radius so gradient-based solvers see a
// C^1 objective.
Vec compute_features(const Trajectory& traj, const EnvironmentSpec& env,
                     const FeatureConfig& cfg);
Vec compute_features_smooth(const Trajectory& traj, const EnvironmentSpec& env,
                            const FeatureConfig& cfg);

// d x (n*(T+1)) Jacobian of the smooth features with respect to the
// flattened waypoints.
Mat feature_jacobian_smooth(const Trajectory& traj, const EnvironmentSpec& env,
                            const FeatureConfig& cfg);

double linear_cost(const Vec& theta, const Vec& phi);
double phri_cost(const Vec& theta, const Vec& phi_d, const Vec& u_h, double lambda);

}  // namespace confirl
