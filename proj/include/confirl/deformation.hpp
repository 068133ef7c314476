#pragma once

#include <Eigen/Cholesky>

#include "confirl/common.hpp"
#include "confirl/environment.hpp"
#include "confirl/trajectory.hpp"

namespace confirl {

// A physical correction: an instantaneous torque applied at one timestep.
struct CorrectionEvent {
    int timestep = 0;
    Vec torque;

    void check_against(const EnvironmentSpec& env) const;
};

// Trajectory-deformation norm (mu, A): A = K^T K with K the second-order
// finite-difference operator plus identity rows on both endpoints. A push
// u at timestep t displaces the waypoints by mu * A^{-1} u_tilde, solved
// on the subspace with both endpoints pinned to zero so deformations never
// move x^0 or x^T.
struct DeformationOperator {
    double mu = 0.1;
    int horizon = 0;
    int state_dim = 0;
    Mat norm_matrix;  // per-dimension (T+1) x (T+1) block of A

    // Displacement profile over all waypoints for a unit push at timestep
    // t: zero at the endpoints, mu * A^{-1} restricted to the interior.
    Vec unit_response(int t) const;

    Mat full_matrix() const;  // n(T+1) x n(T+1) Kronecker expansion
    void validate() const;

   private:
    friend DeformationOperator build_deformation(const EnvironmentSpec& env, double mu);
    Eigen::LDLT<Mat> interior_solver_;
};

DeformationOperator build_deformation(const EnvironmentSpec& env, double mu);

Trajectory deform(const Trajectory& robot_traj, const CorrectionEvent& ev,
                  const DeformationOperator& op);

}  // namespace confirl
