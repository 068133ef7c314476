#include "confirl/deformation.hpp"

namespace confirl {

void CorrectionEvent::check_against(const EnvironmentSpec& env) const {
    require(timestep >= 0 && timestep <= env.horizon, "correction timestep out of range");
    require(torque.size() == env.state_dim, "torque dimension mismatch");
    require(torque.allFinite(), "torque must be finite");
}

DeformationOperator build_deformation(const EnvironmentSpec& env, double mu) {
    require(mu > 0.0, "deformation magnitude mu must be positive");
    env.validate();
    const int nw = env.horizon + 1;

    // K: identity rows on both endpoints, interior rows take second
    // differences (acceleration).
    Mat k = Mat::Zero(nw, nw);
    k(0, 0) = 1.0;
    k(nw - 1, nw - 1) = 1.0;
    for (int t = 1; t < nw - 1; ++t) {
        k(t, t - 1) = 1.0;
        k(t, t) = -2.0;
        k(t, t + 1) = 1.0;
    }

    DeformationOperator op;
    op.mu = mu;
    op.horizon = env.horizon;
    op.state_dim = env.state_dim;
    op.norm_matrix = k.transpose() * k;
    op.interior_solver_.compute(op.norm_matrix.block(1, 1, nw - 2, nw - 2));
    return op;
}

Vec DeformationOperator::unit_response(int t) const {
    const int nw = horizon + 1;
    require(t >= 0 && t < nw, "timestep out of range");
    Vec rhs = Vec::Zero(nw - 2);
    if (t >= 1 && t <= nw - 2) rhs[t - 1] = 1.0;
    const Vec interior = interior_solver_.solve(rhs);
    Vec profile = Vec::Zero(nw);
    profile.segment(1, nw - 2) = interior;
    return mu * profile;
}

Mat DeformationOperator::full_matrix() const {
    const int nw = horizon + 1;
    Mat full = Mat::Zero(nw * state_dim, nw * state_dim);
    for (int t = 0; t < nw; ++t)
        for (int s = 0; s < nw; ++s)
            for (int j = 0; j < state_dim; ++j)
                full(t * state_dim + j, s * state_dim + j) = norm_matrix(t, s);
    return full;
}

void DeformationOperator::validate() const {
    require(mu > 0.0, "mu must be positive");
    require((norm_matrix - norm_matrix.transpose()).cwiseAbs().maxCoeff() <= 1e-8,
            "norm matrix not symmetric");
    Eigen::SelfAdjointEigenSolver<Mat> es(norm_matrix);
    require(es.eigenvalues().minCoeff() > 0.0, "norm matrix not positive definite");
}

Trajectory deform(const Trajectory& robot_traj, const CorrectionEvent& ev,
                  const DeformationOperator& op) {
    require(robot_traj.waypoints() == op.horizon + 1, "trajectory/operator size mismatch");
    require(robot_traj.dim() == op.state_dim, "trajectory/operator dimension mismatch");
    require(ev.torque.size() == op.state_dim, "torque dimension mismatch");

    const Vec profile = op.unit_response(ev.timestep);
    Trajectory deformed = robot_traj;
    for (int t = 0; t < deformed.waypoints(); ++t)
        deformed.pts.row(t) += profile[t] * ev.torque.transpose();
    return deformed;
}

}  // namespace confirl
