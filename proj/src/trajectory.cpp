#include "confirl/trajectory.hpp"

namespace confirl {

Vec Trajectory::flat() const {
    Vec v(pts.size());
    for (int t = 0; t < pts.rows(); ++t)
        for (int j = 0; j < pts.cols(); ++j) v[t * pts.cols() + j] = pts(t, j);
    return v;
}

Trajectory Trajectory::from_flat(const Vec& v, int n) {
    require(n >= 1 && v.size() % n == 0, "flat vector length not divisible by dim");
    Trajectory traj;
    traj.pts.resize(v.size() / n, n);
    for (int t = 0; t < traj.pts.rows(); ++t)
        for (int j = 0; j < n; ++j) traj.pts(t, j) = v[t * n + j];
    return traj;
}

void Trajectory::check_against(const EnvironmentSpec& env) const {
    require(dim() == env.state_dim, "trajectory dimension mismatch");
    require(waypoints() == env.horizon + 1, "trajectory waypoint count mismatch");
    require(pts.allFinite(), "trajectory has non-finite coordinates");
}

Trajectory straight_line(const EnvironmentSpec& env) {
    Trajectory traj;
    traj.pts.resize(env.horizon + 1, env.state_dim);
    for (int t = 0; t <= env.horizon; ++t) {
        const double a = static_cast<double>(t) / env.horizon;
        traj.pts.row(t) = ((1.0 - a) * env.start + a * env.goal).transpose();
    }
    return traj;
}

Trajectory constant_trajectory(const Vec& x, int horizon) {
    Trajectory traj;
    traj.pts.resize(horizon + 1, x.size());
    for (int t = 0; t <= horizon; ++t) traj.pts.row(t) = x.transpose();
    return traj;
}

}  // namespace confirl
