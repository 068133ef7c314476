#include "confirl/optimizer.hpp"

#include <algorithm>
#include <cmath>

namespace confirl {

void OptimizerConfig::validate() const {
    require(max_iters > 0, "max_iters must be positive");
    require(grad_tol > 0.0, "grad_tol must be positive");
    require(backtrack_shrink > 0.0 && backtrack_shrink < 1.0, "shrink must be in (0,1)");
    require(sufficient_decrease > 0.0, "sufficient_decrease must be positive");
    require(kappa0 > 0.0 && kappa_max >= kappa0, "bad penalty schedule");
    require(kappa_growth > 1.0, "kappa_growth must exceed 1");
}

namespace {

void clamp_to_box(Trajectory& traj, const EnvironmentSpec& env) {
    for (int t = 0; t < traj.waypoints(); ++t)
        for (int j = 0; j < traj.dim(); ++j)
            traj.pts(t, j) = std::clamp(traj.pts(t, j), env.box_lo[j], env.box_hi[j]);
}

}  // namespace

OptimizeResult optimize_trajectory(const Vec& theta, const EnvironmentSpec& env,
                                   const FeatureConfig& cfg, const OptimizerConfig& opt) {
    opt.validate();
    require(theta.size() == cfg.dim(), "weight dimension mismatch");
    require(theta.allFinite(), "weights must be finite");
    env.validate();

    const int n = env.state_dim;
    Trajectory x = straight_line(env);
    clamp_to_box(x, env);
    x.pts.row(0) = env.start.transpose();
    x.pts.row(env.horizon) = env.goal.transpose();

    auto cost_of = [&](const Trajectory& traj) {
        return theta.dot(compute_features_smooth(traj, env, cfg));
    };
    auto gradient_of = [&](const Trajectory& traj) {
        // Interior-waypoint gradient; endpoint columns are zeroed so the
        // line search never moves them.
        Vec g = feature_jacobian_smooth(traj, env, cfg).transpose() * theta;
        for (int j = 0; j < n; ++j) {
            g[j] = 0.0;
            g[env.horizon * n + j] = 0.0;
        }
        return g;
    };
    auto projected_grad_norm = [&](const Trajectory& traj, const Vec& g) {
        Trajectory probe = Trajectory::from_flat(traj.flat() - g, n);
        clamp_to_box(probe, env);
        return (traj.flat() - probe.flat()).norm();
    };

    OptimizeResult result;
    double f = cost_of(x);
    result.cost_log.push_back(f);
    double step = 1.0;

    for (int it = 0; it < opt.max_iters; ++it) {
        result.iters = it;
        const Vec g = gradient_of(x);
        if (projected_grad_norm(x, g) <= opt.grad_tol) {
            result.converged = true;
            break;
        }

        // Projected step with Armijo backtracking.
        bool accepted = false;
        double s = step;
        for (int bt = 0; bt < 60; ++bt) {
            Trajectory x_new = Trajectory::from_flat(x.flat() - s * g, n);
            clamp_to_box(x_new, env);
            const Vec move = x_new.flat() - x.flat();
            if (move.squaredNorm() == 0.0) break;
            const double f_new = cost_of(x_new);
            if (f_new <= f - opt.sufficient_decrease / s * move.squaredNorm()) {
                x = x_new;
                f = f_new;
                result.cost_log.push_back(f);
                accepted = true;
                break;
            }
            s *= opt.backtrack_shrink;
        }
        if (!accepted) break;  // step size underflow; report best iterate
        step = std::min(1.0, s / opt.backtrack_shrink);
    }

    result.traj = x;
    result.cost = f;
    return result;
}

}  // namespace confirl
