#include "confirl/correction_solver.hpp"

#include <Eigen/Eigenvalues>

#include <cmath>
#include <functional>

namespace confirl {

double CorrectionSolution::log_det_hessian() const {
    Eigen::SelfAdjointEigenSolver<Mat> es(hessian);
    double acc = 0.0;
    for (int i = 0; i < es.eigenvalues().size(); ++i)
        acc += std::log(es.eigenvalues()[i]);
    return acc;
}

namespace {

// Short BFGS loop with backtracking; gradients by central differences.
Vec bfgs_minimize(const std::function<double(const Vec&)>& f, Vec x, int max_iters,
                  double grad_tol, double shrink, double armijo) {
    const int k = static_cast<int>(x.size());
    const double fd = 1e-6;
    auto grad = [&](const Vec& p) {
        Vec g(k);
        Vec q = p;
        for (int i = 0; i < k; ++i) {
            const double h = fd * (1.0 + std::abs(p[i]));
            q[i] = p[i] + h;
            const double fp = f(q);
            q[i] = p[i] - h;
            const double fm = f(q);
            q[i] = p[i];
            g[i] = (fp - fm) / (2.0 * h);
        }
        return g;
    };

    Mat h_inv = Mat::Identity(k, k);
    double fx = f(x);
    Vec g = grad(x);
    for (int it = 0; it < max_iters; ++it) {
        if (g.norm() <= grad_tol) break;
        Vec dir = -h_inv * g;
        if (dir.dot(g) >= 0.0) {
            h_inv = Mat::Identity(k, k);
            dir = -g;
        }
        double s = 1.0;
        bool accepted = false;
        Vec x_new;
        double f_new = fx;
        for (int bt = 0; bt < 50; ++bt) {
            x_new = x + s * dir;
            f_new = f(x_new);
            if (f_new <= fx + armijo * s * dir.dot(g)) {
                accepted = true;
                break;
            }
            s *= shrink;
        }
        if (!accepted) break;
        const Vec g_new = grad(x_new);
        const Vec dx = x_new - x;
        const Vec dg = g_new - g;
        const double dgdx = dg.dot(dx);
        if (dgdx > 1e-12) {
            const Mat eye = Mat::Identity(k, k);
            const Mat left = eye - dx * dg.transpose() / dgdx;
            h_inv = left * h_inv * left.transpose() + dx * dx.transpose() / dgdx;
        }
        x = x_new;
        fx = f_new;
        g = g_new;
    }
    return x;
}

}  // namespace

CorrectionSolution minimal_effort_correction(const Vec& phi_target,
                                             const Trajectory& robot_traj, int timestep,
                                             const DeformationOperator& op,
                                             const EnvironmentSpec& env,
                                             const FeatureConfig& cfg,
                                             const OptimizerConfig& opt,
                                             const std::vector<int>& active) {
    opt.validate();
    require(phi_target.size() == cfg.dim(), "feature target dimension mismatch");
    for (int idx : active) require(idx >= 0 && idx < cfg.dim(), "bad active feature index");

    const int k = env.state_dim;
    const Vec profile = op.unit_response(timestep);

    auto deformed_features = [&](const Vec& u) {
        Trajectory traj = robot_traj;
        for (int t = 0; t < traj.waypoints(); ++t)
            traj.pts.row(t) += profile[t] * u.transpose();
        return compute_features_smooth(traj, env, cfg);
    };
    auto residual_norm2 = [&](const Vec& u) {
        const Vec diff = deformed_features(u) - phi_target;
        if (active.empty()) return diff.squaredNorm();
        double acc = 0.0;
        for (int idx : active) acc += diff[idx] * diff[idx];
        return acc;
    };

    Vec u = Vec::Zero(k);
    double kappa = opt.kappa0;
    auto penalized = [&](const Vec& v) { return v.squaredNorm() + kappa * residual_norm2(v); };

    while (true) {
        u = bfgs_minimize(penalized, u, 200, 1e-10, opt.backtrack_shrink,
                          opt.sufficient_decrease);
        if (kappa >= opt.kappa_max) break;
        kappa = std::min(kappa * opt.kappa_growth, opt.kappa_max);
    }

    CorrectionSolution sol;
    sol.u_star = u;
    sol.constraint_residual = std::sqrt(residual_norm2(u));
    sol.converged = sol.constraint_residual <= 1e-3;

    // Central finite-difference Hessian of the final penalized objective,
    // symmetrized and eigenvalue-clamped.
    const double h0 = 1e-4 * (1.0 + u.norm());
    Mat hess(k, k);
    const double f0 = penalized(u);
    for (int i = 0; i < k; ++i) {
        for (int j = i; j < k; ++j) {
            Vec p = u;
            if (i == j) {
                p[i] = u[i] + h0;
                const double fp = penalized(p);
                p[i] = u[i] - h0;
                const double fm = penalized(p);
                hess(i, i) = (fp - 2.0 * f0 + fm) / (h0 * h0);
            } else {
                p[i] = u[i] + h0;
                p[j] = u[j] + h0;
                const double fpp = penalized(p);
                p[j] = u[j] - h0;
                const double fpm = penalized(p);
                p[i] = u[i] - h0;
                p[j] = u[j] + h0;
                const double fmp = penalized(p);
                p[j] = u[j] - h0;
                const double fmm = penalized(p);
                hess(i, j) = hess(j, i) = (fpp - fpm - fmp + fmm) / (4.0 * h0 * h0);
            }
        }
    }
    hess = 0.5 * (hess + hess.transpose()).eval();
    Eigen::SelfAdjointEigenSolver<Mat> es(hess);
    Vec ev = es.eigenvalues().cwiseMax(1e-8);
    sol.hessian = es.eigenvectors() * ev.asDiagonal() * es.eigenvectors().transpose();
    sol.hessian = 0.5 * (sol.hessian + sol.hessian.transpose()).eval();
    return sol;
}

}  // namespace confirl
