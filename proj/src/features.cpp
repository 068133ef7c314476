#include "confirl/features.hpp"

#include <cmath>

namespace confirl {

namespace {

// C^1 blend of max(0, z): quadratic inside the band [0, w], linear above.
double smooth_plus(double z, double w) {
    if (z <= 0.0) return 0.0;
    if (z >= w) return z - 0.5 * w;
    return 0.5 * z * z / w;
}

double smooth_plus_deriv(double z, double w) {
    if (z <= 0.0) return 0.0;
    if (z >= w) return 1.0;
    return z / w;
}

enum class Mode { raw, smooth };

double hinge_sum(const Trajectory& traj, const Vec& center, double radius, Mode mode) {
    const double band = 0.05 * radius;
    double total = 0.0;
    for (int t = 0; t < traj.waypoints(); ++t) {
        const double r = (traj.pts.row(t).transpose() - center).norm();
        const double z = radius - r;
        total += mode == Mode::raw ? std::max(0.0, z) : smooth_plus(z, band);
    }
    return total;
}

double one_feature(Feature f, const Trajectory& traj, const EnvironmentSpec& env, Mode mode) {
    const int vert = env.state_dim - 1;
    switch (f) {
        case Feature::efficiency: {
            double total = 0.0;
            for (int t = 1; t < traj.waypoints(); ++t)
                total += (traj.pts.row(t) - traj.pts.row(t - 1)).squaredNorm();
            return total / (env.dt * env.dt);
        }
        case Feature::table: {
            double total = 0.0;
            for (int t = 0; t < traj.waypoints(); ++t)
                total += std::abs(traj.pts(t, vert) - env.table_offset);
            return total;
        }
        case Feature::laptop:
            return hinge_sum(traj, env.laptop_center, env.laptop_radius, mode);
        case Feature::human:
            return hinge_sum(traj, env.human_center, env.human_radius, mode);
    }
    return 0.0;
}

Vec features_impl(const Trajectory& traj, const EnvironmentSpec& env,
                  const FeatureConfig& cfg, Mode mode) {
    traj.check_against(env);
    cfg.validate();
    Vec phi(cfg.dim());
    for (int i = 0; i < cfg.dim(); ++i)
        phi[i] = one_feature(cfg.enabled[i], traj, env, mode) / cfg.normalizers[i];
    return phi;
}

}  // namespace

Vec compute_features(const Trajectory& traj, const EnvironmentSpec& env,
                     const FeatureConfig& cfg) {
    return features_impl(traj, env, cfg, Mode::raw);
}

Vec compute_features_smooth(const Trajectory& traj, const EnvironmentSpec& env,
                            const FeatureConfig& cfg) {
    return features_impl(traj, env, cfg, Mode::smooth);
}

Mat feature_jacobian_smooth(const Trajectory& traj, const EnvironmentSpec& env,
                            const FeatureConfig& cfg) {
    traj.check_against(env);
    const int n = env.state_dim;
    const int nw = traj.waypoints();
    const int vert = n - 1;
    Mat jac = Mat::Zero(cfg.dim(), nw * n);

    for (int i = 0; i < cfg.dim(); ++i) {
        const double scale = 1.0 / cfg.normalizers[i];
        switch (cfg.enabled[i]) {
            case Feature::efficiency: {
                const double c = 2.0 / (env.dt * env.dt) * scale;
                for (int t = 1; t < nw; ++t) {
                    const Vec d = (traj.pts.row(t) - traj.pts.row(t - 1)).transpose();
                    for (int j = 0; j < n; ++j) {
                        jac(i, t * n + j) += c * d[j];
                        jac(i, (t - 1) * n + j) -= c * d[j];
                    }
                }
                break;
            }
            case Feature::table: {
                for (int t = 0; t < nw; ++t) {
                    const double z = traj.pts(t, vert) - env.table_offset;
                    const double s = z > 0.0 ? 1.0 : (z < 0.0 ? -1.0 : 0.0);
                    jac(i, t * n + vert) += s * scale;
                }
                break;
            }
            case Feature::laptop:
            case Feature::human: {
                const Vec& center = cfg.enabled[i] == Feature::laptop ? env.laptop_center
                                                                      : env.human_center;
                const double radius = cfg.enabled[i] == Feature::laptop ? env.laptop_radius
                                                                        : env.human_radius;
                const double band = 0.05 * radius;
                for (int t = 0; t < nw; ++t) {
                    const Vec diff = traj.pts.row(t).transpose() - center;
                    const double r = diff.norm();
                    if (r < 1e-12) continue;  // flat at the exact center
                    const double g = smooth_plus_deriv(radius - r, band);
                    if (g == 0.0) continue;
                    for (int j = 0; j < n; ++j)
                        jac(i, t * n + j) -= g * diff[j] / r * scale;
                }
                break;
            }
        }
    }
    return jac;
}

double linear_cost(const Vec& theta, const Vec& phi) {
    require(theta.size() == phi.size(), "weight/feature dimension mismatch");
    return theta.dot(phi);
}

double phri_cost(const Vec& theta, const Vec& phi_d, const Vec& u_h, double lambda) {
    require(lambda >= 0.0, "lambda must be nonnegative");
    return linear_cost(theta, phi_d) + lambda * u_h.squaredNorm();
}

}  // namespace confirl
