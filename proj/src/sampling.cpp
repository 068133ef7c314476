#include "confirl/sampling.hpp"

#include <cmath>
#include <fstream>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace confirl {

void TrajectorySet::validate() const {
    require(!members.empty(), "trajectory set must be nonempty");
    require(members.size() == features.size(), "feature cache size mismatch");
}

namespace {

Vec sample_scaled_weights(std::mt19937_64& rng, int d) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    Vec theta(d);
    double norm2 = 0.0;
    do {
        norm2 = 0.0;
        for (int i = 0; i < d; ++i) {
            theta[i] = std::abs(gauss(rng));
            norm2 += theta[i] * theta[i];
        }
    } while (norm2 == 0.0);
    theta /= std::sqrt(norm2);
    // log-uniform magnitude in [0.01, 100]
    const double mag = std::pow(10.0, -2.0 + 4.0 * unif(rng));
    return mag * theta;
}

Trajectory optimize_member(const EnvironmentSpec& env, const FeatureConfig& cfg,
                           const OptimizerConfig& opt, std::uint64_t seed, int index) {
    auto rng = make_rng(seed, static_cast<std::uint64_t>(index));
    const Vec theta = sample_scaled_weights(rng, cfg.dim());
    return optimize_trajectory(theta, env, cfg, opt).traj;
}

}  // namespace

TrajectorySet sample_trajectory_set_serial(const EnvironmentSpec& env,
                                           const FeatureConfig& cfg, int count,
                                           std::uint64_t seed, const OptimizerConfig& opt) {
    require(count >= 1, "count must be >= 1");
    TrajectorySet set;
    set.seed = seed;
    set.members.resize(count);
    set.features.resize(count);
    for (int i = 0; i < count; ++i) {
        set.members[i] = optimize_member(env, cfg, opt, seed, i);
        set.features[i] = compute_features(set.members[i], env, cfg);
    }
    return set;
}

TrajectorySet sample_trajectory_set(const EnvironmentSpec& env, const FeatureConfig& cfg,
                                    int count, std::uint64_t seed,
                                    const OptimizerConfig& opt) {
    require(count >= 1, "count must be >= 1");
    TrajectorySet set;
    set.seed = seed;
    set.members.resize(count);
    set.features.resize(count);
#pragma omp parallel for schedule(dynamic)
    for (int i = 0; i < count; ++i) {
        set.members[i] = optimize_member(env, cfg, opt, seed, i);
        set.features[i] = compute_features(set.members[i], env, cfg);
    }
    return set;
}

Vec normalizers_from_set(const TrajectorySet& set, const EnvironmentSpec& env,
                         const FeatureConfig& cfg) {
    set.validate();
    FeatureConfig raw = cfg;
    raw.normalizers = Vec::Ones(cfg.dim());
    Vec maxima = Vec::Zero(cfg.dim());
    for (const Trajectory& traj : set.members)
        maxima = maxima.cwiseMax(compute_features(traj, env, raw));
    // A feature that never fires over the set keeps a unit divisor.
    for (int i = 0; i < maxima.size(); ++i)
        if (maxima[i] <= 1e-12) maxima[i] = 1.0;
    return maxima;
}

void refresh_feature_cache(TrajectorySet& set, const EnvironmentSpec& env,
                           const FeatureConfig& cfg) {
    for (int i = 0; i < set.size(); ++i)
        set.features[i] = compute_features(set.members[i], env, cfg);
}

nlohmann::ordered_json TrajectorySet::to_json() const {
    nlohmann::ordered_json j;
    j["seed"] = seed;
    j["count"] = size();
    nlohmann::ordered_json items = nlohmann::ordered_json::array();
    for (int i = 0; i < size(); ++i) {
        nlohmann::ordered_json item;
        nlohmann::ordered_json wps = nlohmann::ordered_json::array();
        for (int t = 0; t < members[i].waypoints(); ++t) {
            nlohmann::ordered_json row = nlohmann::ordered_json::array();
            for (int k = 0; k < members[i].dim(); ++k) row.push_back(members[i].pts(t, k));
            wps.push_back(row);
        }
        item["waypoints"] = wps;
        nlohmann::ordered_json phi = nlohmann::ordered_json::array();
        for (int k = 0; k < features[i].size(); ++k) phi.push_back(features[i][k]);
        item["features"] = phi;
        items.push_back(item);
    }
    j["trajectories"] = items;
    return j;
}

TrajectorySet TrajectorySet::from_json(const nlohmann::json& j) {
    TrajectorySet set;
    set.seed = j.at("seed").get<std::uint64_t>();
    for (const auto& item : j.at("trajectories")) {
        const auto& wps = item.at("waypoints");
        Trajectory traj;
        traj.pts.resize(wps.size(), wps.at(0).size());
        for (std::size_t t = 0; t < wps.size(); ++t)
            for (std::size_t k = 0; k < wps[t].size(); ++k)
                traj.pts(static_cast<int>(t), static_cast<int>(k)) = wps[t][k].get<double>();
        set.members.push_back(std::move(traj));
        const auto& phi = item.at("features");
        Vec f(phi.size());
        for (std::size_t k = 0; k < phi.size(); ++k) f[static_cast<int>(k)] = phi[k].get<double>();
        set.features.push_back(std::move(f));
    }
    set.validate();
    return set;
}

void TrajectorySet::save(const std::string& path) const {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write trajectory set: " + path);
    out << to_json().dump(2) << "\n";
}

TrajectorySet TrajectorySet::load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open trajectory set: " + path);
    nlohmann::json j;
    in >> j;
    return from_json(j);
}

}  // namespace confirl
