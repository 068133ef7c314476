#pragma once

#include <json.hpp>

#include <cstdint>
#include <string>
#include <vector>

#include "confirl/optimizer.hpp"

namespace confirl {

// Discretized stand-in for the trajectory-space partition integral: a bag
// of optimized trajectories with their feature vectors cached.
struct TrajectorySet {
    std::vector<Trajectory> members;
    std::vector<Vec> features;  // one cached vector per member
    std::uint64_t seed = 0;

    int size() const { return static_cast<int>(members.size()); }
    void validate() const;

    nlohmann::ordered_json to_json() const;
    static TrajectorySet from_json(const nlohmann::json& j);
    void save(const std::string& path) const;
    static TrajectorySet load(const std::string& path);
};

// Draws weight directions uniformly on the nonnegative unit sphere, scales
// them by log-uniform magnitudes in [0.01, 100], and optimizes each scaled
// cost. Feature caches use cfg's normalizers. Deterministic for a fixed
// seed regardless of thread count; the serial variant is the reference
// implementation the parallel one must match exactly.
TrajectorySet sample_trajectory_set(const EnvironmentSpec& env, const FeatureConfig& cfg,
                                    int count, std::uint64_t seed,
                                    const OptimizerConfig& opt = {});
TrajectorySet sample_trajectory_set_serial(const EnvironmentSpec& env,
                                           const FeatureConfig& cfg, int count,
                                           std::uint64_t seed,
                                           const OptimizerConfig& opt = {});

// Per-feature maxima of the raw feature counts over the set, used as
// default normalization divisors.
Vec normalizers_from_set(const TrajectorySet& set, const EnvironmentSpec& env,
                         const FeatureConfig& cfg);

// Re-derives the feature caches after a normalizer change.
void refresh_feature_cache(TrajectorySet& set, const EnvironmentSpec& env,
                           const FeatureConfig& cfg);

}  // namespace confirl
