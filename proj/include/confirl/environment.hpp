#pragma once

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

#include "confirl/common.hpp"

namespace confirl {

enum class Feature { efficiency, table, laptop, human };

const char* feature_name(Feature f);
Feature feature_from_name(const std::string& name);

// Planar (or n-D) kinematic workspace: a table plane, two penalty spheres
// and fixed start/goal states. The workspace box bounds every optimized
// trajectory; its floor sits on the table plane.
struct EnvironmentSpec {
    int state_dim = 2;
    int horizon = 20;  // T; a trajectory has T+1 waypoints
    double dt = 0.5;
    double table_offset = 0.0;
    Vec laptop_center;
    double laptop_radius = 0.4;
    Vec human_center;
    double human_radius = 0.5;
    Vec start;
    Vec goal;
    Vec box_lo;
    Vec box_hi;

    void validate() const;
    static EnvironmentSpec from_json(const nlohmann::json& j);
    nlohmann::ordered_json to_json() const;
};

// Which features the robot reasons over, plus the per-feature divisors
// that bring raw feature counts onto a comparable scale.
struct FeatureConfig {
    std::vector<Feature> enabled;
    Vec normalizers;  // one positive divisor per enabled feature

    int dim() const { return static_cast<int>(enabled.size()); }
    int index_of(Feature f) const;  // -1 when not enabled

    void validate() const;
    static FeatureConfig from_json(const nlohmann::json& j);
    nlohmann::ordered_json to_json() const;
};

// Loads the combined environment + feature document (keys: n, T, dt,
// table_offset, laptop_center, laptop_radius, human_center, human_radius,
// start, goal, features, normalizers).
std::pair<EnvironmentSpec, FeatureConfig> load_environment(const nlohmann::json& j);
std::pair<EnvironmentSpec, FeatureConfig> load_environment_file(const std::string& path);

}  // namespace confirl
