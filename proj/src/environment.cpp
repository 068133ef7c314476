#include "confirl/environment.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>

namespace confirl {

const char* feature_name(Feature f) {
    switch (f) {
        case Feature::efficiency: return "efficiency";
        case Feature::table: return "table";
        case Feature::laptop: return "laptop";
        case Feature::human: return "human";
    }
    return "?";
}

Feature feature_from_name(const std::string& name) {
    if (name == "efficiency") return Feature::efficiency;
    if (name == "table") return Feature::table;
    if (name == "laptop") return Feature::laptop;
    if (name == "human") return Feature::human;
    throw std::invalid_argument("unknown feature: " + name);
}

namespace {

Vec vec_from_json(const nlohmann::json& j) {
    Vec v(j.size());
    for (std::size_t i = 0; i < j.size(); ++i) v[static_cast<int>(i)] = j[i].get<double>();
    return v;
}

nlohmann::ordered_json vec_to_json(const Vec& v) {
    nlohmann::ordered_json a = nlohmann::ordered_json::array();
    for (int i = 0; i < v.size(); ++i) a.push_back(v[i]);
    return a;
}

}  // namespace

void EnvironmentSpec::validate() const {
    require(state_dim >= 1, "state_dim must be >= 1");
    require(horizon >= 2, "horizon T must be >= 2");
    require(dt > 0.0, "dt must be positive");
    require(laptop_radius > 0.0, "laptop_radius must be positive");
    require(human_radius > 0.0, "human_radius must be positive");
    require(laptop_center.size() == state_dim, "laptop_center dimension mismatch");
    require(human_center.size() == state_dim, "human_center dimension mismatch");
    require(start.size() == state_dim, "start dimension mismatch");
    require(goal.size() == state_dim, "goal dimension mismatch");
    require(box_lo.size() == state_dim && box_hi.size() == state_dim,
            "workspace box dimension mismatch");
    require((box_hi - box_lo).minCoeff() > 0.0, "workspace box is empty");
    require(start.allFinite() && goal.allFinite(), "start/goal must be finite");
}

EnvironmentSpec EnvironmentSpec::from_json(const nlohmann::json& j) {
    EnvironmentSpec env;
    env.state_dim = j.value("n", 2);
    env.horizon = j.at("T").get<int>();
    env.dt = j.at("dt").get<double>();
    env.table_offset = j.value("table_offset", 0.0);
    env.laptop_center = vec_from_json(j.at("laptop_center"));
    env.laptop_radius = j.at("laptop_radius").get<double>();
    env.human_center = vec_from_json(j.at("human_center"));
    env.human_radius = j.at("human_radius").get<double>();
    env.start = vec_from_json(j.at("start"));
    env.goal = vec_from_json(j.at("goal"));

    if (j.contains("box_lo") && j.contains("box_hi")) {
        env.box_lo = vec_from_json(j.at("box_lo"));
        env.box_hi = vec_from_json(j.at("box_hi"));
    } else {
        // Default box: pad the start/goal bounding box, floored at the
        // table plane in the vertical (last) coordinate.
        const Vec lo = env.start.cwiseMin(env.goal);
        const Vec hi = env.start.cwiseMax(env.goal);
        const double pad = std::max(1.0, 0.75 * (hi - lo).norm());
        env.box_lo = lo.array() - pad;
        env.box_hi = hi.array() + pad;
        env.box_lo[env.state_dim - 1] =
            std::max(env.box_lo[env.state_dim - 1], env.table_offset);
    }
    env.validate();
    return env;
}

nlohmann::ordered_json EnvironmentSpec::to_json() const {
    nlohmann::ordered_json j;
    j["n"] = state_dim;
    j["T"] = horizon;
    j["dt"] = dt;
    j["table_offset"] = table_offset;
    j["laptop_center"] = vec_to_json(laptop_center);
    j["laptop_radius"] = laptop_radius;
    j["human_center"] = vec_to_json(human_center);
    j["human_radius"] = human_radius;
    j["start"] = vec_to_json(start);
    j["goal"] = vec_to_json(goal);
    j["box_lo"] = vec_to_json(box_lo);
    j["box_hi"] = vec_to_json(box_hi);
    return j;
}

int FeatureConfig::index_of(Feature f) const {
    for (std::size_t i = 0; i < enabled.size(); ++i)
        if (enabled[i] == f) return static_cast<int>(i);
    return -1;
}

void FeatureConfig::validate() const {
    require(!enabled.empty(), "feature list must be nonempty");
    require(normalizers.size() == dim(), "one normalizer per enabled feature required");
    require(normalizers.minCoeff() > 0.0, "normalizers must be positive");
    for (std::size_t i = 0; i < enabled.size(); ++i)
        for (std::size_t k = i + 1; k < enabled.size(); ++k)
            require(enabled[i] != enabled[k], "duplicate feature in config");
}

FeatureConfig FeatureConfig::from_json(const nlohmann::json& j) {
    FeatureConfig cfg;
    for (const auto& name : j.at("features"))
        cfg.enabled.push_back(feature_from_name(name.get<std::string>()));
    if (j.contains("normalizers") && !j.at("normalizers").is_null()) {
        cfg.normalizers = vec_from_json(j.at("normalizers"));
    } else {
        cfg.normalizers = Vec::Ones(cfg.dim());
    }
    cfg.validate();
    return cfg;
}

nlohmann::ordered_json FeatureConfig::to_json() const {
    nlohmann::ordered_json j;
    nlohmann::ordered_json names = nlohmann::ordered_json::array();
    for (Feature f : enabled) names.push_back(feature_name(f));
    j["features"] = names;
    j["normalizers"] = vec_to_json(normalizers);
    return j;
}

std::pair<EnvironmentSpec, FeatureConfig> load_environment(const nlohmann::json& j) {
    return {EnvironmentSpec::from_json(j), FeatureConfig::from_json(j)};
}

std::pair<EnvironmentSpec, FeatureConfig> load_environment_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open environment file: " + path);
    nlohmann::json j;
    in >> j;
    return load_environment(j);
}

}  // namespace confirl
