#pragma once

#include "confirl/common.hpp"
#include "confirl/environment.hpp"

namespace confirl {

// Waypoint path x^0..x^T, one row per waypoint.
struct Trajectory {
    Mat pts;  // (T+1) x n

    int waypoints() const { return static_cast<int>(pts.rows()); }
    int dim() const { return static_cast<int>(pts.cols()); }

    Vec flat() const;                       // row-major flattening, index n*t + j
    static Trajectory from_flat(const Vec& v, int n);

    void check_against(const EnvironmentSpec& env) const;
};

Trajectory straight_line(const EnvironmentSpec& env);
Trajectory constant_trajectory(const Vec& x, int horizon);

}  // namespace confirl
