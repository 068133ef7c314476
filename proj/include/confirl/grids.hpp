#pragma once

#include <json.hpp>

#include <vector>

#include "confirl/common.hpp"

namespace confirl {

struct ThetaGrid {
    std::vector<Vec> hypotheses;  // unit-norm, nonnegative, pairwise distinct

    int size() const { return static_cast<int>(hypotheses.size()); }
    void validate() const;
    nlohmann::ordered_json to_json() const;
};

struct BetaGrid {
    std::vector<double> values;  // strictly increasing, positive

    int size() const { return static_cast<int>(values.size()); }
    void validate() const;
    nlohmann::ordered_json to_json() const;
};

// Default discretization: every nonzero vector with components in
// {0, 0.5, 1}, normalized and deduplicated (19 directions for d=3), and
// the log-spaced confidence ladder 0.01 .. 100.
std::pair<ThetaGrid, BetaGrid> build_default_grids(int d);

}  // namespace confirl
