#include "confirl/grids.hpp"

#include <cmath>

namespace confirl {

void ThetaGrid::validate() const {
    require(!hypotheses.empty(), "theta grid must be nonempty");
    for (const Vec& th : hypotheses) {
        require(std::abs(th.norm() - 1.0) <= 1e-9, "theta hypothesis not unit norm");
        require(th.minCoeff() >= 0.0, "theta hypothesis has negative component");
    }
    for (std::size_t i = 0; i < hypotheses.size(); ++i)
        for (std::size_t k = i + 1; k < hypotheses.size(); ++k)
            require((hypotheses[i] - hypotheses[k]).norm() > 1e-9,
                    "duplicate theta hypothesis");
}

void BetaGrid::validate() const {
    require(!values.empty(), "beta grid must be nonempty");
    require(values.front() > 0.0, "beta values must be positive");
    for (std::size_t i = 1; i < values.size(); ++i)
        require(values[i] > values[i - 1], "beta grid must be strictly increasing");
}

nlohmann::ordered_json ThetaGrid::to_json() const {
    nlohmann::ordered_json j = nlohmann::ordered_json::array();
    for (const Vec& th : hypotheses) {
        nlohmann::ordered_json row = nlohmann::ordered_json::array();
        for (int i = 0; i < th.size(); ++i) row.push_back(th[i]);
        j.push_back(row);
    }
    return j;
}

nlohmann::ordered_json BetaGrid::to_json() const {
    nlohmann::ordered_json j = nlohmann::ordered_json::array();
    for (double b : values) j.push_back(b);
    return j;
}

std::pair<ThetaGrid, BetaGrid> build_default_grids(int d) {
    require(d >= 1, "dimension must be >= 1");

    ThetaGrid thetas;
    const double levels[3] = {0.0, 0.5, 1.0};
    const long total = static_cast<long>(std::pow(3.0, d));
    for (long code = 1; code < total; ++code) {
        Vec v(d);
        long rest = code;
        for (int i = 0; i < d; ++i) {
            v[i] = levels[rest % 3];
            rest /= 3;
        }
        v /= v.norm();
        bool seen = false;
        for (const Vec& existing : thetas.hypotheses)
            if ((existing - v).norm() <= 1e-9) {
                seen = true;
                break;
            }
        if (!seen) thetas.hypotheses.push_back(v);
    }
    thetas.validate();

    BetaGrid betas;
    betas.values = {0.01, 0.03, 0.1, 0.3, 1.0, 3.0, 10.0, 30.0, 100.0};
    betas.validate();
    return {thetas, betas};
}

}  // namespace confirl
