#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>

namespace confirl {

using Vec = Eigen::VectorXd;
using Mat = Eigen::MatrixXd;

// Derives an independent engine for member `index` of a batch without
// touching any shared engine. Same (base_seed, index) always yields the
// same stream, so batch members can be evaluated in any order or in
// parallel.
inline std::mt19937_64 make_rng(std::uint64_t base_seed, std::uint64_t index = 0) {
    const std::uint64_t s = base_seed + 0x9E3779B97F4A7C15ULL * (index + 1);
    std::seed_seq seq{static_cast<std::uint32_t>(s),
                      static_cast<std::uint32_t>(s >> 32),
                      static_cast<std::uint32_t>(index),
                      static_cast<std::uint32_t>(index >> 32)};
    std::mt19937_64 rng(seq);
    return rng;
}

inline void require(bool cond, const std::string& msg) {
    if (!cond) throw std::invalid_argument(msg);
}

}  // namespace confirl
