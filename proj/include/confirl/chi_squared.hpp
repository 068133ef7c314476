#pragma once

#include <vector>

#include "confirl/common.hpp"

namespace confirl {

// Scaled chi-squared density with location fixed at zero: X = scale * Y,
// Y ~ chi2(df). df and scale need not be integers.
struct ChiSquaredFit {
    double df = 1.0;
    double scale = 1.0;
    int sample_count = 0;

    double log_pdf(double x) const;
    double pdf(double x) const;
    void validate() const;
};

// Maximum-likelihood fit with a 1-D search over df; the scale maximizer is
// closed-form for each candidate df. Requires >= 10 positive samples that
// are not all equal.
ChiSquaredFit fit_chi_squared(const std::vector<double>& samples);

}  // namespace confirl
