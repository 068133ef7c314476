#include "confirl/chi_squared.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace confirl {

void ChiSquaredFit::validate() const {
    require(df > 0.0, "df must be positive");
    require(scale > 0.0, "scale must be positive");
}

double ChiSquaredFit::log_pdf(double x) const {
    if (x <= 0.0) return -std::numeric_limits<double>::infinity();
    const double y = x / scale;
    return (0.5 * df - 1.0) * std::log(y) - 0.5 * y - 0.5 * df * std::log(2.0) -
           std::lgamma(0.5 * df) - std::log(scale);
}

double ChiSquaredFit::pdf(double x) const { return std::exp(log_pdf(x)); }

namespace {

// Profile log-likelihood in df; for fixed df the MLE scale is mean/df.
double profile_loglik(double df, double mean, double mean_log, int n) {
    const double scale = mean / df;
    return n * ((0.5 * df - 1.0) * (mean_log - std::log(scale)) - 0.5 * df -
                0.5 * df * std::log(2.0) - std::lgamma(0.5 * df) - std::log(scale));
}

}  // namespace

ChiSquaredFit fit_chi_squared(const std::vector<double>& samples) {
    require(samples.size() >= 10, "need at least 10 samples");
    double mean = 0.0, mean_log = 0.0;
    for (double x : samples) {
        require(std::isfinite(x) && x > 0.0, "samples must be finite and positive");
        mean += x;
        mean_log += std::log(x);
    }
    const int n = static_cast<int>(samples.size());
    mean /= n;
    mean_log /= n;
    const auto [lo_it, hi_it] = std::minmax_element(samples.begin(), samples.end());
    require(*hi_it - *lo_it > 1e-12 * std::max(1.0, *hi_it), "degenerate samples (all equal)");

    // Golden-section search on log(df).
    const double gr = (std::sqrt(5.0) - 1.0) / 2.0;
    double lo = std::log(1e-2), hi = std::log(1e3);
    double x1 = hi - gr * (hi - lo), x2 = lo + gr * (hi - lo);
    double f1 = profile_loglik(std::exp(x1), mean, mean_log, n);
    double f2 = profile_loglik(std::exp(x2), mean, mean_log, n);
    for (int it = 0; it < 200; ++it) {
        if (f1 >= f2) {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - gr * (hi - lo);
            f1 = profile_loglik(std::exp(x1), mean, mean_log, n);
        } else {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + gr * (hi - lo);
            f2 = profile_loglik(std::exp(x2), mean, mean_log, n);
        }
        if (hi - lo < 1e-12) break;
    }

    ChiSquaredFit fit;
    fit.df = std::exp(0.5 * (lo + hi));
    fit.scale = mean / fit.df;
    fit.sample_count = n;
    fit.validate();
    return fit;
}

}  // namespace confirl
