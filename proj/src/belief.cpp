#include "confirl/belief.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>

namespace confirl {

double logsumexp(const std::vector<double>& values) {
    require(!values.empty(), "logsumexp of empty list");
    const double a = *std::max_element(values.begin(), values.end());
    if (!std::isfinite(a)) return a;  // all -inf stays -inf; +inf propagates
    double acc = 0.0;
    for (double v : values) acc += std::exp(v - a);
    return a + std::log(acc);
}

JointBelief JointBelief::uniform(ThetaGrid thetas, BetaGrid betas) {
    thetas.validate();
    betas.validate();
    JointBelief b;
    b.log_probs = Mat::Constant(thetas.size(), betas.size(),
                                -std::log(double(thetas.size()) * betas.size()));
    b.thetas = std::move(thetas);
    b.betas = std::move(betas);
    return b;
}

Mat JointBelief::probs() const { return log_probs.array().exp(); }

double JointBelief::total_mass() const { return probs().sum(); }

std::pair<int, int> JointBelief::argmax() const {
    int bi = 0, bj = 0;
    log_probs.maxCoeff(&bi, &bj);
    return {bi, bj};
}

Vec JointBelief::theta_marginal() const { return probs().rowwise().sum(); }

double JointBelief::theta_marginal_entropy() const {
    const Vec m = theta_marginal();
    double h = 0.0;
    for (int i = 0; i < m.size(); ++i)
        if (m[i] > 0.0) h -= m[i] * std::log(m[i]);
    return h;
}

void JointBelief::validate() const {
    require(log_probs.rows() == thetas.size() && log_probs.cols() == betas.size(),
            "belief shape mismatch");
    require(std::abs(total_mass() - 1.0) <= 1e-9, "belief not normalized");
}

double demo_loglik(const Vec& demo_features, const Vec& theta, double beta,
                   const TrajectorySet& set) {
    require(set.size() > 0, "empty trajectory set");
    require(theta.size() == demo_features.size(), "weight/feature dimension mismatch");
    std::vector<double> exps(set.size());
    for (int i = 0; i < set.size(); ++i) exps[i] = -beta * theta.dot(set.features[i]);
    return -beta * theta.dot(demo_features) - logsumexp(exps);
}

namespace {

JointBelief update_impl(const JointBelief& b, const Vec& demo_features,
                        const TrajectorySet& set, bool parallel) {
    set.validate();
    JointBelief out = b;
    const int nt = b.thetas.size();
    const int nb = b.betas.size();

#pragma omp parallel for schedule(static) collapse(2) if (parallel)
    for (int i = 0; i < nt; ++i)
        for (int j = 0; j < nb; ++j)
            out.log_probs(i, j) =
                b.log_probs(i, j) +
                demo_loglik(demo_features, b.thetas.hypotheses[i], b.betas.values[j], set);

    // Serial normalization keeps results independent of thread count.
    std::vector<double> cells(out.log_probs.data(), out.log_probs.data() + nt * nb);
    const double lz = logsumexp(cells);
    require(std::isfinite(lz), "posterior mass vanished");
    out.log_probs.array() -= lz;
    return out;
}

}  // namespace

JointBelief update_belief(const JointBelief& b, const Vec& demo_features,
                          const TrajectorySet& set) {
    return update_impl(b, demo_features, set, true);
}

JointBelief update_belief_serial(const JointBelief& b, const Vec& demo_features,
                                 const TrajectorySet& set) {
    return update_impl(b, demo_features, set, false);
}

bool misspecification_flag(const JointBelief& b, const MisspecificationPolicy& pol) {
    require(pol.epsilon >= 0.0, "epsilon must be nonnegative");
    for (int i = 0; i < b.thetas.size(); ++i) {
        int peak = 0;
        b.log_probs.row(i).maxCoeff(&peak);
        if (b.betas.values[peak] >= pol.epsilon) return false;
    }
    return true;
}

Vec posterior_weights(const JointBelief& b, WeightMode mode) {
    const Mat p = b.probs();
    Vec w = Vec::Zero(b.thetas.hypotheses.front().size());
    for (int i = 0; i < b.thetas.size(); ++i)
        for (int j = 0; j < b.betas.size(); ++j) {
            const double scale = mode == WeightMode::confidence_weighted
                                     ? b.betas.values[j]
                                     : 1.0;
            w += p(i, j) * scale * b.thetas.hypotheses[i];
        }
    return w;
}

void write_posterior_csv(const JointBelief& b, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write posterior: " + path);
    out << "theta_index";
    for (int k = 0; k < b.thetas.hypotheses.front().size(); ++k) out << ",theta_" << k;
    out << ",beta,probability\n";
    const Mat p = b.probs();
    char buf[64];
    for (int i = 0; i < b.thetas.size(); ++i)
        for (int j = 0; j < b.betas.size(); ++j) {
            out << i;
            for (int k = 0; k < b.thetas.hypotheses[i].size(); ++k) {
                std::snprintf(buf, sizeof(buf), "%.17g", b.thetas.hypotheses[i][k]);
                out << "," << buf;
            }
            std::snprintf(buf, sizeof(buf), "%.17g", b.betas.values[j]);
            out << "," << buf;
            std::snprintf(buf, sizeof(buf), "%.17g", p(i, j));
            out << "," << buf << "\n";
        }
}

}  // namespace confirl
