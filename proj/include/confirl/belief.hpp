#pragma once

#include <string>
#include <vector>

#include "confirl/grids.hpp"
#include "confirl/sampling.hpp"
#include "confirl/trajectory.hpp"

namespace confirl {

double logsumexp(const std::vector<double>& values);

// Joint posterior b(theta_i, beta_j) over the discrete hypothesis grids.
// All arithmetic happens in log space; `probs` is the normalized view.
struct JointBelief {
    ThetaGrid thetas;
    BetaGrid betas;
    Mat log_probs;  // |thetas| x |betas|

    static JointBelief uniform(ThetaGrid thetas, BetaGrid betas);
    Mat probs() const;
    double total_mass() const;  // 1 up to rounding
    std::pair<int, int> argmax() const;
    Vec theta_marginal() const;
    double theta_marginal_entropy() const;
    void validate() const;
};

// Log-likelihood of a demonstration under (theta, beta) with the partition
// integral replaced by a sum over the trajectory set:
//   -beta theta^T Phi(demo) - logsumexp{ -beta theta^T Phi(x) : x in set }
double demo_loglik(const Vec& demo_features, const Vec& theta, double beta,
                   const TrajectorySet& set);

// One Bayesian update of the belief with a demonstration. Cells are
// independent, so the parallel kernel splits over them; the serial variant
// is the reference it must match bit for bit.
JointBelief update_belief(const JointBelief& b, const Vec& demo_features,
                          const TrajectorySet& set);
JointBelief update_belief_serial(const JointBelief& b, const Vec& demo_features,
                                 const TrajectorySet& set);

struct MisspecificationPolicy {
    double epsilon = 0.1 / 9.0;  // 0.1 x uniform row mass of the default beta grid

    static MisspecificationPolicy defaults_for(const BetaGrid& betas) {
        return MisspecificationPolicy{0.1 / betas.size()};
    }
};

// True when every hypothesis row peaks at a confidence below epsilon, i.e.
// no theta explains the input at any trusted beta.
bool misspecification_flag(const JointBelief& b, const MisspecificationPolicy& pol);

enum class WeightMode { marginal, confidence_weighted };

// Planning weights from the posterior: E[theta], or E[beta * theta] when
// low-confidence hypotheses should be discounted.
Vec posterior_weights(const JointBelief& b, WeightMode mode);

// One row per grid cell: theta_index, theta components, beta, probability.
void write_posterior_csv(const JointBelief& b, const std::string& path);

}  // namespace confirl
