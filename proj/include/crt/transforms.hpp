#pragma once

namespace crt {

struct SigmaParts {
    double sigma_b = 0.0;  // between-cluster SD
    double sigma_w = 0.0;  // within-cluster SD
};

// Split a total SD and ICC into model-scale components:
// sigma_b = sigma*sqrt(rho), sigma_w = sigma*sqrt(1-rho), so that
// sigma_b^2 + sigma_w^2 == sigma^2 exactly.
SigmaParts variance_decompose(double sigma, double rho);

// rho = sigma_b^2 / (sigma_b^2 + sigma_w^2), in [0,1).
double icc(double sigma_b, double sigma_w);

// Clamping policy for the nu -> Dirichlet concentration bridge.
struct DirichletBridge {
    double a_min = 0.01;
    double a_max = 1e6;
};

struct DirichletConcentration {
    double a = 0.0;
    bool clamped = false;  // nu outside the representable CV range
};

// Invert CV(p_j) = sqrt((J-1)/(aJ+1)) for a symmetric Dirichlet:
// a = ((J-1)/nu^2 - 1)/J. nu = 0 maps to the ceiling (equal clusters);
// nu large enough to drive a <= a_min clamps to the floor and flags it.
DirichletConcentration dirichlet_a_from_cv(double nu, int clusters,
                                           const DirichletBridge& bridge = {});

// Latent-logistic variance bridge for binary designs: the between-cluster
// SD implied by an ICC on the logit scale (residual variance pi^2/3).
double sigma_b_from_icc_logit(double rho);

}  // namespace crt
