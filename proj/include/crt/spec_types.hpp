#pragma once

#include <string>

#include "crt/error.hpp"
#include "crt/rng.hpp"

namespace crt {

struct NormalSpec {
    double mean = 0.0;
    double sd = 1.0;

    NormalSpec() = default;
    NormalSpec(double mean_, double sd_) : mean(mean_), sd(sd_) {
        if (!(sd > 0.0)) throw DomainError("NormalSpec: sd must be > 0");
    }
    double variance() const { return sd * sd; }
};

// Shape-rate convention everywhere; mean = shape/rate.
struct GammaSpec {
    double shape = 1.0;
    double rate = 1.0;

    GammaSpec() = default;
    GammaSpec(double shape_, double rate_) : shape(shape_), rate(rate_) {
        if (!(shape > 0.0) || !(rate > 0.0)) {
            throw DomainError("GammaSpec: shape and rate must be > 0");
        }
    }
    double mean() const { return shape / rate; }
};

struct BetaSpec {
    double a = 1.0;
    double b = 1.0;

    BetaSpec() = default;
    BetaSpec(double a_, double b_) : a(a_), b(b_) {
        if (!(a > 0.0) || !(b > 0.0)) {
            throw DomainError("BetaSpec: both shape parameters must be > 0");
        }
    }
    double mean() const { return a / (a + b); }
};

// One marginal of a design prior. The point-mass variant lets a prior
// degenerate to fixed truths, which is how assurance collapses to power.
class PriorMarginal {
public:
    enum class Family { normal, gamma, beta, fixed };

    static PriorMarginal normal(double mean, double sd) {
        PriorMarginal m;
        m.family_ = Family::normal;
        m.normal_ = NormalSpec(mean, sd);
        return m;
    }
    static PriorMarginal gamma(double shape, double rate) {
        PriorMarginal m;
        m.family_ = Family::gamma;
        m.gamma_ = GammaSpec(shape, rate);
        return m;
    }
    static PriorMarginal beta(double a, double b) {
        PriorMarginal m;
        m.family_ = Family::beta;
        m.beta_ = BetaSpec(a, b);
        return m;
    }
    static PriorMarginal fixed(double value) {
        PriorMarginal m;
        m.family_ = Family::fixed;
        m.fixed_value_ = value;
        return m;
    }

    Family family() const { return family_; }
    bool is_fixed() const { return family_ == Family::fixed; }

    double sample(Rng& rng) const {
        switch (family_) {
            case Family::normal: return rng.normal(normal_.mean, normal_.sd);
            case Family::gamma: return rng.gamma(gamma_.shape, gamma_.rate);
            case Family::beta: return rng.beta(beta_.a, beta_.b);
            case Family::fixed: return fixed_value_;
        }
        throw DomainError("PriorMarginal: unknown family");
    }

    double mean() const {
        switch (family_) {
            case Family::normal: return normal_.mean;
            case Family::gamma: return gamma_.mean();
            case Family::beta: return beta_.mean();
            case Family::fixed: return fixed_value_;
        }
        throw DomainError("PriorMarginal: unknown family");
    }

    const NormalSpec& as_normal() const { return require(Family::normal), normal_; }
    const GammaSpec& as_gamma() const { return require(Family::gamma), gamma_; }
    const BetaSpec& as_beta() const { return require(Family::beta), beta_; }
    double fixed_value() const { return require(Family::fixed), fixed_value_; }

private:
    PriorMarginal() = default;
    void require(Family f) const {
        if (family_ != f) throw DomainError("PriorMarginal: wrong family access");
    }

    Family family_ = Family::fixed;
    NormalSpec normal_{};
    GammaSpec gamma_{};
    BetaSpec beta_{};
    double fixed_value_ = 0.0;
};

std::string to_string(PriorMarginal::Family f);

}  // namespace crt
