#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <vector>

namespace crt {

// splitmix64 finalizer; used to derive independent substreams from a
// (seed, index...) key so replicate results do not depend on scheduling.
std::uint64_t mix64(std::uint64_t x);
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index);
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t a, std::uint64_t b);

// Random stream with the exact sampling algorithms pinned down, so a given
// seed reproduces byte-identical draws on every build of this project.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    static Rng stream(std::uint64_t seed, std::uint64_t index) {
        return Rng(derive_seed(seed, index));
    }

    double uniform();      // [0, 1)
    double uniform_pos();  // (0, 1]
    double normal();       // standard normal, Box-Muller with cached pair
    double normal(double mean, double sd) { return mean + sd * normal(); }
    double exponential();  // rate 1

    // Marsaglia-Tsang; shape-rate convention.
    double gamma(double shape, double rate);
    double beta(double a, double b);
    bool bernoulli(double p) { return uniform() < p; }

    // Symmetric Dirichlet(a, ..., a) of length k.
    std::vector<double> dirichlet_symmetric(double a, int k);

    // Counts of n draws from the categorical distribution with weights p.
    std::vector<long long> multinomial(long long n, std::span<const double> p);

private:
    std::mt19937_64 gen_;
    double cached_normal_ = 0.0;
    bool has_cached_normal_ = false;
};

}  // namespace crt
