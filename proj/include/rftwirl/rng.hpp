// Seeded pseudo-randomness. Every stochastic routine in the project takes a
// 64-bit seed and derives per-sample streams from (seed, index), so results
// are reproducible and independent of evaluation order.
#pragma once

#include "rftwirl/matcore.hpp"

#include <cmath>
#include <cstdint>
#include <utility>

namespace rftwirl {

/// splitmix64 finalizer.
constexpr std::uint64_t mix64(std::uint64_t z) {
    z += 0x9E3779B97F4A7C15ULL;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

/// Decorrelated sub-stream seed for sample `index` of a run seeded by `seed`.
constexpr std::uint64_t derive_stream(std::uint64_t seed, std::uint64_t index) {
    return mix64(seed ^ mix64(index + 0x632BE59BD9B4E019ULL));
}

class SplitMix64 {
  public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    /// Uniform double in the open interval (0, 1).
    double uniform01() {
        return (static_cast<double>(next() >> 11) + 0.5) * 0x1.0p-53;
    }

    /// Uniform integer in [0, bound).
    std::uint64_t below(std::uint64_t bound) {
        // Modulo bias is < 2^-50 for the bounds used here (all < 2^13).
        return next() % bound;
    }

    /// Standard normal via Box-Muller.
    double gaussian() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        const double u1 = uniform01();
        const double u2 = uniform01();
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double theta = 2.0 * M_PI * u2;
        spare_ = r * std::sin(theta);
        have_spare_ = true;
        return r * std::cos(theta);
    }

    Complex complex_gaussian() {
        return Complex(gaussian(), gaussian());
    }

  private:
    std::uint64_t state_;
    double spare_ = 0.0;
    bool have_spare_ = false;
};

/// Normalized complex-Gaussian vector: uniform over pure states.
inline Ket random_ket(int dim, SplitMix64& rng) {
    ComplexVector v(dim);
    for (int i = 0; i < dim; ++i) v(i) = rng.complex_gaussian();
    return Ket::normalized(std::move(v));
}

/// Full-rank random density matrix (normalized G G^dagger, Ginibre G).
inline DensityMatrix random_density(int dim, SplitMix64& rng) {
    ComplexMatrix g(dim, dim);
    for (int r = 0; r < dim; ++r)
        for (int c = 0; c < dim; ++c) g(r, c) = rng.complex_gaussian();
    ComplexMatrix m = g * g.adjoint();
    m /= m.trace().real();
    return DensityMatrix::trusted(std::move(m));
}

}  // namespace rftwirl
