#ifndef DUOPOLY_TEST_UTIL_HPP
#define DUOPOLY_TEST_UTIL_HPP

#include <random>

#include "duopoly/model.hpp"

namespace testutil {

// Random parameter sets kept below the first period-doubling threshold
// (c <= 8 guarantees a contracting attractor for decay rates in [0.1, 0.9]),
// so iterated cross-coordinate comparisons stay meaningful.
inline duopoly::ModelParams random_contracting_params(std::mt19937& rng) {
    std::uniform_real_distribution<double> scale(0.1, 1.0);
    std::uniform_real_distribution<double> decay(0.1, 0.9);
    std::uniform_real_distribution<double> elasticity(0.0, 8.0);
    return {scale(rng), scale(rng), decay(rng), decay(rng), elasticity(rng)};
}

// Wider c range for pointwise (single-step) checks.
inline duopoly::ModelParams random_params(std::mt19937& rng) {
    std::uniform_real_distribution<double> scale(0.1, 1.0);
    std::uniform_real_distribution<double> decay(0.1, 0.9);
    std::uniform_real_distribution<double> elasticity(0.0, 200.0);
    return {scale(rng), scale(rng), decay(rng), decay(rng), elasticity(rng)};
}

inline const duopoly::ModelParams kFig1Set{0.16, 0.9, 0.46, 0.7, 105.0};

}  // namespace testutil

#endif
