#pragma once

#include <cstdint>
#include <random>

#include "wreath/automorphism.hpp"
#include "wreath/signature.hpp"

namespace wreath {

using Rng = std::mt19937_64;

/// Uniform draw from {0,...,n-1} by rejection; identical across
/// platforms for a given engine state, unlike the stdlib distributions.
uint64_t uniform_below(Rng& rng, uint64_t n);

/// Uniform over the full wreath product: every label independent
/// uniform below its level's arity.
TreeAutomorphism random_element(const WreathSignature& sig, Rng& rng);
TreeAutomorphism random_element(const WreathSignature& sig, uint64_t seed);

}  // namespace wreath
