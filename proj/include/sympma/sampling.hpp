#pragma once

// Seeded exact sampling: random integer points and rational points on a
// hypersurface {F = 0}.

#include "sympma/polynomial.hpp"

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

namespace sma {

using Rng = std::mt19937_64;

inline constexpr std::uint64_t kDefaultSeed = 20090101;

Rational random_integer(Rng& rng, long range);

/// A rational zero of f. Every variable gets a random integer in
/// [-range, range]; then the first variable (ring order) in which f is
/// linear with a nonzero leading coefficient at that assignment is solved
/// for. Re-randomizes up to `budget` times; nullopt when exhausted.
std::optional<std::vector<Rational>> sample_zero(const Polynomial& f, Rng& rng, long range,
                                                 int budget = 100);

}  // namespace sma
