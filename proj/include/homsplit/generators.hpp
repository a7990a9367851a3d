#pragma once

#include <cstdint>
#include <random>

#include "homsplit/bundle.hpp"
#include "homsplit/linalg.hpp"

namespace homsplit::gen {

inline constexpr std::uint64_t kDefaultSeed = 20240917;

using Rng = std::mt19937_64;

/// Uniform integer in [lo, hi].
int uniform(Rng& rng, int lo, int hi);
Rational small_rational(Rng& rng, int lo = -2, int hi = 2);

/// Entries uniform in [lo, hi]; each entry is zero with probability 1 - density.
RatMatrix random_matrix(Rng& rng, int rows, int cols, int lo = -2, int hi = 2, double density = 1.0);
RatMatrix random_invertible(Rng& rng, int n, int lo = -1, int hi = 1);

/// Products of the first `top` basis vectors land in the span of the rest,
/// which annihilates everything; every Hom-type identity of the library
/// then holds for any twist. The twist is random.
BasicAlgebra<Rational> nilpotent_algebra(Rng& rng, Kind kind, int dim);

/// One to `max_entries` structure constants in {-1, 1} and a twist drawn
/// from identity, zero, random diagonal and random matrices. Unfiltered.
BasicAlgebra<Rational> sparse_algebra(Rng& rng, Kind kind, int dim, int max_entries = 3);

/// Rejection-sampled sparse algebra passing its kind checker, falling back
/// to a nilpotent one, then moved by a random change of basis.
BasicAlgebra<Rational> random_valid_algebra(Rng& rng, Kind kind, int dim, int attempts = 200);

} // namespace homsplit::gen
