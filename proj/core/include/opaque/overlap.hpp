#pragma once

#include <cstdint>
#include <random>

#include "opaque/barrier.hpp"
#include "opaque/bounds.hpp"

namespace opaque {

/// Integral over [0, pi) of the measure of B(alpha), the union of the
/// projected segments. Pieces are split at every angle where two projected
/// endpoints coincide or a segment is orthogonal to the projection axis.
double projection_integral(const Barrier& barrier);

/// Two clusters for the overlap bound: `minus` left of the origin,
/// `plus` right of it.
struct BandSample {
  BandConfig config;
  Barrier minus;
  Barrier plus;
};

/// Random configuration meeting the overlap bound's hypotheses: each
/// cluster is a chain of n segments of length l, joined end to end and
/// monotone in y, every segment at angle in (lambda, pi - lambda); the two
/// chains sit in the opposite wedges |y| <= |x| tan(kappa), clear of the
/// two bands of width W through the origin at angles +-kappa; D is the
/// diameter of a disk about the origin holding both.
BandSample random_band_sample(std::mt19937_64& rng);

/// Checks the hypotheses above for a given sample (tolerance 1e-12).
bool satisfies_band_hypotheses(const BandSample& sample);

}  // namespace opaque
