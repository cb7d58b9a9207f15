#pragma once

#include <cstddef>

#include "rinf/finseq.hpp"
#include "rinf/frames.hpp"
#include "rinf/glinf.hpp"
#include "rinf/mapspace.hpp"
#include "rinf/rng.hpp"

namespace rinf::verify {

// Samplers shared by the verification suites and the acceptance harness.
// All draw from the caller's stream only, so a case remains reproducible
// from (seed, case name). Distributions deliberately sample chart and
// group interiors (radius bands, bounded condition numbers): the charts
// are open sets and absolute tolerances lose meaning against their
// boundaries.

/// Gaussian coordinates on a random support in [1, max_support].
FinSeq random_finseq(Rng& rng, std::size_t max_support, double amplitude = 1.0);

/// Uniform direction on the unit sphere of a random support.
FinSeq random_unit(Rng& rng, std::size_t max_support);

/// Random vector orthogonal to the unit vector a, with |y| log-uniform
/// in [radius_lo, radius_hi].
FinSeq random_orthogonal_to(Rng& rng, const FinSeq& a, std::size_t max_support,
                            double radius_lo, double radius_hi);

/// Injective frame with 1 <= k <= k_max and column support <= max_support.
frames::Frame random_injective_frame(Rng& rng, std::size_t k_max,
                                     std::size_t max_support);
frames::Frame random_orthonormal_frame(Rng& rng, std::size_t k,
                                       std::size_t max_support);

/// GL(k) sample with singular values in [0.5, 2] (condition number <= 4).
frames::SmallMatrix random_gl(Rng& rng, std::size_t k);

/// Upper triangular with diagonal in [0.5, 2].
frames::SmallMatrix random_upper_positive(Rng& rng, std::size_t k);

frames::SmallMatrix random_orthogonal_small(Rng& rng, std::size_t k);

/// Dense gl block rescaled to the requested 2-norm.
glinf::GLInfAlgebra random_algebra(Rng& rng, std::size_t n, double norm2);
glinf::GLInfAlgebra random_skew(Rng& rng, std::size_t n, double norm2);
glinf::GLInfAlgebra random_traceless(Rng& rng, std::size_t n, double amplitude);

/// O(inf) member: exp of a skew block, composed with a reflection half
/// the time so both components get sampled.
glinf::GLInfElement random_isometry(Rng& rng, std::size_t n);

/// Trigonometric polynomial field of degree <= max_mode, coefficient
/// amplitude <= amp.
mapspace::VectorFieldS1 random_band_limited_field(Rng& rng,
                                                  const mapspace::GridS1& grid,
                                                  int max_mode, double amp);

/// Diffeo with lift theta + trig polynomial; margin bounds the total
/// harmonic weight, so lift slopes stay in [1 - margin, 1 + margin].
/// Double inversion at N = 64 resolves the inverse to ~1e-10 only for
/// margin <= 0.3 and max_mode <= 2; larger values are fine for tests
/// that never interpolate the inverse.
mapspace::CircleDiffeo random_band_limited_diffeo(Rng& rng,
                                                  const mapspace::GridS1& grid,
                                                  int max_mode,
                                                  double margin = 0.8);

/// Smooth random map into the target (low-degree trig data).
mapspace::DiscretizedMap random_map(Rng& rng, const mapspace::GridS1& grid,
                                    const mapspace::Target& target);

/// Random tangent section along f with |vec| <= amp per node.
std::vector<mapspace::TangentVec> random_section_vecs(
    Rng& rng, const mapspace::DiscretizedMap& f, double amp);

/// Point within geodesic radius <= amp of f (through chart_inverse).
mapspace::DiscretizedMap random_nearby(Rng& rng,
                                       const mapspace::DiscretizedMap& f,
                                       double amp);

}  // namespace rinf::verify
