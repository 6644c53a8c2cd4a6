#pragma once

#include <cstdint>
#include <random>

#include "gsk/burnside.hpp"
#include "gsk/gcw.hpp"
#include "gsk/span.hpp"
#include "gsk/squares_k0.hpp"

namespace gsk {

using Rng = std::mt19937_64;

int uniform_int(Rng& rng, int lo, int hi);

Subgroup random_subgroup(const GroupPtr& G, Rng& rng);
/// Disjoint union of 0..max_orbits random coset orbits.
GSet random_gset(const GroupPtr& G, Rng& rng, int max_orbits);
/// 1..max_dim+1 levels carrying at most max_orbits orbits in total.
GCWComplex random_complex(const GroupPtr& G, Rng& rng, int max_dim = 4, int max_orbits = 20);
/// G x_H N for a random H-complex N, labeled over G/H.
LabeledGCW random_labeled_complex(const Subgroup& H, Rng& rng, int max_dim = 3, int max_orbits = 8);
/// Apex orbits G/L with L inside the stabilizers of chosen points of X and
/// Y; the apex has at most max_apex points.
Span random_span(const GSet& X, const GSet& Y, Rng& rng, int max_orbits, int max_apex = 64);
BurnsideElement random_burnside(const GroupPtr& G, Rng& rng, int bound);
/// Objects O, X1, X2, ...; squares with uniformly random corners.
SquaresPresentation random_presentation(Rng& rng, int max_objects = 10, int max_squares = 15);

}  // namespace gsk
