#pragma once

#include "fractalpile/stabilize.hpp"

namespace fractalpile {

/// The configuration assigning each vertex its number of sink edges.
Configuration id_f(const SinkedGraph& g);

/// degree(v) - 1 everywhere.
Configuration max_stable(const SinkedGraph& g);

/// Pointwise addition followed by stabilization.
Configuration oplus(const SinkedGraph& g, const Configuration& a, const Configuration& b);

struct RecurrenceWitness {
    bool recurrent = false;
    Odometer odometer;   // odometer of stabilize(c + id_f)
};

/// Burning test: a stable c is recurrent iff stabilize(c + id_f) returns c
/// with every vertex toppling exactly once. Throws ConfigurationError when
/// c is unstable.
RecurrenceWitness is_recurrent(const SinkedGraph& g, const Configuration& c);

struct IdentityResult {
    Configuration identity;  // Id_r, the neutral element on recurrents
    std::uint64_t k_min = 0; // least k >= 1 with (k Id_f)° recurrent; 0 on the empty graph
};

/// Identity element of the group of recurrent configurations, computed by
/// iterating s_k = (s_{k-1} + Id_f)° from zero and stopping at the first
/// recurrent s_k. Iteration count is capped by the group order.
IdentityResult identity(const SinkedGraph& g);

/// A seeded recurrent configuration: stabilize(max_stable + r) with r random
/// nonnegative and >= degree at one vertex at least. Verified recurrent
/// before returning; deterministic for a fixed seed.
Configuration random_recurrent(const SinkedGraph& g, std::uint64_t seed);

} // namespace fractalpile
