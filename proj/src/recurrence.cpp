#include "fractalpile/recurrence.hpp"

#include <algorithm>

#include "fractalpile/graph_ops.hpp"
#include "fractalpile/snf.hpp"

namespace fractalpile {

namespace {

// SplitMix64; portable and stable across platforms, unlike the standard
// distributions.
struct SplitMix64 {
    std::uint64_t state;
    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
    std::uint64_t below(std::uint64_t bound) { return bound ? next() % bound : 0; }
};

} // namespace

Configuration id_f(const SinkedGraph& g) {
    Configuration c = zero_configuration(g);
    for (VertexId v = 0; v < g.vertex_count(); ++v) c[v] = g.sink_multiplicity(v);
    return c;
}

Configuration max_stable(const SinkedGraph& g) {
    Configuration c = zero_configuration(g);
    for (VertexId v = 0; v < g.vertex_count(); ++v) c[v] = g.degree(v) - 1;
    return c;
}

Configuration oplus(const SinkedGraph& g, const Configuration& a, const Configuration& b) {
    return stabilize(g, add(g, a, b)).config;
}

RecurrenceWitness is_recurrent(const SinkedGraph& g, const Configuration& c) {
    if (!is_stable(g, c)) throw ConfigurationError("recurrence test requires a stable configuration");
    StabilizationResult r = stabilize(g, add(g, c, id_f(g)));
    bool unit = std::all_of(r.odometer.topples.begin(), r.odometer.topples.end(),
                            [](std::uint64_t t) { return t == 1; });
    return {unit && r.config == c, std::move(r.odometer)};
}

IdentityResult identity(const SinkedGraph& g) {
    if (g.vertex_count() == 0) return {zero_configuration(g), 0};
    const Configuration f = id_f(g);
    Configuration s = zero_configuration(g);
    std::uint64_t cap = 0;  // group order, computed lazily
    for (std::uint64_t k = 1;; ++k) {
        s = stabilize(g, add(g, s, f)).config;
        if (is_recurrent(g, s).recurrent) {
            if (stabilize(g, add(g, s, f)).config != s)
                throw ConsistencyError("identity candidate moved under another Id_f addition");
            return {std::move(s), k};
        }
        if (cap == 0 && k >= 4096) {
            algebra::BigInt order = algebra::group_order(g);
            cap = order > algebra::BigInt(std::uint64_t(1) << 62)
                      ? (std::uint64_t(1) << 62)
                      : static_cast<std::uint64_t>(order);
        }
        if (cap != 0 && k > cap)
            throw ConsistencyError("identity iteration exceeded the group order bound");
    }
}

Configuration random_recurrent(const SinkedGraph& g, std::uint64_t seed) {
    if (g.vertex_count() == 0) return zero_configuration(g);
    SplitMix64 rng{seed ^ 0x5851f42d4c957f2dULL};
    Configuration r = zero_configuration(g);
    for (VertexId v = 0; v < g.vertex_count(); ++v) r[v] = rng.below(2 * g.degree(v));
    VertexId forced = static_cast<VertexId>(rng.below(g.vertex_count()));
    r[forced] = std::max<std::uint64_t>(r[forced], g.degree(forced));
    Configuration out = stabilize(g, add(g, max_stable(g), r)).config;
    if (!is_recurrent(g, out).recurrent)
        throw ConsistencyError("random recurrent candidate failed the burning test");
    return out;
}

} // namespace fractalpile
