#include "fractalpile/stabilize.hpp"

#include <limits>

namespace fractalpile {

namespace {

// Conservative total-grain ceiling so pointwise sums can never wrap during
// toppling (grain totals are conserved or decrease).
constexpr std::uint64_t kGrainCeiling = std::uint64_t(1) << 62;

std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
    std::uint64_t s;
    if (__builtin_add_overflow(a, b, &s) || s > kGrainCeiling)
        throw std::overflow_error("grain count overflow");
    return s;
}

} // namespace

Configuration zero_configuration(const SinkedGraph& g) {
    return Configuration{std::vector<std::uint64_t>(g.vertex_count(), 0)};
}

Configuration drop(const SinkedGraph& g, Configuration c, VertexId v, std::uint64_t amount) {
    if (c.size() != g.vertex_count()) throw ConfigurationError("configuration size mismatch");
    if (v >= g.vertex_count()) throw ConfigurationError("invalid vertex id");
    c[v] = checked_add(c[v], amount);
    checked_add(total_grains(c), 0);  // keep the running total under the ceiling
    return c;
}

Configuration add(const SinkedGraph& g, const Configuration& a, const Configuration& b) {
    if (a.size() != g.vertex_count() || b.size() != g.vertex_count())
        throw ConfigurationError("configuration size mismatch");
    Configuration out = a;
    for (std::size_t v = 0; v < out.size(); ++v) out.grains[v] = checked_add(out.grains[v], b.grains[v]);
    checked_add(total_grains(out), 0);
    return out;
}

std::uint64_t total_grains(const Configuration& c) {
    std::uint64_t s = 0;
    for (auto g : c.grains) s = checked_add(s, g);
    return s;
}

bool is_stable(const SinkedGraph& g, const Configuration& c) {
    for (VertexId v = 0; v < g.vertex_count(); ++v)
        if (c[v] >= g.degree(v)) return false;
    return true;
}

StabilizationResult stabilize(const SinkedGraph& g, Configuration c, std::uint64_t max_steps) {
    const std::size_t n = g.vertex_count();
    if (c.size() != n) throw ConfigurationError("configuration size mismatch");
    if (max_steps == 0) max_steps = std::numeric_limits<std::uint64_t>::max();

    StabilizationResult r;
    r.odometer.topples.assign(n, 0);

    // FIFO ring; a vertex is queued at most once at a time
    std::size_t cap = 2;
    while (cap < n + 1) cap <<= 1;
    const std::size_t mask = cap - 1;
    std::vector<VertexId> ring(cap);
    std::vector<char> queued(n, 0);
    std::uint64_t* grains = c.grains.data();
    std::uint64_t* od = r.odometer.topples.data();
    std::size_t head = 0, tail = 0;
    for (VertexId v = 0; v < n; ++v)
        if (grains[v] >= g.degree(v)) {
            ring[tail++ & mask] = v;
            queued[v] = 1;
        }

    while (head != tail) {
        const VertexId v = ring[head++ & mask];
        queued[v] = 0;
        const std::uint64_t deg = g.degree(v);
        const std::uint64_t q = grains[v];
        if (q < deg) continue;
        const std::uint64_t t = q / deg;
        grains[v] = q % deg;
        od[v] += t;
        r.steps += t;
        r.absorbed += t * g.sink_multiplicity(v);
        if (r.steps > max_steps)
            throw ResourceLimitError("stabilization exceeded the step cap of " +
                                     std::to_string(max_steps));
        for (VertexId u : g.neighbors(v)) {
            grains[u] += t;
            if (grains[u] >= g.degree(u) && !queued[u]) {
                ring[tail++ & mask] = u;
                queued[u] = 1;
            }
        }
    }

    r.config = std::move(c);
    return r;
}

void verify_stabilization(const SinkedGraph& g, const Configuration& initial,
                          const StabilizationResult& r) {
    using U128 = unsigned __int128;
    const std::size_t n = g.vertex_count();
    U128 in_total = 0, out_total = 0, sink_flux = 0;
    for (VertexId v = 0; v < n; ++v) {
        if (r.config[v] >= g.degree(v)) throw ConsistencyError("result is not stable");
        U128 inflow = 0;
        for (VertexId u : g.neighbors(v)) inflow += r.odometer[u];
        U128 lhs = U128(initial[v]) + inflow;
        U128 rhs = U128(r.config[v]) + U128(g.degree(v)) * r.odometer[v];
        if (lhs != rhs) throw ConsistencyError("odometer identity violated at a vertex");
        in_total += initial[v];
        out_total += r.config[v];
        sink_flux += U128(g.sink_multiplicity(v)) * r.odometer[v];
    }
    if (in_total != out_total + r.absorbed) throw ConsistencyError("grains not conserved");
    if (sink_flux != r.absorbed) throw ConsistencyError("absorption does not match sink flux");
}

} // namespace fractalpile
