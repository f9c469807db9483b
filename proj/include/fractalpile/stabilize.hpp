#pragma once

#include "fractalpile/configuration.hpp"

namespace fractalpile {

struct Odometer {
    std::vector<std::uint64_t> topples;

    std::uint64_t operator[](VertexId v) const { return topples[v]; }
    bool operator==(const Odometer&) const = default;
};

struct StabilizationResult {
    Configuration config;     // stable: config[v] < degree(v) everywhere
    Odometer odometer;        // per-vertex toppling counts
    std::uint64_t absorbed = 0;  // grains lost to sinks
    std::uint64_t steps = 0;     // total toppling events
};

/// Stabilize a configuration. Batch toppling over a FIFO worklist: a vertex
/// holding q >= deg grains topples floor(q/deg) times in one visit. The
/// result is independent of processing order.
///
/// `max_steps` == 0 means the default safety bound; it only triggers on
/// graphs where some vertex cannot reach a sink and raises
/// ResourceLimitError.
StabilizationResult stabilize(const SinkedGraph& g, Configuration c,
                              std::uint64_t max_steps = 0);

/// Exact integer consistency check of a stabilization against its input:
/// final = initial - deg * u + sum of neighbor odometers, plus grain
/// conservation through the sinks. Throws ConsistencyError on violation.
void verify_stabilization(const SinkedGraph& g, const Configuration& initial,
                          const StabilizationResult& r);

} // namespace fractalpile
