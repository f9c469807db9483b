#pragma once

#include <cstdint>
#include <vector>

#include "fractalpile/graph.hpp"

namespace fractalpile {

/// Grain counts per non-sink vertex. Arithmetic is 64-bit unsigned with
/// checked addition: overflow raises std::overflow_error instead of wrapping.
struct Configuration {
    std::vector<std::uint64_t> grains;

    std::uint64_t operator[](VertexId v) const { return grains[v]; }
    std::uint64_t& operator[](VertexId v) { return grains[v]; }
    std::size_t size() const { return grains.size(); }
    bool operator==(const Configuration&) const = default;
};

Configuration zero_configuration(const SinkedGraph& g);

/// Pointwise increment at one vertex; checked.
Configuration drop(const SinkedGraph& g, Configuration c, VertexId v, std::uint64_t amount);

/// Pointwise sum of two configurations on the same graph; checked.
Configuration add(const SinkedGraph& g, const Configuration& a, const Configuration& b);

std::uint64_t total_grains(const Configuration& c);

bool is_stable(const SinkedGraph& g, const Configuration& c);

} // namespace fractalpile
