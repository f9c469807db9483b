#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "fractalpile/family.hpp"

namespace fractalpile {

using VertexId = std::uint32_t;

struct Point {
    double x = 0.0;
    double y = 0.0;
    bool operator==(const Point&) const = default;
};

/// A corner of the built approximation. Under CORNER_SINKS each boundary
/// corner is a distinct sink; under COLLAPSED_SINK they are one merged sink.
/// Corners are not materialized as vertices, so entries carry a label only.
struct CornerMark {
    bool is_sink = true;
    int label = 0;               // corner index within the family
    VertexId vertex = 0;         // meaningful only when is_sink is false
    bool operator==(const CornerMark&) const = default;
};

/// Immutable sinked multigraph over the non-sink vertices. Sinks are not
/// vertices; every vertex stores the multiplicity of its edges to sinks.
/// Parallel edges are allowed (a neighbor id may repeat), self-loops are not.
class SinkedGraph {
public:
    SinkedGraph() = default;

    /// Raw construction from adjacency lists. Validates the degree identity,
    /// adjacency symmetry and absence of self-loops; throws ConfigurationError
    /// on violation.
    SinkedGraph(FamilySpec spec,
                std::vector<std::vector<VertexId>> adjacency,
                std::vector<std::uint32_t> sink_multiplicity,
                std::vector<Point> coords,
                std::vector<CornerMark> corners,
                std::optional<VertexId> center);

    std::size_t vertex_count() const { return offsets_.empty() ? 0 : offsets_.size() - 1; }

    std::span<const VertexId> neighbors(VertexId v) const {
        return {neighbors_.data() + offsets_[v], offsets_[v + 1] - offsets_[v]};
    }

    std::uint32_t degree(VertexId v) const { return degree_[v]; }
    std::uint32_t sink_multiplicity(VertexId v) const { return sink_multiplicity_[v]; }
    Point coord(VertexId v) const { return coords_[v]; }

    const std::vector<Point>& coords() const { return coords_; }
    const std::vector<CornerMark>& corners() const { return corners_; }
    std::optional<VertexId> center() const { return center_; }
    const FamilySpec& spec() const { return spec_; }

    std::uint64_t total_sink_edges() const;

    /// Undirected edge list with multiplicity (u <= v ordering, sorted).
    std::vector<std::pair<VertexId, VertexId>> edges() const;

    /// Number of undirected non-sink edges, counting multiplicity.
    std::uint64_t edge_count() const { return neighbors_.size() / 2; }

    /// True when every vertex can reach a sink edge through the graph.
    bool sink_reachable() const;

    bool structurally_equal(const SinkedGraph& other) const;

private:
    FamilySpec spec_{};
    std::vector<std::uint32_t> offsets_;
    std::vector<VertexId> neighbors_;
    std::vector<std::uint32_t> degree_;
    std::vector<std::uint32_t> sink_multiplicity_;
    std::vector<Point> coords_;
    std::vector<CornerMark> corners_;
    std::optional<VertexId> center_;
};

} // namespace fractalpile
