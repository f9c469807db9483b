#pragma once

#include <vector>

#include "fractalpile/graph.hpp"
#include "fractalpile/matrix.hpp"

namespace fractalpile {

/// Breadth-first distances from v0 over non-sink vertices. Sink edges do not
/// contribute paths. Throws ConfigurationError on an invalid vertex id.
std::vector<std::uint32_t> distance_map(const SinkedGraph& g, VertexId v0);

/// The midpoint vertex of the bottom edge of an SG approximation of level
/// >= 1 (the vertex fixed by the vertical mirror symmetry, degree 4).
/// Families without a defined bottom-center raise ConfigurationError.
VertexId bottom_center_vertex(const SinkedGraph& g);

/// Nested family of separating vertex sets around a drop vertex.
/// Removing separator(n) disconnects interior(n) from the rest of the graph;
/// interiors are nested and contain v0.
struct CutSystem {
    struct Cut {
        std::vector<VertexId> separator;  // B_n, sorted
        std::vector<VertexId> interior;   // F_n, sorted, contains v0
    };
    VertexId v0 = 0;
    std::vector<Cut> cuts;                // index 0 is n = 1
};

/// Symmetric nested cuts for (g, v0). Supported: SG with v0 = bottom-center
/// (the bowtie of the two size-n cells at v0) and MG with v0 = the central
/// vertex (the pinwheel of the three size-n cells at v0). Other requests
/// raise ConfigurationError naming the supported pairs.
CutSystem junction_cuts(const SinkedGraph& g, VertexId v0);

/// Laplacian restricted to non-sink vertices: diagonal = degree (sink edges
/// included), off-diagonal = -(edge multiplicity between u and v).
algebra::IntegerMatrix reduced_laplacian(const SinkedGraph& g);

/// The sinked graph S = F + (B as sinks): induced subgraph on `interior`
/// where edges into `separator` become sink edges. Vertex ids follow the
/// order of `interior`. Coordinates and nothing else are inherited;
/// `center` is remapped when it lies in the interior.
SinkedGraph restrict_with_sinks(const SinkedGraph& g,
                                const std::vector<VertexId>& interior,
                                const std::vector<VertexId>& separator,
                                std::optional<VertexId> center = std::nullopt);

} // namespace fractalpile
