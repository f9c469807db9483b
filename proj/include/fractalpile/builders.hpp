#pragma once

#include "fractalpile/graph.hpp"

namespace fractalpile {

/// Build the canonical finite approximation for a family spec.
///
/// Vertices are identified by address words over the family's iterated
/// function system with explicit corner-gluing relations; ids are assigned
/// in first-occurrence order of the cell/corner enumeration, so two builds
/// of the same spec are identical id-for-id. Coordinates are derived
/// afterwards and used for rendering only.
SinkedGraph build(const FamilySpec& spec);

/// Ring of t corner-linked triangles. Each triangle has one outer vertex
/// with a single sink edge and two inner vertices; consecutive triangles are
/// joined by an edge between inner vertices, cyclically. t = 1 closes the
/// ring with a doubled inner edge. Vertex ids run unit by unit, left to
/// right.
SinkedGraph triangle_chain(int t);

/// Maximum level accepted by the builders (address words are packed into
/// 64-bit keys).
constexpr int kMaxBuildLevel = 17;

} // namespace fractalpile
