#pragma once

// Internal: iterated-function-system cell structure per family, canonical
// vertex keys, and the shared enumeration that fixes vertex ids. Everything
// here is purely combinatorial; coordinates are derived at the end and used
// for rendering only.

#include <array>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <unordered_map>
#include <utility>
#include <vector>

#include "fractalpile/graph.hpp"

namespace fractalpile::detail {

struct FamilyTable {
    int maps = 0;       // cells per subdivision
    int corners = 0;    // corners of the base shape
    std::array<int, 6> fixed{};  // fixed[a] = base corner fixed by map a, or -1
    // Junction classes of one subdivision: sets of (cell, corner) slots that
    // land on the same point.
    std::vector<std::vector<std::pair<int, int>>> junctions;
    std::array<std::array<int, 6>, 6> junction_of{};  // [cell][corner] -> index or -1
    std::vector<std::pair<int, int>> base_edges;
    std::array<Point, 6> corner_pt{};
    std::array<Point, 6> offset{};  // per-map affine x -> offset + scale*x
    double scale = 0.5;

    void finish();
};

const FamilyTable& table_for(Family f);

// Canonical vertex keys packed into 64 bits:
//   [kind:2][extra:6][len:5][word digits: 3 bits each, most significant first]
// kind 0: outer corner `extra` of the whole shape (word empty).
// kind 1: junction class `extra` of the subdivision of cell `word`.
// kind 2: free corner `extra` of cell `word`.
enum : std::uint64_t { kOuter = 0, kJunction = 1, kFree = 2 };

std::uint64_t pack_key(std::uint64_t kind, std::uint64_t extra,
                       const std::uint8_t* word, int len);

// Resolve a corner slot of a level-n cell to its canonical key: strip
// trailing letters that fix the corner, then look the remaining (cell,
// corner) pair up in the junction table.
std::uint64_t canonical_slot(const FamilyTable& t, const std::uint8_t* word, int n, int corner);

Point apply_word(const FamilyTable& t, const std::uint8_t* word, int len, Point p);
Point key_coord(const FamilyTable& t, std::uint64_t key);

/// Canonical key of corner `corner` of the depth-d cell `cell` inside a
/// level-n approximation (the slot descends toward the corner-fixing child).
std::uint64_t cell_corner_key(const FamilyTable& t, const std::vector<std::uint8_t>& cell,
                              int n, int corner);

/// Vertex ids exactly as the builder assigns them: first-occurrence order of
/// the cell-by-cell corner enumeration, outer corners excluded. Keys absent
/// from the map are sinks or not vertices of this level.
std::unordered_map<std::uint64_t, VertexId> enumerate_vertex_ids(const FamilyTable& t, int n);

} // namespace fractalpile::detail
