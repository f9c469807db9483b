#include "fractalpile/graph_ops.hpp"

#include <algorithm>
#include <queue>
#include <unordered_set>

#include "family_tables.hpp"

namespace fractalpile {

std::vector<std::uint32_t> distance_map(const SinkedGraph& g, VertexId v0) {
    if (v0 >= g.vertex_count()) throw ConfigurationError("invalid vertex id");
    std::vector<std::uint32_t> dist(g.vertex_count(), UINT32_MAX);
    std::queue<VertexId> q;
    dist[v0] = 0;
    q.push(v0);
    while (!q.empty()) {
        VertexId v = q.front();
        q.pop();
        for (VertexId u : g.neighbors(v))
            if (dist[u] == UINT32_MAX) {
                dist[u] = dist[v] + 1;
                q.push(u);
            }
    }
    return dist;
}

VertexId bottom_center_vertex(const SinkedGraph& g) {
    if (g.spec().family != Family::SG || !g.center())
        throw ConfigurationError("no bottom-center vertex for family " +
                                 to_string(g.spec().family) + " at level " +
                                 std::to_string(g.spec().level));
    return *g.center();
}

CutSystem junction_cuts(const SinkedGraph& g, VertexId v0) {
    const Family fam = g.spec().family;
    const int L = g.spec().level;
    const bool supported = (fam == Family::SG || fam == Family::MG) && g.center() &&
                           v0 == *g.center();
    if (!supported)
        throw ConfigurationError(
            "junction cuts support (sg, bottom-center) and (mg, central vertex) only");

    const auto& t = detail::table_for(fam);
    auto ids = detail::enumerate_vertex_ids(t, L);

    // the size-n cells meeting at v0, as depth-(L-n) address words
    auto wings = [&](int depth) {
        std::vector<std::vector<std::uint8_t>> cells;
        if (fam == Family::SG) {
            std::vector<std::uint8_t> a{0}, b{1};
            a.insert(a.end(), static_cast<std::size_t>(depth - 1), 1);
            b.insert(b.end(), static_cast<std::size_t>(depth - 1), 0);
            cells = {a, b};
        } else {
            for (int k = 0; k < 3; ++k) {
                std::vector<std::uint8_t> w{static_cast<std::uint8_t>(3 + k)};
                w.insert(w.end(), static_cast<std::size_t>(depth - 1),
                         static_cast<std::uint8_t>(k));
                cells.push_back(w);
            }
        }
        return cells;
    };
    // v0 is one corner of each wing; the others form the separator
    auto outer_corners = [&](const std::vector<std::uint8_t>& cell) {
        int own = (fam == Family::SG) ? (cell[0] == 0 ? 1 : 0) : (cell[0] - 3);
        std::vector<int> out;
        for (int c = 0; c < t.corners; ++c)
            if (c != own) out.push_back(c);
        return out;
    };

    CutSystem sys;
    sys.v0 = v0;
    for (int n = 1; n < L; ++n) {
        const int depth = L - n;
        std::vector<VertexId> separator;
        bool valid = true;
        for (const auto& cell : wings(depth)) {
            for (int c : outer_corners(cell)) {
                std::uint64_t key = detail::cell_corner_key(t, cell, L, c);
                auto it = ids.find(key);
                if (it == ids.end()) {  // corner glued to the outer boundary
                    valid = false;
                    break;
                }
                separator.push_back(it->second);
            }
            if (!valid) break;
        }
        if (!valid) break;
        std::sort(separator.begin(), separator.end());
        separator.erase(std::unique(separator.begin(), separator.end()), separator.end());

        // interior = component of v0 once the separator is removed
        std::vector<char> blocked(g.vertex_count(), 0), seen(g.vertex_count(), 0);
        for (VertexId b : separator) blocked[b] = 1;
        std::vector<VertexId> interior;
        std::queue<VertexId> q;
        seen[v0] = 1;
        q.push(v0);
        while (!q.empty()) {
            VertexId v = q.front();
            q.pop();
            interior.push_back(v);
            for (VertexId u : g.neighbors(v))
                if (!seen[u] && !blocked[u]) {
                    seen[u] = 1;
                    q.push(u);
                }
        }
        std::sort(interior.begin(), interior.end());
        sys.cuts.push_back({std::move(separator), std::move(interior)});
    }
    if (sys.cuts.empty())
        throw ConfigurationError("graph level too small for any junction cut");
    return sys;
}

algebra::IntegerMatrix reduced_laplacian(const SinkedGraph& g) {
    const std::size_t n = g.vertex_count();
    if (n == 0) throw ConfigurationError("empty graph has no reduced Laplacian");
    algebra::IntegerMatrix m(n);
    for (VertexId v = 0; v < n; ++v) {
        m.at(v, v) = g.degree(v);
        for (VertexId u : g.neighbors(v)) m.at(v, u) -= 1;
    }
    return m;
}

SinkedGraph restrict_with_sinks(const SinkedGraph& g,
                                const std::vector<VertexId>& interior,
                                const std::vector<VertexId>& separator,
                                std::optional<VertexId> center) {
    std::vector<VertexId> ordered(interior);
    std::sort(ordered.begin(), ordered.end());
    std::unordered_map<VertexId, VertexId> index;
    for (std::size_t i = 0; i < ordered.size(); ++i)
        index.emplace(ordered[i], static_cast<VertexId>(i));
    std::unordered_set<VertexId> seps(separator.begin(), separator.end());

    std::vector<std::vector<VertexId>> adj(ordered.size());
    std::vector<std::uint32_t> sink_mult(ordered.size(), 0);
    std::vector<Point> coords(ordered.size());
    for (std::size_t i = 0; i < ordered.size(); ++i) {
        VertexId v = ordered[i];
        sink_mult[i] = g.sink_multiplicity(v);
        coords[i] = g.coord(v);
        for (VertexId u : g.neighbors(v)) {
            if (auto it = index.find(u); it != index.end()) {
                adj[i].push_back(it->second);
            } else if (seps.count(u)) {
                ++sink_mult[i];
            } else {
                throw ConsistencyError("interior vertex adjacent to neither interior nor separator");
            }
        }
    }
    std::vector<CornerMark> marks;
    for (std::size_t i = 0; i < separator.size(); ++i)
        marks.push_back({true, static_cast<int>(i), 0});
    std::optional<VertexId> new_center;
    if (center)
        if (auto it = index.find(*center); it != index.end()) new_center = it->second;
    return SinkedGraph(g.spec(), std::move(adj), std::move(sink_mult), std::move(coords),
                       std::move(marks), new_center);
}

} // namespace fractalpile
