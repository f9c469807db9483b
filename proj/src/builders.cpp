#include "fractalpile/builders.hpp"

#include "family_tables.hpp"

namespace fractalpile {

namespace detail {

void FamilyTable::finish() {
    for (auto& row : junction_of) row.fill(-1);
    for (std::size_t j = 0; j < junctions.size(); ++j)
        for (auto [a, c] : junctions[j]) junction_of[a][c] = static_cast<int>(j);
}

namespace {

Point scaled(Point p, double s) { return {p.x * s, p.y * s}; }

FamilyTable sg_table() {
    FamilyTable t;
    t.maps = 3;
    t.corners = 3;
    t.fixed = {0, 1, 2, -1, -1, -1};
    t.junctions = {{{0, 1}, {1, 0}}, {{0, 2}, {2, 0}}, {{1, 2}, {2, 1}}};
    t.base_edges = {{0, 1}, {0, 2}, {1, 2}};
    t.corner_pt = {Point{0.0, 0.0}, Point{1.0, 0.0}, Point{0.5, std::sqrt(3.0) / 2.0}};
    t.scale = 0.5;
    for (int a = 0; a < 3; ++a) t.offset[a] = scaled(t.corner_pt[a], 0.5);
    t.finish();
    return t;
}

// k-gon with one contraction per corner; cell i meets cell i+1 at corner
// i+2 of cell i, which is corner i+k-1 of cell i+1.
FamilyTable polygasket_table(int k, double ratio) {
    FamilyTable t;
    t.maps = k;
    t.corners = k;
    t.fixed.fill(-1);
    for (int a = 0; a < k; ++a) t.fixed[a] = a;
    for (int i = 0; i < k; ++i)
        t.junctions.push_back({{i, (i + 2) % k}, {(i + 1) % k, (i + k - 1) % k}});
    for (int i = 0; i < k; ++i) t.base_edges.emplace_back(i, (i + 1) % k);
    const double cx = 0.5, cy = 0.5, r = 0.5;
    for (int i = 0; i < k; ++i) {
        double ang = std::numbers::pi / 2 + 2.0 * std::numbers::pi * i / k;
        t.corner_pt[i] = {cx + r * std::cos(ang), cy + r * std::sin(ang)};
    }
    t.scale = ratio;
    for (int a = 0; a < k; ++a) t.offset[a] = scaled(t.corner_pt[a], 1.0 - ratio);
    t.finish();
    return t;
}

FamilyTable hg_table() { return polygasket_table(6, 1.0 / 3.0); }
FamilyTable pg_table() { return polygasket_table(5, (3.0 - std::sqrt(5.0)) / 2.0); }

// Triangle with six ratio-1/3 cells: three corner cells and three mid-edge
// cells. The removed downward triangles of a subdivision meet at its
// centroid, so the mid-edge cells share a three-way junction there.
FamilyTable mg_table() {
    FamilyTable t;
    t.maps = 6;
    t.corners = 3;
    t.fixed = {0, 1, 2, -1, -1, -1};  // cell 3+k = mid cell of the edge opposite corner k
    t.junctions = {
        {{0, 1}, {5, 0}}, {{0, 2}, {4, 0}}, {{1, 0}, {5, 1}},
        {{1, 2}, {3, 1}}, {{2, 0}, {4, 2}}, {{2, 1}, {3, 2}},
        {{3, 0}, {4, 1}, {5, 2}},  // centroid
    };
    t.base_edges = {{0, 1}, {0, 2}, {1, 2}};
    t.corner_pt = {Point{0.0, 0.0}, Point{1.0, 0.0}, Point{0.5, std::sqrt(3.0) / 2.0}};
    t.scale = 1.0 / 3.0;
    for (int a = 0; a < 3; ++a) t.offset[a] = scaled(t.corner_pt[a], 2.0 / 3.0);
    for (int k = 0; k < 3; ++k) {
        int i = (k == 0) ? 1 : 0;
        int j = (k == 2) ? 1 : 2;
        t.offset[3 + k] = {(t.corner_pt[i].x + t.corner_pt[j].x) / 3.0,
                           (t.corner_pt[i].y + t.corner_pt[j].y) / 3.0};
    }
    t.finish();
    return t;
}

} // namespace

const FamilyTable& table_for(Family f) {
    static const FamilyTable sg = sg_table();
    static const FamilyTable hg = hg_table();
    static const FamilyTable pg = pg_table();
    static const FamilyTable mg = mg_table();
    switch (f) {
        case Family::SG:
        case Family::SGC: return sg;
        case Family::HG: return hg;
        case Family::PG: return pg;
        case Family::MG: return mg;
        default: throw ConfigurationError("no IFS table for family " + to_string(f));
    }
}

std::uint64_t pack_key(std::uint64_t kind, std::uint64_t extra,
                       const std::uint8_t* word, int len) {
    std::uint64_t k = (kind << 62) | (extra << 56) | (static_cast<std::uint64_t>(len) << 51);
    for (int i = 0; i < len; ++i) k |= static_cast<std::uint64_t>(word[i]) << (48 - 3 * i);
    return k;
}

std::uint64_t canonical_slot(const FamilyTable& t, const std::uint8_t* word, int n, int corner) {
    int i = n - 1;
    while (i >= 0 && t.fixed[word[i]] == corner) --i;
    if (i < 0) return pack_key(kOuter, static_cast<std::uint64_t>(corner), word, 0);
    int cell = word[i];
    int j = t.junction_of[cell][corner];
    if (j >= 0) return pack_key(kJunction, static_cast<std::uint64_t>(j), word, i);
    return pack_key(kFree, static_cast<std::uint64_t>(corner), word, i + 1);
}

namespace {

struct KeyParts {
    std::uint64_t kind;
    int extra;
    int len;
    std::array<std::uint8_t, 20> word;
};

KeyParts unpack_key(std::uint64_t k) {
    KeyParts p{};
    p.kind = k >> 62;
    p.extra = static_cast<int>((k >> 56) & 0x3f);
    p.len = static_cast<int>((k >> 51) & 0x1f);
    for (int i = 0; i < p.len; ++i)
        p.word[i] = static_cast<std::uint8_t>((k >> (48 - 3 * i)) & 0x7);
    return p;
}

} // namespace

Point apply_word(const FamilyTable& t, const std::uint8_t* word, int len, Point p) {
    for (int i = len - 1; i >= 0; --i)
        p = {t.offset[word[i]].x + t.scale * p.x, t.offset[word[i]].y + t.scale * p.y};
    return p;
}

Point key_coord(const FamilyTable& t, std::uint64_t key) {
    KeyParts p = unpack_key(key);
    if (p.kind == kOuter) return t.corner_pt[p.extra];
    if (p.kind == kJunction) {
        auto [cell, corner] = t.junctions[p.extra].front();
        Point q = {t.offset[cell].x + t.scale * t.corner_pt[corner].x,
                   t.offset[cell].y + t.scale * t.corner_pt[corner].y};
        return apply_word(t, p.word.data(), p.len, q);
    }
    return apply_word(t, p.word.data(), p.len, t.corner_pt[p.extra]);
}

std::uint64_t cell_corner_key(const FamilyTable& t, const std::vector<std::uint8_t>& cell,
                              int n, int corner) {
    std::vector<std::uint8_t> word(cell);
    int child = -1;
    for (int a = 0; a < t.maps; ++a)
        if (t.fixed[a] == corner) child = a;
    if (child < 0) throw ConfigurationError("corner is not fixed by any map");
    word.insert(word.end(), static_cast<std::size_t>(n) - cell.size(),
                static_cast<std::uint8_t>(child));
    return canonical_slot(t, word.data(), n, corner);
}

std::unordered_map<std::uint64_t, VertexId> enumerate_vertex_ids(const FamilyTable& t, int n) {
    std::unordered_map<std::uint64_t, VertexId> ids;
    std::size_t cell_count = 1;
    for (int i = 0; i < n; ++i) cell_count *= static_cast<std::size_t>(t.maps);
    std::vector<std::uint8_t> word(static_cast<std::size_t>(std::max(n, 1)), 0);
    VertexId next = 0;
    for (std::size_t ci = 0; ci < cell_count; ++ci) {
        for (int c = 0; c < t.corners; ++c) {
            std::uint64_t key = canonical_slot(t, word.data(), n, c);
            if ((key >> 62) == kOuter) continue;
            if (ids.try_emplace(key, next).second) ++next;
        }
        for (int i = n - 1; i >= 0; --i) {
            if (++word[i] < t.maps) break;
            word[i] = 0;
        }
    }
    return ids;
}

} // namespace detail

namespace {

using detail::FamilyTable;

void check_level(int level) {
    if (level < 0) throw ConfigurationError("level must be nonnegative");
    if (level > kMaxBuildLevel)
        throw ResourceLimitError("level " + std::to_string(level) +
                                 " exceeds the builder cap " + std::to_string(kMaxBuildLevel));
}

std::vector<CornerMark> sink_corner_marks(int count, Boundary b) {
    std::vector<CornerMark> marks;
    if (b == Boundary::COLLAPSED_SINK) {
        marks.push_back({true, 0, 0});
    } else {
        for (int c = 0; c < count; ++c) marks.push_back({true, c, 0});
    }
    return marks;
}

SinkedGraph build_ifs(const FamilySpec& spec) {
    const FamilyTable& t = detail::table_for(spec.family);
    const int n = spec.level;
    check_level(n);

    std::unordered_map<std::uint64_t, VertexId> ids;  // temp: sinks included
    std::vector<std::uint64_t> keys;
    std::size_t cell_count = 1;
    for (int i = 0; i < n; ++i) cell_count *= static_cast<std::size_t>(t.maps);
    ids.reserve(cell_count * t.corners / 2 + 8);

    auto intern = [&](std::uint64_t key) -> VertexId {
        auto [it, fresh] = ids.try_emplace(key, static_cast<VertexId>(keys.size()));
        if (fresh) keys.push_back(key);
        return it->second;
    };

    std::vector<std::pair<VertexId, VertexId>> raw_edges;
    raw_edges.reserve(cell_count * t.base_edges.size());
    std::vector<std::uint8_t> word(static_cast<std::size_t>(std::max(n, 1)), 0);
    std::array<VertexId, 6> slot{};
    for (std::size_t ci = 0; ci < cell_count; ++ci) {
        for (int c = 0; c < t.corners; ++c)
            slot[c] = intern(detail::canonical_slot(t, word.data(), n, c));
        for (auto [a, b] : t.base_edges) raw_edges.emplace_back(slot[a], slot[b]);
        for (int i = n - 1; i >= 0; --i) {
            if (++word[i] < t.maps) break;
            word[i] = 0;
        }
    }

    // Outer corners become sinks; remaining vertices keep first-occurrence order.
    std::vector<VertexId> compact(keys.size(), UINT32_MAX);
    VertexId next = 0;
    for (std::size_t i = 0; i < keys.size(); ++i)
        if ((keys[i] >> 62) != detail::kOuter) compact[i] = next++;

    std::vector<std::vector<VertexId>> adj(next);
    std::vector<std::uint32_t> sink_mult(next, 0);
    for (auto [u, v] : raw_edges) {
        VertexId cu = compact[u], cv = compact[v];
        if (cu == UINT32_MAX && cv == UINT32_MAX) continue;  // level-0 shell edge
        if (cu == UINT32_MAX) {
            ++sink_mult[cv];
        } else if (cv == UINT32_MAX) {
            ++sink_mult[cu];
        } else {
            adj[cu].push_back(cv);
            adj[cv].push_back(cu);
        }
    }

    std::vector<Point> coords(next);
    for (std::size_t i = 0; i < keys.size(); ++i)
        if (compact[i] != UINT32_MAX) coords[compact[i]] = detail::key_coord(t, keys[i]);

    // Designated drop vertex: SG the bottom-edge midpoint, MG the centroid,
    // HG/PG the junction between cells 0 and 1.
    std::optional<VertexId> center;
    if (n >= 1) {
        std::uint64_t key =
            detail::pack_key(detail::kJunction, spec.family == Family::MG ? 6 : 0, nullptr, 0);
        auto it = ids.find(key);
        if (it != ids.end() && compact[it->second] != UINT32_MAX)
            center = compact[it->second];
    }

    return SinkedGraph(spec, std::move(adj), std::move(sink_mult), std::move(coords),
                       sink_corner_marks(t.corners, spec.boundary), center);
}

SinkedGraph build_sgc(const FamilySpec& spec) {
    const int n = spec.level;
    check_level(n);
    const FamilyTable& t = detail::table_for(Family::SG);

    std::size_t cells = 1;
    for (int i = 0; i < n; ++i) cells *= 3;

    auto rank = [&](const std::vector<std::uint8_t>& w) {
        std::size_t r = 0;
        for (auto d : w) r = r * 3 + d;
        return static_cast<VertexId>(r);
    };

    // cells u.a.b^m and u.b.a^m share a point of the subdivision of cell u
    std::vector<std::vector<VertexId>> adj(cells);
    for (int lu = 0; lu <= n - 1; ++lu) {
        std::vector<std::uint8_t> prefix(static_cast<std::size_t>(lu), 0);
        std::size_t count = 1;
        for (int i = 0; i < lu; ++i) count *= 3;
        for (std::size_t pi = 0; pi < count; ++pi) {
            for (int a = 0; a < 3; ++a) {
                for (int b = a + 1; b < 3; ++b) {
                    std::vector<std::uint8_t> w1(prefix), w2(prefix);
                    w1.push_back(static_cast<std::uint8_t>(a));
                    w2.push_back(static_cast<std::uint8_t>(b));
                    w1.insert(w1.end(), static_cast<std::size_t>(n - lu - 1),
                              static_cast<std::uint8_t>(b));
                    w2.insert(w2.end(), static_cast<std::size_t>(n - lu - 1),
                              static_cast<std::uint8_t>(a));
                    VertexId c1 = rank(w1), c2 = rank(w2);
                    adj[c1].push_back(c2);
                    adj[c2].push_back(c1);
                }
            }
            for (int i = lu - 1; i >= 0; --i) {
                if (++prefix[i] < 3) break;
                prefix[i] = 0;
            }
        }
    }

    std::vector<std::uint32_t> sink_mult(cells, 0);
    if (n == 0) {
        sink_mult[0] = 3;
    } else {
        for (int a = 0; a < 3; ++a) {
            std::vector<std::uint8_t> w(static_cast<std::size_t>(n),
                                        static_cast<std::uint8_t>(a));
            sink_mult[rank(w)] += 1;
        }
    }

    const Point base_centroid = {(t.corner_pt[0].x + t.corner_pt[1].x + t.corner_pt[2].x) / 3.0,
                                 (t.corner_pt[0].y + t.corner_pt[1].y + t.corner_pt[2].y) / 3.0};
    std::vector<Point> coords(cells);
    std::vector<std::uint8_t> w(static_cast<std::size_t>(n), 0);
    for (std::size_t ci = 0; ci < cells; ++ci) {
        coords[ci] = detail::apply_word(t, w.data(), n, base_centroid);
        for (int i = n - 1; i >= 0; --i) {
            if (++w[i] < 3) break;
            w[i] = 0;
        }
    }

    return SinkedGraph(spec, std::move(adj), std::move(sink_mult), std::move(coords),
                       sink_corner_marks(3, spec.boundary), std::nullopt);
}

} // namespace

SinkedGraph triangle_chain(int t) {
    if (t < 1) throw ConfigurationError("triangle_chain requires t >= 1");
    // unit i: vertices 3i (left inner), 3i+1 (outer, one sink edge),
    // 3i+2 (right inner); the right inner bridges to the next unit's left
    // inner, cyclically. t = 1 closes the ring with a doubled inner edge.
    std::size_t nv = static_cast<std::size_t>(3 * t);
    std::vector<std::vector<VertexId>> adj(nv);
    std::vector<std::uint32_t> sink_mult(nv, 0);
    std::vector<Point> coords(nv);
    auto link = [&](VertexId a, VertexId b) {
        adj[a].push_back(b);
        adj[b].push_back(a);
    };
    for (int i = 0; i < t; ++i) {
        VertexId l = static_cast<VertexId>(3 * i);
        VertexId o = l + 1, r = l + 2;
        link(l, o);
        link(o, r);
        link(l, r);
        link(r, static_cast<VertexId>((3 * (i + 1)) % (3 * t)));
        sink_mult[o] = 1;
        coords[l] = {static_cast<double>(i) + 0.15, 0.0};
        coords[o] = {static_cast<double>(i) + 0.5, 0.75};
        coords[r] = {static_cast<double>(i) + 0.85, 0.0};
    }
    std::vector<CornerMark> marks;
    for (int i = 0; i < t; ++i) marks.push_back({true, i, 0});
    return SinkedGraph({Family::TRIANGLE_CHAIN, t, Boundary::CORNER_SINKS}, std::move(adj),
                       std::move(sink_mult), std::move(coords), std::move(marks), std::nullopt);
}

SinkedGraph build(const FamilySpec& spec) {
    switch (spec.family) {
        case Family::SG:
        case Family::HG:
        case Family::PG:
        case Family::MG: return build_ifs(spec);
        case Family::SGC: return build_sgc(spec);
        case Family::TRIANGLE_CHAIN: return triangle_chain(spec.level);
    }
    throw ConfigurationError("unsupported family");
}

} // namespace fractalpile
