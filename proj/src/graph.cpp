#include "fractalpile/graph.hpp"

#include <algorithm>
#include <cmath>
#include <queue>

namespace fractalpile {

std::string to_string(Family f) {
    switch (f) {
        case Family::SG: return "sg";
        case Family::SGC: return "sgc";
        case Family::HG: return "hg";
        case Family::PG: return "pg";
        case Family::MG: return "mg";
        case Family::TRIANGLE_CHAIN: return "triangle-chain";
    }
    throw ConfigurationError("unknown family");
}

std::string to_string(Boundary b) {
    return b == Boundary::CORNER_SINKS ? "corner-sinks" : "collapsed";
}

Family family_from_string(const std::string& s) {
    if (s == "sg") return Family::SG;
    if (s == "sgc") return Family::SGC;
    if (s == "hg") return Family::HG;
    if (s == "pg") return Family::PG;
    if (s == "mg") return Family::MG;
    if (s == "triangle-chain") return Family::TRIANGLE_CHAIN;
    throw ConfigurationError("unknown family '" + s + "' (expected sg|sgc|hg|pg|mg|triangle-chain)");
}

Boundary boundary_from_string(const std::string& s) {
    if (s == "corner-sinks") return Boundary::CORNER_SINKS;
    if (s == "collapsed") return Boundary::COLLAPSED_SINK;
    throw ConfigurationError("unknown boundary '" + s + "' (expected corner-sinks|collapsed)");
}

double growth_exponent(Family f) {
    switch (f) {
        case Family::SG: return std::log(3.0) / std::log(2.0);
        case Family::SGC: return std::log(3.0) / std::log(2.0);
        case Family::HG: return std::log(6.0) / std::log(3.0);
        case Family::PG: return std::log(5.0) / std::log(1.0 + std::sqrt(3.0));
        case Family::MG: return std::log(6.0) / std::log(2.0);
        default:
            throw ConfigurationError("no growth exponent for family " + to_string(f));
    }
}

double quoted_dimension(Family f) {
    switch (f) {
        case Family::SG:
        case Family::SGC: return std::log(3.0) / std::log(2.0);
        case Family::HG: return std::log(6.0) / std::log(3.0);
        case Family::PG: return std::log(5.0) / std::log((3.0 + std::sqrt(5.0)) / 2.0);
        case Family::MG: return std::log(6.0) / std::log(2.0);
        default:
            throw ConfigurationError("no dimension for family " + to_string(f));
    }
}

SinkedGraph::SinkedGraph(FamilySpec spec,
                         std::vector<std::vector<VertexId>> adjacency,
                         std::vector<std::uint32_t> sink_multiplicity,
                         std::vector<Point> coords,
                         std::vector<CornerMark> corners,
                         std::optional<VertexId> center)
    : spec_(spec),
      sink_multiplicity_(std::move(sink_multiplicity)),
      coords_(std::move(coords)),
      corners_(std::move(corners)),
      center_(center) {
    const std::size_t n = adjacency.size();
    if (sink_multiplicity_.size() != n || coords_.size() != n)
        throw ConfigurationError("graph arrays disagree on the vertex count");
    if (center_ && *center_ >= n)
        throw ConfigurationError("center vertex out of range");

    offsets_.assign(n + 1, 0);
    degree_.assign(n, 0);
    for (std::size_t v = 0; v < n; ++v) {
        std::sort(adjacency[v].begin(), adjacency[v].end());
        offsets_[v + 1] = offsets_[v] + static_cast<std::uint32_t>(adjacency[v].size());
        degree_[v] = static_cast<std::uint32_t>(adjacency[v].size()) + sink_multiplicity_[v];
    }
    neighbors_.reserve(offsets_[n]);
    for (std::size_t v = 0; v < n; ++v)
        neighbors_.insert(neighbors_.end(), adjacency[v].begin(), adjacency[v].end());

    // symmetry / loop validation: the directed edge multiset must equal its
    // transpose
    std::vector<std::pair<VertexId, VertexId>> fwd, rev;
    fwd.reserve(neighbors_.size());
    rev.reserve(neighbors_.size());
    for (VertexId v = 0; v < n; ++v) {
        for (VertexId u : neighbors(v)) {
            if (u == v) throw ConfigurationError("self-loop at vertex " + std::to_string(v));
            if (u >= n) throw ConfigurationError("neighbor id out of range");
            fwd.emplace_back(v, u);
            rev.emplace_back(u, v);
        }
    }
    std::sort(fwd.begin(), fwd.end());
    std::sort(rev.begin(), rev.end());
    if (fwd != rev) throw ConfigurationError("asymmetric adjacency");
    if (n > 0 && !sink_reachable())
        throw ConfigurationError("graph has a vertex with no path to a sink");
}

std::uint64_t SinkedGraph::total_sink_edges() const {
    std::uint64_t s = 0;
    for (auto m : sink_multiplicity_) s += m;
    return s;
}

std::vector<std::pair<VertexId, VertexId>> SinkedGraph::edges() const {
    std::vector<std::pair<VertexId, VertexId>> out;
    out.reserve(neighbors_.size() / 2);
    for (VertexId v = 0; v < vertex_count(); ++v)
        for (VertexId u : neighbors(v))
            if (v <= u) out.emplace_back(v, u);
    std::sort(out.begin(), out.end());
    return out;
}

bool SinkedGraph::sink_reachable() const {
    const std::size_t n = vertex_count();
    std::vector<char> seen(n, 0);
    std::queue<VertexId> q;
    for (VertexId v = 0; v < n; ++v)
        if (sink_multiplicity_[v] > 0) {
            seen[v] = 1;
            q.push(v);
        }
    std::size_t reached = q.size();
    while (!q.empty()) {
        VertexId v = q.front();
        q.pop();
        for (VertexId u : neighbors(v))
            if (!seen[u]) {
                seen[u] = 1;
                ++reached;
                q.push(u);
            }
    }
    return reached == n;
}

bool SinkedGraph::structurally_equal(const SinkedGraph& other) const {
    return offsets_ == other.offsets_ && neighbors_ == other.neighbors_ &&
           sink_multiplicity_ == other.sink_multiplicity_ && corners_ == other.corners_ &&
           center_ == other.center_ && coords_ == other.coords_;
}

} // namespace fractalpile
