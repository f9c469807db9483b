#include "fractalpile/io.hpp"

#include <json.hpp>

namespace fractalpile::io {

using json = nlohmann::ordered_json;

namespace {

json manifest_json(const RunManifest& m) {
    json j;
    j["command"] = m.command;
    j["family"] = m.family;
    j["level"] = m.level;
    j["boundary"] = m.boundary;
    j["seed"] = m.seed;
    j["caps"] = {{"max_level", m.max_level},
                 {"max_states", m.max_states},
                 {"max_steps", m.max_steps}};
    return j;
}

json grains_json(const std::vector<std::uint64_t>& v) {
    json j = json::array();
    for (auto x : v) j.push_back(x);
    return j;
}

} // namespace

std::string graph_to_json(const SinkedGraph& g) {
    json j;
    j["family"] = to_string(g.spec().family);
    j["level"] = g.spec().level;
    j["boundary"] = to_string(g.spec().boundary);
    json verts = json::array();
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        verts.push_back({{"id", v},
                         {"degree", g.degree(v)},
                         {"sink_multiplicity", g.sink_multiplicity(v)},
                         {"coords", {g.coord(v).x, g.coord(v).y}}});
    }
    j["vertices"] = std::move(verts);
    json edges = json::array();
    for (auto [u, v] : g.edges()) edges.push_back({u, v});
    j["edges"] = std::move(edges);
    json corners = json::array();
    for (const auto& c : g.corners()) {
        if (c.is_sink)
            corners.push_back({{"kind", "sink"}, {"label", c.label}});
        else
            corners.push_back({{"kind", "vertex"}, {"id", c.vertex}});
    }
    j["corners"] = std::move(corners);
    if (g.center())
        j["center"] = *g.center();
    else
        j["center"] = nullptr;
    return j.dump(2) + "\n";
}

SinkedGraph graph_from_json(const std::string& text) {
    json j = json::parse(text);
    FamilySpec spec;
    spec.family = family_from_string(j.at("family").get<std::string>());
    spec.level = j.at("level").get<int>();
    spec.boundary = boundary_from_string(j.at("boundary").get<std::string>());

    const auto& verts = j.at("vertices");
    const std::size_t n = verts.size();
    std::vector<std::vector<VertexId>> adj(n);
    std::vector<std::uint32_t> sink_mult(n);
    std::vector<std::uint32_t> degree(n);
    std::vector<Point> coords(n);
    for (const auto& v : verts) {
        VertexId id = v.at("id").get<VertexId>();
        if (id >= n) throw ConfigurationError("vertex id out of range in graph file");
        sink_mult[id] = v.at("sink_multiplicity").get<std::uint32_t>();
        degree[id] = v.at("degree").get<std::uint32_t>();
        coords[id] = {v.at("coords").at(0).get<double>(), v.at("coords").at(1).get<double>()};
    }
    for (const auto& e : j.at("edges")) {
        VertexId u = e.at(0).get<VertexId>(), v = e.at(1).get<VertexId>();
        if (u >= n || v >= n) throw ConfigurationError("edge endpoint out of range");
        adj[u].push_back(v);
        adj[v].push_back(u);
    }
    std::vector<CornerMark> corners;
    for (const auto& c : j.at("corners")) {
        if (c.at("kind").get<std::string>() == "sink")
            corners.push_back({true, c.at("label").get<int>(), 0});
        else
            corners.push_back({false, 0, c.at("id").get<VertexId>()});
    }
    std::optional<VertexId> center;
    if (!j.at("center").is_null()) center = j.at("center").get<VertexId>();

    SinkedGraph g(spec, std::move(adj), std::move(sink_mult), std::move(coords),
                  std::move(corners), center);
    for (VertexId v = 0; v < g.vertex_count(); ++v)
        if (g.degree(v) != degree[v])
            throw ConfigurationError("stored degree disagrees with adjacency at vertex " +
                                     std::to_string(v));
    return g;
}

std::string configuration_to_json(const Configuration& c) {
    return grains_json(c.grains).dump() + "\n";
}

Configuration configuration_from_json(const std::string& text) {
    json j = json::parse(text);
    Configuration c;
    for (const auto& x : j) c.grains.push_back(x.get<std::uint64_t>());
    return c;
}

std::string stabilization_to_json(const SinkedGraph&, const StabilizationResult& r,
                                  const RunManifest& m) {
    json j;
    j["manifest"] = manifest_json(m);
    j["config"] = grains_json(r.config.grains);
    j["odometer"] = grains_json(r.odometer.topples);
    j["absorbed"] = r.absorbed;
    j["steps"] = r.steps;
    return j.dump(2) + "\n";
}

std::string group_to_json(const algebra::SandpileGroup& grp, const RunManifest& m) {
    json j;
    j["manifest"] = manifest_json(m);
    json inv = json::array();
    for (const auto& d : grp.invariant_factors.nontrivial()) inv.push_back(d.str());
    j["invariant_factors"] = std::move(inv);
    json primary = json::array();
    for (const auto& f : grp.primary.factors)
        primary.push_back({f.prime.str(), f.exponent, f.multiplicity});
    j["primary"] = std::move(primary);
    j["order"] = grp.order.str();
    return j.dump(2) + "\n";
}

std::string growth_to_json(const std::vector<experiments::GrowthRecord>& records,
                           const experiments::ExponentFit& fit, const RunManifest& m) {
    json j;
    j["manifest"] = manifest_json(m);
    json rows = json::array();
    for (const auto& r : records) {
        rows.push_back({{"N", r.grains},
                        {"R", r.radius},
                        {"lower", r.lower_bound},
                        {"upper", r.upper_bound},
                        {"level", r.level_used},
                        {"fit_window", r.in_fit_window}});
    }
    j["records"] = std::move(rows);
    j["fit"] = {{"slope", fit.slope}, {"intercept", fit.intercept}, {"points", fit.points}};
    return j.dump(2) + "\n";
}

std::string periodicity_to_json(const std::vector<experiments::PeriodicityRecord>& records,
                                const RunManifest& m) {
    json j;
    j["manifest"] = manifest_json(m);
    json rows = json::array();
    for (const auto& r : records) {
        rows.push_back({{"n", r.n},
                        {"preperiod", r.preperiod},
                        {"period", r.period},
                        {"conjectured", r.conjectured},
                        {"match", r.matches_conjecture},
                        {"cycle_hashes", r.cycle_hashes}});
    }
    j["records"] = std::move(rows);
    return j.dump(2) + "\n";
}

std::string identity_to_json(const std::vector<experiments::IdentityRecord>& records,
                             const RunManifest& m) {
    json j;
    j["manifest"] = manifest_json(m);
    json rows = json::array();
    for (const auto& r : records) {
        rows.push_back({{"level", r.level},
                        {"k", r.k_min},
                        {"conjectured_k", r.conjectured_k},
                        {"match", r.matches_conjecture}});
    }
    j["records"] = std::move(rows);
    return j.dump(2) + "\n";
}

} // namespace fractalpile::io
