#include "fractalpile/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <map>

#include "fractalpile/builders.hpp"

namespace fractalpile::experiments {

namespace {

int default_initial_level(Family f) {
    switch (f) {
        case Family::SG: return 5;
        case Family::HG: return 3;
        case Family::PG: return 3;
        case Family::MG: return 3;
        default: throw ConfigurationError("growth runs need a designated drop vertex; family " +
                                          to_string(f) + " has none");
    }
}

int default_level_cap(Family f) {
    if (const char* env = std::getenv("SANDPILE_MAX_LEVEL")) {
        int cap = std::atoi(env);
        if (cap > 0) return cap;
    }
    switch (f) {
        case Family::SG: return 13;
        case Family::HG: return 7;
        case Family::PG: return 7;
        case Family::MG: return 8;
        default: return 6;
    }
}

} // namespace

std::vector<std::uint64_t> doubling_schedule(int lo, int hi) {
    if (lo < 0 || hi < lo || hi > 62) throw ConfigurationError("bad doubling schedule range");
    std::vector<std::uint64_t> out;
    for (int e = lo; e <= hi; ++e) out.push_back(std::uint64_t(1) << e);
    return out;
}

std::vector<GrowthRecord> growth_run(Family family,
                                     const std::vector<std::uint64_t>& schedule,
                                     const GrowthOptions& opt) {
    if (schedule.empty()) throw ConfigurationError("empty growth schedule");
    if (!std::is_sorted(schedule.begin(), schedule.end()))
        throw ConfigurationError("growth schedule must be increasing");

    const double d_exp = growth_exponent(family);
    const int cap = opt.max_level > 0 ? opt.max_level : default_level_cap(family);
    int level = opt.initial_level > 0 ? opt.initial_level : default_initial_level(family);
    if (opt.initial_level == 0) {
        // skip straight past levels the upper diameter bound already rules
        // out, so the expensive runs are not repeated by auto-grow
        const double reach = std::pow(static_cast<double>(schedule.back()) / 2.0, 1.0 / d_exp);
        const double per_level = family == Family::SG ? 2.0 : (family == Family::PG ? 1.0 + std::sqrt(3.0) : 3.0);
        while (level < cap && std::pow(per_level, level - 1) < reach + 2) ++level;
    }
    if (level > cap) throw ResourceLimitError("initial level above the level cap " +
                                              std::to_string(cap));

    SinkedGraph g = build({family, level, Boundary::CORNER_SINKS});
    if (!g.center()) throw ConfigurationError("family has no designated drop vertex");
    std::vector<std::uint32_t> dist = distance_map(g, *g.center());

    const std::uint64_t max_n = schedule.back();
    std::vector<GrowthRecord> out;
    // Previous record on the current level, for the doubling shortcut:
    // (2N·delta)° = (s_N + s_N)° with odometer u(2N) = 2 u(N) + u_fix.
    std::uint64_t chain_n = 0;
    StabilizationResult chain;
    for (std::uint64_t n : schedule) {
        for (;;) {
            StabilizationResult r;
            if (chain_n != 0 && n == 2 * chain_n) {
                r = stabilize(g, add(g, chain.config, chain.config), opt.max_steps);
                for (VertexId v = 0; v < g.vertex_count(); ++v)
                    r.odometer.topples[v] += 2 * chain.odometer.topples[v];
                r.absorbed += 2 * chain.absorbed;
                r.steps += 2 * chain.steps;
            } else {
                r = stabilize(g, drop(g, zero_configuration(g), *g.center(), n), opt.max_steps);
            }
            bool touched = false;
            for (VertexId v = 0; v < g.vertex_count() && !touched; ++v)
                if (g.sink_multiplicity(v) > 0 && (r.odometer[v] > 0 || r.config[v] > 0))
                    touched = true;
            if (touched) {
                if (level + 1 > cap)
                    throw ResourceLimitError("auto-grow exceeded the level cap " +
                                             std::to_string(cap));
                ++level;
                g = build({family, level, Boundary::CORNER_SINKS});
                dist = distance_map(g, *g.center());
                chain_n = 0;
                chain = {};
                continue;
            }
            chain_n = n;
            chain = r;

            std::uint32_t radius = 0;
            for (VertexId v = 0; v < g.vertex_count(); ++v)
                if (r.config[v] > 0) radius = std::max(radius, dist[v]);

            if (family == Family::SG && n >= 1) {
                // counting bound: reaching R with N grains forces
                // N <= 1 + 3 |V_R| on the degree-4 graph
                std::uint64_t ball = 0;
                for (VertexId v = 0; v < g.vertex_count(); ++v)
                    if (dist[v] <= radius) ++ball;
                if (n > 1 + 3 * ball)
                    throw ConsistencyError("growth run violated the ball-count bound");
            }

            GrowthRecord rec;
            rec.grains = n;
            rec.radius = radius;
            rec.lower_bound = std::pow(static_cast<double>(n) / 60.0, 1.0 / d_exp);
            rec.upper_bound = std::pow(static_cast<double>(n) / 2.0, 1.0 / d_exp);
            rec.level_used = level;
            rec.touched_boundary = false;
            rec.in_fit_window = 10 * n >= max_n;
            out.push_back(rec);
            break;
        }
    }
    return out;
}

ExponentFit exponent_fit(const std::vector<GrowthRecord>& records) {
    std::map<std::uint64_t, std::uint32_t> window;
    std::uint64_t max_n = 0;
    for (const auto& r : records) max_n = std::max(max_n, r.grains);
    for (const auto& r : records) {
        if (10 * r.grains < max_n || r.radius < 1) continue;
        if (!window.emplace(r.grains, r.radius).second)
            throw ConfigurationError("duplicate N values in the fit window");
    }
    if (window.size() < 2)
        throw ConfigurationError("exponent fit needs at least two distinct N");

    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (const auto& [n, r] : window) {
        double x = std::log(static_cast<double>(n));
        double y = std::log(static_cast<double>(r));
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
    }
    const double m = static_cast<double>(window.size());
    const double denom = m * sxx - sx * sx;
    if (denom == 0) throw ConfigurationError("degenerate exponent fit");
    ExponentFit fit;
    fit.slope = (m * sxy - sx * sy) / denom;
    fit.intercept = (sy - fit.slope * sx) / m;
    fit.points = window.size();
    return fit;
}

} // namespace fractalpile::experiments
