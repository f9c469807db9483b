#include "fractalpile/experiments.hpp"

#include <set>
#include <sstream>
#include <unordered_map>

#include "fractalpile/builders.hpp"

namespace fractalpile::experiments {

namespace {

struct ConfigHash {
    std::size_t operator()(const std::vector<std::uint64_t>& v) const {
        std::uint64_t h = 0x9e3779b97f4a7c15ULL;
        for (std::uint64_t x : v) {
            h ^= x + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
            h *= 0xff51afd7ed558ccdULL;
        }
        return static_cast<std::size_t>(h);
    }
};

std::string digest128(const std::vector<std::uint64_t>& v) {
    std::uint64_t a = 0x243f6a8885a308d3ULL, b = 0x13198a2e03707344ULL;
    for (std::uint64_t x : v) {
        a = (a ^ x) * 0x100000001b3ULL;
        b = (b + x) * 0xc2b2ae3d27d4eb4fULL;
        b ^= b >> 29;
    }
    std::ostringstream os;
    os << std::hex;
    os.width(16);
    os.fill('0');
    os << a;
    os.width(16);
    os << b;
    return os.str();
}

struct CycleData {
    std::uint64_t preperiod = 0;
    std::uint64_t period = 0;
    std::set<std::vector<std::uint64_t>> cycle;          // the configurations of C_n
    std::vector<std::vector<std::uint64_t>> cycle_list;  // in iteration order
};

CycleData detect_cycle(const SinkedGraph& s, const Configuration& eta, std::uint64_t max_states) {
    std::unordered_map<std::vector<std::uint64_t>, std::uint64_t, ConfigHash> seen;
    std::vector<std::vector<std::uint64_t>> history;
    Configuration c = zero_configuration(s);
    for (std::uint64_t k = 0;; ++k) {
        auto [it, fresh] = seen.try_emplace(c.grains, k);
        if (!fresh) {
            CycleData out;
            out.preperiod = it->second;
            out.period = k - it->second;
            for (std::uint64_t i = out.preperiod; i < k; ++i) {
                out.cycle.insert(history[i]);
                out.cycle_list.push_back(history[i]);
            }
            return out;
        }
        history.push_back(c.grains);
        if (seen.size() > max_states)
            throw ResourceLimitError("periodicity state table exceeded " +
                                     std::to_string(max_states) + " states (period bound)");
        c = oplus(s, c, eta);
    }
}

} // namespace

std::uint64_t conjectured_period(Family family, int n) {
    std::uint64_t p = 1;
    auto pow = [&](std::uint64_t base) {
        for (int i = 0; i < n; ++i) p *= base;
        return p;
    };
    switch (family) {
        case Family::SG: return 4 * pow(3);
        case Family::HG: return 2 * pow(3);
        case Family::PG: return 6 * pow(5);
        case Family::MG: return 6 * pow(7);
        case Family::SGC: return 6 * pow(7);
        default: return 0;
    }
}

std::vector<PeriodicityRecord> periodicity_run(Family family, int max_n,
                                               const PeriodicityOptions& opt) {
    if (max_n < 1) throw ConfigurationError("periodicity run needs max_n >= 1");
    // the cuts need size-n wings whose corners stay interior
    const int level = family == Family::SG ? max_n + 2 : max_n + 1;
    SinkedGraph g = build({family, level, Boundary::CORNER_SINKS});
    if (!g.center()) throw ConfigurationError("no center vertex for periodicity");
    const VertexId v0 = *g.center();
    CutSystem cuts = junction_cuts(g, v0);
    if (static_cast<int>(cuts.cuts.size()) < max_n)
        throw ConfigurationError("graph level does not provide the requested cuts");

    Configuration eta_g = zero_configuration(g);
    if (opt.eta) {
        if (opt.eta->size() != g.vertex_count())
            throw ConfigurationError("eta must live on the ambient graph");
        eta_g = *opt.eta;
    } else {
        eta_g[v0] = 1;
    }
    // eta must be supported on every interior (i.e. on F_1)
    {
        std::set<VertexId> f1(cuts.cuts[0].interior.begin(), cuts.cuts[0].interior.end());
        for (VertexId v = 0; v < g.vertex_count(); ++v)
            if (eta_g[v] > 0 && !f1.count(v))
                throw ConfigurationError("eta must be supported on the innermost cut");
    }

    std::vector<PeriodicityRecord> out;
    std::vector<CycleData> data;
    std::vector<std::vector<VertexId>> interiors;
    for (int n = 1; n <= max_n; ++n) {
        const auto& cut = cuts.cuts[n - 1];
        SinkedGraph s = restrict_with_sinks(g, cut.interior, cut.separator, v0);
        Configuration eta_s{std::vector<std::uint64_t>()};
        eta_s.grains.reserve(cut.interior.size());
        for (VertexId v : cut.interior) eta_s.grains.push_back(eta_g[v]);

        CycleData cd = detect_cycle(s, eta_s, opt.max_states);
        PeriodicityRecord rec;
        rec.n = n;
        rec.preperiod = cd.preperiod;
        rec.period = cd.period;
        rec.conjectured = conjectured_period(family, n);
        rec.matches_conjecture = rec.conjectured != 0 && rec.period == rec.conjectured;
        for (const auto& cfg : cd.cycle_list) rec.cycle_hashes.push_back(digest128(cfg));
        out.push_back(std::move(rec));
        data.push_back(std::move(cd));
        interiors.push_back(cut.interior);
    }

    // division law on the cycle lengths
    for (int n = 0; n < max_n; ++n)
        for (int m = n + 1; m < max_n; ++m)
            if (data[m].period % data[n].period != 0)
                throw ConsistencyError("cycle length of S_" + std::to_string(n + 1) +
                                       " does not divide that of S_" + std::to_string(m + 1));

    // restriction law: the cycle set of S_m restricted to F_n equals the
    // cycle set of S_n
    for (int n = 0; n < max_n; ++n) {
        for (int m = n + 1; m < max_n; ++m) {
            std::vector<std::size_t> pos;  // positions of F_n inside F_m
            {
                std::size_t j = 0;
                for (VertexId v : interiors[n]) {
                    while (j < interiors[m].size() && interiors[m][j] < v) ++j;
                    if (j == interiors[m].size() || interiors[m][j] != v)
                        throw ConsistencyError("cut interiors are not nested");
                    pos.push_back(j);
                }
            }
            std::set<std::vector<std::uint64_t>> restricted;
            for (const auto& cfg : data[m].cycle) {
                std::vector<std::uint64_t> r;
                r.reserve(pos.size());
                for (std::size_t p : pos) r.push_back(cfg[p]);
                restricted.insert(std::move(r));
            }
            if (restricted != data[n].cycle)
                throw ConsistencyError("restriction of the S_" + std::to_string(m + 1) +
                                       " cycle does not reproduce the S_" + std::to_string(n + 1) +
                                       " cycle");
        }
    }
    return out;
}

} // namespace fractalpile::experiments
