// Command line front end: builds graph approximations, stabilizes drops,
// computes identities and group structure, and runs the growth/periodicity
// experiments. All outputs embed the run manifest; files are written via
// temp-and-rename.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "fractalpile/builders.hpp"
#include "fractalpile/experiments.hpp"
#include "fractalpile/graph_ops.hpp"
#include "fractalpile/io.hpp"
#include "fractalpile/recurrence.hpp"
#include "fractalpile/render.hpp"
#include "fractalpile/snf.hpp"

namespace fp = fractalpile;

namespace {

enum ExitCode : int {
    kOk = 0,
    kFailure = 1,
    kUsage = 2,
    kResource = 3,
    kArithmetic = 4,
    kCheckFailed = 5,
};

struct CommonArgs {
    std::string family = "sg";
    int level = 1;
    std::string boundary = "corner-sinks";
    std::uint64_t seed = 0;
    int max_level = 0;
    std::uint64_t max_states = 1'000'000;
    std::uint64_t max_steps = 0;
};

fp::io::RunManifest manifest(const std::string& command, const CommonArgs& a) {
    fp::io::RunManifest m;
    m.command = command;
    m.family = a.family;
    m.level = a.level;
    m.boundary = a.boundary;
    m.seed = a.seed;
    m.max_level = a.max_level;
    m.max_states = a.max_states;
    m.max_steps = a.max_steps;
    return m;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw fp::ConfigurationError("cannot read " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

fp::FamilySpec spec_of(const CommonArgs& a) {
    return {fp::family_from_string(a.family), a.level, fp::boundary_from_string(a.boundary)};
}

fp::VertexId resolve_vertex(const fp::SinkedGraph& g, const std::string& name) {
    if (name == "v0") {
        if (g.spec().family == fp::Family::SG) return fp::bottom_center_vertex(g);
        if (g.center()) return *g.center();
        throw fp::ConfigurationError("graph has no designated v0");
    }
    std::size_t pos = 0;
    unsigned long v = std::stoul(name, &pos);
    if (pos != name.size() || v >= g.vertex_count())
        throw fp::ConfigurationError("unknown vertex '" + name + "'");
    return static_cast<fp::VertexId>(v);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Abelian sandpiles on fractal graph approximations"};
    app.require_subcommand(1);
    CommonArgs args;

    // build ---------------------------------------------------------------
    auto* cmd_build = app.add_subcommand("build", "write a graph approximation as JSON");
    std::string out_path = "graph.json";
    cmd_build->add_option("--family", args.family, "sg|sgc|hg|pg|mg|triangle-chain")->required();
    cmd_build->add_option("--level", args.level, "approximation level (chain length for rings)")
        ->required();
    cmd_build->add_option("--boundary", args.boundary, "corner-sinks|collapsed");
    cmd_build->add_option("--out", out_path, "output path");

    // stabilize -----------------------------------------------------------
    auto* cmd_stab = app.add_subcommand("stabilize", "drop grains on a graph and stabilize");
    std::string graph_path;
    std::vector<std::string> drops;
    std::string render_path;
    int render_width = 1024;
    std::string stab_out = "stabilized.json";
    cmd_stab->add_option("--graph", graph_path, "graph JSON file")->required();
    cmd_stab->add_option("--drop", drops, "VERTEX:COUNT (VERTEX may be v0)")->required();
    cmd_stab->add_option("--out", stab_out, "result JSON path");
    std::string stab_csv;
    cmd_stab->add_option("--csv", stab_csv, "also write the configuration as vertex_id,grains CSV");
    cmd_stab->add_option("--render", render_path, "optional PPM raster path");
    cmd_stab->add_option("--render-width", render_width, "raster width in pixels");
    cmd_stab->add_option("--max-steps", args.max_steps, "toppling event cap (0 = unlimited)");

    // identity ------------------------------------------------------------
    auto* cmd_id = app.add_subcommand("identity", "identity element survey");
    std::vector<int> id_levels;
    std::string id_out = "identity";
    cmd_id->add_option("--family", args.family)->required();
    cmd_id->add_option("--level", id_levels, "levels to survey")->required();
    cmd_id->add_option("--out", id_out, "output stem (.csv/.json)");

    // snf -----------------------------------------------------------------
    auto* cmd_snf = app.add_subcommand("snf", "sandpile group via Smith normal form");
    std::string lap_path;
    std::string snf_out = "group.json";
    cmd_snf->add_option("--family", args.family);
    cmd_snf->add_option("--level", args.level);
    cmd_snf->add_option("--boundary", args.boundary);
    cmd_snf->add_option("--laplacian", lap_path,
                        "JSON matrix (rows of integers); overrides --family/--level");
    cmd_snf->add_option("--out", snf_out, "output path");

    // growth ----------------------------------------------------------------
    auto* cmd_growth = app.add_subcommand("growth", "diameter growth experiment");
    std::string schedule = "doubling";
    std::uint64_t max_n = 131072, min_n = 16;
    std::string growth_out = "growth";
    cmd_growth->add_option("--family", args.family)->required();
    cmd_growth->add_option("--schedule", schedule, "doubling");
    cmd_growth->add_option("--min", min_n, "smallest N");
    cmd_growth->add_option("--max", max_n, "largest N");
    cmd_growth->add_option("--max-level", args.max_level, "auto-grow cap");
    cmd_growth->add_option("--out", growth_out, "output stem (.csv/.json)");

    // period ----------------------------------------------------------------
    auto* cmd_period = app.add_subcommand("period", "periodicity of nested sinked subgraphs");
    int period_max_n = 2;
    std::string period_out = "period";
    cmd_period->add_option("--family", args.family)->required();
    cmd_period->add_option("--max-n", period_max_n, "largest cut index");
    cmd_period->add_option("--max-states", args.max_states, "state table cap");
    cmd_period->add_option("--out", period_out, "output stem (.csv/.json)");

    app.add_option("--seed", args.seed, "seed recorded in outputs and used by random modes");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? kOk : kUsage;
    }

    try {
        if (const char* env = std::getenv("SANDPILE_MAX_LEVEL"); env && args.max_level == 0)
            args.max_level = std::atoi(env);

        if (cmd_build->parsed()) {
            fp::SinkedGraph g = fp::build(spec_of(args));
            fp::io::atomic_write(out_path, fp::io::graph_to_json(g));
        } else if (cmd_stab->parsed()) {
            fp::SinkedGraph g = fp::io::graph_from_json(read_file(graph_path));
            args.family = to_string(g.spec().family);
            args.level = g.spec().level;
            fp::Configuration c = fp::zero_configuration(g);
            for (const auto& d : drops) {
                auto colon = d.rfind(':');
                if (colon == std::string::npos)
                    throw fp::ConfigurationError("--drop expects VERTEX:COUNT");
                fp::VertexId v = resolve_vertex(g, d.substr(0, colon));
                c = fp::drop(g, std::move(c), v, std::stoull(d.substr(colon + 1)));
            }
            fp::StabilizationResult r = fp::stabilize(g, std::move(c), args.max_steps);
            fp::io::atomic_write(stab_out,
                                 fp::io::stabilization_to_json(g, r, manifest("stabilize", args)));
            if (!stab_csv.empty())
                fp::io::atomic_write(stab_csv, fp::io::configuration_to_csv(r.config));
            if (!render_path.empty()) {
                fp::io::RenderOptions opt;
                opt.width = render_width;
                fp::io::atomic_write(render_path, fp::io::render_ppm(g, r.config, opt));
            }
        } else if (cmd_id->parsed()) {
            auto recs = fp::experiments::identity_survey(fp::family_from_string(args.family),
                                                         id_levels);
            args.level = id_levels.back();
            fp::io::atomic_write(id_out + ".csv", fp::io::identity_to_csv(recs));
            fp::io::atomic_write(id_out + ".json",
                                 fp::io::identity_to_json(recs, manifest("identity", args)));
        } else if (cmd_snf->parsed()) {
            fp::algebra::SandpileGroup grp;
            if (!lap_path.empty()) {
                auto j = nlohmann::json::parse(read_file(lap_path));
                fp::algebra::IntegerMatrix m(j.size());
                for (std::size_t i = 0; i < j.size(); ++i)
                    for (std::size_t k = 0; k < j.size(); ++k)
                        m.at(i, k) = fp::algebra::BigInt(j.at(i).at(k).get<long long>());
                grp = fp::algebra::sandpile_group(m);
            } else {
                grp = fp::algebra::sandpile_group(fp::build(spec_of(args)));
            }
            fp::io::atomic_write(snf_out, fp::io::group_to_json(grp, manifest("snf", args)));
        } else if (cmd_growth->parsed()) {
            if (schedule != "doubling")
                throw fp::ConfigurationError("only the doubling schedule is available");
            std::vector<std::uint64_t> ns;
            for (std::uint64_t n = min_n; n <= max_n; n *= 2) ns.push_back(n);
            fp::experiments::GrowthOptions opt;
            opt.max_level = args.max_level;
            auto recs = fp::experiments::growth_run(fp::family_from_string(args.family), ns, opt);
            auto fit = fp::experiments::exponent_fit(recs);
            fp::io::atomic_write(growth_out + ".csv", fp::io::growth_to_csv(recs));
            fp::io::atomic_write(growth_out + ".json",
                                 fp::io::growth_to_json(recs, fit, manifest("growth", args)));
        } else if (cmd_period->parsed()) {
            fp::experiments::PeriodicityOptions opt;
            opt.max_states = args.max_states;
            auto recs = fp::experiments::periodicity_run(fp::family_from_string(args.family),
                                                         period_max_n, opt);
            args.level = period_max_n;
            fp::io::atomic_write(period_out + ".csv", fp::io::periodicity_to_csv(recs));
            fp::io::atomic_write(period_out + ".json",
                                 fp::io::periodicity_to_json(recs, manifest("period", args)));
        }
        return kOk;
    } catch (const fp::ConfigurationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const fp::ResourceLimitError& e) {
        std::cerr << "resource limit: " << e.what() << "\n";
        return kResource;
    } catch (const std::overflow_error& e) {
        std::cerr << "arithmetic: " << e.what() << "\n";
        return kArithmetic;
    } catch (const fp::ConsistencyError& e) {
        std::cerr << "consistency check failed: " << e.what() << "\n";
        return kCheckFailed;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kFailure;
    }
}
