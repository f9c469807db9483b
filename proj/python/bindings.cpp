#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "fractalpile/builders.hpp"
#include "fractalpile/experiments.hpp"
#include "fractalpile/graph_ops.hpp"
#include "fractalpile/io.hpp"
#include "fractalpile/recurrence.hpp"
#include "fractalpile/render.hpp"
#include "fractalpile/snf.hpp"

namespace py = pybind11;
using namespace fractalpile;

namespace {

FamilySpec make_spec(const std::string& family, int level, const std::string& boundary) {
    return {family_from_string(family), level, boundary_from_string(boundary)};
}

Configuration config_from(const SinkedGraph& g, const std::vector<std::uint64_t>& grains) {
    if (grains.size() != g.vertex_count())
        throw ConfigurationError("configuration length does not match the graph");
    return Configuration{grains};
}

py::dict result_dict(const StabilizationResult& r) {
    py::dict d;
    d["config"] = r.config.grains;
    d["odometer"] = r.odometer.topples;
    d["absorbed"] = r.absorbed;
    d["steps"] = r.steps;
    return d;
}

py::dict group_dict(const algebra::SandpileGroup& grp) {
    py::dict d;
    std::vector<std::string> inv;
    for (const auto& f : grp.invariant_factors.nontrivial()) inv.push_back(f.str());
    std::vector<py::tuple> primary;
    for (const auto& f : grp.primary.factors)
        primary.push_back(py::make_tuple(f.prime.str(), f.exponent, f.multiplicity));
    d["invariant_factors"] = inv;
    d["primary"] = primary;
    d["order"] = grp.order.str();
    return d;
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Abelian sandpiles on fractal graph approximations";

    py::register_exception<ConfigurationError>(m, "ConfigurationError", PyExc_ValueError);
    py::register_exception<ResourceLimitError>(m, "ResourceLimitError", PyExc_RuntimeError);
    py::register_exception<ConsistencyError>(m, "ConsistencyError", PyExc_AssertionError);

    py::class_<SinkedGraph>(m, "Graph")
        .def_property_readonly("vertex_count", &SinkedGraph::vertex_count)
        .def_property_readonly("family", [](const SinkedGraph& g) { return to_string(g.spec().family); })
        .def_property_readonly("level", [](const SinkedGraph& g) { return g.spec().level; })
        .def_property_readonly("center",
                               [](const SinkedGraph& g) -> py::object {
                                   if (g.center()) return py::int_(*g.center());
                                   return py::none();
                               })
        .def("degree", &SinkedGraph::degree)
        .def("sink_multiplicity", &SinkedGraph::sink_multiplicity)
        .def("neighbors",
             [](const SinkedGraph& g, VertexId v) {
                 auto s = g.neighbors(v);
                 return std::vector<VertexId>(s.begin(), s.end());
             })
        .def("edges", &SinkedGraph::edges)
        .def("coords",
             [](const SinkedGraph& g) {
                 std::vector<std::pair<double, double>> out;
                 for (VertexId v = 0; v < g.vertex_count(); ++v)
                     out.emplace_back(g.coord(v).x, g.coord(v).y);
                 return out;
             })
        .def("to_json", [](const SinkedGraph& g) { return io::graph_to_json(g); })
        .def_static("from_json", [](const std::string& s) { return io::graph_from_json(s); });

    m.def("build", [](const std::string& family, int level, const std::string& boundary) {
        return build(make_spec(family, level, boundary));
    }, py::arg("family"), py::arg("level"), py::arg("boundary") = "corner-sinks");
    m.def("triangle_chain", &triangle_chain, py::arg("t"));

    m.def("distance_map", &distance_map);
    m.def("bottom_center_vertex", &bottom_center_vertex);

    m.def("stabilize", [](const SinkedGraph& g, const std::vector<std::uint64_t>& grains) {
        return result_dict(stabilize(g, config_from(g, grains)));
    });
    m.def("id_f", [](const SinkedGraph& g) { return id_f(g).grains; });
    m.def("max_stable", [](const SinkedGraph& g) { return max_stable(g).grains; });
    m.def("oplus", [](const SinkedGraph& g, const std::vector<std::uint64_t>& a,
                      const std::vector<std::uint64_t>& b) {
        return oplus(g, config_from(g, a), config_from(g, b)).grains;
    });
    m.def("is_recurrent", [](const SinkedGraph& g, const std::vector<std::uint64_t>& c) {
        auto w = is_recurrent(g, config_from(g, c));
        return py::make_tuple(w.recurrent, w.odometer.topples);
    });
    m.def("identity", [](const SinkedGraph& g) {
        auto r = identity(g);
        return py::make_tuple(r.identity.grains, r.k_min);
    });
    m.def("random_recurrent", [](const SinkedGraph& g, std::uint64_t seed) {
        return random_recurrent(g, seed).grains;
    }, py::arg("graph"), py::arg("seed") = 0);

    m.def("sandpile_group", [](const SinkedGraph& g) { return group_dict(algebra::sandpile_group(g)); });
    m.def("group_order",
          [](const SinkedGraph& g) { return algebra::group_order(g).str(); });
    m.def("conjectured_order_sg",
          [](int n) { return algebra::conjectured_order_sg(n).str(); });
    m.def("reduced_laplacian", [](const SinkedGraph& g) {
        auto mat = reduced_laplacian(g);
        std::vector<std::vector<long long>> rows(mat.size(), std::vector<long long>(mat.size()));
        for (std::size_t i = 0; i < mat.size(); ++i)
            for (std::size_t j = 0; j < mat.size(); ++j)
                rows[i][j] = static_cast<long long>(mat.at(i, j));
        return rows;
    });
    m.def("restrict_with_sinks",
          [](const SinkedGraph& g, const std::vector<VertexId>& interior,
             const std::vector<VertexId>& separator) {
              return restrict_with_sinks(g, interior, separator);
          });

    m.def("growth_run", [](const std::string& family, const std::vector<std::uint64_t>& schedule) {
        auto recs = experiments::growth_run(family_from_string(family), schedule, {});
        std::vector<py::dict> out;
        for (const auto& r : recs) {
            py::dict d;
            d["N"] = r.grains;
            d["R"] = r.radius;
            d["lower"] = r.lower_bound;
            d["upper"] = r.upper_bound;
            d["level"] = r.level_used;
            out.push_back(d);
        }
        return out;
    });
    m.def("periodicity_run", [](const std::string& family, int max_n) {
        auto recs = experiments::periodicity_run(family_from_string(family), max_n, {});
        std::vector<py::dict> out;
        for (const auto& r : recs) {
            py::dict d;
            d["n"] = r.n;
            d["preperiod"] = r.preperiod;
            d["period"] = r.period;
            d["conjectured"] = r.conjectured;
            d["match"] = r.matches_conjecture;
            out.push_back(d);
        }
        return out;
    });
    m.def("identity_survey", [](const std::string& family, const std::vector<int>& levels) {
        auto recs = experiments::identity_survey(family_from_string(family), levels);
        std::vector<py::dict> out;
        for (const auto& r : recs) {
            py::dict d;
            d["level"] = r.level;
            d["k"] = r.k_min;
            d["conjectured_k"] = r.conjectured_k;
            d["match"] = r.matches_conjecture;
            out.push_back(d);
        }
        return out;
    });

    m.def("render_ppm", [](const SinkedGraph& g, const std::vector<std::uint64_t>& grains,
                           int width) {
        io::RenderOptions opt;
        opt.width = width;
        return py::bytes(io::render_ppm(g, config_from(g, grains), opt));
    }, py::arg("graph"), py::arg("grains"), py::arg("width") = 1024);
}
