#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <memory>
#include <vector>

#include "uniformize/boundary.hpp"
#include "uniformize/cli.hpp"
#include "uniformize/deformation.hpp"
#include "uniformize/error.hpp"
#include "uniformize/generators.hpp"
#include "uniformize/hyperbolicity.hpp"
#include "uniformize/parallel.hpp"
#include "uniformize/sampling.hpp"
#include "uniformize/uniformity.hpp"

namespace py = pybind11;
using namespace uniformize;

namespace {

py::dict record_dict(const CheckRecord& rec) {
  py::dict out;
  out["name"] = rec.name;
  out["status"] = to_string(rec.status);
  out["vacuous"] = rec.vacuous;
  out["note"] = rec.note;
  out["values"] = rec.values;
  out["witnesses"] = rec.witnesses;
  return out;
}

GeneratorSpec spec_from(const py::object& kind, double edge_length, int subdivision) {
  GeneratorSpec spec;
  if (py::isinstance<RegularTree>(kind)) {
    spec.kind = kind.cast<RegularTree>();
  } else if (py::isinstance<HyperbolicTiling>(kind)) {
    spec.kind = kind.cast<HyperbolicTiling>();
  } else if (py::isinstance<EuclideanGrid>(kind)) {
    spec.kind = kind.cast<EuclideanGrid>();
  } else if (py::isinstance<RandomGnp>(kind)) {
    spec.kind = kind.cast<RandomGnp>();
  } else {
    throw py::type_error("expected RegularTree, HyperbolicTiling, EuclideanGrid or RandomGnp");
  }
  spec.edge_length = edge_length;
  spec.subdivision = subdivision;
  return spec;
}

using GraphPtr = std::shared_ptr<WeightedMetricGraph>;

struct Space {
  std::shared_ptr<const WeightedMetricGraph> graph;
  std::shared_ptr<const DistanceTable> dist;
};

Space make_space(const WeightedMetricGraph& g) {
  auto graph = std::make_shared<const WeightedMetricGraph>(g);
  auto dist = std::make_shared<const DistanceTable>(all_pairs_distance(*graph));
  return {graph, dist};
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Conformal deformation of graph models of Gromov hyperbolic spaces";
  py::register_exception<Error>(m, "UniformizeError", PyExc_ValueError);

  py::class_<RegularTree>(m, "RegularTree")
      .def(py::init<int, int>(), py::arg("branching") = 2, py::arg("radius") = 3)
      .def_readwrite("branching", &RegularTree::branching)
      .def_readwrite("radius", &RegularTree::radius);
  py::class_<HyperbolicTiling>(m, "HyperbolicTiling")
      .def(py::init<int, int, int>(), py::arg("p") = 7, py::arg("q") = 3, py::arg("rings") = 3)
      .def_readwrite("p", &HyperbolicTiling::p)
      .def_readwrite("q", &HyperbolicTiling::q)
      .def_readwrite("rings", &HyperbolicTiling::rings);
  py::class_<EuclideanGrid>(m, "EuclideanGrid")
      .def(py::init<int>(), py::arg("n") = 6)
      .def_readwrite("n", &EuclideanGrid::n);
  py::class_<RandomGnp>(m, "RandomGnp")
      .def(py::init<int, double, std::uint64_t>(), py::arg("n") = 30, py::arg("prob") = 0.1, py::arg("seed") = 1)
      .def_readwrite("n", &RandomGnp::n)
      .def_readwrite("prob", &RandomGnp::prob)
      .def_readwrite("seed", &RandomGnp::seed);

  py::class_<WeightedMetricGraph, GraphPtr>(m, "Graph")
      .def(py::init([](std::size_t n, const std::vector<std::tuple<NodeId, NodeId, double>>& edges, NodeId base,
                       std::vector<NodeId> frontier) {
             std::vector<Edge> list;
             for (const auto& [u, v, l] : edges) list.push_back({u, v, l});
             return std::make_shared<WeightedMetricGraph>(n, std::move(list), base, std::move(frontier));
           }),
           py::arg("node_count"), py::arg("edges"), py::arg("base") = 0, py::arg("frontier") = std::vector<NodeId>{})
      .def_property_readonly("size", &WeightedMetricGraph::size)
      .def_property_readonly("base", &WeightedMetricGraph::base)
      .def_property_readonly("frontier",
                             [](const WeightedMetricGraph& g) {
                               return std::vector<NodeId>(g.frontier().begin(), g.frontier().end());
                             })
      .def_property_readonly("edges",
                             [](const WeightedMetricGraph& g) {
                               std::vector<std::tuple<NodeId, NodeId, double>> out;
                               for (const auto& e : g.edges()) out.emplace_back(e.u, e.v, e.length);
                               return out;
                             })
      .def_property_readonly("generator", [](const WeightedMetricGraph& g) { return g.metadata().generator; });

  m.def(
      "generate",
      [](const py::object& kind, double edge_length, int subdivision) {
        return std::make_shared<WeightedMetricGraph>(generate(spec_from(kind, edge_length, subdivision)));
      },
      py::arg("kind"), py::arg("edge_length") = 1.0, py::arg("subdivision") = 1);

  m.def(
      "distances",
      [](const WeightedMetricGraph& g) {
        const auto table = all_pairs_distance(g);
        std::vector<std::vector<double>> out(g.size());
        for (NodeId x = 0; x < g.size(); ++x) out[x].assign(table.row(x).begin(), table.row(x).end());
        return out;
      },
      py::arg("graph"));

  m.def(
      "estimate_delta",
      [](const WeightedMetricGraph& g, const std::string& mode, std::size_t size_limit, bool override_limit) {
        if (mode != "global" && mode != "base-point") throw py::value_error("mode must be 'global' or 'base-point'");
        const auto report = estimate_delta(g, mode == "global" ? DeltaMode::kGlobal : DeltaMode::kBasePoint,
                                           DeltaOptions{size_limit, override_limit});
        py::dict out;
        out["delta_base"] = report.delta_base;
        out["delta_global"] = report.delta_global ? py::cast(*report.delta_global) : py::none();
        out["witness"] = std::vector<NodeId>{report.witness.x, report.witness.y, report.witness.z, report.witness.p};
        out["largest_block"] = report.largest_block;
        return out;
      },
      py::arg("graph"), py::arg("mode") = "global", py::arg("size_limit") = 400, py::arg("override_limit") = false);

  py::class_<DeformedSpace>(m, "DeformedSpace")
      .def_property_readonly("epsilon", &DeformedSpace::epsilon)
      .def_property_readonly("graph",
                             [](const DeformedSpace& ds) { return std::const_pointer_cast<WeightedMetricGraph>(ds.graph_ptr()); })
      .def("density", &DeformedSpace::density, py::arg("x"))
      .def("distance", &DeformedSpace::distance, py::arg("x"), py::arg("y"))
      .def("base_distance", [](const DeformedSpace& ds, NodeId x, NodeId y) { return ds.base_distance()(x, y); })
      .def_property_readonly("deformed_edge_lengths",
                             [](const DeformedSpace& ds) {
                               return std::vector<double>(ds.deformed_edge_lengths().begin(),
                                                          ds.deformed_edge_lengths().end());
                             })
      .def("boundary_distance", [](const DeformedSpace& ds, NodeId x) {
        const auto b = boundary_distance(ds, x);
        return std::make_pair(b.lower, b.upper);
      });

  m.def(
      "deform",
      [](const WeightedMetricGraph& g, double epsilon, double h, const std::string& quadrature) {
        auto q = parse_quadrature(quadrature);
        if (!q) throw py::value_error("quadrature must be 'exact-tree' or 'trapezoid'");
        const Space space = make_space(g);
        return DeformedSpace(space.graph, space.dist, DeformationParams{epsilon, h, *q, std::nullopt});
      },
      py::arg("graph"), py::arg("epsilon") = 0.5, py::arg("h") = 1.0 / 14.0, py::arg("quadrature") = "exact-tree");

  m.def("check_harnack", [](const DeformedSpace& ds) { return record_dict(check_harnack(ds)); });
  m.def("check_diameter", [](const DeformedSpace& ds) { return record_dict(check_diameter(ds)); });
  m.def("check_boundary_lower_bound", [](const DeformedSpace& ds) { return record_dict(check_boundary_lower_bound(ds)); });

  m.def(
      "sample_pairs",
      [](const DeformedSpace& ds, bool inner_only, std::uint64_t seed) {
        PairSamplingOptions options;
        options.inner_only = inner_only;
        options.seed = seed;
        return sample_pairs(ds.graph(), ds.base_distance(), options);
      },
      py::arg("space"), py::arg("inner_only") = false, py::arg("seed") = 1);

  m.def(
      "verify_uniform",
      [](const DeformedSpace& ds, const std::vector<NodePair>& pairs, double h, double delta, std::size_t arc_limit) {
        const auto report = verify_uniform(ds, pairs, {.h = h, .arc_limit = arc_limit, .delta = delta});
        return record_dict(report.record);
      },
      py::arg("space"), py::arg("pairs"), py::arg("h") = 1.0 / 14.0, py::arg("delta") = 0.0,
      py::arg("arc_limit") = 1);

  m.def(
      "verify_gehring_hayman",
      [](const DeformedSpace& ds, const std::vector<NodePair>& pairs, double h, std::size_t arc_limit) {
        return record_dict(verify_gehring_hayman(ds, pairs, h, arc_limit).record);
      },
      py::arg("space"), py::arg("pairs"), py::arg("h") = 1.0 / 14.0, py::arg("arc_limit") = 1);

  m.def(
      "check_lemma_3_3",
      [](const DeformedSpace& ds, const std::vector<NodePair>& pairs, double delta) {
        return record_dict(check_lemma_3_3(ds, pairs, delta).record);
      },
      py::arg("space"), py::arg("pairs"), py::arg("delta") = 0.0);

  m.def(
      "boundary_comparison",
      [](const DeformedSpace& ds, double delta, std::size_t limit) {
        const auto proxies = build_boundary_proxies(ds, ds.graph().base(), delta, limit);
        py::dict out;
        out["sandwich"] = record_dict(check_metametric_sandwich(proxies));
        out["quasi_isometry"] = record_dict(check_boundary_quasi_isometry(ds, proxies));
        return out;
      },
      py::arg("space"), py::arg("delta") = 0.0, py::arg("limit") = 1024);

  m.def("set_thread_count", &set_thread_count, py::arg("count"));

  m.def(
      "run_cli",
      [](std::vector<std::string> args) {
        args.insert(args.begin(), "uniformize");
        std::vector<char*> argv;
        for (auto& a : args) argv.push_back(a.data());
        py::gil_scoped_release release;
        return run_cli(static_cast<int>(argv.size()), argv.data());
      },
      py::arg("args"));
}
