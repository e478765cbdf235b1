#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "hyperci/hyperci.hpp"

namespace py = pybind11;
using namespace hyperci;

namespace {

NodeId node_of(const Hypergraph& h, const std::string& label) {
  auto v = h.find(label);
  if (!v) throw py::key_error("unknown node label '" + label + "'");
  return *v;
}

std::vector<std::string> labels_of(const Hypergraph& h, const std::vector<NodeId>& ids) {
  std::vector<std::string> out;
  out.reserve(ids.size());
  for (NodeId v : ids) out.push_back(h.label(v));
  return out;
}

DismantleOptions make_options(double batch, const std::string& stop, const std::string& norm,
                              bool per_node, const std::string& gcc = "nodes") {
  DismantleOptions o;
  batch_size_for(batch, 1);
  o.batch_fraction = batch;
  o.stop = StopCondition::parse(stop);
  o.norm = parse_normalization(norm);
  o.per_node = per_node;
  o.gcc_rule = parse_gcc_rule(gcc);
  return o;
}

py::dict trajectory_dict(const Trajectory& t) {
  py::list batches;
  for (const auto& b : t.batches) {
    py::dict d;
    d["removed_nodes"] = b.removed;
    d["frac_removed"] = b.frac_removed;
    d["sigma_remaining"] = b.sigma_remaining;
    d["sigma_original"] = b.sigma_original;
    d["ratio"] = b.ratio;
    batches.append(d);
  }
  py::dict out;
  out["strategy"] = t.strategy.name();
  out["adaptive"] = t.strategy.adaptive();
  out["batch_size"] = t.batch_size;
  out["normalization"] = to_string(t.norm);
  out["batches"] = batches;
  out["anc"] = t.anc;
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Hypergraph dismantling with higher-order collective influence";
  m.attr("__version__") = std::string(kToolVersion);

  py::register_exception<Error>(m, "HyperciError", PyExc_ValueError);

  py::class_<Hypergraph>(m, "Hypergraph")
      .def(py::init([](const std::vector<std::vector<std::string>>& edges) {
             return Hypergraph::build(edges);
           }),
           py::arg("hyperedges"))
      .def_static("from_text", [](const std::string& text) { return build(parse_hyperedge_list(text)); })
      .def_static("from_file", [](const std::string& path) { return build(read_hyperedge_list(path)); })
      .def_property_readonly("node_count", &Hypergraph::node_count)
      .def_property_readonly("hyperedge_count", &Hypergraph::hyperedge_count)
      .def_property_readonly("labels", &Hypergraph::labels)
      .def("hyperedges", [](const Hypergraph& h) {
        std::vector<std::vector<std::string>> out;
        for (const auto& e : h.hyperedges()) out.push_back(labels_of(h, e));
        return out;
      })
      .def("hhd", [](const Hypergraph& h, const std::string& v) { return h.hhd(node_of(h, v)); })
      .def("neighbors", [](const Hypergraph& h, const std::string& v) {
        return labels_of(h, h.neighbors(node_of(h, v)));
      })
      .def("ball_boundary", [](const Hypergraph& h, const std::string& v, int radius) {
        return labels_of(h, h.ball_boundary(node_of(h, v), radius));
      }, py::arg("node"), py::arg("radius"))
      .def("shared_hyperedges", [](const Hypergraph& h, const std::string& a, const std::string& b) {
        return h.project_adjacency().at(node_of(h, a), node_of(h, b));
      })
      .def("components", [](const Hypergraph& h) {
        py::list out;
        for (const auto& c : h.components()) {
          out.append(py::make_tuple(labels_of(h, c.node_ids), c.hyperedge_count()));
        }
        return out;
      })
      .def("gcc", [](const Hypergraph& h, const std::string& rule) {
        auto c = h.gcc(parse_gcc_rule(rule));
        return py::make_tuple(labels_of(h, c.node_ids), c.hyperedge_count());
      }, py::arg("rule") = "nodes")
      .def("connectivity", [](const Hypergraph& h, const std::string& norm, std::size_t n0,
                              const std::string& rule) {
        return connectivity(h, parse_normalization(norm), n0, parse_gcc_rule(rule));
      }, py::arg("norm") = "remaining", py::arg("original_count") = 0, py::arg("gcc") = "nodes")
      .def("remove_nodes", [](const Hypergraph& h, const std::vector<std::string>& victims) {
        std::vector<NodeId> ids;
        for (const auto& v : victims) ids.push_back(node_of(h, v));
        return h.remove_nodes(ids);
      })
      .def("stats", [](const Hypergraph& h) {
        auto s = h.stats();
        py::dict d;
        d["nodes"] = s.node_count;
        d["hyperedges"] = s.hyperedge_count;
        d["avg_hyper_degree"] = s.avg_hyper_degree;
        d["avg_hyperedge_size"] = s.avg_hyperedge_size;
        return d;
      });

  m.def("scores", [](const Hypergraph& h, const std::string& method) {
    auto s = Strategy::parse(method);
    auto sc = score(h, s.measure(), s.radius());
    py::dict out;
    for (NodeId v = 0; v < h.node_count(); ++v) out[py::str(h.label(v))] = sc[v];
    return out;
  }, py::arg("hypergraph"), py::arg("method"),
        "Scores per node label for hd|hhd|ci[:L]|hyperci[:L].");

  m.def("rank", [](const Hypergraph& h, const std::string& method) {
    auto s = Strategy::parse(method);
    return labels_of(h, rank(score(h, s.measure(), s.radius())));
  }, py::arg("hypergraph"), py::arg("method"));

  m.def("dismantle", [](const Hypergraph& h, const std::string& method, double batch,
                        const std::string& stop, const std::string& norm, bool per_node,
                        bool adaptive_ci, const std::string& gcc) {
    auto t = dismantle(h, Strategy::parse(method, adaptive_ci),
                       make_options(batch, stop, norm, per_node, gcc));
    return trajectory_dict(t);
  }, py::arg("hypergraph"), py::arg("method") = "hyperci:1", py::arg("batch") = 0.01,
        py::arg("stop") = "all", py::arg("norm") = "remaining", py::arg("per_node") = false,
        py::arg("adaptive_ci") = false, py::arg("gcc") = "nodes");

  m.def("dismantle_csv", [](const Hypergraph& h, const std::string& method, double batch,
                            const std::string& norm) {
    return write_trajectory_csv(dismantle(h, Strategy::parse(method), make_options(batch, "all", norm, false)));
  }, py::arg("hypergraph"), py::arg("method") = "hyperci:1", py::arg("batch") = 0.01,
        py::arg("norm") = "remaining");

  m.def("dismantle_json", [](const Hypergraph& h, const std::string& method, double batch,
                             const std::string& norm) {
    return write_trajectory_json(dismantle(h, Strategy::parse(method), make_options(batch, "all", norm, false)));
  }, py::arg("hypergraph"), py::arg("method") = "hyperci:1", py::arg("batch") = 0.01,
        py::arg("norm") = "remaining");

  m.def("compare", [](const Hypergraph& h, const std::vector<std::string>& methods, double batch,
                      const std::string& stop, const std::string& norm) {
    std::vector<Strategy> strategies;
    for (const auto& name : methods) strategies.push_back(Strategy::parse(name));
    py::dict out;
    for (const auto& row : compare(h, strategies, make_options(batch, stop, norm, false))) {
      out[py::str(row.strategy.name())] = row.anc;
    }
    return out;
  }, py::arg("hypergraph"), py::arg("methods"), py::arg("batch") = 0.01, py::arg("stop") = "all",
        py::arg("norm") = "remaining");

  m.def("l_sweep", [](const Hypergraph& h, const std::string& method, const std::vector<int>& radii,
                      double batch, const std::string& norm) {
    auto kind = Strategy::parse(method).kind();
    py::dict out;
    for (const auto& p : l_sweep(h, kind, radii, make_options(batch, "all", norm, false))) {
      out[py::int_(p.radius)] = p.anc;
    }
    return out;
  }, py::arg("hypergraph"), py::arg("method"), py::arg("radii"), py::arg("batch") = 0.01,
        py::arg("norm") = "remaining");
}
