//
// synthroute - Copyright 2026 The synthroute Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "synthroute/chem/similarity.h"
#include "synthroute/chem/smiles.h"
#include "synthroute/error.h"
#include "synthroute/eval/harness.h"
#include "synthroute/projection/overlap.h"
#include "synthroute/projection/tsne.h"
#include "synthroute/rank/ranking.h"
#include "synthroute/route/tree.h"
#include "synthroute/service/service.h"
#include "synthroute/service/store.h"

namespace py = pybind11;
namespace sr = synthroute;

namespace {

using Point = std::pair<double, double>;

std::vector<sr::projection::Point2> to_points(const std::vector<Point> &in) {
  std::vector<sr::projection::Point2> out;
  out.reserve(in.size());
  for (const auto &[x, y]: in) {
    out.push_back({ x, y });
  }
  return out;
}

std::vector<Point> from_points(const std::vector<sr::projection::Point2> &in) {
  std::vector<Point> out;
  out.reserve(in.size());
  for (const auto &p: in) {
    out.emplace_back(p.x, p.y);
  }
  return out;
}

py::dict metrics_dict(const sr::eval::EvalMetrics &m) {
  py::dict d;
  d["tp"] = m.tp;
  d["fp"] = m.fp;
  d["fn"] = m.fn;
  d["precision"] = m.precision;
  d["recall"] = m.recall;
  d["f1"] = m.f1;
  return d;
}

// Thin holder so Python sees node ids as plain ints.
class PyRouteTree {
public:
  explicit PyRouteTree(const std::string &start): tree_(sr::chem::parse_smiles(start)) { }

  std::uint64_t add(std::uint64_t parent, const std::string &reactant,
                    const std::string &product, double yield, double duration_hours,
                    bool chain_override) {
    sr::route::ReactionRecord r(sr::chem::parse_smiles(reactant),
                                sr::chem::parse_smiles(product), yield, duration_hours);
    return tree_.add_reaction({ parent }, std::move(r), chain_override).value;
  }

  std::size_t remove(std::uint64_t id) { return tree_.remove_subtree({ id }); }

  py::dict node(std::uint64_t id) const {
    const auto &n = tree_.node({ id });
    py::dict d;
    d["id"] = n.id.value;
    d["parent"] = n.parent ? py::cast(n.parent->value) : py::none();
    d["layer"] = n.layer;
    d["label"] = n.label;
    d["total_yield"] = n.total_yield;
    d["total_duration"] = n.total_duration;
    return d;
  }

  py::list decision_sequences() const {
    py::list out;
    for (const auto &s: tree_.decision_sequences()) {
      std::vector<std::uint64_t> path;
      for (auto n: s.path) {
        path.push_back(n.value);
      }
      py::dict d;
      d["leaf"] = s.leaf.value;
      d["path"] = path;
      d["steps"] = s.steps;
      d["total_yield"] = s.total_yield;
      d["total_duration"] = s.total_duration;
      out.append(d);
    }
    return out;
  }

  std::size_t size() const { return tree_.size(); }

private:
  sr::route::RouteTree tree_;
};

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "synthroute native core";

  // Leaked on purpose: the translator may run until interpreter shutdown.
  static const py::handle error = py::exception<sr::Error>(m, "Error").inc_ref();
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) {
        std::rethrow_exception(p);
      }
    } catch (const sr::Error &e) {
      py::object exc = error(e.what());
      exc.attr("code") = std::string(e.code_name());
      PyErr_SetObject(error.ptr(), exc.ptr());
    }
  });

  m.def("write_smiles", [](const std::string &s) {
    return sr::chem::write_smiles(sr::chem::parse_smiles(s));
  }, py::arg("smiles"));
  m.def("canonical_key", [](const std::string &s) {
    return sr::chem::canonical_key(sr::chem::parse_smiles(s)).hex();
  }, py::arg("smiles"));
  m.def("same_molecule", [](const std::string &a, const std::string &b) {
    return sr::chem::same_molecule(sr::chem::parse_smiles(a), sr::chem::parse_smiles(b));
  }, py::arg("a"), py::arg("b"));
  m.def("fingerprint", [](const std::string &s, int radius, int n_bits) {
    return sr::chem::fingerprint(sr::chem::parse_smiles(s), radius, n_bits).on_bits();
  }, py::arg("smiles"), py::arg("radius") = sr::chem::kDefaultRadius,
     py::arg("n_bits") = sr::chem::kDefaultFingerprintBits);
  m.def("tanimoto", [](const std::string &a, const std::string &b, int radius, int n_bits) {
    return sr::chem::tanimoto(sr::chem::fingerprint(sr::chem::parse_smiles(a), radius, n_bits),
                              sr::chem::fingerprint(sr::chem::parse_smiles(b), radius, n_bits));
  }, py::arg("a"), py::arg("b"), py::arg("radius") = sr::chem::kDefaultRadius,
     py::arg("n_bits") = sr::chem::kDefaultFingerprintBits);

  py::class_<PyRouteTree>(m, "RouteTree")
      .def(py::init<const std::string &>(), py::arg("starting_smiles"))
      .def("add", &PyRouteTree::add, py::arg("parent"), py::arg("reactant"), py::arg("product"),
           py::arg("yield_"), py::arg("duration_hours"), py::arg("chain_override") = false)
      .def("remove", &PyRouteTree::remove, py::arg("node"))
      .def("node", &PyRouteTree::node, py::arg("node"))
      .def("decision_sequences", &PyRouteTree::decision_sequences)
      .def("__len__", &PyRouteTree::size);

  // sequences: (leaf, steps, total_yield, total_duration)
  m.def("rank", [](const std::vector<std::tuple<std::uint64_t, int, double, double>> &sequences,
                   double steps, double duration, double yield) {
    std::vector<sr::rank::SequenceCriteria> c;
    for (const auto &[leaf, n, y, d]: sequences) {
      c.push_back({ leaf, n, y, d });
    }
    py::list out;
    for (const auto &e: sr::rank::score(c, { steps, duration, yield })) {
      py::dict d;
      d["rank"] = e.rank;
      d["leaf"] = e.raw.leaf;
      d["weighted_score"] = e.weighted_score;
      d["normalized"] = std::make_tuple(e.normalized.steps, e.normalized.duration,
                                        e.normalized.yield);
      out.append(d);
    }
    return out;
  }, py::arg("sequences"), py::arg("steps"), py::arg("duration"), py::arg("yield_"));

  m.def("search_sigma", [](const std::vector<double> &distances, double perplexity) {
    const auto s = sr::projection::search_sigma(distances, perplexity);
    py::dict d;
    d["sigma"] = s.sigma;
    d["converged"] = s.converged;
    d["perplexity"] = s.perplexity;
    d["probabilities"] = s.probabilities;
    return d;
  }, py::arg("distances"), py::arg("perplexity"));
  m.def("tsne", [](const std::vector<std::vector<double>> &vectors, double perplexity,
                   int iterations, std::uint64_t seed) {
    sr::projection::TsneParams p;
    p.perplexity = perplexity;
    p.iterations = iterations;
    p.seed = seed;
    sr::projection::TsneResult r;
    {
      py::gil_scoped_release release;
      r = sr::projection::tsne(vectors, p);
    }
    return from_points(r.points);
  }, py::arg("vectors"), py::arg("perplexity") = 30.0, py::arg("iterations") = 750,
     py::arg("seed") = 42);
  m.def("remove_overlap", [](const std::vector<Point> &points, double d_min, int max_iter,
                             std::uint64_t seed) {
    const auto r = sr::projection::remove_overlap(to_points(points), d_min, max_iter, seed);
    return py::make_tuple(from_points(r.points), r.converged, r.iterations);
  }, py::arg("points"), py::arg("d_min") = sr::projection::kDefaultMinDistance,
     py::arg("max_iter") = sr::projection::kDefaultOverlapIterations, py::arg("seed") = 0);

  m.def("metrics_from_counts", [](int tp, int fp, int fn) {
    return metrics_dict(sr::eval::metrics_from_counts(tp, fp, fn));
  }, py::arg("tp"), py::arg("fp"), py::arg("fn"));
  m.def("evaluate_files", [](const std::string &gold, const std::string &pred) {
    const auto g = sr::eval::load_reactions_jsonl(gold, true);
    const auto p = sr::eval::load_reactions_jsonl(pred, false);
    const auto report = sr::eval::evaluate(p, g);
    py::dict d = metrics_dict(report.metrics);
    d["unparseable"] = report.unparseable;
    return d;
  }, py::arg("gold"), py::arg("pred"));

  // JSON text; the Python package decodes it.
  m.def("workspace_rankings_json", [](const std::string &path) {
    const auto ws = sr::service::deserialize(sr::service::read_file(path));
    return sr::service::rankings_json(ws).dump();
  }, py::arg("path"));
}
