// Copyright 2026 The treesub Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


// Python bindings. Labelings cross the boundary as lists of ints, costs as
// (numerator, denominator) pairs so that no precision is lost.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <vector>

#include "treesub/descent.hpp"
#include "treesub/domain.hpp"
#include "treesub/error.hpp"
#include "treesub/generate.hpp"
#include "treesub/instance_io.hpp"
#include "treesub/property_checker.hpp"
#include "treesub/random.hpp"
#include "treesub/tree.hpp"
#include "treesub/weak_encoder.hpp"

namespace py = pybind11;

namespace treesub {
namespace {

py::tuple Cost(Value num, const CostFunction& f) {
  return py::make_tuple(num, f.denominator());
}

py::dict ReportToDict(const CheckReport& r, const CostFunction& f) {
  py::dict out;
  out["property"] = PropertyName(r.property);
  out["holds"] = r.holds();
  out["exhaustive"] = r.exhaustive;
  out["pairs_checked"] = r.pairs_checked;
  out["note"] = r.note;
  if (r.witness) {
    const ViolationWitness& w = *r.witness;
    py::dict wd;
    wd["x"] = w.x;
    wd["y"] = w.y;
    wd["first"] = w.first;
    wd["second"] = w.second;
    wd["lhs"] = Cost(w.lhs, f);
    wd["rhs"] = Cost(w.rhs, f);
    if (w.d) wd["d"] = *w.d;
    out["witness"] = wd;
  } else {
    out["witness"] = py::none();
  }
  return out;
}

Engine ParseEngine(const std::string& name) {
  if (name == "brute") return Engine::kBrute;
  if (name == "minnorm") return Engine::kMinNorm;
  throw InputError("unknown engine '" + name + "' (expected brute|minnorm)");
}

}  // namespace
}  // namespace treesub

PYBIND11_MODULE(_treesub, m) {
  using namespace treesub;
  m.doc() = "Minimization of submodular functions on products of rooted trees";

  auto error = py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
  auto domain_error = py::register_exception<DomainError>(m, "DomainError", error);
  py::register_exception<NotInImage>(m, "NotInImage", domain_error);
  py::register_exception<InputError>(m, "InputError", error);
  py::register_exception<UnsupportedStructure>(m, "UnsupportedStructure", error);
  py::register_exception<BudgetExceeded>(m, "BudgetExceeded", error);
  auto solver = py::register_exception<SolverFailure>(m, "SolverFailure", error);
  py::register_exception<IterationBoundViolation>(m, "IterationBoundViolation",
                                                  solver);
  py::register_exception<GenerationFailure>(m, "GenerationFailure", error);

  py::class_<RootedTree>(m, "Tree")
      .def(py::init(&RootedTree::FromParents), py::arg("parents"))
      .def_static("chain", &trees::Chain, py::arg("node_count"))
      .def_static("bisubmodular", &trees::Bisubmodular)
      .def_static("fork", &trees::Fork, py::arg("k"))
      .def_static("complete_binary", &trees::CompleteBinary, py::arg("height"))
      .def_property_readonly("parents", &RootedTree::parents)
      .def_property_readonly("node_count", &RootedTree::node_count)
      .def_property_readonly("root", &RootedTree::root)
      .def_property_readonly("height", &RootedTree::height)
      .def_property_readonly("is_binary", &RootedTree::is_binary)
      .def("depth", &RootedTree::depth)
      .def("distance", [](const RootedTree& t, Node a, Node b) {
        return Rho(t, a, b);
      })
      .def("meet_join", [](const RootedTree& t, Node a, Node b) {
        return MeetJoin(t, a, b);
      })
      .def("wedge_vee", [](const RootedTree& t, Node a, Node b) {
        return WedgeVee(t, a, b);
      })
      .def("up_down", [](const RootedTree& t, Node a, Node b, int d) {
        return UpDown(t, a, b, d);
      })
      .def("__repr__", [](const RootedTree& t) {
        return "Tree(" + DescribeTree(t) + ")";
      });

  py::class_<InstanceDocument>(m, "Instance")
      .def_static("parse", &ParseInstance, py::arg("text"))
      .def_static("load", &ReadInstanceFile, py::arg("path"))
      .def_static("catalog", [](const std::string& name) {
        return ToDocument(CatalogFixture(name), "fixture-catalog");
      }, py::arg("name"))
      .def_static("generate",
          [](const std::string& kind, const std::string& tree_spec, int n,
             std::uint64_t seed, Value max_value) {
            Rng rng(seed);
            GenerateParams params;
            params.trees = ParseTreeSpec(tree_spec, n, rng);
            params.max_value = max_value;
            return ToDocument(Generate(ParseGeneratorKind(kind), params, seed),
                              kind);
          },
          py::arg("kind"), py::arg("tree_spec"), py::arg("n"),
          py::arg("seed") = 0, py::arg("max_value") = 20)
      .def_property_readonly("n", [](const InstanceDocument& d) {
        return d.domain().n();
      })
      .def_property_readonly("size", [](const InstanceDocument& d) {
        return d.domain().size();
      })
      .def_property_readonly("trees", [](const InstanceDocument& d) {
        return d.domain().trees();
      })
      .def_property_readonly("denominator", [](const InstanceDocument& d) {
        return d.function().denominator();
      })
      .def_property_readonly("metadata", [](const InstanceDocument& d) {
        return py::module_::import("json").attr("loads")(d.metadata.dump());
      })
      .def("evaluate", [](const InstanceDocument& d, const Labeling& x) {
        return Cost(d.function().Evaluate(x), d.function());
      }, py::arg("x"))
      .def("serialize", &SerializeInstance)
      .def("check",
          [](const InstanceDocument& d, const std::string& property,
             std::optional<std::uint64_t> samples, std::uint64_t seed) {
            CheckOptions options = samples ? CheckOptions::Sampled(*samples, seed)
                                           : CheckOptions{};
            return ReportToDict(
                Check(ParseProperty(property), d.function(), d.domain(), options),
                d.function());
          },
          py::arg("property") = "strong", py::arg("samples") = py::none(),
          py::arg("seed") = 0)
      .def("minimize",
          [](const InstanceDocument& d, const std::string& engine,
             std::optional<Labeling> start) {
            DescentOptions options;
            options.engine = ParseEngine(engine);
            options.start = std::move(start);
            DescentResult r = Minimize(d.function(), d.domain(), options);
            py::dict out;
            out["minimizer"] = r.minimizer;
            out["value"] = Cost(r.value, d.function());
            out["s1_steps"] = r.trace.s1_steps;
            out["s2_steps"] = r.trace.s2_steps;
            out["K"] = r.trace.K;
            out["certified"] = r.trace.certified();
            out["values"] = r.trace.values;
            return out;
          },
          py::arg("engine") = "brute", py::arg("start") = py::none())
      .def("minimize_brute", [](const InstanceDocument& d) {
        BruteResult r = BruteForceMinimize(d.function(), d.domain());
        return py::make_tuple(r.minimizer, Cost(r.value, d.function()));
      })
      .def("minimize_weak", [](const InstanceDocument& d) {
        WeakResult r = MinimizeWeak(d.function(), d.domain());
        return py::make_tuple(r.minimizer, Cost(r.value, d.function()));
      });

  m.def("catalog_names", &CatalogNames);
}
