#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "app.hpp"
#include "enriched/cli.hpp"
#include "enriched/shipped.hpp"

namespace py = pybind11;
using namespace enriched;

namespace {

CheckOptions opts(bool allWitnesses, unsigned workers) { return CheckOptions{allWitnesses, workers}; }

py::dict witnessDict(const Witness& w) {
  py::dict d;
  d["diagram"] = w.diagram;
  d["instance"] = w.instance;
  d["lhs"] = w.lhs;
  d["rhs"] = w.rhs;
  return d;
}

template <class Map>
std::vector<std::string> keys(const Map& m) {
  std::vector<std::string> out;
  for (const auto& [k, v] : m) out.push_back(k);
  return out;
}

template <class Map>
const typename Map::mapped_type& lookup(const Map& m, const std::string& name) {
  auto it = m.find(name);
  if (it == m.end()) throw py::key_error(name);
  return it->second;
}

}  // namespace

PYBIND11_MODULE(_enriched, m) {
  PYBIND11_CONSTINIT static py::gil_safe_call_once_and_store<py::object> errorType;
  errorType.call_once_and_store_result([&]() { return py::object(py::exception<Error>(m, "EnrichedError")); });
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      // kind carries the error class name, e.g. "ParseError"
      const py::object& type = errorType.get_stored();
      py::object exc = type(std::string(e.what()));
      exc.attr("kind") = std::string(kindName(e.kind()));
      PyErr_SetObject(type.ptr(), exc.ptr());
    }
  });

  py::class_<DiagramTally>(m, "Tally")
      .def_readonly("name", &DiagramTally::name)
      .def_readonly("instances", &DiagramTally::instances)
      .def_readonly("failures", &DiagramTally::failures)
      .def_property_readonly("vacuous", &DiagramTally::vacuous);

  py::class_<CheckReport>(m, "Report")
      .def_property_readonly("checker", &CheckReport::checker)
      .def_property_readonly("passed", &CheckReport::passed)
      .def_property_readonly("diagrams", &CheckReport::diagrams)
      .def_property_readonly("witnesses",
                             [](const CheckReport& r) {
                               py::list l;
                               for (const auto& w : r.witnesses()) l.append(witnessDict(w));
                               return l;
                             })
      .def_property_readonly("warnings",
                             [](const CheckReport& r) {
                               py::list l;
                               for (const auto& w : r.warnings()) l.append(witnessDict(w));
                               return l;
                             })
      .def("failed", [](const CheckReport& r, const std::string& d) { return r.failed(d); })
      .def("vacuous", [](const CheckReport& r, const std::string& d) { return r.vacuous(d); })
      .def("failing_diagrams", &CheckReport::failingDiagrams)
      .def("__bool__", &CheckReport::passed);

  py::class_<KFoldMonoidal, std::shared_ptr<KFoldMonoidal>>(m, "Base")
      .def_property_readonly("k", &KFoldMonoidal::tensorCount)
      .def_property_readonly("unit", [](const KFoldMonoidal& v) { return v.unit().str(); })
      .def_property_readonly("objects",
                             [](const KFoldMonoidal& v) {
                               std::vector<std::string> out;
                               for (const auto& o : v.category().objects()) out.push_back(o.str());
                               return out;
                             })
      .def_property_readonly("morphisms",
                             [](const KFoldMonoidal& v) {
                               std::vector<std::string> out;
                               for (const auto& f : v.category().morphisms()) out.push_back(f.str());
                               return out;
                             })
      .def("tensor_obj",
           [](const KFoldMonoidal& v, int i, const std::string& a, const std::string& b) {
             return v.tensorObj(i, ObjId(a), ObjId(b)).str();
           })
      .def("tensor_mor",
           [](const KFoldMonoidal& v, int i, const std::string& f, const std::string& g) {
             return v.tensorMor(i, MorId(f), MorId(g)).str();
           })
      .def("interchange",
           [](const KFoldMonoidal& v, int i, int j, const std::string& a, const std::string& b,
              const std::string& c, const std::string& d) {
             return v.interchange(i, j, ObjId(a), ObjId(b), ObjId(c), ObjId(d)).str();
           })
      .def("check",
           [](const KFoldMonoidal& v, bool all, unsigned workers) { return checkKFold(v, opts(all, workers)); },
           py::arg("all_witnesses") = false, py::arg("workers") = 0);

  auto own = [](KFoldMonoidal v) { return std::make_shared<KFoldMonoidal>(std::move(v)); };
  m.def("bool_poset", [own](int k) { return own(boolPoset(k)); }, py::arg("k"));
  m.def("zmod2", [own](int k) { return own(zmod2(k)); }, py::arg("k"));
  m.def("super_z2", [own](int k) { return own(superZ2(k)); }, py::arg("k"));
  m.def("delooped_cyclic", [own](int k, int order) { return own(deloopedCyclic(k, order)); }, py::arg("k"),
        py::arg("order") = 3);
  m.def("check_kfold",
        [](const KFoldMonoidal& v, bool all, unsigned workers) { return checkKFold(v, opts(all, workers)); },
        py::arg("base"), py::arg("all_witnesses") = false, py::arg("workers") = 0);

  py::class_<Document>(m, "Document")
      .def_static("parse", &parseDocument, py::arg("text"))
      .def_static("load", [](const std::string& p) { return loadDocument(p); }, py::arg("path"))
      .def("serialize", &serialize)
      .def("save", [](const Document& d, const std::string& p) { saveDocument(d, p); }, py::arg("path"))
      .def_property_readonly("base",
                             [](const Document& d) { return std::make_shared<KFoldMonoidal>(*d.base); })
      .def_readonly("base_name", &Document::baseName)
      .def_property_readonly("symmetric", [](const Document& d) { return d.symmetry.has_value(); })
      .def_property_readonly("vcategories", [](const Document& d) { return keys(d.vcategories); })
      .def_property_readonly("vfunctors", [](const Document& d) { return keys(d.vfunctors); })
      .def_property_readonly("vnats", [](const Document& d) { return keys(d.vnats); })
      .def_property_readonly("v2categories", [](const Document& d) { return keys(d.v2categories); })
      .def_property_readonly("v2functors", [](const Document& d) { return keys(d.v2functors); })
      .def_property_readonly("v2nats", [](const Document& d) { return keys(d.v2nats); })
      .def_property_readonly("modifications", [](const Document& d) { return keys(d.modifications); })
      .def_property_readonly("pastings", [](const Document& d) { return keys(d.pastings); })
      .def(
          "check_vcategory",
          [](const Document& d, const std::string& n, bool all) {
            return checkVCategory(*lookup(d.vcategories, n), opts(all, 0));
          },
          py::arg("name"), py::arg("all_witnesses") = false)
      .def(
          "check_vfunctor",
          [](const Document& d, const std::string& n, bool all) {
            return checkVFunctor(*lookup(d.vfunctors, n), opts(all, 0));
          },
          py::arg("name"), py::arg("all_witnesses") = false)
      .def(
          "check_vnat",
          [](const Document& d, const std::string& n, bool all) { return checkVNat(*lookup(d.vnats, n), opts(all, 0)); },
          py::arg("name"), py::arg("all_witnesses") = false)
      .def(
          "check_v2category",
          [](const Document& d, const std::string& n, bool all) {
            return checkV2Category(*lookup(d.v2categories, n), opts(all, 0));
          },
          py::arg("name"), py::arg("all_witnesses") = false)
      .def(
          "check_v2functor",
          [](const Document& d, const std::string& n, bool all) {
            return checkV2Functor(*lookup(d.v2functors, n), opts(all, 0));
          },
          py::arg("name"), py::arg("all_witnesses") = false)
      .def(
          "check_v2nat",
          [](const Document& d, const std::string& n, bool all) { return checkV2Nat(*lookup(d.v2nats, n), opts(all, 0)); },
          py::arg("name"), py::arg("all_witnesses") = false)
      .def(
          "check_modification",
          [](const Document& d, const std::string& n, bool all) {
            return checkModification(*lookup(d.modifications, n), opts(all, 0));
          },
          py::arg("name"), py::arg("all_witnesses") = false)
      .def(
          "check_pasting",
          [](const Document& d, const std::string& n, bool all) {
            lookup(d.pastings, n);
            return exchangeSuite(d.pasting(n), opts(all, 0));
          },
          py::arg("name"), py::arg("all_witnesses") = false);

  m.def("corpus_bases", &corpusBaseNames);
  m.def("corpus", &corpus, py::arg("base"), py::arg("seed") = 1);
  m.def(
      "fuzz",
      [](Document d, std::uint64_t seed, std::size_t count) {
        appendFuzz(d, seed, count);
        return d;
      },
      py::arg("document"), py::arg("seed"), py::arg("count"));
  m.def("constructions", &constructionNames);
  m.def(
      "construct",
      [](const Document& d, const std::string& c, const std::vector<std::string>& inputs, std::optional<int> i,
         std::optional<int> j, std::optional<int> k, const std::string& name) {
        return construct(d, ConstructRequest{c, inputs, i, j, k, name});
      },
      py::arg("document"), py::arg("construction"), py::arg("inputs"), py::arg("i") = py::none(),
      py::arg("j") = py::none(), py::arg("k") = py::none(), py::arg("name") = "result");

  // one dict per checked structure plus the overall exit status
  m.def(
      "check_document",
      [](const Document& d, const std::vector<std::string>& levels, bool all) {
        CheckFlags flags;
        for (const auto& l : levels) flags.levels.insert(parseLevel(l));
        flags.allWitnesses = all;
        CheckRun run = checkDocument(d, flags);
        py::list entries;
        for (const auto& e : run.entries) {
          py::dict x;
          x["level"] = std::string(levelName(e.level));
          x["name"] = e.name;
          x["passed"] = e.passed();
          x["report"] = e.report;
          x["error"] = e.error ? py::cast(*e.error) : py::none();
          entries.append(x);
        }
        std::vector<std::string> skipped;
        for (auto l : run.skipped) skipped.emplace_back(levelName(l));
        py::dict out;
        out["entries"] = entries;
        out["skipped"] = skipped;
        out["exit"] = run.exitCode;
        return out;
      },
      py::arg("document"), py::arg("levels") = std::vector<std::string>{}, py::arg("all_witnesses") = false);

  m.def(
      "run_cli",
      [](const std::vector<std::string>& args) {
        std::ostringstream out, err;
        int code;
        {
          py::gil_scoped_release nogil;
          code = cliMain(args, out, err);
        }
        return py::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"));
}
