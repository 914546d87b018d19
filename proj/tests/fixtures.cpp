#include "fixtures.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

using namespace enriched;

namespace fixtures {

Document baseDocument(const SymmetricMonoidal& s, int k, bool withSymmetry) {
  Document d(share(fromSymmetric(s, k)), "base");
  if (withSymmetry) d.symmetry = s.symmetry;
  return d;
}

SymmetricMonoidal graded23() {
  return gradedSymmetric(2, 3, [](int, int) { return 0; });
}

Document tower() {
  auto base = share(deloopedCyclic(2));
  Document d(base, "bz3");
  auto z3 = monoidCategory({"e"_m, "g"_m, "h"_m}, [](int i, int j) { return (i + j) % 3; });
  auto lz = monoidCategory({"e"_m, "x"_m, "y"_m}, [](int i, int j) { return i == 0 ? j : i; });
  auto arrowCat = thinCategory({"a"_o, "b"_o}, {{"a"_o, "a"_o}, {"b"_o, "b"_o}, {"a"_o, "b"_o}});
  V2Gauge phi;
  phi[{"a"_o, "b"_o}][{"a->b"_o, "a->b"_o}] = gradeMorphism(1, 0, 1);
  std::vector<std::pair<std::string, V2CategoryRef>> cats{
      {"z3", ref(locallyChaoticV2(base, z3))},
      {"lz", ref(locallyChaoticV2(base, lz))},
      {"arrow", ref(gaugeV2(locallyChaoticV2(base, arrowCat), phi))}};
  for (const auto& [n, u] : cats) {
    d.add(n, u);
    auto id = ref(identityV2Functor(u));
    d.add("id-" + n, id);
    auto nat = ref(idNat(id));
    d.add("idnat-" + n, nat);
    d.add("idmod-" + n, ref(idModification(nat)));
  }
  return d;
}

void setRow(json& table, const std::vector<std::string>& key, const std::string& value) {
  for (auto& row : table) {
    bool match = row.size() == key.size() + 1;
    for (std::size_t k = 0; match && k < key.size(); ++k) match = row[k] == key[k];
    if (match) {
      row.back() = value;
      return;
    }
  }
  throw std::runtime_error("no row " + json(key).dump() + " in " + table.dump());
}

namespace {

Document bz3Corpus() { return corpus("bz3", 1); }
Document boolCorpus() { return corpus("bool", 1); }

json& find(json& arr, const char* key, const std::string& value) {
  for (auto& x : arr)
    if (x[key] == value) return x;
  throw std::runtime_error("no entry with " + std::string(key) + " = " + value);
}

}  // namespace

const std::vector<Mutation>& mutations() {
  static const std::vector<Mutation> ms{
      {"M01", "base composition s2.s2 := id instead of s", Level::Base, "category/associativity",
       [] { return baseDocument(graded23(), 1); },
       [](json& j) { setRow(j["base"]["composition"], {"s2_0", "s2_0"}, "id_0"); }},
      {"M02", "tensor of morphisms id_1 (x) s2_0 := id_0 (wrong codomain)", Level::Base,
       "tensor-bifunctor/preserves-dom-cod", [] { return baseDocument(graded23(), 1); },
       [](json& j) { setRow(j["base"]["tensors"][0]["morphisms"], {"id_1", "s2_0"}, "id_0"); }},
      {"M03", "tensor of objects 0 (x) 0 := 1", Level::Base, "strict-unit-objects",
       [] { return baseDocument(graded23(), 1); },
       [](json& j) { setRow(j["base"]["tensors"][0]["objects"], {"0", "0"}, "1"); }},
      {"M04", "tensor of morphisms id_1 (x) s2_0 := id_1", Level::Base, "associator-naturality",
       [] { return baseDocument(graded23(), 1); },
       [](json& j) { setRow(j["base"]["tensors"][0]["morphisms"], {"id_1", "s2_0"}, "id_1"); }},
      {"M05", "associator a_{0,0,0} := s2_0", Level::Base, "pentagon", [] { return baseDocument(graded23(), 1); },
       [](json& j) { setRow(j["base"]["associators"][0], {"0", "0", "0"}, "s2_0"); }},
      {"M06", "second tensor of morphisms id_1 (x)_1 s2_0 := id_1 on a 2-fold base", Level::Base,
       "interchange-naturality", [] { return baseDocument(graded23(), 2); },
       [](json& j) { setRow(j["base"]["tensors"][0]["morphisms"], {"id_1", "s2_0"}, "id_1"); }},
      {"M07", "interchange eta^{12}_{****} := s2 over B(Z/3)", Level::Base, "internal-unit",
       [] { return baseDocument(cyclicSymmetric(3), 2); },
       [](json& j) { setRow(j["base"]["interchanges"][0]["components"], {"*", "*", "*", "*"}, "s2_*"); }},
      {"M08", "first associator a_{1,1,1} := s_1 on super Z/2", Level::Base, "internal-associativity",
       [] { return baseDocument(superZ2Symmetric(), 2); },
       [](json& j) { setRow(j["base"]["associators"][0], {"1", "1", "1"}, "s_1"); }},
      {"M09", "second associator a_{1,1,1} := s_1 on super Z/2", Level::Base, "external-associativity",
       [] { return baseDocument(superZ2Symmetric(), 2); },
       [](json& j) { setRow(j["base"]["associators"][1], {"1", "1", "1"}, "s_1"); }},
      {"M10", "interchange eta^{12}_{0,1,1,0} := s2_0 on a 3-fold base", Level::Base, "hexagon",
       [] { return baseDocument(graded23(), 3); },
       [](json& j) { setRow(j["base"]["interchanges"][0]["components"], {"0", "1", "1", "0"}, "s2_0"); }},
      {"M11", "symmetry c_{0,1} := s_1", Level::Base, "symmetry-involution",
       [] { return baseDocument(superZ2Symmetric(), 1, true); },
       [](json& j) { setRow(j["base"]["symmetry"], {"0", "1"}, "s_1"); }},
      {"M12", "associator a_{1,1,1} := s_1 under a symmetry", Level::Base, "symmetry-hexagon",
       [] { return baseDocument(superZ2Symmetric(), 1, true); },
       [](json& j) { setRow(j["base"]["associators"][0], {"1", "1", "1"}, "s_1"); }},
      {"M13", "V-category composition M_{p,q,p} := s2", Level::VCategory, "pentagon", bz3Corpus,
       [](json& j) { setRow(j["vcategories"]["A1"]["composition"], {"p", "q", "p"}, "s2_*"); }},
      {"M14", "V-category composition M_{p,q,q} := s2", Level::VCategory, "unit-left", bz3Corpus,
       [](json& j) { setRow(j["vcategories"]["A1"]["composition"], {"p", "q", "q"}, "s2_*"); }},
      {"M15", "V-functor hom component id_{p,q} := s2", Level::VFunctor, "composition-square", bz3Corpus,
       [](json& j) { setRow(j["vfunctors"]["id1"]["homs"], {"p", "q"}, "s2_*"); }},
      {"M16", "V-natural transformation component at p := s2", Level::VNat, "naturality", bz3Corpus,
       [](json& j) { setRow(j["vnats"]["idnat1"]["components"], {"p"}, "s2_*"); }},
      {"M17", "V-2-category composition M^{***} hom component := s2", Level::V2Category, "pentagon", tower,
       [](json& j) {
         auto& m = j["v2categories"]["z3"]["composition"][0]["homs"];
         setRow(m, {"(g,g)", "(g,g)"}, "s2_*");
       }},
      {"M18", "V-2-category unit J_*(0) := t", Level::V2Category, "unit-left", boolCorpus,
       [](json& j) { find(j["v2categories"]["join"]["units"], "at", "*")["cell"] = "t"; }},
      {"M19", "V-2-functor object map on 1-cells g := h", Level::V2Functor, "composition-square", tower,
       [](json& j) { setRow(j["v2functors"]["id-z3"]["homs"][0]["objects"], {"g"}, "h"); }},
      {"M20", "V-2-natural transformation cell e := x", Level::V2Nat, "naturality", tower,
       [](json& j) { find(j["v2nats"]["idnat-lz"]["components"], "at", "*")["cell"] = "x"; }},
      {"M21", "modification component at a := s", Level::Modification, "modification", tower,
       [](json& j) { setRow(j["modifications"]["idmod-arrow"]["components"], {"a"}, "s_*"); }},
  };
  return ms;
}

MutationOutcome runMutation(const Mutation& m) {
  json j = json::parse(serialize(m.fixture()));
  m.apply(j);
  auto path = std::filesystem::temp_directory_path() / ("enriched-" + m.id + ".json");
  {
    std::ofstream out(path);
    out << j.dump(2) << "\n";
  }
  MutationOutcome o;
  std::ostringstream report, err;
  CheckFlags flags;
  flags.format = Format::Jsonl;
  o.exitCode = runCheck(path, flags, report, err);
  std::filesystem::remove(path);
  std::istringstream lines(report.str());
  std::string line;
  const std::string level(levelName(m.level));
  while (std::getline(lines, line)) {
    auto r = json::parse(line);
    if (r["record"] == "check" && r["status"] == "fail")
      o.failingCheckers.insert(r["level"].get<std::string>() + " " + r["name"].get<std::string>());
    if (r["record"] == "diagram" && r["failures"].get<int>() > 0 && r["level"] == level)
      o.families.insert(r["diagram"].get<std::string>());
    if (r["record"] == "witness" && r["diagram"] == m.family && r["level"] == level) o.witness = true;
    if (r["record"] == "error" || r["record"] == "input-error") o.detail += r["message"].get<std::string>() + "; ";
  }
  o.detail += err.str();
  return o;
}

}  // namespace fixtures
