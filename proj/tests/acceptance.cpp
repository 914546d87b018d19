// One line per acceptance criterion; exit status 1 if any fails.
#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "app.hpp"
#include "fixtures.hpp"

using namespace enriched;
using fixtures::json;
using Clock = std::chrono::steady_clock;

namespace {

struct Verdict {
  bool ok = true;
  std::string note;
  void require(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      note = what;
    } else if (!cond) {
      note += "; " + what;
    }
  }
};

double seconds(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

std::vector<SymmetricMonoidal> symmetricInputs() {
  return {boolSymmetric(), zmod2Symmetric(), superZ2Symmetric(), cyclicSymmetric(3), cyclicSymmetric(2),
          fixtures::graded23()};
}

std::vector<BaseRef> corpusBases() {
  std::vector<BaseRef> out;
  for (const auto& n : corpusBaseNames()) out.push_back(corpusBase(n).base);
  return out;
}

Verdict criterion1() {
  Verdict v;
  auto t0 = Clock::now();
  auto b = checkKFold(boolPoset(2));
  auto z = checkKFold(zmod2(3));
  v.require(b.passed(), "boolPoset(2) fails checkKFold");
  v.require(z.passed(), "zmod2(3) fails checkKFold");
  v.require(z.tally("hexagon") && !z.vacuous("hexagon"), "hexagon vacuous for zmod2(3)");
  auto t = seconds(t0);
  v.require(t < 10, "took " + std::to_string(t) + " s");
  if (v.ok)
    v.note = "hexagon instances " + std::to_string(z.tally("hexagon")->instances) + ", " + std::to_string(t) + " s";
  return v;
}

Verdict criterion2() {
  Verdict v;
  std::size_t n = 0;
  for (const auto& base : corpusBases()) {
    const auto& V = *base;
    const auto& I = V.unit();
    const auto& c = V.category();
    for (int i = 1; i <= V.tensorCount(); ++i)
      for (int j = i + 1; j <= V.tensorCount(); ++j)
        for (const auto& a : c.objects())
          for (const auto& b : c.objects()) {
            auto idj = c.id(V.tensorObj(j, a, b));
            auto idi = c.id(V.tensorObj(i, a, b));
            v.require(V.interchange(i, j, a, b, I, I) == idj, "eta_ABII");
            v.require(V.interchange(i, j, I, I, a, b) == idj, "eta_IIAB");
            v.require(V.interchange(i, j, a, I, b, I) == idi, "eta_AIBI");
            v.require(V.interchange(i, j, I, a, I, b) == idi, "eta_IAIB");
            n += 4;
          }
  }
  if (v.ok) v.note = std::to_string(n) + " equalities over " + std::to_string(corpusBases().size()) + " bases";
  return v;
}

Verdict criterion3() {
  Verdict v;
  std::size_t runs = 0;
  for (const auto& s : symmetricInputs())
    for (int k = 1; k <= 3; ++k) {
      v.require(checkKFold(fromSymmetric(s, k)).passed(), "fromSymmetric output fails checkKFold");
      ++runs;
    }
  auto b = fromSymmetric(boolSymmetric(), 3);
  std::size_t etas = 0;
  for (const auto& [ij, table] : b.interchanges())
    for (const auto& [abcd, m] : table) {
      v.require(b.category().isIdentity(m), "Bool eta not an identity");
      ++etas;
    }
  if (v.ok) v.note = std::to_string(runs) + " outputs checked, " + std::to_string(etas) + " Bool eta components";
  return v;
}

Verdict criterion4() {
  Verdict v;
  auto t0 = Clock::now();
  std::vector<BaseRef> bases{share(boolPoset(2)), share(zmod2(3))};
  std::size_t pairs = 0;
  for (std::uint64_t seed = 1; seed <= 26; ++seed)
    for (const auto& base : bases) {
      Rng rng(seed);
      auto A = ref(randomVCategory(rng, base, {}).value);
      auto B = ref(randomVCategory(rng, base, {}).value);
      auto C = ref(randomVCategory(rng, base, {}).value);
      auto D = ref(randomVCategory(rng, base, {}).value);
      ++pairs;
      auto I = unitVCategoryRef(base);
      const int n = base->tensorCount();
      for (int i = 1; i < n; ++i) {
        v.require(checkVCategory(productVCat(i, *A, *B)).passed(), "productVCat fails");
        v.require(checkVFunctor(assocVCat(i, A, B, C)).passed(), "assocVCat fails");
        ObjMap l, r;
        for (const auto& a : A->objects()) {
          l[pairId(ObjId("0"), a)] = a;
          r[pairId(a, ObjId("0"))] = a;
        }
        v.require(renameObjects(productVCat(i, *I, *A), l) == *A, "I (x) A does not relabel to A");
        v.require(renameObjects(productVCat(i, *A, *I), r) == *A, "A (x) I does not relabel to A");
        for (int j = i + 1; j < n; ++j)
          v.require(checkVFunctor(interchangeVCat(i, j, A, B, C, D)).passed(), "interchangeVCat fails");
      }
    }
  auto t = seconds(t0);
  v.require(pairs >= 50, "only " + std::to_string(pairs) + " pairs");
  v.require(t < 60, "took " + std::to_string(t) + " s");
  if (v.ok) v.note = std::to_string(pairs) + " seeded pairs, " + std::to_string(t) + " s";
  return v;
}

template <class Cell>
void agrees(Verdict& v, const std::vector<Cell>& ways, const std::string& what) {
  for (std::size_t k = 1; k < ways.size(); ++k) {
    if constexpr (std::is_same_v<Cell, V2NatTransform>)
      v.require(!natDifference(ways[0], ways[k]), what + " ways disagree");
    else
      v.require(!modDifference(ways[0], ways[k]), what + " ways disagree");
  }
}

// every v2cat construction on the cells of one pasting
void level2Closure(Verdict& v, const Pasting& p) {
  auto fun = [&](const V2Functor& t, const char* what) { v.require(checkV2Functor(t).passed(), what); };
  auto nat = [&](const V2NatTransform& a, const char* what) { v.require(checkV2Nat(a).passed(), what); };
  auto mod = [&](const VModification& m, const char* what) { v.require(checkModification(m).passed(), what); };
  for (const auto& u : {p.U, p.V, p.W}) v.require(checkV2Category(*u).passed(), "input V-2-category");
  fun(composeV2Functors(p.G, p.F), "composeV2Functors");
  fun(composeV2Functors(p.Q, p.P), "composeV2Functors");
  fun(identityV2Functor(p.U), "identityV2Functor");
  nat(idNat(p.F), "idNat");
  nat(composeNatAlongFunctor(p.alpha[1], p.alpha[0]), "composeNatAlongFunctor");
  nat(whiskerFunctorNat(p.G, p.alpha[0]), "whiskerFunctorNat");
  nat(whiskerNatFunctor(p.alpha[2], p.F), "whiskerNatFunctor");
  auto hr = hcompNatsAlongCategoryRoutes(p.alpha[2], p.alpha[0]);
  agrees<V2NatTransform>(v, {hr.viaSource, hr.viaTarget}, "hcompNatsAlongCategory");
  nat(hr.viaSource, "hcompNatsAlongCategory");
  mod(idModification(p.alpha[0]), "idModification");
  mod(vcompModifications(p.nu[0], p.mu[0]), "vcompModifications");
  mod(whiskerNatModLeft(p.alpha[1], p.mu[0]), "whiskerNatModLeft");
  mod(whiskerNatModRight(p.mu[1], p.alpha[0]), "whiskerNatModRight");
  mod(whiskerFunctorMod(p.G, p.mu[0]), "whiskerFunctorMod");
  mod(whiskerModFunctor(p.mu[2], p.F), "whiskerModFunctor");
  for (auto [routes, what] : {std::pair{hcompModificationsAlongNatRoutes(p.mu[1], p.mu[0]), "hcompModificationsAlongNat"},
                              std::pair{whiskerNatModAlongCategoryRoutes(p.alpha[2], p.mu[0]), "whiskerNatModAlongCategory"},
                              std::pair{whiskerModNatAlongCategoryRoutes(p.mu[2], p.alpha[0]), "whiskerModNatAlongCategory"},
                              std::pair{hcompModsAlongCategoryRoutes(p.mu[2], p.mu[0]), "hcompModsAlongCategory"}}) {
    agrees(v, routes.ways, what);
    mod(routes.ways.at(0), what);
  }
}

// seeded pastings shared by criteria 5 and 6
std::vector<Pasting>& seededPastings() {
  static std::vector<Pasting> ps = [] {
    std::vector<Pasting> out;
    out.push_back(identityPasting(joinMonoidModel(corpusBase("bool").base)));
    for (const auto& name : {"bool", "bz3", "superz2", "bool3"})
      for (std::uint64_t seed = 1; seed <= 13; ++seed) {
        Rng rng(seed);
        out.push_back(randomPasting(rng, corpusBase(name).base, {}));
      }
    return out;
  }();
  return ps;
}

Verdict criterion5() {
  Verdict v;
  auto t0 = Clock::now();
  std::size_t instances = 0;
  for (const auto& p : seededPastings()) {
    level2Closure(v, p);
    ++instances;
  }
  // standalone V-2-categories up to the full bounds, with the unit and product constructions
  std::size_t products = 0;
  for (const auto& name : {"bool3", "zmod2", "superz2", "bz3"}) {
    auto base = corpusBase(name).base;
    auto unit = ref(unitV2Category(base));
    v.require(checkV2Category(*unit).passed(), "unitV2Category");
    for (std::uint64_t seed = 1; seed <= 4; ++seed) {
      Rng rng(100 + seed);
      auto u = randomV2Category(rng, base, {}).value.value;
      v.require(checkV2Category(*u).passed(), "random V-2-category");
      ++instances;
      if (base->tensorCount() < 3) continue;
      v.require(checkV2Category(productV2Cat(1, u, unit)).passed(), "productV2Cat");
      auto left = productV2Cat(1, unit, u);
      v.require(checkV2Category(left).passed(), "productV2Cat with the unit");
      ObjMap obs;
      std::map<std::pair<ObjId, ObjId>, ObjMap> cells;
      for (const auto& a : u->objects()) obs[pairId(ObjId("0"), a)] = a;
      for (const auto& [ab, h] : u->homs())
        for (const auto& f : h->objects())
          cells[{pairId(ObjId("0"), ab.first), pairId(ObjId("0"), ab.second)}][pairId(ObjId("0"), f)] = f;
      v.require(relabelV2(left, obs, cells) == *u, "I (x) U does not relabel to U");
      ++products;
    }
  }
  v.require(instances >= 50, "only " + std::to_string(instances) + " instances");
  if (v.ok)
    v.note = std::to_string(instances) + " instances, " + std::to_string(products) + " unit products, " +
             std::to_string(seconds(t0)) + " s";
  return v;
}

Verdict criterion6() {
  Verdict v;
  std::size_t n = 0;
  auto suite = [&](const Pasting& p) {
    auto r = exchangeSuite(p);
    v.require(r.passed(), "exchange fails on " + p.name);
    for (int k = 1; k <= 4; ++k) {
      auto d = "exchange-" + std::to_string(k);
      v.require(r.tally(d) && !r.vacuous(d), d + " vacuous");
    }
    ++n;
  };
  for (const auto& name : corpusBaseNames()) {
    auto doc = corpus(name, 1);
    for (const auto& [pn, _] : doc.pastings) suite(doc.pasting(pn));
  }
  for (const auto& p : seededPastings()) suite(p);

  // a corrupted M2 entry of the middle V-2-category breaks the identities
  Rng rng(1);
  Document d = corpusBase("bz3");
  d.add("p", randomPasting(rng, d.base, {}));
  json j = json::parse(serialize(d));
  auto& m2 = j["v2categories"][d.pastings.at("p").V]["composition"][0]["homs"];
  fixtures::setRow(m2, {"(A->A,A->A)", "(A->A,A->A)"}, "s2_*");
  auto broken = exchangeSuite(parseDocument(j.dump()).pasting("p"));
  v.require(!broken.passed(), "corrupted M2 went unnoticed");
  if (v.ok) v.note = std::to_string(n) + " pastings; corrupted M2 fails " + std::to_string(broken.failingDiagrams().size()) + " identities";
  return v;
}

Verdict criterion7() {
  Verdict v;
  std::size_t n = 0;
  for (const auto& m : fixtures::mutations()) {
    auto o = fixtures::runMutation(m);
    const std::string level(levelName(m.level));
    bool oneChecker = o.failingCheckers.size() == 1 && o.failingCheckers.begin()->rfind(level + " ", 0) == 0;
    bool ok = o.exitCode == 1 && oneChecker && o.families.count(m.family) && o.witness;
    std::string got;
    for (const auto& c : o.failingCheckers) got += "[" + c + "]";
    for (const auto& f : o.families) got += " " + f;
    std::cout << "  " << m.id << " " << (ok ? "ok  " : "BAD ") << level << " " << m.family << " <- "
              << m.description << " | exit " << o.exitCode << ", failing " << got << "\n";
    v.require(ok, m.id);
    ++n;
  }
  v.require(n >= 20, "fewer than 20 mutations");
  if (v.ok) v.note = std::to_string(n) + " mutations, each caught by exactly its checker";
  return v;
}

Verdict criterion8() {
  Verdict v;
  std::size_t n = 0;
  for (const auto& p : seededPastings()) {
    for (std::size_t k = 0; k < 4; ++k) {
      const auto& a = p.alpha[k];
      auto idT = ref(idNat(a->sourceRef()));
      auto idS = ref(idNat(a->targetRef()));
      v.require(composeNatAlongFunctor(idS, a) == *a, "1_S * a != a");
      v.require(composeNatAlongFunctor(a, idT) == *a, "a * 1_T != a");
      const auto& m = p.mu[k];
      v.require(vcompModifications(ref(idModification(m->targetRef())), m) == *m, "1 . m != m");
      v.require(vcompModifications(m, ref(idModification(m->sourceRef()))) == *m, "m . 1 != m");
      n += 4;
    }
    // 1_{1_{1_X}} on both sides of a horizontal composite of modifications
    auto triple = [](const V2CategoryRef& x) {
      return ref(idModification(ref(idNat(ref(identityV2Functor(x))))));
    };
    const auto& m = p.mu[0];
    v.require(!modDifference(hcompModsAlongCategory(triple(p.V), m), *m), "1_{1_{1_V}} m != m");
    v.require(!modDifference(hcompModsAlongCategory(m, triple(p.U)), *m), "m 1_{1_{1_U}} != m");
    const auto& a = p.alpha[0];
    auto one = ref(idNat(ref(identityV2Functor(p.V))));
    v.require(!natDifference(hcompNatsAlongCategory(one, a), *a), "1_{1_V} a != a");
    n += 3;
    // (1_T)_U = J_TU and (1_{1_{1_U}})_U = j_{1_U}
    for (const auto& T : {p.F, p.H, p.G}) {
      auto idT = idNat(T);
      for (const auto& u : T->source().objects()) {
        const auto& tu = T->object(u);
        v.require(vfunctorEqual(idT.component(u), T->target().identity(tu)), "(1_T)_U != J_TU");
        ++n;
      }
    }
    auto t = triple(p.U);
    for (const auto& u : p.U->objects()) {
      v.require(t->components().at(u) == p.U->hom(u, u).identity(p.U->unitCell(u)), "(1_{1_{1_U}})_U != j_{1_U}");
      ++n;
    }
  }
  if (v.ok) v.note = std::to_string(n) + " identity equalities";
  return v;
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Verdict criterion9() {
  Verdict v;
  auto dir = std::filesystem::temp_directory_path() / "enriched-acceptance";
  std::filesystem::create_directories(dir);
  for (const auto& name : corpusBaseNames()) {
    auto path = dir / (name + ".json");
    std::ostringstream out, err;
    v.require(cliMain({"corpus", "--base", name, "--seed", "1", "-o", path.string()}, out, err) == 0, "corpus " + name);
    auto first = slurp(path);
    saveDocument(loadDocument(path), path);
    v.require(slurp(path) == first, "round-trip changes " + name);
    std::ostringstream again;
    cliMain({"corpus", "--base", name, "--seed", "1"}, again, err);
    v.require(again.str() == first, "corpus output not deterministic for " + name);
  }
  std::filesystem::remove_all(dir);

  // golden cases: args, exit code and stdout, replayed in process
  std::size_t cases = 0;
  const std::filesystem::path golden = GOLDEN_DIR;
  auto cwd = std::filesystem::current_path();
  std::filesystem::current_path(golden);
  for (const auto& e : std::filesystem::directory_iterator(golden)) {
    if (e.path().extension() != ".args") continue;
    std::istringstream line(slurp(e.path()));
    std::vector<std::string> args;
    for (std::string a; line >> a;) args.push_back(a);
    auto stem = e.path();
    std::ostringstream out, err;
    int code = cliMain(args, out, err);
    int expected = std::stoi(slurp(stem.replace_extension(".exit")));
    v.require(code == expected, e.path().filename().string() + " exit " + std::to_string(code));
    auto outFile = stem.replace_extension(".out");
    if (auto same = stem.replace_extension(".same"); std::filesystem::exists(same)) {
      std::istringstream name(slurp(same));
      std::string other;
      name >> other;
      outFile = golden / other;
    }
    if (std::filesystem::exists(outFile))
      v.require(out.str() == slurp(outFile), e.path().filename().string() + " stdout differs");
    ++cases;
  }
  std::filesystem::current_path(cwd);
  v.require(cases >= 8, "only " + std::to_string(cases) + " golden cases");
  if (v.ok) v.note = std::to_string(corpusBaseNames().size()) + " corpus files byte-stable, " + std::to_string(cases) + " golden cases";
  return v;
}

}  // namespace

int main() {
  std::vector<std::pair<std::string, Verdict (*)()>> criteria{
      {"1 boolPoset(2), zmod2(3) pass checkKFold with nonvacuous hexagon", criterion1},
      {"2 unit laws for eta as exact equalities", criterion2},
      {"3 fromSymmetric outputs pass, Bool eta are identities", criterion3},
      {"4 level-1 closure and strict unit relabeling on seeded pairs", criterion4},
      {"5 level-2 closure and two-way agreement on seeded instances", criterion5},
      {"6 exchange identities on every pasting", criterion6},
      {"7 single-entry mutations caught by the expected checker", criterion7},
      {"8 identity laws", criterion8},
      {"9 CLI round-trip and exit-code contract", criterion9},
  };
  int failures = 0;
  for (const auto& [name, run] : criteria) {
    Verdict v;
    try {
      v = run();
    } catch (const std::exception& e) {
      v.ok = false;
      v.note = std::string("threw ") + e.what();
    }
    std::cout << (v.ok ? "PASS " : "FAIL ") << "criterion " << name << " -- " << v.note << std::endl;
    failures += !v.ok;
  }
  return failures ? 1 : 0;
}
