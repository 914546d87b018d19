#include "enriched/corpus.hpp"

namespace enriched {

namespace {

struct BaseSpec {
  std::string name;
  SymmetricMonoidal (*sym)();
  int k;
};

SymmetricMonoidal cyclic3() { return cyclicSymmetric(3); }

const std::vector<BaseSpec>& specs() {
  static const std::vector<BaseSpec> s{{"bool", &boolSymmetric, 2},
                                        {"bool3", &boolSymmetric, 3},
                                        {"zmod2", &zmod2Symmetric, 3},
                                        {"superz2", &superZ2Symmetric, 2},
                                        {"bz3", &cyclic3, 2}};
  return s;
}

bool isBool(const Document& d) { return d.baseName == "bool" || d.baseName == "bool3"; }

void addPasting(Document& d, const std::string& name, const Pasting& p) {
  validatePasting(p);
  d.add(name, p);
}

}  // namespace

const std::vector<std::string>& corpusBaseNames() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& s : specs()) out.push_back(s.name);
    return out;
  }();
  return names;
}

Document corpusBase(const std::string& name) {
  for (const auto& s : specs())
    if (s.name == name) {
      auto sym = s.sym();
      Document d(share(fromSymmetric(sym, s.k)), name);
      d.symmetry = sym.symmetry;
      return d;
    }
  fail(ErrorKind::ConstructionFailed, "unknown corpus base \"" + name + "\"");
}

Document corpus(const std::string& name, std::uint64_t seed) {
  Document d = corpusBase(name);
  const auto& base = d.base;
  Rng rng(seed);
  Bounds bounds;

  // level 1
  std::vector<VCategoryRef> cats;
  if (isBool(d)) {
    std::vector<ObjId> obs{ObjId("a"), ObjId("b"), ObjId("c")};
    cats.push_back(ref(preorderVCat(base, obs, {{obs[0], obs[0]}, {obs[1], obs[1]}, {obs[2], obs[2]}, {obs[0], obs[1]}, {obs[1], obs[2]}, {obs[0], obs[2]}})));
  } else if (name == "zmod2") {
    cats.push_back(ref(cocycleVCat(base, {{ObjId("a"), 0}, {ObjId("b"), 1}, {ObjId("c"), 1}})));
  }
  cats.push_back(ref(chaoticVCat(base, {ObjId("p"), ObjId("q")})));
  for (int k = 0; k < 3; ++k) cats.push_back(ref(randomVCategory(rng, base, bounds).value));
  for (std::size_t k = 0; k < cats.size(); ++k) d.add("A" + std::to_string(k + 1), cats[k]);
  d.add("I", unitVCategoryRef(base));
  auto prod = productVCatRef(1, cats[0], cats[1]);
  d.add("A1xA2", prod);
  d.add("assoc", ref(assocVCat(1, cats[0], cats[1], cats[2])));
  d.add("unitor", ref(leftUnitor(1, cats[1])));
  for (std::size_t k = 0; k < cats.size(); ++k) {
    auto id = identityVFunctor(cats[k]);
    d.add("id" + std::to_string(k + 1), ref(id));
    d.add("idnat" + std::to_string(k + 1), ref(identityVNat(id)));
  }

  // level 2
  std::vector<V2Model> models;
  if (isBool(d)) models.push_back(joinMonoidModel(base));
  for (int k = 0; k < 2; ++k) models.push_back(randomV2Category(rng, base, bounds).value);
  for (std::size_t k = 0; k < models.size(); ++k)
    d.add(isBool(d) && k == 0 ? std::string("join") : "U" + std::to_string(k + 1), models[k].value);
  d.add("unit2", ref(unitV2Category(base)));
  if (base->tensorCount() >= 3) d.add("U2xU3", ref(productV2Cat(1, models.end()[-2].value, models.back().value)));

  auto t = randomV2Functor(rng, models[0], models.back(), bounds).value;
  d.add("T", t.value);
  auto s = ref(identityV2Functor(models[0].value));
  d.add("idU", s);
  d.add("idnatU", ref(idNat(s)));
  if (auto a = randomV2Nat(rng, identityModel(models[0]), identityModel(models[0]), bounds)) {
    d.add("alpha", a->value);
    if (auto m = randomModification(rng, a->value, a->value, bounds)) d.add("mu", m->value);
  }

  addPasting(d, "identity", identityPasting(models[0]));
  for (int k = 0; k < 2; ++k) addPasting(d, "pasting" + std::to_string(k + 1), randomPasting(rng, base, bounds));
  return d;
}

void appendFuzz(Document& doc, std::uint64_t seed, std::size_t count, const Bounds& bounds) {
  Rng rng(seed);
  for (std::size_t k = 0; k < count; ++k) {
    auto name = "fuzz" + std::to_string(k + 1);
    if (doc.base->tensorCount() >= 2 && k % 2 == 1)
      addPasting(doc, name, randomPasting(rng, doc.base, bounds));
    else
      doc.add(name, ref(randomVCategory(rng, doc.base, bounds).value));
  }
}

}  // namespace enriched
