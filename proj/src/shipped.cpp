#include "enriched/shipped.hpp"

namespace enriched {

namespace {

int mod(int a, int n) { return ((a % n) + n) % n; }

}  // namespace

ObjId gradeObject(int grades, int x) {
  return grades == 1 ? ObjId("*") : ObjId(std::to_string(x));
}

MorId gradeMorphism(int grades, int x, int a) {
  const std::string o = gradeObject(grades, x).str();
  if (a == 0) return MorId("id_" + o);
  if (a == 1) return MorId("s_" + o);
  return MorId("s" + std::to_string(a) + "_" + o);
}

SymmetricMonoidal gradedSymmetric(int grades, int auts, const std::function<int(int, int)>& braid) {
  if (grades < 1 || auts < 1) fail(ErrorKind::MalformedTable, "graded base needs positive orders");
  std::vector<ObjId> obs;
  std::map<MorId, Arrow> arrows;
  std::map<ObjId, MorId> ids;
  CompositionTable comp;
  for (int x = 0; x < grades; ++x) {
    auto o = gradeObject(grades, x);
    obs.push_back(o);
    ids.emplace(o, gradeMorphism(grades, x, 0));
    for (int a = 0; a < auts; ++a) {
      arrows.emplace(gradeMorphism(grades, x, a), Arrow{o, o});
      for (int b = 0; b < auts; ++b)
        comp.emplace(std::pair{gradeMorphism(grades, x, a), gradeMorphism(grades, x, b)},
                     gradeMorphism(grades, x, mod(a + b, auts)));
    }
  }
  TensorTable t;
  AssociatorTable assoc;
  std::map<std::pair<ObjId, ObjId>, MorId> sym;
  for (int x = 0; x < grades; ++x)
    for (int y = 0; y < grades; ++y) {
      t.objects.emplace(std::pair{gradeObject(grades, x), gradeObject(grades, y)},
                        gradeObject(grades, mod(x + y, grades)));
      for (int a = 0; a < auts; ++a)
        for (int b = 0; b < auts; ++b)
          t.morphisms.emplace(std::pair{gradeMorphism(grades, x, a), gradeMorphism(grades, y, b)},
                              gradeMorphism(grades, mod(x + y, grades), mod(a + b, auts)));
      sym.emplace(std::pair{gradeObject(grades, x), gradeObject(grades, y)},
                  gradeMorphism(grades, mod(x + y, grades), mod(braid(x, y), auts)));
      for (int z = 0; z < grades; ++z)
        assoc.emplace(std::array{gradeObject(grades, x), gradeObject(grades, y), gradeObject(grades, z)},
                      gradeMorphism(grades, mod(x + y + z, grades), 0));
    }
  FinCategory c(std::move(obs), std::move(arrows), std::move(ids), std::move(comp));
  KFoldMonoidal m(std::move(c), gradeObject(grades, 0), {std::move(t)}, {std::move(assoc)}, {});
  return SymmetricMonoidal{std::move(m), std::move(sym)};
}

SymmetricMonoidal zmod2Symmetric() {
  return gradedSymmetric(2, 1, [](int, int) { return 0; });
}

SymmetricMonoidal superZ2Symmetric() {
  return gradedSymmetric(2, 2, [](int x, int y) { return x * y; });
}

SymmetricMonoidal cyclicSymmetric(int order) {
  return gradedSymmetric(1, order, [](int, int) { return 0; });
}

SymmetricMonoidal boolSymmetric() {
  const ObjId bot("bot"), top("top");
  const MorId ib("id_bot"), it("id_top"), u("u");
  std::map<MorId, Arrow> arrows{{ib, {bot, bot}}, {it, {top, top}}, {u, {bot, top}}};
  CompositionTable comp{{{ib, ib}, ib}, {{it, it}, it}, {{u, ib}, u}, {{it, u}, u}};
  FinCategory c({bot, top}, arrows, {{bot, ib}, {top, it}}, comp);
  auto meet = [&](const ObjId& x, const ObjId& y) { return x == top && y == top ? top : bot; };
  auto thin = [&](const ObjId& x, const ObjId& y) { return x == y ? (x == top ? it : ib) : u; };
  TensorTable t;
  for (const auto& x : {bot, top})
    for (const auto& y : {bot, top}) t.objects.emplace(std::pair{x, y}, meet(x, y));
  for (const auto& [f, fa] : arrows)
    for (const auto& [g, ga] : arrows)
      t.morphisms.emplace(std::pair{f, g}, thin(meet(fa.dom, ga.dom), meet(fa.cod, ga.cod)));
  AssociatorTable assoc;
  std::map<std::pair<ObjId, ObjId>, MorId> sym;
  for (const auto& x : {bot, top})
    for (const auto& y : {bot, top}) {
      sym.emplace(std::pair{x, y}, thin(meet(x, y), meet(x, y)));
      for (const auto& z : {bot, top}) assoc.emplace(std::array{x, y, z}, thin(meet(meet(x, y), z), meet(meet(x, y), z)));
    }
  KFoldMonoidal m(std::move(c), top, {std::move(t)}, {std::move(assoc)}, {});
  return SymmetricMonoidal{std::move(m), std::move(sym)};
}

KFoldMonoidal boolPoset(int k) { return fromSymmetric(boolSymmetric(), k); }
KFoldMonoidal zmod2(int k) { return fromSymmetric(zmod2Symmetric(), k); }
KFoldMonoidal superZ2(int k) { return fromSymmetric(superZ2Symmetric(), k); }
KFoldMonoidal deloopedCyclic(int k, int order) { return fromSymmetric(cyclicSymmetric(order), k); }

BaseRef share(KFoldMonoidal v) { return std::make_shared<const KFoldMonoidal>(std::move(v)); }

VCategory preorderVCat(const BaseRef& V, const std::vector<ObjId>& objects,
                       const std::set<std::pair<ObjId, ObjId>>& leq) {
  const ObjId bot("bot"), top("top");
  const auto& c = V->category();
  if (!c.hasObject(bot) || !c.hasObject(top) || V->unit() != top)
    fail(ErrorKind::NotPreorder, "preorderVCat needs the Bool base");
  auto rel = [&](const ObjId& a, const ObjId& b) { return leq.count({a, b}) > 0; };
  for (const auto& a : objects)
    if (!rel(a, a)) fail(ErrorKind::NotPreorder, "not reflexive at " + a.str());
  for (const auto& a : objects)
    for (const auto& b : objects)
      for (const auto& d : objects)
        if (rel(a, b) && rel(b, d) && !rel(a, d))
          fail(ErrorKind::NotPreorder, "not transitive at " + a.str() + "," + b.str() + "," + d.str());
  auto thin = [&](const ObjId& x, const ObjId& y) -> MorId {
    const auto& h = c.hom(x, y);
    if (h.empty()) fail(ErrorKind::NotPreorder, "no morphism " + x.str() + "->" + y.str());
    return h.front();
  };
  HomTable hom;
  for (const auto& a : objects)
    for (const auto& b : objects) hom.emplace(std::pair{a, b}, rel(a, b) ? top : bot);
  CompTable comp;
  UnitTable unit;
  for (const auto& a : objects) {
    unit.emplace(a, thin(top, top));
    for (const auto& b : objects)
      for (const auto& d : objects)
        comp.emplace(std::array{a, b, d}, thin(V->tensorObj(1, hom.at({b, d}), hom.at({a, b})), hom.at({a, d})));
  }
  return VCategory(V, objects, std::move(hom), std::move(comp), std::move(unit));
}

VCategory cocycleVCat(const BaseRef& V, const std::map<ObjId, int>& potential) {
  const auto& c = V->category();
  std::vector<ObjId> objects;
  for (const auto& [a, p] : potential) objects.push_back(a);
  HomTable hom;
  for (const auto& [a, pa] : potential)
    for (const auto& [b, pb] : potential) {
      ObjId h(std::to_string(mod(pb - pa, 2)));
      if (!c.hasObject(h)) fail(ErrorKind::MalformedTable, "cocycleVCat needs a base graded by Z/2");
      hom.emplace(std::pair{a, b}, h);
    }
  CompTable comp;
  UnitTable unit;
  for (const auto& a : objects) {
    unit.emplace(a, c.id(hom.at({a, a})));
    for (const auto& b : objects)
      for (const auto& d : objects) comp.emplace(std::array{a, b, d}, c.id(hom.at({a, d})));
  }
  return VCategory(V, std::move(objects), std::move(hom), std::move(comp), std::move(unit));
}

VCategory chaoticVCat(const BaseRef& V, const std::vector<ObjId>& objects) {
  const auto& I = V->unit();
  const auto& idI = V->category().id(I);
  HomTable hom;
  CompTable comp;
  UnitTable unit;
  for (const auto& a : objects) {
    unit.emplace(a, idI);
    for (const auto& b : objects) {
      hom.emplace(std::pair{a, b}, I);
      for (const auto& d : objects) comp.emplace(std::array{a, b, d}, idI);
    }
  }
  return VCategory(V, objects, std::move(hom), std::move(comp), std::move(unit));
}

namespace {

MorId gaugeAt(const VCategory& A, const Gauge& phi, const ObjId& a, const ObjId& b) {
  auto it = phi.find({a, b});
  if (it == phi.end()) return A.base().category().id(A.hom(a, b));
  const auto& c = A.base().category();
  if (c.dom(it->second) != A.hom(a, b) || c.cod(it->second) != A.hom(a, b))
    fail(ErrorKind::ConstructionFailed, "gauge entry " + it->second.str() + " is not an endomorphism of hom(" +
                                            a.str() + "," + b.str() + ")");
  return it->second;
}

MorId inverseOf(const FinCategory& c, const MorId& f) {
  auto g = c.inverse(f);
  if (!g) fail(ErrorKind::ConstructionFailed, "gauge entry " + f.str() + " is not invertible");
  return *g;
}

}  // namespace

VCategory gaugeTransform(const VCategory& A, const Gauge& phi) {
  const auto& V = A.base();
  const auto& c = V.category();
  CompTable comp;
  UnitTable unit;
  for (const auto& a : A.objects()) {
    unit.emplace(a, compose(c, gaugeAt(A, phi, a, a), A.identity(a)));
    for (const auto& b : A.objects())
      for (const auto& d : A.objects()) {
        auto inv = V.tensorMor(1, inverseOf(c, gaugeAt(A, phi, b, d)), inverseOf(c, gaugeAt(A, phi, a, b)));
        auto m = c.tryChain({gaugeAt(A, phi, a, d), A.composition(a, b, d), inv});
        if (!m) fail(ErrorKind::ConstructionFailed, "gauged composition undefined");
        comp.emplace(std::array{a, b, d}, *m);
      }
  }
  return VCategory(A.baseRef(), A.objects(), A.homTable(), std::move(comp), std::move(unit));
}

VFunctor gaugeFunctor(const VCategoryRef& A, const VCategoryRef& transported, const Gauge& phi) {
  ObjMap om;
  HomMap hm;
  for (const auto& a : A->objects()) {
    om.emplace(a, a);
    for (const auto& b : A->objects()) hm.emplace(std::pair{a, b}, gaugeAt(*A, phi, a, b));
  }
  return VFunctor(A, transported, std::move(om), std::move(hm));
}

}  // namespace enriched
