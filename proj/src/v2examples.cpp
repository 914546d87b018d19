#include "enriched/v2examples.hpp"

namespace enriched {

namespace {

const ObjId kZero("0");

ObjId cellName(const MorId& f) { return ObjId(f.str()); }
MorId cellMor(const ObjId& f) { return MorId(f.str()); }

MorId entry(const VCategory& h, const Gauge& phi, const ObjId& a, const ObjId& b) {
  auto it = phi.find({a, b});
  if (it != phi.end()) return it->second;
  return h.base().category().id(h.hom(a, b));
}

const Gauge& gaugeOf(const V2Gauge& phi, const ObjId& a, const ObjId& b) {
  static const Gauge none;
  auto it = phi.find({a, b});
  return it == phi.end() ? none : it->second;
}

MorId inv(const FinCategory& c, const MorId& f) {
  auto g = c.inverse(f);
  if (!g) fail(ErrorKind::ConstructionFailed, "gauge entry " + f.str() + " is not invertible");
  return *g;
}

MorId defined(const std::optional<MorId>& m, const std::string& what) {
  if (!m) fail(ErrorKind::ConstructionFailed, what + " is undefined");
  return *m;
}

// composition and units read off c; hom components forced by thinness
V2Category fromCategory(const BaseRef& base, const FinCategory& c,
                        const std::map<std::pair<ObjId, ObjId>, VCategoryRef>& homs) {
  const auto& bc = base->category();
  std::map<std::array<ObjId, 3>, VFunctor> comp;
  std::map<ObjId, VFunctor> unit;
  auto I = unitVCategoryRef(base);
  for (const auto& A : c.objects()) {
    const auto& hAA = homs.at({A, A});
    unit.emplace(A, VFunctor(I, hAA, {{kZero, cellName(c.id(A))}},
                             {{{kZero, kZero}, thinArrow(bc, base->unit(), hAA->hom(cellName(c.id(A)), cellName(c.id(A))))}}));
    for (const auto& B : c.objects())
      for (const auto& C : c.objects()) {
        const auto& hBC = homs.at({B, C});
        const auto& hAB = homs.at({A, B});
        const auto& hAC = homs.at({A, C});
        auto src = productVCatRef(1, hBC, hAB);
        ObjMap om;
        HomMap hm;
        for (const auto& g : hBC->objects())
          for (const auto& f : hAB->objects()) {
            auto gf = cellName(compose(c, cellMor(g), cellMor(f)));
            om.emplace(pairId(g, f), gf);
            for (const auto& g2 : hBC->objects())
              for (const auto& f2 : hAB->objects()) {
                auto g2f2 = cellName(compose(c, cellMor(g2), cellMor(f2)));
                hm.emplace(std::pair{pairId(g, f), pairId(g2, f2)},
                           thinArrow(bc, src->hom(pairId(g, f), pairId(g2, f2)), hAC->hom(gf, g2f2)));
              }
          }
        comp.emplace(std::array{A, B, C}, VFunctor(src, hAC, std::move(om), std::move(hm)));
      }
  }
  return V2Category(base, c.objects(), homs, std::move(comp), std::move(unit));
}

std::vector<ObjId> cellsOf(const FinCategory& c, const ObjId& a, const ObjId& b) {
  std::vector<ObjId> out;
  for (const auto& f : c.hom(a, b)) out.push_back(cellName(f));
  return out;
}

}  // namespace

MorId thinArrow(const FinCategory& c, const ObjId& a, const ObjId& b) {
  if (a == b) return c.id(a);
  const auto& h = c.hom(a, b);
  if (h.size() != 1)
    fail(ErrorKind::ConstructionFailed, "no unique arrow " + a.str() + " -> " + b.str() + " in the base");
  return h.front();
}

V2Category locallyChaoticV2(const BaseRef& base, const FinCategory& c) {
  std::map<std::pair<ObjId, ObjId>, VCategoryRef> homs;
  for (const auto& a : c.objects())
    for (const auto& b : c.objects()) homs.emplace(std::pair{a, b}, ref(chaoticVCat(base, cellsOf(c, a, b))));
  return fromCategory(base, c, homs);
}

V2Category locallyPosetalV2(const BaseRef& boolBase, const FinCategory& c, const CellOrder& leq) {
  std::map<std::pair<ObjId, ObjId>, VCategoryRef> homs;
  for (const auto& a : c.objects())
    for (const auto& b : c.objects()) {
      auto it = leq.find({a, b});
      std::set<std::pair<ObjId, ObjId>> rel;
      if (it != leq.end()) rel = it->second;
      for (const auto& f : cellsOf(c, a, b)) rel.insert({f, f});
      homs.emplace(std::pair{a, b}, ref(preorderVCat(boolBase, cellsOf(c, a, b), rel)));
    }
  return fromCategory(boolBase, c, homs);
}

CellOrder compatibleClosure(const FinCategory& c, CellOrder seed) {
  for (const auto& a : c.objects())
    for (const auto& b : c.objects())
      for (const auto& f : cellsOf(c, a, b)) seed[{a, b}].insert({f, f});
  bool changed = true;
  while (changed) {
    changed = false;
    auto add = [&](const std::pair<ObjId, ObjId>& at, const ObjId& x, const ObjId& y) {
      if (seed[at].insert({x, y}).second) changed = true;
    };
    auto snapshot = seed;
    for (const auto& [ab, rel] : snapshot)
      for (const auto& [f, g] : rel) {
        for (const auto& [f2, g2] : rel)
          if (g == f2) add(ab, f, g2);
        for (const auto& h : c.morphisms()) {
          if (c.dom(h) == ab.second)
            add({ab.first, c.cod(h)}, cellName(compose(c, h, cellMor(f))), cellName(compose(c, h, cellMor(g))));
          if (c.cod(h) == ab.first)
            add({c.dom(h), ab.second}, cellName(compose(c, cellMor(f), h)), cellName(compose(c, cellMor(g), h)));
        }
      }
  }
  return seed;
}

FinCategory thinCategory(const std::vector<ObjId>& objects, const std::set<std::pair<ObjId, ObjId>>& leq) {
  std::map<MorId, Arrow> arrows;
  std::map<ObjId, MorId> ids;
  CompositionTable comp;
  auto name = [](const ObjId& a, const ObjId& b) { return MorId(a.str() + "->" + b.str()); };
  std::set<std::pair<ObjId, ObjId>> rel = leq;
  for (const auto& a : objects) rel.insert({a, a});
  for (const auto& [a, b] : rel) arrows.emplace(name(a, b), Arrow{a, b});
  for (const auto& a : objects) ids.emplace(a, name(a, a));
  for (const auto& [a, b] : rel)
    for (const auto& [b2, c] : rel) {
      if (b != b2) continue;
      if (!rel.count({a, c})) fail(ErrorKind::NotPreorder, "not transitive at " + a.str() + "," + b.str() + "," + c.str());
      comp.emplace(std::pair{name(b, c), name(a, b)}, name(a, c));
    }
  return FinCategory(objects, std::move(arrows), std::move(ids), std::move(comp));
}

FinCategory monoidCategory(const std::vector<MorId>& elements, const std::function<int(int, int)>& mult) {
  const ObjId star("*");
  std::map<MorId, Arrow> arrows;
  CompositionTable comp;
  for (const auto& e : elements) arrows.emplace(e, Arrow{star, star});
  for (std::size_t i = 0; i < elements.size(); ++i)
    for (std::size_t j = 0; j < elements.size(); ++j)
      comp.emplace(std::pair{elements[i], elements[j]}, elements.at(mult(int(i), int(j))));
  return FinCategory({star}, std::move(arrows), {{star, elements.front()}}, std::move(comp));
}

FinCategory joinMonoid() {
  const ObjId star("*");
  return FinCategory({star}, {{"1"_m, {star, star}}, {"t"_m, {star, star}}}, {{star, "1"_m}},
                     {{{"1"_m, "1"_m}, "1"_m}, {{"1"_m, "t"_m}, "t"_m}, {{"t"_m, "1"_m}, "t"_m}, {{"t"_m, "t"_m}, "t"_m}});
}

V2Category joinMonoidV2Cat(const BaseRef& boolBase) {
  const ObjId star("*");
  return locallyPosetalV2(boolBase, joinMonoid(), {{{star, star}, {{"1"_o, "t"_o}}}});
}

V2Functor liftV2Functor(const V2CategoryRef& U, const V2CategoryRef& W, const ObjMap& objects,
                        const std::map<std::pair<ObjId, ObjId>, ObjMap>& cells) {
  const auto& bc = U->base().category();
  std::map<std::pair<ObjId, ObjId>, VFunctor> homs;
  for (const auto& a : U->objects())
    for (const auto& b : U->objects()) {
      const auto& src = U->homRef(a, b);
      const auto& tgt = W->homRef(objects.at(a), objects.at(b));
      const auto& m = cells.at({a, b});
      HomMap hm;
      for (const auto& f : src->objects())
        for (const auto& g : src->objects())
          hm.emplace(std::pair{f, g}, thinArrow(bc, src->hom(f, g), tgt->hom(m.at(f), m.at(g))));
      homs.emplace(std::pair{a, b}, VFunctor(src, tgt, m, std::move(hm)));
    }
  return V2Functor(U, W, objects, std::move(homs));
}

V2NatTransform liftV2Nat(const V2FunctorRef& T, const V2FunctorRef& S, const ObjMap& cells) {
  const auto& W = T->target();
  std::map<ObjId, VFunctor> comps;
  for (const auto& u : T->source().objects()) {
    const auto& h = W.homRef(T->object(u), S->object(u));
    comps.emplace(u, pointAt(h, cells.at(u), h->identity(cells.at(u))));
  }
  return V2NatTransform(T, S, std::move(comps));
}

VModification liftModification(const V2NatRef& a, const V2NatRef& b) {
  const auto& W = a->source().target();
  const auto& bc = W.base().category();
  std::map<ObjId, MorId> comps;
  for (const auto& u : a->source().source().objects()) {
    const auto& h = W.hom(a->source().object(u), a->target().object(u));
    comps.emplace(u, a->cell(u) == b->cell(u) ? h.identity(a->cell(u))
                                              : thinArrow(bc, W.base().unit(), h.hom(a->cell(u), b->cell(u))));
  }
  return VModification(a, b, std::move(comps));
}

V2Category gaugeV2(const V2Category& U, const V2Gauge& phi) {
  const auto& V = U.base();
  const auto& c = V.category();
  std::map<std::pair<ObjId, ObjId>, VCategoryRef> homs;
  for (const auto& [ab, h] : U.homs()) homs.emplace(ab, ref(gaugeTransform(*h, gaugeOf(phi, ab.first, ab.second))));
  std::map<std::array<ObjId, 3>, VFunctor> comp;
  for (const auto& [abc, m] : U.compositions()) {
    const auto &A = abc[0], &B = abc[1], &C = abc[2];
    const auto &hBC = U.hom(B, C), &hAB = U.hom(A, B), &hAC = U.hom(A, C);
    const auto &pBC = gaugeOf(phi, B, C), &pAB = gaugeOf(phi, A, B), &pAC = gaugeOf(phi, A, C);
    HomMap hm;
    for (const auto& [xy, k] : m.homMap()) {
      std::string g, f, g2, f2;
      splitPair(xy.first.str(), g, f);
      splitPair(xy.second.str(), g2, f2);
      auto undo = V.tensorMor(2, inv(c, entry(hBC, pBC, ObjId(g), ObjId(g2))), inv(c, entry(hAB, pAB, ObjId(f), ObjId(f2))));
      auto out = entry(hAC, pAC, m.object(xy.first), m.object(xy.second));
      hm.emplace(xy, defined(c.tryChain({out, k, undo}), "gauged composition"));
    }
    comp.emplace(abc, VFunctor(productVCatRef(1, homs.at({B, C}), homs.at({A, B})), homs.at({A, C}), m.objectMap(),
                               std::move(hm)));
  }
  std::map<ObjId, VFunctor> unit;
  for (const auto& [a, j] : U.units()) {
    const auto& one = j.object(kZero);
    auto k = compose(c, entry(U.hom(a, a), gaugeOf(phi, a, a), one, one), j.hom(kZero, kZero));
    unit.emplace(a, VFunctor(j.sourceRef(), homs.at({a, a}), j.objectMap(), {{{kZero, kZero}, k}}));
  }
  return V2Category(U.baseRef(), U.objects(), std::move(homs), std::move(comp), std::move(unit));
}

V2Functor gaugeV2Functor(const V2Functor& T, const V2CategoryRef& U2, const V2Gauge& phiU, const V2CategoryRef& W2,
                         const V2Gauge& phiW) {
  const auto& U = T.source();
  const auto& W = T.target();
  const auto& c = U.base().category();
  std::map<std::pair<ObjId, ObjId>, VFunctor> homs;
  for (const auto& [ab, t] : T.homs()) {
    const auto &a = ab.first, &b = ab.second;
    const auto& pu = gaugeOf(phiU, a, b);
    const auto& pw = gaugeOf(phiW, T.object(a), T.object(b));
    HomMap hm;
    for (const auto& [fg, k] : t.homMap()) {
      auto undo = inv(c, entry(U.hom(a, b), pu, fg.first, fg.second));
      auto out = entry(W.hom(T.object(a), T.object(b)), pw, t.object(fg.first), t.object(fg.second));
      hm.emplace(fg, defined(c.tryChain({out, k, undo}), "gauged functor component"));
    }
    homs.emplace(ab, VFunctor(U2->homRef(a, b), W2->homRef(T.object(a), T.object(b)), t.objectMap(), std::move(hm)));
  }
  return V2Functor(U2, W2, T.objectMap(), std::move(homs));
}

V2NatTransform gaugeV2Nat(const V2NatTransform& a, const V2FunctorRef& T2, const V2FunctorRef& S2,
                          const V2Gauge& phiW) {
  const auto& T = a.source();
  const auto& S = a.target();
  const auto& W = T.target();
  const auto& c = W.base().category();
  std::map<ObjId, VFunctor> comps;
  for (const auto& u : T.source().objects()) {
    const auto& q = a.cell(u);
    auto k = compose(c, entry(W.hom(T.object(u), S.object(u)), gaugeOf(phiW, T.object(u), S.object(u)), q, q),
                     a.unitComponent(u));
    comps.emplace(u, pointAt(T2->target().homRef(T.object(u), S.object(u)), q, k));
  }
  return V2NatTransform(T2, S2, std::move(comps));
}

VModification gaugeModification(const VModification& m, const V2NatRef& a2, const V2NatRef& b2, const V2Gauge& phiW) {
  const auto& T = m.source().source();
  const auto& S = m.source().target();
  const auto& W = T.target();
  const auto& c = W.base().category();
  std::map<ObjId, MorId> comps;
  for (const auto& u : T.source().objects()) {
    auto k = entry(W.hom(T.object(u), S.object(u)), gaugeOf(phiW, T.object(u), S.object(u)), m.source().cell(u),
                   m.target().cell(u));
    comps.emplace(u, compose(c, k, m.component(u)));
  }
  return VModification(a2, b2, std::move(comps));
}

}  // namespace enriched
