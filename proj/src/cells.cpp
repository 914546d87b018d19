#include "enriched/cells.hpp"

#include <algorithm>

namespace enriched {

namespace {

const ObjId kZero("0");

MorId defined(const std::optional<MorId>& m, const std::string& what) {
  if (!m) fail(ErrorKind::CompositionUndefined, what + " is undefined");
  return *m;
}

void requireSame(bool ok, const std::string& what) {
  if (!ok) fail(ErrorKind::NotComposable, what);
}

V2NatRef share(V2NatTransform a) { return ref(std::move(a)); }
ModificationRef share(VModification m) { return ref(std::move(m)); }
V2FunctorRef share(V2Functor f) { return ref(std::move(f)); }

VModification rewrap(const VModification& m, const V2NatRef& s, const V2NatRef& t) {
  return VModification(s, t, m.components());
}

VModification agreed(const ModRoutes& r, const std::string& what) {
  for (std::size_t k = 1; k < r.ways.size(); ++k)
    if (auto w = modDifference(r.ways[0], r.ways[k]))
      fail(ErrorKind::AgreementFailure, what + ": way 1 and way " + std::to_string(k + 1) + " differ at " +
                                            (w->instance.empty() ? std::string() : w->instance.front()) + " (" +
                                            w->lhs + " vs " + w->rhs + ")");
  return r.ways.front();
}

}  // namespace

V2Category unitV2Category(const BaseRef& base) {
  auto I = unitVCategoryRef(base);
  return V2Category(base, {kZero}, {{{kZero, kZero}, I}}, {{{kZero, kZero, kZero}, leftUnitor(1, I)}},
                    {{kZero, identityVFunctor(I)}});
}

V2Category productV2Cat(int i, const V2CategoryRef& U, const V2CategoryRef& W) {
  const auto& base = U->baseRef();
  if (!sameBase(*base, W->base())) fail(ErrorKind::NotComposable, "product of V-2-categories over different bases");
  if (i < 1 || i + 2 > base->tensorCount())
    fail(ErrorKind::IndexOutOfRange, "productV2Cat index " + std::to_string(i) + " needs i <= n-2 with n = " +
                                         std::to_string(base->tensorCount()));
  std::vector<std::pair<ObjId, ObjId>> obs;
  for (const auto& a : U->objects())
    for (const auto& b : W->objects()) obs.emplace_back(a, b);
  auto name = [](const std::pair<ObjId, ObjId>& p) { return pairId(p.first, p.second); };
  std::map<std::pair<ObjId, ObjId>, VCategoryRef> homs;
  for (const auto& x : obs)
    for (const auto& y : obs)
      homs.emplace(std::pair{name(x), name(y)},
                   productVCatRef(i + 1, U->homRef(x.first, y.first), W->homRef(x.second, y.second)));
  std::map<std::array<ObjId, 3>, VFunctor> comp;
  for (const auto& x : obs)
    for (const auto& y : obs)
      for (const auto& z : obs) {
        auto swap = interchangeVCat(1, i + 1, U->homRef(y.first, z.first), W->homRef(y.second, z.second),
                                    U->homRef(x.first, y.first), W->homRef(x.second, y.second));
        auto both = productVFunctor(i + 1, U->composition(x.first, y.first, z.first),
                                    W->composition(x.second, y.second, z.second));
        auto m = composeVFunctor(both, swap);
        // re-point the endpoints at the shared hom objects
        comp.emplace(std::array{name(x), name(y), name(z)},
                     VFunctor(productVCatRef(1, homs.at({name(y), name(z)}), homs.at({name(x), name(y)})),
                              homs.at({name(x), name(z)}), m.objectMap(), m.homMap()));
      }
  auto I = unitVCategoryRef(base);
  std::map<ObjId, VFunctor> unit;
  for (const auto& x : obs) {
    auto j = composeVFunctor(productVFunctor(i + 1, U->identity(x.first), W->identity(x.second)),
                             leftUnitorInv(i + 1, I));
    unit.emplace(name(x), VFunctor(I, homs.at({name(x), name(x)}), j.objectMap(), j.homMap()));
  }
  std::vector<ObjId> names;
  for (const auto& x : obs) names.push_back(name(x));
  return V2Category(base, names, std::move(homs), std::move(comp), std::move(unit));
}

V2Category relabelV2(const V2Category& u, const ObjMap& objects,
                      const std::map<std::pair<ObjId, ObjId>, ObjMap>& cells) {
  auto rn = [](const ObjMap& m, const ObjId& x) {
    auto it = m.find(x);
    return it == m.end() ? x : it->second;
  };
  static const ObjMap none;
  auto cellsAt = [&](const ObjId& a, const ObjId& b) -> const ObjMap& {
    auto it = cells.find({a, b});
    return it == cells.end() ? none : it->second;
  };
  std::map<std::pair<ObjId, ObjId>, VCategoryRef> homs;
  for (const auto& [ab, h] : u.homs())
    homs.emplace(std::pair{rn(objects, ab.first), rn(objects, ab.second)},
                 ref(renameObjects(*h, cellsAt(ab.first, ab.second))));
  auto hom2 = [&](const ObjId& a, const ObjId& b) { return homs.at({rn(objects, a), rn(objects, b)}); };
  std::map<std::array<ObjId, 3>, VFunctor> comp;
  for (const auto& [abc, m] : u.compositions()) {
    const auto &a = abc[0], &b = abc[1], &c = abc[2];
    const auto &bc = cellsAt(b, c), &ab = cellsAt(a, b), &ac = cellsAt(a, c);
    ObjMap pairs;
    for (const auto& g : u.hom(b, c).objects())
      for (const auto& f : u.hom(a, b).objects()) pairs[pairId(g, f)] = pairId(rn(bc, g), rn(ab, f));
    ObjMap om;
    HomMap hm;
    for (const auto& [x, y] : m.objectMap()) om[pairs.at(x)] = rn(ac, y);
    for (const auto& [xy, f] : m.homMap()) hm[{pairs.at(xy.first), pairs.at(xy.second)}] = f;
    comp.emplace(std::array{rn(objects, a), rn(objects, b), rn(objects, c)},
                 VFunctor(productVCatRef(1, hom2(b, c), hom2(a, b)), hom2(a, c), std::move(om), std::move(hm)));
  }
  std::map<ObjId, VFunctor> unit;
  for (const auto& [a, j] : u.units()) {
    ObjMap om;
    for (const auto& [x, y] : j.objectMap()) om[x] = rn(cellsAt(a, a), y);
    unit.emplace(rn(objects, a), VFunctor(j.sourceRef(), hom2(a, a), std::move(om), j.homMap()));
  }
  std::vector<ObjId> names;
  for (const auto& a : u.objects()) names.push_back(rn(objects, a));
  std::sort(names.begin(), names.end());
  return V2Category(u.baseRef(), std::move(names), std::move(homs), std::move(comp), std::move(unit));
}

V2Functor identityV2Functor(const V2CategoryRef& U) {
  ObjMap om;
  std::map<std::pair<ObjId, ObjId>, VFunctor> hm;
  for (const auto& a : U->objects()) {
    om.emplace(a, a);
    for (const auto& b : U->objects()) hm.emplace(std::pair{a, b}, identityVFunctor(U->homRef(a, b)));
  }
  return V2Functor(U, U, std::move(om), std::move(hm));
}

V2Functor composeV2Functors(const V2FunctorRef& S, const V2FunctorRef& T) {
  requireSame(sameV2Category(T->targetRef(), S->sourceRef()), "V-2-functor target and source differ");
  ObjMap om;
  std::map<std::pair<ObjId, ObjId>, VFunctor> hm;
  const auto& U = T->source();
  for (const auto& a : U.objects()) {
    om.emplace(a, S->object(T->object(a)));
    for (const auto& b : U.objects())
      hm.emplace(std::pair{a, b}, composeVFunctor(S->hom(T->object(a), T->object(b)), T->hom(a, b)));
  }
  return V2Functor(T->sourceRef(), S->targetRef(), std::move(om), std::move(hm));
}

VFunctor pointAt(const VCategoryRef& hom, const ObjId& q, const MorId& c) {
  return VFunctor(unitVCategoryRef(hom->baseRef()), hom, {{kZero, q}}, {{{kZero, kZero}, c}});
}

V2NatTransform idNat(const V2FunctorRef& T) {
  std::map<ObjId, VFunctor> comps;
  for (const auto& u : T->source().objects()) comps.emplace(u, T->target().identity(T->object(u)));
  return V2NatTransform(T, T, std::move(comps));
}

V2NatTransform composeNatAlongFunctor(const V2NatRef& b, const V2NatRef& a) {
  requireSame(sameV2Functor(a->targetRef(), b->sourceRef()), "transformations do not meet at a functor");
  const auto& T = a->source();
  const auto& S = a->target();
  const auto& R = b->target();
  const auto& W = T.target();
  auto I = unitVCategoryRef(W.baseRef());
  auto split = leftUnitorInv(1, I);
  std::map<ObjId, VFunctor> comps;
  for (const auto& u : T.source().objects()) {
    auto pair = composeVFunctor(productVFunctor(1, b->component(u), a->component(u)), split);
    comps.emplace(u, composeVFunctor(W.composition(T.object(u), S.object(u), R.object(u)), pair));
  }
  return V2NatTransform(a->sourceRef(), b->targetRef(), std::move(comps));
}

V2NatTransform whiskerFunctorNat(const V2FunctorRef& G, const V2NatRef& a) {
  requireSame(sameV2Category(a->source().targetRef(), G->sourceRef()), "functor does not follow the transformation");
  std::map<ObjId, VFunctor> comps;
  for (const auto& u : a->source().source().objects())
    comps.emplace(u, composeVFunctor(G->hom(a->source().object(u), a->target().object(u)), a->component(u)));
  return V2NatTransform(share(composeV2Functors(G, a->sourceRef())), share(composeV2Functors(G, a->targetRef())),
                        std::move(comps));
}

V2NatTransform whiskerNatFunctor(const V2NatRef& c, const V2FunctorRef& H) {
  requireSame(sameV2Category(H->targetRef(), c->source().sourceRef()), "functor does not precede the transformation");
  std::map<ObjId, VFunctor> comps;
  for (const auto& u : H->source().objects()) comps.emplace(u, c->component(H->object(u)));
  return V2NatTransform(share(composeV2Functors(c->sourceRef(), H)), share(composeV2Functors(c->targetRef(), H)),
                        std::move(comps));
}

NatRoutes hcompNatsAlongCategoryRoutes(const V2NatRef& c, const V2NatRef& a) {
  requireSame(sameV2Category(a->source().targetRef(), c->source().sourceRef()),
              "transformations do not meet at a V-2-category");
  auto viaSource = composeNatAlongFunctor(share(whiskerNatFunctor(c, a->targetRef())),
                                          share(whiskerFunctorNat(c->sourceRef(), a)));
  auto viaTarget = composeNatAlongFunctor(share(whiskerFunctorNat(c->targetRef(), a)),
                                          share(whiskerNatFunctor(c, a->sourceRef())));
  return {std::move(viaSource), std::move(viaTarget)};
}

V2NatTransform hcompNatsAlongCategory(const V2NatRef& c, const V2NatRef& a) {
  auto r = hcompNatsAlongCategoryRoutes(c, a);
  if (auto w = natDifference(r.viaSource, r.viaTarget))
    fail(ErrorKind::AgreementFailure, "horizontal composite of transformations: the two routes differ at " +
                                          w->instance.front() + " (" + w->lhs + " vs " + w->rhs + ")");
  return r.viaSource;
}

VModification idModification(const V2NatRef& a) {
  std::map<ObjId, MorId> comps;
  const auto& W = a->source().target();
  for (const auto& u : a->source().source().objects())
    comps.emplace(u, W.hom(a->source().object(u), a->target().object(u)).identity(a->cell(u)));
  return VModification(a, a, std::move(comps));
}

VModification vcompModifications(const ModificationRef& n, const ModificationRef& m) {
  requireSame(sameV2Nat(m->targetRef(), n->sourceRef()), "modifications do not meet at a transformation");
  const auto& T = m->source().source();
  const auto& S = m->source().target();
  const auto& W = T.target();
  const auto& V = W.base();
  std::map<ObjId, MorId> comps;
  for (const auto& u : T.source().objects()) {
    const auto& h = W.hom(T.object(u), S.object(u));
    auto c = h.composition(m->source().cell(u), m->target().cell(u), n->target().cell(u));
    comps.emplace(u, defined(V.category().tryChain({c, V.tensorMor(1, n->component(u), m->component(u))}),
                             "vertical composite at " + u.str()));
  }
  return VModification(m->sourceRef(), n->targetRef(), std::move(comps));
}

VModification whiskerNatModLeft(const V2NatRef& c, const ModificationRef& m) {
  const auto& T = m->source().source();
  const auto& S = m->source().target();
  requireSame(sameV2Functor(m->source().targetRef(), c->sourceRef()), "transformation does not follow the modification");
  const auto& R = c->target();
  const auto& W = T.target();
  const auto& V = W.base();
  auto src = share(composeNatAlongFunctor(c, m->sourceRef()));
  auto tgt = share(composeNatAlongFunctor(c, m->targetRef()));
  std::map<ObjId, MorId> comps;
  for (const auto& u : T.source().objects()) {
    const auto& M = W.composition(T.object(u), S.object(u), R.object(u));
    const auto& qc = c->cell(u);
    auto h = M.hom(pairId(qc, m->source().cell(u)), pairId(qc, m->target().cell(u)));
    comps.emplace(u, defined(V.category().tryChain({h, V.tensorMor(2, c->unitComponent(u), m->component(u))}),
                             "left whiskered modification at " + u.str()));
  }
  return VModification(src, tgt, std::move(comps));
}

VModification whiskerNatModRight(const ModificationRef& m, const V2NatRef& r) {
  const auto& T = r->source();
  const auto& S = r->target();
  requireSame(sameV2Functor(r->targetRef(), m->source().sourceRef()), "transformation does not precede the modification");
  const auto& R = m->source().target();
  const auto& W = T.target();
  const auto& V = W.base();
  auto src = share(composeNatAlongFunctor(m->sourceRef(), r));
  auto tgt = share(composeNatAlongFunctor(m->targetRef(), r));
  std::map<ObjId, MorId> comps;
  for (const auto& u : T.source().objects()) {
    const auto& M = W.composition(T.object(u), S.object(u), R.object(u));
    const auto& qr = r->cell(u);
    auto h = M.hom(pairId(m->source().cell(u), qr), pairId(m->target().cell(u), qr));
    comps.emplace(u, defined(V.category().tryChain({h, V.tensorMor(2, m->component(u), r->unitComponent(u))}),
                             "right whiskered modification at " + u.str()));
  }
  return VModification(src, tgt, std::move(comps));
}

ModRoutes hcompModificationsAlongNatRoutes(const ModificationRef& n, const ModificationRef& m) {
  requireSame(sameV2Functor(m->source().targetRef(), n->source().sourceRef()),
              "modifications do not meet at a functor");
  const auto& T = m->source().source();
  const auto& S = m->source().target();
  const auto& R = n->source().target();
  const auto& W = T.target();
  const auto& V = W.base();
  auto src = share(composeNatAlongFunctor(n->sourceRef(), m->sourceRef()));
  auto tgt = share(composeNatAlongFunctor(n->targetRef(), m->targetRef()));
  std::map<ObjId, MorId> comps;
  for (const auto& u : T.source().objects()) {
    const auto& M = W.composition(T.object(u), S.object(u), R.object(u));
    auto h = M.hom(pairId(n->source().cell(u), m->source().cell(u)), pairId(n->target().cell(u), m->target().cell(u)));
    comps.emplace(u, defined(V.category().tryChain({h, V.tensorMor(2, n->component(u), m->component(u))}),
                             "horizontal composite at " + u.str()));
  }
  ModRoutes r;
  r.ways.emplace_back(src, tgt, std::move(comps));
  auto a = vcompModifications(share(whiskerNatModLeft(n->targetRef(), m)), share(whiskerNatModRight(n, m->sourceRef())));
  auto b = vcompModifications(share(whiskerNatModRight(n, m->targetRef())), share(whiskerNatModLeft(n->sourceRef(), m)));
  r.ways.push_back(rewrap(a, src, tgt));
  r.ways.push_back(rewrap(b, src, tgt));
  return r;
}

VModification hcompModificationsAlongNat(const ModificationRef& n, const ModificationRef& m) {
  return agreed(hcompModificationsAlongNatRoutes(n, m), "horizontal composite of modifications");
}

VModification whiskerFunctorMod(const V2FunctorRef& K, const ModificationRef& m) {
  const auto& F = m->source().source();
  const auto& H = m->source().target();
  const auto& V = F.source().base();
  auto src = share(whiskerFunctorNat(K, m->sourceRef()));
  auto tgt = share(whiskerFunctorNat(K, m->targetRef()));
  std::map<ObjId, MorId> comps;
  for (const auto& u : F.source().objects()) {
    auto k = K->hom(F.object(u), H.object(u)).hom(m->source().cell(u), m->target().cell(u));
    comps.emplace(u, defined(V.category().tryChain({k, m->component(u)}), "functor whiskered modification"));
  }
  return VModification(src, tgt, std::move(comps));
}

VModification whiskerModFunctor(const ModificationRef& n, const V2FunctorRef& F) {
  auto src = share(whiskerNatFunctor(n->sourceRef(), F));
  auto tgt = share(whiskerNatFunctor(n->targetRef(), F));
  std::map<ObjId, MorId> comps;
  for (const auto& u : F->source().objects()) comps.emplace(u, n->component(F->object(u)));
  return VModification(src, tgt, std::move(comps));
}

ModRoutes whiskerNatModAlongCategoryRoutes(const V2NatRef& r, const ModificationRef& m) {
  auto src = share(hcompNatsAlongCategory(r, m->sourceRef()));
  auto tgt = share(hcompNatsAlongCategory(r, m->targetRef()));
  const auto& F = m->source().sourceRef();
  const auto& H = m->source().targetRef();
  ModRoutes out;
  auto way1 = whiskerNatModRight(share(whiskerFunctorMod(r->targetRef(), m)), share(whiskerNatFunctor(r, F)));
  auto way2 = whiskerNatModLeft(share(whiskerNatFunctor(r, H)), share(whiskerFunctorMod(r->sourceRef(), m)));
  out.ways.push_back(rewrap(way1, src, tgt));
  out.ways.push_back(rewrap(way2, src, tgt));
  return out;
}

VModification whiskerNatModAlongCategory(const V2NatRef& r, const ModificationRef& m) {
  return agreed(whiskerNatModAlongCategoryRoutes(r, m), "transformation whiskered modification");
}

ModRoutes whiskerModNatAlongCategoryRoutes(const ModificationRef& n, const V2NatRef& a) {
  auto src = share(hcompNatsAlongCategory(n->sourceRef(), a));
  auto tgt = share(hcompNatsAlongCategory(n->targetRef(), a));
  ModRoutes out;
  auto way1 = whiskerNatModRight(share(whiskerModFunctor(n, a->targetRef())),
                                 share(whiskerFunctorNat(n->source().sourceRef(), a)));
  auto way2 = whiskerNatModLeft(share(whiskerFunctorNat(n->source().targetRef(), a)),
                                share(whiskerModFunctor(n, a->sourceRef())));
  out.ways.push_back(rewrap(way1, src, tgt));
  out.ways.push_back(rewrap(way2, src, tgt));
  return out;
}

VModification whiskerModNatAlongCategory(const ModificationRef& n, const V2NatRef& a) {
  return agreed(whiskerModNatAlongCategoryRoutes(n, a), "modification whiskered transformation");
}

ModRoutes hcompModsAlongCategoryRoutes(const ModificationRef& n, const ModificationRef& m) {
  auto src = share(hcompNatsAlongCategory(n->sourceRef(), m->sourceRef()));
  auto tgt = share(hcompNatsAlongCategory(n->targetRef(), m->targetRef()));
  ModRoutes out;
  auto way1 = vcompModifications(share(whiskerNatModAlongCategory(n->targetRef(), m)),
                                 share(whiskerModNatAlongCategory(n, m->sourceRef())));
  auto way2 = vcompModifications(share(whiskerModNatAlongCategory(n, m->targetRef())),
                                 share(whiskerNatModAlongCategory(n->sourceRef(), m)));
  auto way3 = hcompModificationsAlongNat(share(whiskerFunctorMod(n->source().targetRef(), m)),
                                         share(whiskerModFunctor(n, m->source().sourceRef())));
  for (auto* w : {&way1, &way2, &way3}) out.ways.push_back(rewrap(*w, src, tgt));
  return out;
}

VModification hcompModsAlongCategory(const ModificationRef& n, const ModificationRef& m) {
  return agreed(hcompModsAlongCategoryRoutes(n, m), "horizontal composite of modifications along a V-2-category");
}

std::optional<Witness> natDifference(const V2NatTransform& a, const V2NatTransform& b) {
  if (!sameV2Functor(a.sourceRef(), b.sourceRef()) || !sameV2Functor(a.targetRef(), b.targetRef()))
    fail(ErrorKind::NotParallel, "comparing non-parallel transformations");
  for (const auto& u : a.source().source().objects()) {
    if (a.cell(u) != b.cell(u)) return Witness{"cell", {u.str()}, a.cell(u).str(), b.cell(u).str()};
    if (a.unitComponent(u) != b.unitComponent(u))
      return Witness{"unit-component", {u.str()}, a.unitComponent(u).str(), b.unitComponent(u).str()};
  }
  return std::nullopt;
}

std::optional<Witness> modDifference(const VModification& a, const VModification& b) {
  for (const auto& [u, c] : a.components()) {
    auto it = b.components().find(u);
    if (it == b.components().end()) return Witness{"component", {u.str()}, c.str(), "missing"};
    if (it->second != c) return Witness{"component", {u.str()}, c.str(), it->second.str()};
  }
  if (a.components().size() != b.components().size()) return Witness{"component", {}, "", "extra"};
  return std::nullopt;
}

}  // namespace enriched
