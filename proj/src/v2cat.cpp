#include "enriched/v2cat.hpp"

#include <algorithm>

namespace enriched {

namespace {

std::string typed(const FinCategory& c, const MorId& f) {
  return f.str() + ":" + c.dom(f).str() + "->" + c.cod(f).str();
}

std::vector<std::string> names(std::initializer_list<ObjId> ids) {
  std::vector<std::string> out;
  for (const auto& i : ids) out.push_back(i.str());
  return out;
}

std::optional<Witness> legs(std::vector<std::string> inst, const std::optional<MorId>& l,
                            const std::optional<MorId>& r) {
  if (l && r && *l == *r) return std::nullopt;
  return Witness{"", std::move(inst), show(l), show(r)};
}

const ObjId kZero("0");

}  // namespace

V2Category::V2Category(BaseRef base, std::vector<ObjId> objects,
                       std::map<std::pair<ObjId, ObjId>, VCategoryRef> homs,
                       std::map<std::array<ObjId, 3>, VFunctor> composition, std::map<ObjId, VFunctor> units)
    : base_(std::move(base)),
      objects_(std::move(objects)),
      homs_(std::move(homs)),
      comp_(std::move(composition)),
      unit_(std::move(units)) {
  if (!base_) fail(ErrorKind::MalformedTable, "V-2-category without a base");
  if (base_->tensorCount() < 2)
    fail(ErrorKind::IndexOutOfRange, "V-2-categories need a base with at least two tensors");
  std::sort(objects_.begin(), objects_.end());
  if (std::adjacent_find(objects_.begin(), objects_.end()) != objects_.end())
    fail(ErrorKind::MalformedTable, "duplicate V-2-category object");
  const std::size_t n = objects_.size();
  if (homs_.size() != n * n || comp_.size() != n * n * n || unit_.size() != n)
    fail(ErrorKind::MalformedTable, "V-2-category tables are not total over the objects");
  for (const auto& [ab, h] : homs_) {
    if (!hasObject(ab.first) || !hasObject(ab.second))
      fail(ErrorKind::MalformedTable, "hom entry for unknown objects");
    if (!h || !sameBase(h->base(), *base_))
      fail(ErrorKind::MalformedTable, "hom V-category over a different base");
  }
  auto I = unitVCategoryRef(base_);
  for (const auto& [abc, m] : comp_) {
    for (const auto& o : abc)
      if (!hasObject(o)) fail(ErrorKind::MalformedTable, "composition entry for unknown object " + o.str());
    auto src = productVCat(1, hom(abc[1], abc[2]), hom(abc[0], abc[1]));
    if (!(m.source() == src) || !sameVCategory(m.targetRef(), homRef(abc[0], abc[2])))
      fail(ErrorKind::MalformedTable, "composition functor at (" + abc[0].str() + "," + abc[1].str() + "," +
                                          abc[2].str() + ") has the wrong source or target");
  }
  for (const auto& [a, j] : unit_) {
    if (!hasObject(a)) fail(ErrorKind::MalformedTable, "unit entry for unknown object " + a.str());
    if (!(j.source() == *I) || !sameVCategory(j.targetRef(), homRef(a, a)))
      fail(ErrorKind::MalformedTable, "unit functor at " + a.str() + " has the wrong source or target");
  }
}

bool V2Category::hasObject(const ObjId& a) const {
  return std::binary_search(objects_.begin(), objects_.end(), a);
}

const VCategoryRef& V2Category::homRef(const ObjId& a, const ObjId& b) const {
  auto it = homs_.find({a, b});
  if (it == homs_.end()) fail(ErrorKind::UnknownObject, pairString(a.str(), b.str()));
  return it->second;
}

const VFunctor& V2Category::composition(const ObjId& a, const ObjId& b, const ObjId& c) const {
  auto it = comp_.find({a, b, c});
  if (it == comp_.end()) fail(ErrorKind::UnknownObject, a.str() + "," + b.str() + "," + c.str());
  return it->second;
}

const VFunctor& V2Category::identity(const ObjId& a) const {
  auto it = unit_.find(a);
  if (it == unit_.end()) fail(ErrorKind::UnknownObject, a.str());
  return it->second;
}

const ObjId& V2Category::unitCell(const ObjId& a) const { return identity(a).object(kZero); }

const ObjId& V2Category::compose1(const ObjId& a, const ObjId& b, const ObjId& c, const ObjId& g,
                                  const ObjId& f) const {
  return composition(a, b, c).object(pairId(g, f));
}

bool operator==(const V2Category& a, const V2Category& b) {
  if (&a == &b) return true;
  if (a.objects_ != b.objects_ || !sameBase(*a.base_, *b.base_)) return false;
  for (const auto& [k, h] : a.homs_)
    if (!sameVCategory(h, b.homs_.at(k))) return false;
  return a.comp_ == b.comp_ && a.unit_ == b.unit_;
}

bool sameV2Category(const V2CategoryRef& a, const V2CategoryRef& b) { return a == b || (a && b && *a == *b); }

V2Functor::V2Functor(V2CategoryRef source, V2CategoryRef target, ObjMap objMap,
                     std::map<std::pair<ObjId, ObjId>, VFunctor> homs)
    : source_(std::move(source)), target_(std::move(target)), objMap_(std::move(objMap)), homs_(std::move(homs)) {
  const auto& obs = source_->objects();
  if (objMap_.size() != obs.size() || homs_.size() != obs.size() * obs.size())
    fail(ErrorKind::MalformedTable, "V-2-functor tables are not total");
  for (const auto& a : obs) {
    auto it = objMap_.find(a);
    if (it == objMap_.end() || !target_->hasObject(it->second))
      fail(ErrorKind::MalformedTable, "V-2-functor object map is not total into the target at " + a.str());
  }
  for (const auto& [ab, t] : homs_) {
    if (!source_->hasObject(ab.first) || !source_->hasObject(ab.second))
      fail(ErrorKind::MalformedTable, "V-2-functor hom entry for unknown objects");
    if (!sameVCategory(t.sourceRef(), source_->homRef(ab.first, ab.second)) ||
        !sameVCategory(t.targetRef(), target_->homRef(object(ab.first), object(ab.second))))
      fail(ErrorKind::MalformedTable, "V-2-functor hom functor at (" + ab.first.str() + "," + ab.second.str() +
                                          ") has the wrong source or target");
  }
}

const ObjId& V2Functor::object(const ObjId& a) const {
  auto it = objMap_.find(a);
  if (it == objMap_.end()) fail(ErrorKind::UnknownObject, a.str());
  return it->second;
}

const VFunctor& V2Functor::hom(const ObjId& a, const ObjId& b) const {
  auto it = homs_.find({a, b});
  if (it == homs_.end()) fail(ErrorKind::UnknownObject, pairString(a.str(), b.str()));
  return it->second;
}

bool operator==(const V2Functor& a, const V2Functor& b) {
  if (&a == &b) return true;
  return sameV2Category(a.source_, b.source_) && sameV2Category(a.target_, b.target_) && a.objMap_ == b.objMap_ &&
         a.homs_ == b.homs_;
}

bool sameV2Functor(const V2FunctorRef& a, const V2FunctorRef& b) { return a == b || (a && b && *a == *b); }

V2NatTransform::V2NatTransform(V2FunctorRef source, V2FunctorRef target, std::map<ObjId, VFunctor> components)
    : source_(std::move(source)), target_(std::move(target)), components_(std::move(components)) {
  if (!sameV2Category(source_->sourceRef(), target_->sourceRef()) ||
      !sameV2Category(source_->targetRef(), target_->targetRef()))
    fail(ErrorKind::NotParallel, "V-2-natural transformation between non-parallel V-2-functors");
  const auto& U = source_->source();
  const auto& W = source_->target();
  if (components_.size() != U.objects().size())
    fail(ErrorKind::MalformedTable, "V-2-natural transformation components are not total");
  auto I = unitVCategory(U.baseRef());
  for (const auto& [u, a] : components_) {
    if (!U.hasObject(u)) fail(ErrorKind::MalformedTable, "component at unknown object " + u.str());
    if (!(a.source() == I) ||
        !sameVCategory(a.targetRef(), W.homRef(source_->object(u), target_->object(u))))
      fail(ErrorKind::MalformedTable, "component at " + u.str() + " has the wrong source or target");
  }
}

const VFunctor& V2NatTransform::component(const ObjId& u) const {
  auto it = components_.find(u);
  if (it == components_.end()) fail(ErrorKind::UnknownObject, u.str());
  return it->second;
}

const ObjId& V2NatTransform::cell(const ObjId& u) const { return component(u).object(kZero); }
const MorId& V2NatTransform::unitComponent(const ObjId& u) const { return component(u).hom(kZero, kZero); }

bool operator==(const V2NatTransform& a, const V2NatTransform& b) {
  if (&a == &b) return true;
  return sameV2Functor(a.source_, b.source_) && sameV2Functor(a.target_, b.target_) &&
         a.components_ == b.components_;
}

bool sameV2Nat(const V2NatRef& a, const V2NatRef& b) { return a == b || (a && b && *a == *b); }

VModification::VModification(V2NatRef source, V2NatRef target, std::map<ObjId, MorId> components)
    : source_(std::move(source)), target_(std::move(target)), components_(std::move(components)) {
  if (!sameV2Functor(source_->sourceRef(), target_->sourceRef()) ||
      !sameV2Functor(source_->targetRef(), target_->targetRef()))
    fail(ErrorKind::NotParallel, "modification between non-parallel transformations");
  const auto& U = source_->source().source();
  const auto& c = U.base().category();
  if (components_.size() != U.objects().size())
    fail(ErrorKind::MalformedTable, "modification components are not total");
  for (const auto& [u, m] : components_) {
    if (!U.hasObject(u)) fail(ErrorKind::MalformedTable, "component at unknown object " + u.str());
    if (!c.hasMorphism(m)) fail(ErrorKind::MalformedTable, "component " + m.str() + " is not in the base");
  }
}

const MorId& VModification::component(const ObjId& u) const {
  auto it = components_.find(u);
  if (it == components_.end()) fail(ErrorKind::UnknownObject, u.str());
  return it->second;
}

bool operator==(const VModification& a, const VModification& b) {
  if (&a == &b) return true;
  return a.components_ == b.components_ && sameV2Nat(a.source_, b.source_) && sameV2Nat(a.target_, b.target_);
}

bool V2Category::valid() const {
  std::call_once(cache_->once, [this] { cache_->ok = checkV2Category(*this).passed(); });
  return cache_->ok;
}

bool V2Functor::valid() const {
  std::call_once(cache_->once, [this] { cache_->ok = checkV2Functor(*this).passed(); });
  return cache_->ok;
}

bool V2NatTransform::valid() const {
  std::call_once(cache_->once, [this] { cache_->ok = checkV2Nat(*this).passed(); });
  return cache_->ok;
}

CheckReport checkV2Category(const V2Category& U, const CheckOptions& opts) {
  const auto& V = U.base();
  if (!V.valid()) fail(ErrorKind::BaseInvalid, "base fails checkKFold");
  for (const auto& [ab, h] : U.homs())
    if (!checkVCategory(*h).passed())
      fail(ErrorKind::LowerLevelInvalid, "hom(" + ab.first.str() + "," + ab.second.str() + ") fails checkVCategory");
  CheckReport r("checkV2Category");
  const auto& c = V.category();
  const auto& obs = U.objects();
  for (const auto& [abc, m] : U.compositions())
    r.absorb(checkVFunctor(m, opts), "composition-functor", strs(abc));
  for (const auto& [a, j] : U.units()) r.absorb(checkVFunctor(j, opts), "unit-functor", {a.str()});

  r.family("pentagon");
  for (std::size_t k = 0; k < tupleCount(obs.size(), 4); ++k) {
    auto x = tupleAt(k, 4, obs);
    const auto &A = x[0], &B = x[1], &C = x[2], &D = x[3];
    const auto &hCD = U.hom(C, D), &hBC = U.hom(B, C), &hAB = U.hom(A, B);
    const auto &mABD = U.composition(A, B, D), &mBCD = U.composition(B, C, D);
    const auto &mACD = U.composition(A, C, D), &mABC = U.composition(A, B, C);
    struct Cell {
      ObjId f, g, h;
    };
    std::vector<Cell> cells;
    for (const auto& f : hCD.objects())
      for (const auto& g : hBC.objects())
        for (const auto& h : hAB.objects()) cells.push_back({f, g, h});
    for (const auto& [f, g, h] : cells) {
      const auto& fg = mBCD.object(pairId(f, g));
      const auto& gh = mABC.object(pairId(g, h));
      r.expectEqual(opts, "pentagon", names({A, B, C, D, f, g, h}), mABD.object(pairId(fg, h)).str(),
                    mACD.object(pairId(f, gh)).str());
    }
    scanFamily(r, opts, "pentagon", cells.size() * cells.size(), [&](std::size_t idx) {
      const auto& s = cells[idx / cells.size()];
      const auto& t = cells[idx % cells.size()];
      const auto& fg = mBCD.object(pairId(s.f, s.g));
      const auto& fg2 = mBCD.object(pairId(t.f, t.g));
      const auto& gh = mABC.object(pairId(s.g, s.h));
      const auto& gh2 = mABC.object(pairId(t.g, t.h));
      auto lhs = c.tryChain({mABD.hom(pairId(fg, s.h), pairId(fg2, t.h)),
                             V.tensorMor(2, mBCD.hom(pairId(s.f, s.g), pairId(t.f, t.g)), c.id(hAB.hom(s.h, t.h)))});
      auto rhs = c.tryChain({mACD.hom(pairId(s.f, gh), pairId(t.f, gh2)),
                             V.tensorMor(2, c.id(hCD.hom(s.f, t.f)), mABC.hom(pairId(s.g, s.h), pairId(t.g, t.h))),
                             V.associator(2, hCD.hom(s.f, t.f), hBC.hom(s.g, t.g), hAB.hom(s.h, t.h))});
      return legs(names({A, B, C, D, s.f, s.g, s.h, t.f, t.g, t.h}), lhs, rhs);
    });
  }

  r.family("unit-left");
  r.family("unit-right");
  r.family("unit-consequence");
  r.family("j-consequence");
  r.family("interchange-consequence");
  for (const auto& A : obs)
    for (const auto& B : obs) {
      const auto& hAB = U.hom(A, B);
      const auto& oneA = U.unitCell(A);
      const auto& oneB = U.unitCell(B);
      const auto& JA = U.identity(A).hom(kZero, kZero);
      const auto& JB = U.identity(B).hom(kZero, kZero);
      const auto& mABB = U.composition(A, B, B);
      const auto& mAAB = U.composition(A, A, B);
      for (const auto& f : hAB.objects()) {
        r.expectEqual(opts, "unit-left", names({A, B, oneB, f}), mABB.object(pairId(oneB, f)).str(), f.str());
        r.expectEqual(opts, "unit-right", names({A, B, f, oneA}), mAAB.object(pairId(f, oneA)).str(), f.str());
        for (const auto& f2 : hAB.objects()) {
          const auto& idh = c.id(hAB.hom(f, f2));
          r.expectEqual(opts, "unit-left", names({A, B, oneB, f, f2}),
                        str(c.tryChain({mABB.hom(pairId(oneB, f), pairId(oneB, f2)), V.tensorMor(2, JB, idh)})),
                        idh.str());
          r.expectEqual(opts, "unit-right", names({A, B, f, f2, oneA}),
                        str(c.tryChain({mAAB.hom(pairId(f, oneA), pairId(f2, oneA)), V.tensorMor(2, idh, JA)})),
                        idh.str());
        }
      }
      // j_{gf} = M . (j_g (x)2 j_f) and the hom-level square of M through eta^{12}
      for (const auto& C : obs) {
        const auto& hBC = U.hom(B, C);
        const auto& hAC = U.hom(A, C);
        const auto& m = U.composition(A, B, C);
        for (const auto& g : hBC.objects())
          for (const auto& f : hAB.objects()) {
            const auto& gf = m.object(pairId(g, f));
            r.expectEqual(opts, "unit-consequence", names({A, B, C, g, f}),
                          str(c.tryChain({m.hom(pairId(g, f), pairId(g, f)),
                                          V.tensorMor(2, hBC.identity(g), hAB.identity(f))})),
                          hAC.identity(gf).str());
          }
        std::vector<std::pair<ObjId, ObjId>> cells;
        for (const auto& g : hBC.objects())
          for (const auto& f : hAB.objects()) cells.emplace_back(g, f);
        scanFamily(r, opts, "interchange-consequence", tupleCount(cells.size(), 3), [&](std::size_t idx) {
          auto t = tupleAt(idx, 3, cells);
          const auto& [g, f] = t[0];
          const auto& [g1, f1] = t[1];
          const auto& [g2, f2] = t[2];
          auto p = [](const ObjId& a, const ObjId& b) { return pairId(a, b); };
          auto lhs = c.tryChain({m.hom(p(g, f), p(g2, f2)),
                                 V.tensorMor(2, hBC.composition(g, g1, g2), hAB.composition(f, f1, f2)),
                                 V.interchange(1, 2, hBC.hom(g1, g2), hAB.hom(f1, f2), hBC.hom(g, g1), hAB.hom(f, f1))});
          auto rhs = c.tryChain({hAC.composition(m.object(p(g, f)), m.object(p(g1, f1)), m.object(p(g2, f2))),
                                 V.tensorMor(1, m.hom(p(g1, f1), p(g2, f2)), m.hom(p(g, f), p(g1, f1)))});
          return legs(names({A, B, C, g, f, g1, f1, g2, f2}), lhs, rhs);
        });
      }
    }
  for (const auto& A : obs)
    r.expectEqual(opts, "j-consequence", names({A, U.unitCell(A)}), U.identity(A).hom(kZero, kZero).str(),
                  U.hom(A, A).identity(U.unitCell(A)).str());
  return r;
}

CheckReport checkV2Functor(const V2Functor& T, const CheckOptions& opts) {
  for (const auto* X : {&T.source(), &T.target()})
    if (!X->valid())
      fail(ErrorKind::LowerLevelInvalid, "endpoint V-2-category fails checkV2Category");
  CheckReport r("checkV2Functor");
  const auto& U = T.source();
  const auto& W = T.target();
  const auto& V = U.base();
  const auto& c = V.category();
  const auto& obs = U.objects();
  for (const auto& [ab, t] : T.homs()) r.absorb(checkVFunctor(t, opts), "hom-functor", {ab.first.str(), ab.second.str()});
  r.family("composition-square");
  for (std::size_t k = 0; k < tupleCount(obs.size(), 3); ++k) {
    auto x = tupleAt(k, 3, obs);
    const auto &A = x[0], &B = x[1], &C = x[2];
    const auto& m = U.composition(A, B, C);
    const auto& m2 = W.composition(T.object(A), T.object(B), T.object(C));
    const auto &tAB = T.hom(A, B), &tBC = T.hom(B, C), &tAC = T.hom(A, C);
    std::vector<std::pair<ObjId, ObjId>> cells;
    for (const auto& g : U.hom(B, C).objects())
      for (const auto& f : U.hom(A, B).objects()) cells.emplace_back(g, f);
    for (const auto& [g, f] : cells)
      r.expectEqual(opts, "composition-square", names({A, B, C, g, f}), tAC.object(m.object(pairId(g, f))).str(),
                    m2.object(pairId(tBC.object(g), tAB.object(f))).str());
    scanFamily(r, opts, "composition-square", cells.size() * cells.size(), [&](std::size_t idx) {
      const auto& [g, f] = cells[idx / cells.size()];
      const auto& [g2, f2] = cells[idx % cells.size()];
      auto lhs = c.tryChain({tAC.hom(m.object(pairId(g, f)), m.object(pairId(g2, f2))), m.hom(pairId(g, f), pairId(g2, f2))});
      auto rhs = c.tryChain({m2.hom(pairId(tBC.object(g), tAB.object(f)), pairId(tBC.object(g2), tAB.object(f2))),
                             V.tensorMor(2, tBC.hom(g, g2), tAB.hom(f, f2))});
      return legs(names({A, B, C, g, f, g2, f2}), lhs, rhs);
    });
  }
  r.family("unit-triangle");
  for (const auto& A : obs) {
    const auto& tAA = T.hom(A, A);
    const auto& one = U.unitCell(A);
    r.expectEqual(opts, "unit-triangle", names({A}), tAA.object(one).str(), W.unitCell(T.object(A)).str());
    r.expectEqual(opts, "unit-triangle", names({A, one}),
                  str(c.tryChain({tAA.hom(one, one), U.identity(A).hom(kZero, kZero)})),
                  W.identity(T.object(A)).hom(kZero, kZero).str());
  }
  return r;
}

CheckReport checkV2Nat(const V2NatTransform& al, const CheckOptions& opts) {
  for (const auto* F : {&al.source(), &al.target()})
    if (!F->valid()) fail(ErrorKind::LowerLevelInvalid, "endpoint V-2-functor fails checkV2Functor");
  CheckReport r("checkV2Nat");
  const auto& T = al.source();
  const auto& S = al.target();
  const auto& U = T.source();
  const auto& W = T.target();
  const auto& V = U.base();
  const auto& c = V.category();
  const auto& obs = U.objects();
  for (const auto& [u, a] : al.components()) r.absorb(checkVFunctor(a, opts), "component-functor", {u.str()});
  r.family("unit-component");
  for (const auto& u : obs) {
    const auto& q = al.cell(u);
    r.expectEqual(opts, "unit-component", names({u, q}), al.unitComponent(u).str(),
                  W.hom(T.object(u), S.object(u)).identity(q).str());
  }
  r.family("naturality");
  for (const auto& u : obs)
    for (const auto& u2 : obs) {
      const auto& q = al.cell(u);
      const auto& q2 = al.cell(u2);
      const auto& tU = T.hom(u, u2);
      const auto& sU = S.hom(u, u2);
      const auto& mL = W.composition(T.object(u), T.object(u2), S.object(u2));
      const auto& mR = W.composition(T.object(u), S.object(u), S.object(u2));
      const auto& cells = U.hom(u, u2).objects();
      for (const auto& f : cells)
        r.expectEqual(opts, "naturality", names({u, u2, f}), mL.object(pairId(q2, tU.object(f))).str(),
                      mR.object(pairId(sU.object(f), q)).str());
      scanFamily(r, opts, "naturality", cells.size() * cells.size(), [&](std::size_t idx) {
        const auto& f = cells[idx / cells.size()];
        const auto& g = cells[idx % cells.size()];
        auto lhs = c.tryChain({mL.hom(pairId(q2, tU.object(f)), pairId(q2, tU.object(g))),
                               V.tensorMor(2, al.unitComponent(u2), tU.hom(f, g))});
        auto rhs = c.tryChain({mR.hom(pairId(sU.object(f), q), pairId(sU.object(g), q)),
                               V.tensorMor(2, sU.hom(f, g), al.unitComponent(u))});
        return legs(names({u, u2, f, g}), lhs, rhs);
      });
    }
  return r;
}

CheckReport checkModification(const VModification& mu, const CheckOptions& opts) {
  for (const auto* a : {&mu.source(), &mu.target()})
    if (!a->valid()) fail(ErrorKind::LowerLevelInvalid, "endpoint transformation fails checkV2Nat");
  CheckReport r("checkModification");
  const auto& th = mu.source();
  const auto& ph = mu.target();
  const auto& T = th.source();
  const auto& S = th.target();
  const auto& U = T.source();
  const auto& W = T.target();
  const auto& V = U.base();
  const auto& c = V.category();
  const auto& obs = U.objects();
  r.family("component-typing");
  for (const auto& u : obs) {
    const auto& m = mu.component(u);
    const auto& to = W.hom(T.object(u), S.object(u)).hom(th.cell(u), ph.cell(u));
    r.expect(opts, "component-typing", names({u}), c.dom(m) == V.unit() && c.cod(m) == to, typed(c, m),
             V.unit().str() + "->" + to.str());
  }
  for (const auto& u : obs) {
    VNatTransform fam(th.component(u), ph.component(u), {{kZero, mu.component(u)}});
    r.absorb(checkVNat(fam, opts), "component-transformation", {u.str()});
  }
  r.family("modification");
  for (const auto& u : obs)
    for (const auto& u2 : obs) {
      const auto &q = th.cell(u), &qh = ph.cell(u), &q2 = th.cell(u2), &qh2 = ph.cell(u2);
      const auto& tU = T.hom(u, u2);
      const auto& sU = S.hom(u, u2);
      const auto& mL = W.composition(T.object(u), T.object(u2), S.object(u2));
      const auto& mR = W.composition(T.object(u), S.object(u), S.object(u2));
      const auto& cells = U.hom(u, u2).objects();
      scanFamily(r, opts, "modification", cells.size() * cells.size(), [&](std::size_t idx) {
        const auto& f = cells[idx / cells.size()];
        const auto& g = cells[idx % cells.size()];
        auto lhs = c.tryChain({mL.hom(pairId(q2, tU.object(f)), pairId(qh2, tU.object(g))),
                               V.tensorMor(2, mu.component(u2), tU.hom(f, g))});
        auto rhs = c.tryChain({mR.hom(pairId(sU.object(f), q), pairId(sU.object(g), qh)),
                               V.tensorMor(2, sU.hom(f, g), mu.component(u))});
        return legs(names({u, u2, f, g}), lhs, rhs);
      });
    }
  return r;
}

}  // namespace enriched
