#include "enriched/vcat.hpp"

#include <algorithm>

namespace enriched {

namespace {

std::string typed(const FinCategory& c, const MorId& f) {
  return f.str() + ":" + c.dom(f).str() + "->" + c.cod(f).str();
}

std::string arrowText(const ObjId& a, const ObjId& b) { return a.str() + "->" + b.str(); }

MorId defined(const std::optional<MorId>& m, const std::string& what) {
  if (!m) fail(ErrorKind::ConstructionFailed, what + " is undefined");
  return *m;
}

void requireValid(const VCategory& a, const char* role) {
  if (!checkVCategory(a).passed())
    fail(ErrorKind::LowerLevelInvalid, std::string(role) + " V-category fails checkVCategory");
}

}  // namespace

VCategory::VCategory(BaseRef base, std::vector<ObjId> objects, HomTable hom, CompTable comp,
                     UnitTable unit)
    : base_(std::move(base)),
      objects_(std::move(objects)),
      hom_(std::move(hom)),
      comp_(std::move(comp)),
      unit_(std::move(unit)) {
  if (!base_) fail(ErrorKind::MalformedTable, "V-category without a base");
  std::sort(objects_.begin(), objects_.end());
  if (std::adjacent_find(objects_.begin(), objects_.end()) != objects_.end())
    fail(ErrorKind::MalformedTable, "duplicate V-category object");
  const auto& c = base_->category();
  const std::size_t n = objects_.size();
  for (const auto& a : objects_)
    if (!isWellFormedId(a.str())) fail(ErrorKind::MalformedTable, "ill-formed object id '" + a.str() + "'");
  if (hom_.size() != n * n || comp_.size() != n * n * n || unit_.size() != n)
    fail(ErrorKind::MalformedTable, "V-category tables are not total over the objects");
  for (const auto& [ab, x] : hom_) {
    if (!hasObject(ab.first) || !hasObject(ab.second))
      fail(ErrorKind::MalformedTable, "hom entry for unknown objects");
    if (!c.hasObject(x)) fail(ErrorKind::MalformedTable, "hom object " + x.str() + " is not in the base");
  }
  for (const auto& [abc, m] : comp_) {
    for (const auto& o : abc)
      if (!hasObject(o)) fail(ErrorKind::MalformedTable, "composition entry for unknown object " + o.str());
    if (!c.hasMorphism(m)) fail(ErrorKind::MalformedTable, "composition morphism " + m.str() + " is not in the base");
  }
  for (const auto& [a, m] : unit_) {
    if (!hasObject(a)) fail(ErrorKind::MalformedTable, "unit entry for unknown object " + a.str());
    if (!c.hasMorphism(m)) fail(ErrorKind::MalformedTable, "unit morphism " + m.str() + " is not in the base");
  }
}

bool VCategory::hasObject(const ObjId& a) const {
  return std::binary_search(objects_.begin(), objects_.end(), a);
}

const ObjId& VCategory::hom(const ObjId& a, const ObjId& b) const {
  auto it = hom_.find({a, b});
  if (it == hom_.end()) fail(ErrorKind::UnknownObject, pairString(a.str(), b.str()));
  return it->second;
}

const MorId& VCategory::composition(const ObjId& a, const ObjId& b, const ObjId& c) const {
  auto it = comp_.find({a, b, c});
  if (it == comp_.end()) fail(ErrorKind::UnknownObject, a.str() + "," + b.str() + "," + c.str());
  return it->second;
}

const MorId& VCategory::identity(const ObjId& a) const {
  auto it = unit_.find(a);
  if (it == unit_.end()) fail(ErrorKind::UnknownObject, a.str());
  return it->second;
}

bool sameBase(const KFoldMonoidal& a, const KFoldMonoidal& b) { return &a == &b || a == b; }

bool operator==(const VCategory& a, const VCategory& b) {
  if (&a == &b) return true;
  return a.objects_ == b.objects_ && a.hom_ == b.hom_ && a.comp_ == b.comp_ && a.unit_ == b.unit_ &&
         sameBase(*a.base_, *b.base_);
}

bool sameVCategory(const VCategoryRef& a, const VCategoryRef& b) {
  return a == b || (a && b && *a == *b);
}

VFunctor::VFunctor(VCategoryRef source, VCategoryRef target, ObjMap objMap, HomMap homMap)
    : source_(std::move(source)), target_(std::move(target)), objMap_(std::move(objMap)),
      homMap_(std::move(homMap)) {
  if (!sameBase(source_->base(), target_->base()))
    fail(ErrorKind::MalformedTable, "V-functor between categories over different bases");
  const auto& obs = source_->objects();
  if (objMap_.size() != obs.size() || homMap_.size() != obs.size() * obs.size())
    fail(ErrorKind::MalformedTable, "V-functor tables are not total");
  for (const auto& a : obs) {
    auto it = objMap_.find(a);
    if (it == objMap_.end()) fail(ErrorKind::MalformedTable, "V-functor misses object " + a.str());
    if (!target_->hasObject(it->second))
      fail(ErrorKind::MalformedTable, "V-functor sends " + a.str() + " to unknown " + it->second.str());
  }
  const auto& c = source_->base().category();
  for (const auto& [ab, m] : homMap_) {
    if (!source_->hasObject(ab.first) || !source_->hasObject(ab.second))
      fail(ErrorKind::MalformedTable, "V-functor hom entry for unknown objects");
    if (!c.hasMorphism(m)) fail(ErrorKind::MalformedTable, "V-functor component " + m.str() + " is not in the base");
  }
}

const ObjId& VFunctor::object(const ObjId& a) const {
  auto it = objMap_.find(a);
  if (it == objMap_.end()) fail(ErrorKind::UnknownObject, a.str());
  return it->second;
}

const MorId& VFunctor::hom(const ObjId& a, const ObjId& b) const {
  auto it = homMap_.find({a, b});
  if (it == homMap_.end()) fail(ErrorKind::UnknownObject, pairString(a.str(), b.str()));
  return it->second;
}

bool operator==(const VFunctor& a, const VFunctor& b) {
  return a.objMap_ == b.objMap_ && a.homMap_ == b.homMap_ && sameVCategory(a.source_, b.source_) &&
         sameVCategory(a.target_, b.target_);
}

VNatTransform::VNatTransform(VFunctor source, VFunctor target, std::map<ObjId, MorId> components)
    : source_(std::move(source)), target_(std::move(target)), components_(std::move(components)) {
  if (!sameVCategory(source_.sourceRef(), target_.sourceRef()) ||
      !sameVCategory(source_.targetRef(), target_.targetRef()))
    fail(ErrorKind::NotParallel, "V-natural transformation between non-parallel V-functors");
  const auto& c = source_.source().base().category();
  if (components_.size() != source_.source().objects().size())
    fail(ErrorKind::MalformedTable, "V-natural transformation components are not total");
  for (const auto& [a, m] : components_) {
    if (!source_.source().hasObject(a)) fail(ErrorKind::MalformedTable, "component at unknown object " + a.str());
    if (!c.hasMorphism(m)) fail(ErrorKind::MalformedTable, "component " + m.str() + " is not in the base");
  }
}

const MorId& VNatTransform::component(const ObjId& a) const {
  auto it = components_.find(a);
  if (it == components_.end()) fail(ErrorKind::UnknownObject, a.str());
  return it->second;
}

bool operator==(const VNatTransform& a, const VNatTransform& b) {
  return a.components_ == b.components_ && a.source_ == b.source_ && a.target_ == b.target_;
}

CheckReport checkVCategory(const VCategory& A, const CheckOptions& opts) {
  const auto& V = A.base();
  if (!V.valid()) fail(ErrorKind::BaseInvalid, "base fails checkKFold");
  CheckReport r("checkVCategory");
  const auto& c = V.category();
  const auto& obs = A.objects();
  const ObjId& I = V.unit();
  r.family("composition-typing");
  r.family("identity-typing");
  for (std::size_t k = 0; k < tupleCount(obs.size(), 3); ++k) {
    auto x = tupleAt(k, 3, obs);
    const auto& m = A.composition(x[0], x[1], x[2]);
    auto from = V.tensorObj(1, A.hom(x[1], x[2]), A.hom(x[0], x[1]));
    const auto& to = A.hom(x[0], x[2]);
    r.expect(opts, "composition-typing", strs(std::array{x[0], x[1], x[2]}),
             c.dom(m) == from && c.cod(m) == to, typed(c, m), arrowText(from, to));
  }
  for (const auto& a : obs) {
    const auto& j = A.identity(a);
    r.expect(opts, "identity-typing", {a.str()}, c.dom(j) == I && c.cod(j) == A.hom(a, a), typed(c, j),
             arrowText(I, A.hom(a, a)));
  }
  scanFamily(r, opts, "pentagon", tupleCount(obs.size(), 4), [&](std::size_t k) -> std::optional<Witness> {
    auto x = tupleAt(k, 4, obs);
    const auto &a = x[0], &b = x[1], &cc = x[2], &d = x[3];
    auto lhs = c.tryChain({A.composition(a, b, d), V.tensorMor(1, A.composition(b, cc, d), c.id(A.hom(a, b)))});
    auto rhs = c.tryChain({A.composition(a, cc, d), V.tensorMor(1, c.id(A.hom(cc, d)), A.composition(a, b, cc)),
                           V.associator(1, A.hom(cc, d), A.hom(b, cc), A.hom(a, b))});
    if (lhs && rhs && *lhs == *rhs) return std::nullopt;
    return Witness{"", {a.str(), b.str(), cc.str(), d.str()}, show(lhs), show(rhs)};
  });
  r.family("unit-left");
  r.family("unit-right");
  for (const auto& a : obs)
    for (const auto& b : obs) {
      const auto& idh = c.id(A.hom(a, b));
      r.expectEqual(opts, "unit-left", {a.str(), b.str()},
                    str(c.tryChain({A.composition(a, b, b), V.tensorMor(1, A.identity(b), idh)})), idh.str());
      r.expectEqual(opts, "unit-right", {a.str(), b.str()},
                    str(c.tryChain({A.composition(a, a, b), V.tensorMor(1, idh, A.identity(a))})), idh.str());
    }
  return r;
}

CheckReport checkVFunctor(const VFunctor& T, const CheckOptions& opts) {
  requireValid(T.source(), "source");
  requireValid(T.target(), "target");
  CheckReport r("checkVFunctor");
  const auto& A = T.source();
  const auto& B = T.target();
  const auto& V = A.base();
  const auto& c = V.category();
  const auto& obs = A.objects();
  r.family("hom-typing");
  for (const auto& a : obs)
    for (const auto& b : obs) {
      const auto& t = T.hom(a, b);
      const auto& from = A.hom(a, b);
      const auto& to = B.hom(T.object(a), T.object(b));
      r.expect(opts, "hom-typing", {a.str(), b.str()}, c.dom(t) == from && c.cod(t) == to, typed(c, t),
               arrowText(from, to));
    }
  scanFamily(r, opts, "composition-square", tupleCount(obs.size(), 3), [&](std::size_t k) -> std::optional<Witness> {
    auto x = tupleAt(k, 3, obs);
    auto lhs = c.tryChain({T.hom(x[0], x[2]), A.composition(x[0], x[1], x[2])});
    auto rhs = c.tryChain({B.composition(T.object(x[0]), T.object(x[1]), T.object(x[2])),
                           V.tensorMor(1, T.hom(x[1], x[2]), T.hom(x[0], x[1]))});
    if (lhs && rhs && *lhs == *rhs) return std::nullopt;
    return Witness{"", strs(std::array{x[0], x[1], x[2]}), show(lhs), show(rhs)};
  });
  r.family("unit-triangle");
  for (const auto& a : obs)
    r.expectEqual(opts, "unit-triangle", {a.str()}, str(c.tryChain({T.hom(a, a), A.identity(a)})),
                  B.identity(T.object(a)).str());
  return r;
}

CheckReport checkVNat(const VNatTransform& al, const CheckOptions& opts) {
  const auto& T = al.source();
  const auto& S = al.target();
  requireValid(T.source(), "source");
  requireValid(T.target(), "target");
  for (const auto* F : {&T, &S})
    if (!checkVFunctor(*F).passed()) fail(ErrorKind::LowerLevelInvalid, "endpoint V-functor fails checkVFunctor");
  CheckReport r("checkVNat");
  const auto& A = T.source();
  const auto& B = T.target();
  const auto& V = A.base();
  const auto& c = V.category();
  const auto& obs = A.objects();
  r.family("component-typing");
  for (const auto& a : obs) {
    const auto& m = al.component(a);
    const auto& to = B.hom(T.object(a), S.object(a));
    r.expect(opts, "component-typing", {a.str()}, c.dom(m) == V.unit() && c.cod(m) == to, typed(c, m),
             arrowText(V.unit(), to));
  }
  scanFamily(r, opts, "naturality", tupleCount(obs.size(), 2), [&](std::size_t k) -> std::optional<Witness> {
    auto x = tupleAt(k, 2, obs);
    const auto &a = x[0], &b = x[1];
    auto lhs = c.tryChain({B.composition(T.object(a), T.object(b), S.object(b)),
                           V.tensorMor(1, al.component(b), T.hom(a, b))});
    auto rhs = c.tryChain({B.composition(T.object(a), S.object(a), S.object(b)),
                           V.tensorMor(1, S.hom(a, b), al.component(a))});
    if (lhs && rhs && *lhs == *rhs) return std::nullopt;
    return Witness{"", {a.str(), b.str()}, show(lhs), show(rhs)};
  });
  return r;
}

std::optional<Witness> vfunctorDifference(const VFunctor& t, const VFunctor& s) {
  if (!sameVCategory(t.sourceRef(), s.sourceRef()) || !sameVCategory(t.targetRef(), s.targetRef()))
    fail(ErrorKind::NotParallel, "comparing V-functors with different endpoints");
  for (const auto& [a, x] : t.objectMap()) {
    const auto& y = s.object(a);
    if (x != y) return Witness{"object", {a.str()}, x.str(), y.str()};
  }
  for (const auto& [ab, m] : t.homMap()) {
    const auto& n = s.hom(ab.first, ab.second);
    if (m != n) return Witness{"hom", {ab.first.str(), ab.second.str()}, m.str(), n.str()};
  }
  return std::nullopt;
}

bool vfunctorEqual(const VFunctor& t, const VFunctor& s) { return !vfunctorDifference(t, s); }

VCategory productVCat(int i, const VCategory& A, const VCategory& B) {
  const auto& V = A.base();
  if (!sameBase(V, B.base())) fail(ErrorKind::NotComposable, "product of V-categories over different bases");
  if (i < 1 || i + 1 > V.tensorCount())
    fail(ErrorKind::IndexOutOfRange, "productVCat index " + std::to_string(i) + " needs i <= n-1 with n = " +
                                         std::to_string(V.tensorCount()));
  const auto& c = V.category();
  const int t = i + 1;
  std::vector<ObjId> obs;
  for (const auto& a : A.objects())
    for (const auto& b : B.objects()) obs.push_back(pairId(a, b));
  HomTable hom;
  for (const auto& a : A.objects())
    for (const auto& b : B.objects())
      for (const auto& a2 : A.objects())
        for (const auto& b2 : B.objects())
          hom.emplace(std::pair{pairId(a, b), pairId(a2, b2)}, V.tensorObj(t, A.hom(a, a2), B.hom(b, b2)));
  CompTable comp;
  const auto& as = A.objects();
  const auto& bs = B.objects();
  for (const auto& a : as)
    for (const auto& a1 : as)
      for (const auto& a2 : as)
        for (const auto& b : bs)
          for (const auto& b1 : bs)
            for (const auto& b2 : bs) {
              auto m = c.tryChain({V.tensorMor(t, A.composition(a, a1, a2), B.composition(b, b1, b2)),
                                   V.interchange(1, t, A.hom(a1, a2), B.hom(b1, b2), A.hom(a, a1), B.hom(b, b1))});
              comp.emplace(std::array{pairId(a, b), pairId(a1, b1), pairId(a2, b2)},
                           defined(m, "product composition"));
            }
  UnitTable unit;
  for (const auto& a : as)
    for (const auto& b : bs) unit.emplace(pairId(a, b), V.tensorMor(t, A.identity(a), B.identity(b)));
  return VCategory(A.baseRef(), std::move(obs), std::move(hom), std::move(comp), std::move(unit));
}

VCategoryRef productVCatRef(int i, const VCategoryRef& a, const VCategoryRef& b) {
  return std::make_shared<const VCategory>(productVCat(i, *a, *b));
}

VCategory unitVCategory(const BaseRef& base) {
  const ObjId zero("0");
  const auto& I = base->unit();
  const auto& idI = base->category().id(I);
  return VCategory(base, {zero}, {{{zero, zero}, I}}, {{{zero, zero, zero}, idI}}, {{zero, idI}});
}

VCategoryRef unitVCategoryRef(const BaseRef& base) { return std::make_shared<const VCategory>(unitVCategory(base)); }

VFunctor productVFunctor(int i, const VFunctor& T, const VFunctor& S) {
  auto src = productVCatRef(i, T.sourceRef(), S.sourceRef());
  auto tgt = productVCatRef(i, T.targetRef(), S.targetRef());
  const auto& V = T.source().base();
  ObjMap om;
  HomMap hm;
  for (const auto& a : T.source().objects())
    for (const auto& b : S.source().objects()) {
      om.emplace(pairId(a, b), pairId(T.object(a), S.object(b)));
      for (const auto& a2 : T.source().objects())
        for (const auto& b2 : S.source().objects())
          hm.emplace(std::pair{pairId(a, b), pairId(a2, b2)}, V.tensorMor(i + 1, T.hom(a, a2), S.hom(b, b2)));
    }
  return VFunctor(std::move(src), std::move(tgt), std::move(om), std::move(hm));
}

VNatTransform productVNat(int i, const VNatTransform& a, const VNatTransform& b) {
  auto T = productVFunctor(i, a.source(), b.source());
  auto S = productVFunctor(i, a.target(), b.target());
  const auto& V = a.source().source().base();
  std::map<ObjId, MorId> comps;
  for (const auto& x : a.source().source().objects())
    for (const auto& y : b.source().source().objects())
      comps.emplace(pairId(x, y), V.tensorMor(i + 1, a.component(x), b.component(y)));
  return VNatTransform(std::move(T), std::move(S), std::move(comps));
}

VFunctor assocVCat(int i, const VCategoryRef& A, const VCategoryRef& B, const VCategoryRef& C) {
  auto src = productVCatRef(i, productVCatRef(i, A, B), C);
  auto tgt = productVCatRef(i, A, productVCatRef(i, B, C));
  const auto& V = A->base();
  ObjMap om;
  HomMap hm;
  for (const auto& a : A->objects())
    for (const auto& b : B->objects())
      for (const auto& c : C->objects()) {
        auto from = pairId(pairId(a, b), c);
        om.emplace(from, pairId(a, pairId(b, c)));
        for (const auto& a2 : A->objects())
          for (const auto& b2 : B->objects())
            for (const auto& c2 : C->objects())
              hm.emplace(std::pair{from, pairId(pairId(a2, b2), c2)},
                         V.associator(i + 1, A->hom(a, a2), B->hom(b, b2), C->hom(c, c2)));
      }
  return VFunctor(std::move(src), std::move(tgt), std::move(om), std::move(hm));
}

VFunctor interchangeVCat(int i, int j, const VCategoryRef& A, const VCategoryRef& B, const VCategoryRef& C,
                         const VCategoryRef& D) {
  const auto& V = A->base();
  if (i < 1 || i >= j || j + 1 > V.tensorCount())
    fail(ErrorKind::IndexOutOfRange, "interchangeVCat needs 1 <= i < j <= n-1");
  auto src = productVCatRef(i, productVCatRef(j, A, B), productVCatRef(j, C, D));
  auto tgt = productVCatRef(j, productVCatRef(i, A, C), productVCatRef(i, B, D));
  ObjMap om;
  HomMap hm;
  for (const auto& a : A->objects())
    for (const auto& b : B->objects())
      for (const auto& c : C->objects())
        for (const auto& d : D->objects()) {
          auto from = pairId(pairId(a, b), pairId(c, d));
          om.emplace(from, pairId(pairId(a, c), pairId(b, d)));
          for (const auto& a2 : A->objects())
            for (const auto& b2 : B->objects())
              for (const auto& c2 : C->objects())
                for (const auto& d2 : D->objects())
                  hm.emplace(std::pair{from, pairId(pairId(a2, b2), pairId(c2, d2))},
                             V.interchange(i + 1, j + 1, A->hom(a, a2), B->hom(b, b2), C->hom(c, c2),
                                           D->hom(d, d2)));
        }
  return VFunctor(std::move(src), std::move(tgt), std::move(om), std::move(hm));
}

VFunctor identityVFunctor(const VCategoryRef& A) {
  const auto& c = A->base().category();
  ObjMap om;
  HomMap hm;
  for (const auto& a : A->objects()) {
    om.emplace(a, a);
    for (const auto& b : A->objects()) hm.emplace(std::pair{a, b}, c.id(A->hom(a, b)));
  }
  return VFunctor(A, A, std::move(om), std::move(hm));
}

VFunctor composeVFunctor(const VFunctor& S, const VFunctor& T) {
  if (!sameVCategory(T.targetRef(), S.sourceRef()))
    fail(ErrorKind::NotComposable, "V-functor target and source differ");
  const auto& c = T.source().base().category();
  ObjMap om;
  HomMap hm;
  for (const auto& a : T.source().objects()) {
    om.emplace(a, S.object(T.object(a)));
    for (const auto& b : T.source().objects())
      hm.emplace(std::pair{a, b}, defined(c.tryChain({S.hom(T.object(a), T.object(b)), T.hom(a, b)}),
                                          "composite V-functor component"));
  }
  return VFunctor(T.sourceRef(), S.targetRef(), std::move(om), std::move(hm));
}

VNatTransform identityVNat(const VFunctor& T) {
  std::map<ObjId, MorId> comps;
  for (const auto& a : T.source().objects()) comps.emplace(a, T.target().identity(T.object(a)));
  return VNatTransform(T, T, std::move(comps));
}

VNatTransform composeVNatVert(const VNatTransform& b, const VNatTransform& a) {
  if (!(a.target() == b.source())) fail(ErrorKind::NotComposable, "vertical composite of non-matching transformations");
  const auto& T = a.source();
  const auto& S = a.target();
  const auto& R = b.target();
  const auto& B = T.target();
  const auto& V = B.base();
  std::map<ObjId, MorId> comps;
  for (const auto& x : T.source().objects())
    comps.emplace(x, defined(V.category().tryChain({B.composition(T.object(x), S.object(x), R.object(x)),
                                                     V.tensorMor(1, b.component(x), a.component(x))}),
                             "vertical composite component"));
  return VNatTransform(T, R, std::move(comps));
}

VNatTransform whiskerLeft(const VFunctor& F, const VNatTransform& a) {
  const auto& T = a.source();
  const auto& S = a.target();
  auto FT = composeVFunctor(F, T);
  auto FS = composeVFunctor(F, S);
  const auto& c = F.source().base().category();
  std::map<ObjId, MorId> comps;
  for (const auto& x : T.source().objects())
    comps.emplace(x, defined(c.tryChain({F.hom(T.object(x), S.object(x)), a.component(x)}), "whiskered component"));
  return VNatTransform(std::move(FT), std::move(FS), std::move(comps));
}

VNatTransform whiskerRight(const VNatTransform& a, const VFunctor& G) {
  auto TG = composeVFunctor(a.source(), G);
  auto SG = composeVFunctor(a.target(), G);
  std::map<ObjId, MorId> comps;
  for (const auto& x : G.source().objects()) comps.emplace(x, a.component(G.object(x)));
  return VNatTransform(std::move(TG), std::move(SG), std::move(comps));
}

namespace {

// relabeling between A and a product with the unit category; `unitFirst` puts I on the left
VFunctor unitRelabel(int i, const VCategoryRef& A, bool unitFirst, bool toA) {
  auto I = unitVCategoryRef(A->baseRef());
  auto P = unitFirst ? productVCatRef(i, I, A) : productVCatRef(i, A, I);
  const ObjId zero("0");
  auto wrap = [&](const ObjId& a) { return unitFirst ? pairId(zero, a) : pairId(a, zero); };
  const auto& c = A->base().category();
  ObjMap om;
  HomMap hm;
  for (const auto& a : A->objects()) {
    if (toA) om.emplace(wrap(a), a);
    else om.emplace(a, wrap(a));
    for (const auto& b : A->objects()) {
      if (toA) hm.emplace(std::pair{wrap(a), wrap(b)}, c.id(A->hom(a, b)));
      else hm.emplace(std::pair{a, b}, c.id(A->hom(a, b)));
    }
  }
  return toA ? VFunctor(P, A, std::move(om), std::move(hm)) : VFunctor(A, P, std::move(om), std::move(hm));
}

}  // namespace

VFunctor leftUnitor(int i, const VCategoryRef& a) { return unitRelabel(i, a, true, true); }
VFunctor rightUnitor(int i, const VCategoryRef& a) { return unitRelabel(i, a, false, true); }
VFunctor leftUnitorInv(int i, const VCategoryRef& a) { return unitRelabel(i, a, true, false); }
VFunctor rightUnitorInv(int i, const VCategoryRef& a) { return unitRelabel(i, a, false, false); }

VCategory renameObjects(const VCategory& A, const ObjMap& names) {
  auto nm = [&](const ObjId& a) {
    auto it = names.find(a);
    return it == names.end() ? a : it->second;
  };
  std::vector<ObjId> obs;
  for (const auto& a : A.objects()) obs.push_back(nm(a));
  HomTable hom;
  for (const auto& [ab, x] : A.homTable()) hom.emplace(std::pair{nm(ab.first), nm(ab.second)}, x);
  CompTable comp;
  for (const auto& [abc, m] : A.compTable()) comp.emplace(std::array{nm(abc[0]), nm(abc[1]), nm(abc[2])}, m);
  UnitTable unit;
  for (const auto& [a, m] : A.unitTable()) unit.emplace(nm(a), m);
  return VCategory(A.baseRef(), std::move(obs), std::move(hom), std::move(comp), std::move(unit));
}

}  // namespace enriched
