#include "enriched/fincat.hpp"

#include <algorithm>
#include <set>

namespace enriched {

namespace {

template <class Tag>
void requireWellFormed(const Id<Tag>& id, const char* what) {
  if (!isWellFormedId(id.str()))
    fail(ErrorKind::MalformedTable, std::string("ill-formed ") + what + " identifier '" + id.str() + "'");
}

const std::vector<MorId> kNoMorphisms;

}  // namespace

FinCategory::FinCategory(std::vector<ObjId> objects, std::map<MorId, Arrow> morphisms,
                         std::map<ObjId, MorId> identities, CompositionTable composition)
    : objects_(std::move(objects)),
      arrows_(std::move(morphisms)),
      identities_(std::move(identities)),
      composition_(std::move(composition)) {
  if (objects_.empty()) fail(ErrorKind::MalformedTable, "a category needs at least one object");
  std::sort(objects_.begin(), objects_.end());
  if (std::adjacent_find(objects_.begin(), objects_.end()) != objects_.end())
    fail(ErrorKind::MalformedTable, "duplicate object");
  for (const auto& a : objects_) requireWellFormed(a, "object");
  for (const auto& [f, ar] : arrows_) {
    requireWellFormed(f, "morphism");
    if (!hasObject(ar.dom) || !hasObject(ar.cod))
      fail(ErrorKind::MalformedTable, "morphism " + f.str() + " has an unknown endpoint");
    morphismList_.push_back(f);
    homs_[{ar.dom, ar.cod}].push_back(f);
  }
  for (const auto& a : objects_)
    if (!identities_.count(a)) fail(ErrorKind::MalformedTable, "no identity for object " + a.str());
  for (const auto& [a, f] : identities_) {
    if (!hasObject(a)) fail(ErrorKind::MalformedTable, "identity for unknown object " + a.str());
    if (!hasMorphism(f)) fail(ErrorKind::MalformedTable, "identity " + f.str() + " is not a morphism");
  }
  for (const auto& [gf, h] : composition_) {
    if (!hasMorphism(gf.first) || !hasMorphism(gf.second) || !hasMorphism(h))
      fail(ErrorKind::MalformedTable, "composition entry (" + gf.first.str() + ", " +
                                          gf.second.str() + ") references an unknown morphism");
  }
}

bool FinCategory::hasObject(const ObjId& a) const {
  return std::binary_search(objects_.begin(), objects_.end(), a);
}

bool FinCategory::hasMorphism(const MorId& f) const { return arrows_.count(f) > 0; }

const ObjId& FinCategory::dom(const MorId& f) const {
  auto it = arrows_.find(f);
  if (it == arrows_.end()) fail(ErrorKind::UnknownMorphism, f.str());
  return it->second.dom;
}

const ObjId& FinCategory::cod(const MorId& f) const {
  auto it = arrows_.find(f);
  if (it == arrows_.end()) fail(ErrorKind::UnknownMorphism, f.str());
  return it->second.cod;
}

const MorId& FinCategory::id(const ObjId& a) const {
  auto it = identities_.find(a);
  if (it == identities_.end()) fail(ErrorKind::UnknownObject, a.str());
  return it->second;
}

const std::vector<MorId>& FinCategory::hom(const ObjId& a, const ObjId& b) const {
  auto it = homs_.find({a, b});
  return it == homs_.end() ? kNoMorphisms : it->second;
}

std::optional<MorId> FinCategory::tryCompose(const MorId& g, const MorId& f) const {
  auto it = composition_.find({g, f});
  if (it == composition_.end()) return std::nullopt;
  return it->second;
}

std::optional<MorId> FinCategory::tryChain(std::span<const MorId> fs) const {
  if (fs.empty()) return std::nullopt;
  std::optional<MorId> acc = fs.front();
  for (std::size_t k = 1; k < fs.size() && acc; ++k) acc = tryCompose(*acc, fs[k]);
  return acc;
}

std::optional<MorId> FinCategory::tryChain(std::initializer_list<std::optional<MorId>> fs) const {
  if (fs.size() == 0) return std::nullopt;
  std::optional<MorId> acc;
  bool first = true;
  for (const auto& f : fs) {
    if (!f) return std::nullopt;
    if (first) {
      acc = f;
      first = false;
    } else {
      acc = tryCompose(*acc, *f);
      if (!acc) return std::nullopt;
    }
  }
  return acc;
}

std::optional<MorId> FinCategory::inverse(const MorId& f) const {
  const auto& a = dom(f);
  const auto& b = cod(f);
  for (const auto& g : hom(b, a)) {
    auto gf = tryCompose(g, f);
    auto fg = tryCompose(f, g);
    if (gf && fg && *gf == id(a) && *fg == id(b)) return g;
  }
  return std::nullopt;
}

bool FinCategory::isIdentity(const MorId& f) const {
  auto it = arrows_.find(f);
  return it != arrows_.end() && it->second.dom == it->second.cod && id(it->second.dom) == f;
}

bool operator==(const FinCategory& a, const FinCategory& b) {
  if (&a == &b) return true;
  return a.objects_ == b.objects_ && a.arrows_ == b.arrows_ && a.identities_ == b.identities_ &&
         a.composition_ == b.composition_;
}

MorId compose(const FinCategory& c, const MorId& g, const MorId& f) {
  if (!c.hasMorphism(g)) fail(ErrorKind::UnknownMorphism, g.str());
  if (!c.hasMorphism(f)) fail(ErrorKind::UnknownMorphism, f.str());
  auto h = c.tryCompose(g, f);
  if (!h || c.cod(f) != c.dom(g))
    fail(ErrorKind::CompositionUndefined, g.str() + " after " + f.str());
  return *h;
}

MorId composeChain(const FinCategory& c, std::span<const MorId> fs) {
  if (fs.empty()) fail(ErrorKind::EmptyChain, "composeChain of zero morphisms");
  MorId acc = fs.front();
  if (!c.hasMorphism(acc)) fail(ErrorKind::UnknownMorphism, acc.str());
  for (std::size_t k = 1; k < fs.size(); ++k) acc = compose(c, acc, fs[k]);
  return acc;
}

FinFunctor::FinFunctor(FinCategoryRef source, FinCategoryRef target, std::map<ObjId, ObjId> objMap,
                       std::map<MorId, MorId> morMap)
    : source_(std::move(source)), target_(std::move(target)), objMap_(std::move(objMap)),
      morMap_(std::move(morMap)) {
  for (const auto& a : source_->objects()) {
    auto it = objMap_.find(a);
    if (it == objMap_.end()) fail(ErrorKind::MalformedTable, "functor misses object " + a.str());
    if (!target_->hasObject(it->second))
      fail(ErrorKind::MalformedTable, "functor sends " + a.str() + " outside the target");
  }
  for (const auto& f : source_->morphisms()) {
    auto it = morMap_.find(f);
    if (it == morMap_.end()) fail(ErrorKind::MalformedTable, "functor misses morphism " + f.str());
    if (!target_->hasMorphism(it->second))
      fail(ErrorKind::MalformedTable, "functor sends " + f.str() + " outside the target");
  }
  if (objMap_.size() != source_->objects().size() || morMap_.size() != source_->morphisms().size())
    fail(ErrorKind::MalformedTable, "functor table mentions ids outside the source");
}

const ObjId& FinFunctor::object(const ObjId& a) const {
  auto it = objMap_.find(a);
  if (it == objMap_.end()) fail(ErrorKind::UnknownObject, a.str());
  return it->second;
}

const MorId& FinFunctor::morphism(const MorId& f) const {
  auto it = morMap_.find(f);
  if (it == morMap_.end()) fail(ErrorKind::UnknownMorphism, f.str());
  return it->second;
}

FinNatTransform::FinNatTransform(std::shared_ptr<const FinFunctor> source,
                                 std::shared_ptr<const FinFunctor> target,
                                 std::map<ObjId, MorId> components)
    : source_(std::move(source)), target_(std::move(target)), components_(std::move(components)) {
  if (!(source_->source() == target_->source()) || !(source_->target() == target_->target()))
    fail(ErrorKind::NotParallel, "natural transformation between non-parallel functors");
  for (const auto& a : source_->source().objects()) {
    auto it = components_.find(a);
    if (it == components_.end()) fail(ErrorKind::MalformedTable, "missing component at " + a.str());
    if (!source_->target().hasMorphism(it->second))
      fail(ErrorKind::MalformedTable, "component " + it->second.str() + " is not a morphism");
  }
}

const MorId& FinNatTransform::component(const ObjId& a) const {
  auto it = components_.find(a);
  if (it == components_.end()) fail(ErrorKind::UnknownObject, a.str());
  return it->second;
}

CheckReport checkCategory(const FinCategory& c, const CheckOptions& opts) {
  CheckReport r("checkCategory");
  for (const auto& a : c.objects()) {
    const auto& i = c.id(a);
    r.expect(opts, "identity-typing", {a.str(), i.str()}, c.dom(i) == a && c.cod(i) == a,
             c.dom(i).str() + "->" + c.cod(i).str(), a.str() + "->" + a.str());
  }
  r.family("composition-total");
  r.family("composition-spurious");
  r.family("composition-typing");
  for (const auto& g : c.morphisms()) {
    for (const auto& f : c.morphisms()) {
      bool composable = c.cod(f) == c.dom(g);
      auto gf = c.tryCompose(g, f);
      if (composable) {
        r.expect(opts, "composition-total", {g.str(), f.str()}, gf.has_value(), "undefined",
                 c.dom(f).str() + "->" + c.cod(g).str());
        if (gf)
          r.expect(opts, "composition-typing", {g.str(), f.str()},
                   c.dom(*gf) == c.dom(f) && c.cod(*gf) == c.cod(g),
                   gf->str() + ":" + c.dom(*gf).str() + "->" + c.cod(*gf).str(),
                   c.dom(f).str() + "->" + c.cod(g).str());
      } else {
        r.expect(opts, "composition-spurious", {g.str(), f.str()}, !gf.has_value(), show(gf),
                 "undefined");
      }
    }
  }
  r.family("unit-left");
  r.family("unit-right");
  for (const auto& f : c.morphisms()) {
    r.expectEqual(opts, "unit-left", {c.id(c.cod(f)).str(), f.str()},
                  str(c.tryCompose(c.id(c.cod(f)), f)), f.str());
    r.expectEqual(opts, "unit-right", {f.str(), c.id(c.dom(f)).str()},
                  str(c.tryCompose(f, c.id(c.dom(f)))), f.str());
  }
  r.family("associativity");
  for (const auto& f : c.morphisms()) {
    for (const auto& g : c.morphisms()) {
      if (c.cod(f) != c.dom(g)) continue;
      for (const auto& h : c.morphisms()) {
        if (c.cod(g) != c.dom(h)) continue;
        auto l = c.tryChain({c.tryCompose(h, g), f});
        auto rr = c.tryChain({h, c.tryCompose(g, f)});
        r.expectEqual(opts, "associativity", {h.str(), g.str(), f.str()}, str(l), str(rr));
      }
    }
  }
  return r;
}

CheckReport checkFunctor(const FinFunctor& F, const CheckOptions& opts) {
  CheckReport r("checkFunctor");
  const auto& C = F.source();
  const auto& D = F.target();
  r.family("preserves-dom-cod");
  for (const auto& f : C.morphisms()) {
    const auto& Ff = F.morphism(f);
    r.expect(opts, "preserves-dom-cod", {f.str()},
             D.dom(Ff) == F.object(C.dom(f)) && D.cod(Ff) == F.object(C.cod(f)),
             Ff.str() + ":" + D.dom(Ff).str() + "->" + D.cod(Ff).str(),
             F.object(C.dom(f)).str() + "->" + F.object(C.cod(f)).str());
  }
  r.family("preserves-identities");
  for (const auto& a : C.objects())
    r.expectEqual(opts, "preserves-identities", {a.str()}, F.morphism(C.id(a)).str(),
                  D.id(F.object(a)).str());
  r.family("preserves-composition");
  for (const auto& gf : C.composition()) {
    const auto& [g, f] = gf.first;
    if (C.cod(f) != C.dom(g)) continue;
    auto rhs = D.tryCompose(F.morphism(g), F.morphism(f));
    r.expectEqual(opts, "preserves-composition", {g.str(), f.str()}, F.morphism(gf.second).str(),
                  str(rhs));
  }
  return r;
}

CheckReport checkNatural(const FinNatTransform& t, const CheckOptions& opts) {
  CheckReport r("checkNatural");
  const auto& F = t.source();
  const auto& G = t.target();
  const auto& C = F.source();
  const auto& D = F.target();
  r.family("component-typing");
  for (const auto& a : C.objects()) {
    const auto& ta = t.component(a);
    r.expect(opts, "component-typing", {a.str()},
             D.dom(ta) == F.object(a) && D.cod(ta) == G.object(a),
             ta.str() + ":" + D.dom(ta).str() + "->" + D.cod(ta).str(),
             F.object(a).str() + "->" + G.object(a).str());
  }
  std::vector<MorId> morphisms = C.morphisms();
  scanFamily(r, opts, "naturality", morphisms.size(), [&](std::size_t k) -> std::optional<Witness> {
    const auto& f = morphisms[k];
    auto lhs = D.tryCompose(G.morphism(f), t.component(C.dom(f)));
    auto rhs = D.tryCompose(t.component(C.cod(f)), F.morphism(f));
    if (lhs && rhs && *lhs == *rhs) return std::nullopt;
    return Witness{"", {f.str()}, show(lhs), show(rhs)};
  });
  return r;
}

FinCategory productCategory(const FinCategory& c, const FinCategory& d) {
  std::vector<ObjId> objects;
  for (const auto& a : c.objects())
    for (const auto& b : d.objects()) objects.push_back(pairId(a, b));
  std::map<MorId, Arrow> arrows;
  for (const auto& [f, fa] : c.arrows())
    for (const auto& [g, ga] : d.arrows())
      arrows.emplace(pairId(f, g), Arrow{pairId(fa.dom, ga.dom), pairId(fa.cod, ga.cod)});
  std::map<ObjId, MorId> ids;
  for (const auto& a : c.objects())
    for (const auto& b : d.objects()) ids.emplace(pairId(a, b), pairId(c.id(a), d.id(b)));
  CompositionTable comp;
  for (const auto& [gf1, h1] : c.composition())
    for (const auto& [gf2, h2] : d.composition())
      comp.emplace(std::pair{pairId(gf1.first, gf2.first), pairId(gf1.second, gf2.second)},
                   pairId(h1, h2));
  return FinCategory(std::move(objects), std::move(arrows), std::move(ids), std::move(comp));
}

}  // namespace enriched
