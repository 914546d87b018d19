#pragma once

#include <mutex>

#include "enriched/vcat.hpp"

namespace enriched {

// lazily computed "passes its checker", shared by copies
struct ValidityCache {
  std::once_flag once;
  bool ok = false;
};

// hom(A,B) is a V-category over the first base tensor; composition M_ABC is a V-functor
// hom(B,C) (x)1 hom(A,B) -> hom(A,C) where the product uses the second base tensor, and
// the unit J_A is a V-functor from the unit V-category to hom(A,A). Needs n >= 2.
class V2Category {
 public:
  V2Category(BaseRef base, std::vector<ObjId> objects, std::map<std::pair<ObjId, ObjId>, VCategoryRef> homs,
             std::map<std::array<ObjId, 3>, VFunctor> composition, std::map<ObjId, VFunctor> units);

  const KFoldMonoidal& base() const noexcept { return *base_; }
  const BaseRef& baseRef() const noexcept { return base_; }
  const std::vector<ObjId>& objects() const noexcept { return objects_; }
  bool hasObject(const ObjId& a) const;
  const VCategory& hom(const ObjId& a, const ObjId& b) const { return *homRef(a, b); }
  const VCategoryRef& homRef(const ObjId& a, const ObjId& b) const;
  const VFunctor& composition(const ObjId& a, const ObjId& b, const ObjId& c) const;
  const VFunctor& identity(const ObjId& a) const;
  // 1_A = J_A(0)
  const ObjId& unitCell(const ObjId& a) const;
  // gf for g in hom(B,C), f in hom(A,B)
  const ObjId& compose1(const ObjId& a, const ObjId& b, const ObjId& c, const ObjId& g, const ObjId& f) const;

  const std::map<std::pair<ObjId, ObjId>, VCategoryRef>& homs() const noexcept { return homs_; }
  const std::map<std::array<ObjId, 3>, VFunctor>& compositions() const noexcept { return comp_; }
  const std::map<ObjId, VFunctor>& units() const noexcept { return unit_; }

  // cached checker verdict, with default options
  bool valid() const;

  friend bool operator==(const V2Category& a, const V2Category& b);

 private:
  std::shared_ptr<ValidityCache> cache_ = std::make_shared<ValidityCache>();
  BaseRef base_;
  std::vector<ObjId> objects_;
  std::map<std::pair<ObjId, ObjId>, VCategoryRef> homs_;
  std::map<std::array<ObjId, 3>, VFunctor> comp_;
  std::map<ObjId, VFunctor> unit_;
};

using V2CategoryRef = std::shared_ptr<const V2Category>;
bool sameV2Category(const V2CategoryRef& a, const V2CategoryRef& b);

class V2Functor {
 public:
  // homs: (U,U') -> V-functor source(U,U') -> target(TU,TU')
  V2Functor(V2CategoryRef source, V2CategoryRef target, ObjMap objMap,
            std::map<std::pair<ObjId, ObjId>, VFunctor> homs);

  const V2Category& source() const noexcept { return *source_; }
  const V2Category& target() const noexcept { return *target_; }
  const V2CategoryRef& sourceRef() const noexcept { return source_; }
  const V2CategoryRef& targetRef() const noexcept { return target_; }
  const ObjId& object(const ObjId& a) const;
  const VFunctor& hom(const ObjId& a, const ObjId& b) const;
  const ObjMap& objectMap() const noexcept { return objMap_; }
  const std::map<std::pair<ObjId, ObjId>, VFunctor>& homs() const noexcept { return homs_; }

  // cached checker verdict, with default options
  bool valid() const;

  friend bool operator==(const V2Functor& a, const V2Functor& b);

 private:
  std::shared_ptr<ValidityCache> cache_ = std::make_shared<ValidityCache>();
  V2CategoryRef source_;
  V2CategoryRef target_;
  ObjMap objMap_;
  std::map<std::pair<ObjId, ObjId>, VFunctor> homs_;
};

using V2FunctorRef = std::shared_ptr<const V2Functor>;
bool sameV2Functor(const V2FunctorRef& a, const V2FunctorRef& b);

class V2NatTransform {
 public:
  // components: U -> V-functor from the unit V-category to target(TU, SU)
  V2NatTransform(V2FunctorRef source, V2FunctorRef target, std::map<ObjId, VFunctor> components);

  const V2Functor& source() const noexcept { return *source_; }
  const V2Functor& target() const noexcept { return *target_; }
  const V2FunctorRef& sourceRef() const noexcept { return source_; }
  const V2FunctorRef& targetRef() const noexcept { return target_; }
  const VFunctor& component(const ObjId& u) const;
  // q_U = alpha_U(0), a 1-cell TU -> SU
  const ObjId& cell(const ObjId& u) const;
  // alpha_{U,00} : I -> target(TU,SU)(q_U, q_U)
  const MorId& unitComponent(const ObjId& u) const;
  const std::map<ObjId, VFunctor>& components() const noexcept { return components_; }

  // cached checker verdict, with default options
  bool valid() const;

  friend bool operator==(const V2NatTransform& a, const V2NatTransform& b);

 private:
  std::shared_ptr<ValidityCache> cache_ = std::make_shared<ValidityCache>();
  V2FunctorRef source_;
  V2FunctorRef target_;
  std::map<ObjId, VFunctor> components_;
};

using V2NatRef = std::shared_ptr<const V2NatTransform>;
bool sameV2Nat(const V2NatRef& a, const V2NatRef& b);

class VModification {
 public:
  // components mu_U : I -> target(TU,SU)(theta_U(0), phi_U(0))
  VModification(V2NatRef source, V2NatRef target, std::map<ObjId, MorId> components);

  const V2NatTransform& source() const noexcept { return *source_; }
  const V2NatTransform& target() const noexcept { return *target_; }
  const V2NatRef& sourceRef() const noexcept { return source_; }
  const V2NatRef& targetRef() const noexcept { return target_; }
  const MorId& component(const ObjId& u) const;
  const std::map<ObjId, MorId>& components() const noexcept { return components_; }

  friend bool operator==(const VModification& a, const VModification& b);

 private:
  V2NatRef source_;
  V2NatRef target_;
  std::map<ObjId, MorId> components_;
};

using ModificationRef = std::shared_ptr<const VModification>;

CheckReport checkV2Category(const V2Category& u, const CheckOptions& opts = {});
CheckReport checkV2Functor(const V2Functor& t, const CheckOptions& opts = {});
CheckReport checkV2Nat(const V2NatTransform& a, const CheckOptions& opts = {});
CheckReport checkModification(const VModification& m, const CheckOptions& opts = {});

template <class T>
std::shared_ptr<const T> ref(T value) {
  return std::make_shared<const T>(std::move(value));
}

}  // namespace enriched
