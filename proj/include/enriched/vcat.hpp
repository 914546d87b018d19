#pragma once

#include <array>
#include <map>
#include <memory>
#include <optional>
#include <vector>

#include "enriched/kfold.hpp"

namespace enriched {

using HomTable = std::map<std::pair<ObjId, ObjId>, ObjId>;
using CompTable = std::map<std::array<ObjId, 3>, MorId>;  // (A,B,C) -> M_ABC : hom(B,C) (x)1 hom(A,B) -> hom(A,C)
using UnitTable = std::map<ObjId, MorId>;             // A -> j_A : I -> hom(A,A)

// Category enriched over the first tensor of the base.
class VCategory {
 public:
  VCategory(BaseRef base, std::vector<ObjId> objects, HomTable hom, CompTable comp, UnitTable unit);

  const KFoldMonoidal& base() const noexcept { return *base_; }
  const BaseRef& baseRef() const noexcept { return base_; }
  const std::vector<ObjId>& objects() const noexcept { return objects_; }
  bool hasObject(const ObjId& a) const;
  const ObjId& hom(const ObjId& a, const ObjId& b) const;
  const MorId& composition(const ObjId& a, const ObjId& b, const ObjId& c) const;
  const MorId& identity(const ObjId& a) const;

  const HomTable& homTable() const noexcept { return hom_; }
  const CompTable& compTable() const noexcept { return comp_; }
  const UnitTable& unitTable() const noexcept { return unit_; }

  friend bool operator==(const VCategory& a, const VCategory& b);

 private:
  BaseRef base_;
  std::vector<ObjId> objects_;
  HomTable hom_;
  CompTable comp_;
  UnitTable unit_;
};

using VCategoryRef = std::shared_ptr<const VCategory>;

bool sameBase(const KFoldMonoidal& a, const KFoldMonoidal& b);
bool sameVCategory(const VCategoryRef& a, const VCategoryRef& b);

using ObjMap = std::map<ObjId, ObjId>;
using HomMap = std::map<std::pair<ObjId, ObjId>, MorId>;  // (A,B) -> T_AB : A(A,B) -> B(TA,TB)

class VFunctor {
 public:
  VFunctor(VCategoryRef source, VCategoryRef target, ObjMap objMap, HomMap homMap);

  const VCategory& source() const noexcept { return *source_; }
  const VCategory& target() const noexcept { return *target_; }
  const VCategoryRef& sourceRef() const noexcept { return source_; }
  const VCategoryRef& targetRef() const noexcept { return target_; }
  const ObjId& object(const ObjId& a) const;
  const MorId& hom(const ObjId& a, const ObjId& b) const;
  const ObjMap& objectMap() const noexcept { return objMap_; }
  const HomMap& homMap() const noexcept { return homMap_; }

  friend bool operator==(const VFunctor& a, const VFunctor& b);

 private:
  VCategoryRef source_;
  VCategoryRef target_;
  ObjMap objMap_;
  HomMap homMap_;
};

class VNatTransform {
 public:
  // components alpha_A : I -> target(TA, SA)
  VNatTransform(VFunctor source, VFunctor target, std::map<ObjId, MorId> components);

  const VFunctor& source() const noexcept { return source_; }
  const VFunctor& target() const noexcept { return target_; }
  const MorId& component(const ObjId& a) const;
  const std::map<ObjId, MorId>& components() const noexcept { return components_; }

  friend bool operator==(const VNatTransform& a, const VNatTransform& b);

 private:
  VFunctor source_;
  VFunctor target_;
  std::map<ObjId, MorId> components_;
};

// Throw BaseInvalid when the base fails checkKFold; functor and transformation checks
// throw LowerLevelInvalid when their endpoints fail.
CheckReport checkVCategory(const VCategory& a, const CheckOptions& opts = {});
CheckReport checkVFunctor(const VFunctor& t, const CheckOptions& opts = {});
CheckReport checkVNat(const VNatTransform& a, const CheckOptions& opts = {});

// Table equality of parallel V-functors; NotParallel otherwise.
bool vfunctorEqual(const VFunctor& t, const VFunctor& s);
// first disagreeing entry, if any
std::optional<Witness> vfunctorDifference(const VFunctor& t, const VFunctor& s);

// Tensor product over the (i+1)-th base tensor, objects "(a,b)". Needs i <= n-1.
VCategory productVCat(int i, const VCategory& a, const VCategory& b);
VCategoryRef productVCatRef(int i, const VCategoryRef& a, const VCategoryRef& b);
VCategory unitVCategory(const BaseRef& base);
VCategoryRef unitVCategoryRef(const BaseRef& base);
VFunctor productVFunctor(int i, const VFunctor& t, const VFunctor& s);
VNatTransform productVNat(int i, const VNatTransform& a, const VNatTransform& b);

// ((a,b),c) -> (a,(b,c)), components alpha^{i+1}
VFunctor assocVCat(int i, const VCategoryRef& a, const VCategoryRef& b, const VCategoryRef& c);
// ((a,b),(c,d)) -> ((a,c),(b,d)), components eta^{i+1,j+1}. Needs i < j and j+1 <= n.
VFunctor interchangeVCat(int i, int j, const VCategoryRef& a, const VCategoryRef& b,
                         const VCategoryRef& c, const VCategoryRef& d);

VFunctor identityVFunctor(const VCategoryRef& a);
VFunctor composeVFunctor(const VFunctor& s, const VFunctor& t);  // s . t
VNatTransform identityVNat(const VFunctor& t);
VNatTransform composeVNatVert(const VNatTransform& b, const VNatTransform& a);  // b . a
VNatTransform whiskerLeft(const VFunctor& f, const VNatTransform& a);   // F a
VNatTransform whiskerRight(const VNatTransform& a, const VFunctor& g);  // a G

// Strict unit relabelings over the (i+1)-th tensor; every hom component is an identity.
VFunctor leftUnitor(int i, const VCategoryRef& a);      // I (x) A -> A
VFunctor rightUnitor(int i, const VCategoryRef& a);     // A (x) I -> A
VFunctor leftUnitorInv(int i, const VCategoryRef& a);   // A -> I (x) A
VFunctor rightUnitorInv(int i, const VCategoryRef& a);  // A -> A (x) I

// Same V-category with objects renamed; unnamed objects are kept.
VCategory renameObjects(const VCategory& a, const ObjMap& names);

}  // namespace enriched
