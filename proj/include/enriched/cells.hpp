#pragma once

#include "enriched/v2cat.hpp"

namespace enriched {

// one object "0", hom the unit V-category
V2Category unitV2Category(const BaseRef& base);
// objects (A,B), hom(A,B)(x)_{i+1} hom(A',B'); needs i <= n-2
V2Category productV2Cat(int i, const V2CategoryRef& u, const V2CategoryRef& w);

// objects and 1-cells renamed; names missing from the maps are kept
V2Category relabelV2(const V2Category& u, const ObjMap& objects,
                     const std::map<std::pair<ObjId, ObjId>, ObjMap>& cells);

V2Functor identityV2Functor(const V2CategoryRef& u);
V2Functor composeV2Functors(const V2FunctorRef& s, const V2FunctorRef& t);  // s . t

// the V-functor I -> hom sending 0 to q with unit component c
VFunctor pointAt(const VCategoryRef& hom, const ObjId& q, const MorId& c);

V2NatTransform idNat(const V2FunctorRef& t);
// b * a for a : T -> S, b : S -> R
V2NatTransform composeNatAlongFunctor(const V2NatRef& b, const V2NatRef& a);
V2NatTransform whiskerFunctorNat(const V2FunctorRef& g, const V2NatRef& a);  // G a
V2NatTransform whiskerNatFunctor(const V2NatRef& c, const V2FunctorRef& h);  // c H

struct NatRoutes {
  V2NatTransform viaSource;  // (cH) * (Ga)
  V2NatTransform viaTarget;  // (Ka) * (cF)
};
// a : F -> H over U -> V, c : G -> K over V -> W; result GF -> KH
NatRoutes hcompNatsAlongCategoryRoutes(const V2NatRef& c, const V2NatRef& a);
V2NatTransform hcompNatsAlongCategory(const V2NatRef& c, const V2NatRef& a);

VModification idModification(const V2NatRef& a);
// n . m for m : a => b, n : b => c
VModification vcompModifications(const ModificationRef& n, const ModificationRef& m);
// c * m for m : a => b between T -> S and c : S -> R
VModification whiskerNatModLeft(const V2NatRef& c, const ModificationRef& m);
// m * r for m : a => b between S -> R and r : T -> S
VModification whiskerNatModRight(const ModificationRef& m, const V2NatRef& r);

struct ModRoutes {
  std::vector<VModification> ways;
};

// m : a => b over T -> S, n : c => d over S -> R; result c*a => d*b
ModRoutes hcompModificationsAlongNatRoutes(const ModificationRef& n, const ModificationRef& m);
VModification hcompModificationsAlongNat(const ModificationRef& n, const ModificationRef& m);

VModification whiskerFunctorMod(const V2FunctorRef& k, const ModificationRef& m);  // K m
VModification whiskerModFunctor(const ModificationRef& n, const V2FunctorRef& f);  // n F

// r : G -> K, m : a => b over F -> H; result r a => r b
ModRoutes whiskerNatModAlongCategoryRoutes(const V2NatRef& r, const ModificationRef& m);
VModification whiskerNatModAlongCategory(const V2NatRef& r, const ModificationRef& m);
// n : c => d over G -> K, a : F -> H; result c a => d a
ModRoutes whiskerModNatAlongCategoryRoutes(const ModificationRef& n, const V2NatRef& a);
VModification whiskerModNatAlongCategory(const ModificationRef& n, const V2NatRef& a);
// n : c => d over G -> K, m : a => b over F -> H; result c a => d b
ModRoutes hcompModsAlongCategoryRoutes(const ModificationRef& n, const ModificationRef& m);
VModification hcompModsAlongCategory(const ModificationRef& n, const ModificationRef& m);

// first disagreeing entry of two parallel cells, if any
std::optional<Witness> natDifference(const V2NatTransform& a, const V2NatTransform& b);
std::optional<Witness> modDifference(const VModification& a, const VModification& b);

}  // namespace enriched
