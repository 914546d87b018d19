#pragma once

#include <set>

#include "enriched/cells.hpp"
#include "enriched/shipped.hpp"

namespace enriched {

// preorder on the 1-cells of each hom, keyed by (A,B)
using CellOrder = std::map<std::pair<ObjId, ObjId>, std::set<std::pair<ObjId, ObjId>>>;

// 1-cells are the morphisms of c, every hom object is I
V2Category locallyChaoticV2(const BaseRef& base, const FinCategory& c);
// Bool base: hom(A,B)(f,g) = top iff f <= g. The order must be compatible with composition.
V2Category locallyPosetalV2(const BaseRef& boolBase, const FinCategory& c, const CellOrder& leq);
// smallest reflexive, transitive order containing seed and closed under whiskering
CellOrder compatibleClosure(const FinCategory& c, CellOrder seed);

// arrows a->b for a <= b; leq must be a preorder
FinCategory thinCategory(const std::vector<ObjId>& objects, const std::set<std::pair<ObjId, ObjId>>& leq);
// one object *, elements[0] the unit, product elements[mult(i, j)]
FinCategory monoidCategory(const std::vector<MorId>& elements, const std::function<int(int, int)>& mult);

// one object *, 1-cells {1,t} with t.t = t, 1 <= t
FinCategory joinMonoid();
V2Category joinMonoidV2Cat(const BaseRef& boolBase);

// unique arrow a -> b, the identity when a == b; ConstructionFailed otherwise
MorId thinArrow(const FinCategory& c, const ObjId& a, const ObjId& b);

// lifts of underlying maps; every hom component is an identity or the unique arrow
V2Functor liftV2Functor(const V2CategoryRef& u, const V2CategoryRef& w, const ObjMap& objects,
                        const std::map<std::pair<ObjId, ObjId>, ObjMap>& cells);
V2NatTransform liftV2Nat(const V2FunctorRef& t, const V2FunctorRef& s, const ObjMap& cells);
VModification liftModification(const V2NatRef& a, const V2NatRef& b);

// Transport along hom-wise gauges; the image is isomorphic, though tables differ.
using V2Gauge = std::map<std::pair<ObjId, ObjId>, Gauge>;
V2Category gaugeV2(const V2Category& u, const V2Gauge& phi);
V2Functor gaugeV2Functor(const V2Functor& t, const V2CategoryRef& u2, const V2Gauge& phiU, const V2CategoryRef& w2,
                         const V2Gauge& phiW);
V2NatTransform gaugeV2Nat(const V2NatTransform& a, const V2FunctorRef& t2, const V2FunctorRef& s2,
                          const V2Gauge& phiW);
VModification gaugeModification(const VModification& m, const V2NatRef& a2, const V2NatRef& b2, const V2Gauge& phiW);

}  // namespace enriched
