#pragma once

#include <functional>
#include <set>

#include "enriched/vcat.hpp"

namespace enriched {

// Symmetric inputs for fromSymmetric.
SymmetricMonoidal boolSymmetric();        // bot -u-> top, meet, unit top
SymmetricMonoidal zmod2Symmetric();       // discrete {0,1}, addition mod 2
SymmetricMonoidal superZ2Symmetric();     // {0,1}, each with automorphisms {id, s}, c_{x,y} = s^{xy}
SymmetricMonoidal cyclicSymmetric(int order);  // one object * with automorphism group Z/order

// Grading group Z/grades, automorphism group Z/auts on every object, trivial associator and
// braiding c_{x,y} = s^{braid(x,y)}. braid must be bilinear and antisymmetric for the result to
// be symmetric.
SymmetricMonoidal gradedSymmetric(int grades, int auts, const std::function<int(int, int)>& braid);

KFoldMonoidal boolPoset(int k);
KFoldMonoidal zmod2(int k);
KFoldMonoidal superZ2(int k);
KFoldMonoidal deloopedCyclic(int k, int order = 3);

BaseRef share(KFoldMonoidal v);

// Object names used by the graded bases.
ObjId gradeObject(int grades, int x);
MorId gradeMorphism(int grades, int x, int a);

// Bool-enriched category of a preorder: hom(a,b) = top iff a <= b. NotPreorder otherwise.
VCategory preorderVCat(const BaseRef& boolBase, const std::vector<ObjId>& objects,
                       const std::set<std::pair<ObjId, ObjId>>& leq);

// Over a base graded by Z/2: hom(a,b) = p(b) - p(a), composition and units identities.
VCategory cocycleVCat(const BaseRef& base, const std::map<ObjId, int>& potential);

// hom objects all I, composition and units identities
VCategory chaoticVCat(const BaseRef& base, const std::vector<ObjId>& objects);

// Transport along automorphisms phi_{ab} of the hom objects:
// M' = phi_ac . M . (phi_bc^-1 (x)1 phi_ab^-1), j'_a = phi_aa . j_a. Missing entries are identities.
using Gauge = std::map<std::pair<ObjId, ObjId>, MorId>;
VCategory gaugeTransform(const VCategory& a, const Gauge& phi);
// the identity-on-objects V-functor a -> gaugeTransform(a, phi) with components phi
VFunctor gaugeFunctor(const VCategoryRef& a, const VCategoryRef& transported, const Gauge& phi);

}  // namespace enriched
