#include "doctest.h"

#include "enriched/v2examples.hpp"

using namespace enriched;

namespace {

BaseRef bool2() {
  static BaseRef b = share(boolPoset(2));
  return b;
}

BaseRef cyc2() {
  static BaseRef b = share(deloopedCyclic(2));
  return b;
}

template <class F>
void expectKind(F&& f, ErrorKind k) {
  try {
    f();
    FAIL("no error");
  } catch (const Error& e) {
    CHECK(e.kind() == k);
  }
}

const ObjId star("*");

// a -> b with two parallel 1-cells is not available thinly, so use the arrow category twice
FinCategory arrow() { return thinCategory({"a"_o, "b"_o}, {{"a"_o, "b"_o}}); }

V2Gauge spin(const V2Category& u) {
  V2Gauge phi;
  int k = 0;
  for (const auto& [ab, h] : u.homs())
    for (const auto& f : h->objects())
      for (const auto& g : h->objects()) phi[ab][{f, g}] = gradeMorphism(1, 0, 1 + (k++ % 2));
  return phi;
}

V2Category withUnitCell(const V2Category& u, const ObjId& a, const ObjId& cell) {
  auto units = u.units();
  const auto& j = units.at(a);
  units.insert_or_assign(a, VFunctor(j.sourceRef(), j.targetRef(), {{"0"_o, cell}}, j.homMap()));
  return V2Category(u.baseRef(), u.objects(), u.homs(), u.compositions(), units);
}

}  // namespace

TEST_CASE("the join monoid is a Bool-2-category") {
  auto J = joinMonoidV2Cat(bool2());
  CHECK(J.unitCell(star) == "1"_o);
  CHECK(J.compose1(star, star, star, "t"_o, "1"_o) == "t"_o);
  auto r = checkV2Category(J);
  CHECK(r.passed());
  CHECK_FALSE(r.vacuous("pentagon"));
  CHECK_FALSE(r.vacuous("interchange-consequence"));
  auto bad = withUnitCell(J, star, "t"_o);
  auto rb = checkV2Category(bad);
  CHECK(rb.failed("unit-right"));
  CHECK(rb.failed("unit-left"));
}

TEST_CASE("a V-2-category needs two tensors") {
  auto one = share(boolPoset(1));
  expectKind([&] { unitV2Category(one); }, ErrorKind::IndexOutOfRange);
  CHECK(checkV2Category(unitV2Category(bool2())).passed());
}

TEST_CASE("locally chaotic and gauged examples") {
  auto Z3 = monoidCategory({"e"_m, "g"_m, "h"_m}, [](int i, int j) { return (i + j) % 3; });
  auto U = locallyChaoticV2(cyc2(), Z3);
  CHECK(checkV2Category(U).passed());
  auto G = gaugeV2(U, spin(U));
  CHECK_FALSE(G == U);
  CHECK(checkV2Category(G).passed());
  // rewiring one hom component of composition in the gauged copy breaks something
  auto comp = G.compositions();
  auto& m = comp.at({star, star, star});
  auto hm = m.homMap();
  auto& e = hm.begin()->second;
  e = compose(cyc2()->category(), "s_*"_m, e);
  comp.insert_or_assign({star, star, star}, VFunctor(m.sourceRef(), m.targetRef(), m.objectMap(), hm));
  V2Category bad(G.baseRef(), G.objects(), G.homs(), comp, G.units());
  CHECK_FALSE(checkV2Category(bad).passed());
}

TEST_CASE("products of V-2-categories") {
  auto three = share(boolPoset(3));
  auto J = ref(joinMonoidV2Cat(three));
  auto A = ref(locallyPosetalV2(three, arrow(), {}));
  auto P = productV2Cat(1, J, A);
  CHECK(P.objects().size() == 2);
  CHECK(checkV2Category(P).passed());
  expectKind([&] { productV2Cat(1, ref(joinMonoidV2Cat(bool2())), ref(joinMonoidV2Cat(bool2()))); },
             ErrorKind::IndexOutOfRange);
  auto s3 = share(superZ2(3));
  auto Z2 = monoidCategory({"e"_m, "g"_m}, [](int i, int j) { return (i + j) % 2; });
  auto C = ref(gaugeV2(locallyChaoticV2(s3, Z2), {}));
  CHECK(checkV2Category(productV2Cat(1, C, C)).passed());
}

TEST_CASE("functors, transformations and modifications on the join monoid") {
  auto J = ref(joinMonoidV2Cat(bool2()));
  auto id = ref(identityV2Functor(J));
  CHECK(checkV2Functor(*id).passed());
  // the constant functor at 1 is not a 2-functor into itself unless 1 -> 1, t -> 1 is monotone: it is
  auto toOne = ref(liftV2Functor(J, J, {{star, star}}, {{{star, star}, {{"1"_o, "1"_o}, {"t"_o, "1"_o}}}}));
  CHECK(checkV2Functor(*toOne).passed());
  auto nid = ref(idNat(id));
  CHECK(checkV2Nat(*nid).passed());
  // the transformation with component t is natural since t is central
  auto byT = ref(liftV2Nat(id, id, {{star, "t"_o}}));
  CHECK(checkV2Nat(*byT).passed());
  auto mu = ref(liftModification(nid, byT));
  CHECK(checkModification(*mu).passed());
  CHECK(checkModification(idModification(byT)).passed());
  expectKind([&] { liftModification(byT, nid); }, ErrorKind::ConstructionFailed);
  auto twice = ref(composeNatAlongFunctor(byT, byT));
  CHECK(twice->cell(star) == "t"_o);
  CHECK(checkModification(vcompModifications(ref(idModification(byT)), mu)).passed());
  CHECK(checkModification(hcompModificationsAlongNat(mu, mu)).passed());
  CHECK(checkModification(hcompModsAlongCategory(mu, mu)).passed());
  CHECK(checkV2Nat(hcompNatsAlongCategory(byT, byT)).passed());
}

TEST_CASE("identity cells absorb") {
  auto Z3 = monoidCategory({"e"_m, "g"_m, "h"_m}, [](int i, int j) { return (i + j) % 3; });
  auto U0 = locallyChaoticV2(cyc2(), Z3);
  auto phi = spin(U0);
  auto U = ref(gaugeV2(U0, phi));
  auto T = ref(identityV2Functor(U));
  auto one = ref(idNat(T));
  auto alpha = ref(liftV2Nat(ref(identityV2Functor(ref(U0))), ref(identityV2Functor(ref(U0))), {{star, "g"_o}}));
  auto a = ref(gaugeV2Nat(*alpha, T, T, phi));
  CHECK(checkV2Nat(*a).passed());
  CHECK(natDifference(composeNatAlongFunctor(one, a), *a) == std::nullopt);
  CHECK(natDifference(composeNatAlongFunctor(a, one), *a) == std::nullopt);
  auto m = ref(idModification(a));
  CHECK(checkModification(*m).passed());
  CHECK(m->component(star) == U->hom(star, star).identity("g"_o));
  CHECK(one->cell(star) == U->unitCell(star));
  CHECK(one->component(star) == U->identity(star));
}
