#include "doctest.h"

#include "enriched/shipped.hpp"

using namespace enriched;

namespace {

BaseRef bool2() {
  static BaseRef b = share(boolPoset(2));
  return b;
}

BaseRef z3base() {
  static BaseRef b = share(deloopedCyclic(2));
  return b;
}

VCategoryRef chain2() {
  return std::make_shared<const VCategory>(
      preorderVCat(bool2(), {"a"_o, "b"_o}, {{"a"_o, "a"_o}, {"b"_o, "b"_o}, {"a"_o, "b"_o}}));
}

VCategoryRef discrete(const std::vector<ObjId>& obs) {
  std::set<std::pair<ObjId, ObjId>> leq;
  for (const auto& a : obs) leq.insert({a, a});
  return std::make_shared<const VCategory>(preorderVCat(bool2(), obs, leq));
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

VCategory withComposition(const VCategory& a, std::array<ObjId, 3> at, MorId m) {
  auto comp = a.compTable();
  comp[at] = std::move(m);
  return VCategory(a.baseRef(), a.objects(), a.homTable(), comp, a.unitTable());
}

// a gauge with every entry a nontrivial automorphism of *, over Z/3
Gauge spinAll(const VCategory& a) {
  Gauge g;
  int k = 0;
  for (const auto& x : a.objects())
    for (const auto& y : a.objects()) g[{x, y}] = gradeMorphism(1, 0, 1 + (k++ % 2));
  return g;
}

}  // namespace

TEST_CASE("preorder V-categories") {
  auto A = chain2();
  CHECK(A->hom("a"_o, "b"_o) == "top"_o);
  CHECK(A->hom("b"_o, "a"_o) == "bot"_o);
  CHECK(A->hom("a"_o, "a"_o) == "top"_o);
  CHECK(checkVCategory(*A).passed());
  expectKind([] { preorderVCat(bool2(), {"a"_o, "b"_o, "c"_o},
                               {{"a"_o, "a"_o}, {"b"_o, "b"_o}, {"c"_o, "c"_o}, {"a"_o, "b"_o}, {"b"_o, "c"_o}}); },
             ErrorKind::NotPreorder);
  expectKind([] { preorderVCat(bool2(), {"a"_o}, {}); }, ErrorKind::NotPreorder);
}

TEST_CASE("cocycle category over Z/2 and a flipped weight") {
  auto V = share(zmod2(2));
  auto A = cocycleVCat(V, {{"x"_o, 0}, {"y"_o, 1}});
  CHECK(A.hom("x"_o, "y"_o) == "1"_o);
  CHECK(A.hom("y"_o, "y"_o) == "0"_o);
  CHECK(checkVCategory(A).passed());
  auto hom = A.homTable();
  hom[{"x"_o, "y"_o}] = "0"_o;
  VCategory bad(V, A.objects(), hom, A.compTable(), A.unitTable());
  auto r = checkVCategory(bad);
  CHECK(r.failed("composition-typing"));
}

TEST_CASE("an invalid base is refused") {
  auto v = deloopedCyclic(1);
  auto assoc = v.associators();
  assoc[0][{"*"_o, "*"_o, "*"_o}] = "s_*"_m;
  auto bad = share(KFoldMonoidal(v.category(), v.unit(), v.tensors(), assoc, v.interchanges()));
  auto A = chaoticVCat(bad, {"p"_o});
  expectKind([&] { checkVCategory(A); }, ErrorKind::BaseInvalid);
}

TEST_CASE("empty V-categories are allowed") {
  VCategory E(bool2(), {}, {}, {}, {});
  CHECK(checkVCategory(E).passed());
  auto P = productVCat(1, E, *chain2());
  CHECK(P.objects().empty());
}

TEST_CASE("product of preorders is the product preorder") {
  auto A = chain2();
  auto P = productVCat(1, *A, *A);
  CHECK(P.objects().size() == 4);
  CHECK(P.hom("(a,a)"_o, "(b,b)"_o) == "top"_o);
  CHECK(P.hom("(a,b)"_o, "(b,a)"_o) == "bot"_o);
  CHECK(checkVCategory(P).passed());
  expectKind([&] { productVCat(2, *A, *A); }, ErrorKind::IndexOutOfRange);
  auto one = share(boolPoset(1));
  auto B = preorderVCat(one, {"a"_o}, {{"a"_o, "a"_o}});
  expectKind([&] { productVCat(1, B, B); }, ErrorKind::IndexOutOfRange);
}

TEST_CASE("tensoring with the unit category relabels") {
  for (const auto& A : {chain2(), std::make_shared<const VCategory>(gaugeTransform(chaoticVCat(z3base(), {"p"_o, "q"_o}),
                                                                                    spinAll(chaoticVCat(z3base(), {"p"_o, "q"_o}))))}) {
    auto I = unitVCategoryRef(A->baseRef());
    CHECK(checkVCategory(*I).passed());
    auto left = productVCat(1, *I, *A);
    auto right = productVCat(1, *A, *I);
    ObjMap l, r;
    for (const auto& a : A->objects()) {
      l[pairId("0"_o, a)] = a;
      r[pairId(a, "0"_o)] = a;
    }
    CHECK(renameObjects(left, l) == *A);
    CHECK(renameObjects(right, r) == *A);
    CHECK(checkVFunctor(leftUnitor(1, A)).passed());
    CHECK(checkVFunctor(rightUnitor(1, A)).passed());
    CHECK(checkVFunctor(leftUnitorInv(1, A)).passed());
    CHECK(vfunctorEqual(composeVFunctor(leftUnitor(1, A), leftUnitorInv(1, A)), identityVFunctor(A)));
  }
}

TEST_CASE("gauge transport over Z/3") {
  auto X = std::make_shared<const VCategory>(chaoticVCat(z3base(), {"p"_o, "q"_o, "r"_o}));
  auto g = spinAll(*X);
  auto Y = std::make_shared<const VCategory>(gaugeTransform(*X, g));
  CHECK(checkVCategory(*Y).passed());
  CHECK_FALSE(*X == *Y);
  auto F = gaugeFunctor(X, Y, g);
  CHECK(checkVFunctor(F).passed());
  // a single rewired composite in a gauged category breaks associativity only
  auto bad = withComposition(*Y, {"p"_o, "q"_o, "r"_o}, compose(z3base()->category(), "s_*"_m,
                                                                   Y->composition("p"_o, "q"_o, "r"_o)));
  auto r = checkVCategory(bad);
  CHECK(r.failingDiagrams() == std::set<std::string>{"pentagon"});
}

TEST_CASE("associativity and interchange V-functors") {
  auto A = chain2();
  auto B = discrete({"x"_o, "y"_o});
  auto three = share(boolPoset(3));
  auto assoc = assocVCat(1, A, B, A);
  CHECK(checkVFunctor(assoc).passed());
  CHECK(assoc.object("((a,x),b)"_o) == "(a,(x,b))"_o);
  auto C = std::make_shared<const VCategory>(
      preorderVCat(three, {"a"_o, "b"_o}, {{"a"_o, "a"_o}, {"b"_o, "b"_o}, {"a"_o, "b"_o}}));
  auto D = std::make_shared<const VCategory>(preorderVCat(three, {"x"_o}, {{"x"_o, "x"_o}}));
  auto ex = interchangeVCat(1, 2, C, D, D, C);
  CHECK(checkVFunctor(ex).passed());
  CHECK(ex.object("((a,x),(x,b))"_o) == "((a,x),(x,b))"_o);
  expectKind([&] { interchangeVCat(1, 2, A, A, A, A); }, ErrorKind::IndexOutOfRange);

  auto sign = share(superZ2(3));
  auto S = std::make_shared<const VCategory>(cocycleVCat(sign, {{"m"_o, 0}, {"n"_o, 1}}));
  CHECK(checkVCategory(*S).passed());
  auto exs = interchangeVCat(1, 2, S, S, S, S);
  CHECK(checkVFunctor(exs).passed());
  auto as = assocVCat(2, S, S, S);
  CHECK(checkVFunctor(as).passed());
}

TEST_CASE("equality of V-functors matches identity-component transformations") {
  auto X = std::make_shared<const VCategory>(chaoticVCat(z3base(), {"p"_o, "q"_o}));
  auto g = spinAll(*X);
  auto Y = std::make_shared<const VCategory>(gaugeTransform(*X, g));
  auto F = gaugeFunctor(X, Y, g);
  Gauge g2 = g;
  Gauge twisted;
  auto G = VFunctor(X, Y, F.objectMap(), [&] {
    auto hm = F.homMap();
    hm[{"p"_o, "q"_o}] = compose(z3base()->category(), "s_*"_m, hm.at({"p"_o, "q"_o}));
    return hm;
  }());
  auto jComponents = [&](const VFunctor& T, const VFunctor& S) {
    std::map<ObjId, MorId> c;
    for (const auto& a : X->objects()) c[a] = Y->identity(T.object(a));
    return VNatTransform(T, S, c);
  };
  CHECK(vfunctorEqual(F, F));
  CHECK(checkVNat(jComponents(F, F)).passed());
  CHECK_FALSE(vfunctorEqual(F, G));
  CHECK_FALSE(checkVFunctor(G).passed());
  expectKind([&] { vfunctorEqual(F, identityVFunctor(X)); }, ErrorKind::NotParallel);
}

TEST_CASE("vertical composition and whiskering of V-natural transformations") {
  auto A = chain2();
  auto T = identityVFunctor(A);
  auto id = identityVNat(T);
  CHECK(checkVNat(id).passed());
  auto twice = composeVNatVert(id, id);
  CHECK(twice == id);
  // the constant functor at b and the unique transformation id => const
  auto K = VFunctor(A, A, {{"a"_o, "b"_o}, {"b"_o, "b"_o}},
                    {{{"a"_o, "a"_o}, "id_top"_m}, {{"a"_o, "b"_o}, "id_top"_m},
                     {{"b"_o, "a"_o}, "u"_m}, {{"b"_o, "b"_o}, "id_top"_m}});
  CHECK(checkVFunctor(K).passed());
  VNatTransform toK(T, K, {{"a"_o, "id_top"_m}, {"b"_o, "id_top"_m}});
  CHECK(checkVNat(toK).passed());
  CHECK(checkVNat(composeVNatVert(toK, id)).passed());
  auto left = whiskerLeft(K, toK);
  CHECK(checkVNat(left).passed());
  auto right = whiskerRight(toK, K);
  CHECK(checkVNat(right).passed());
  expectKind([&] { composeVNatVert(id, toK); }, ErrorKind::NotComposable);
  auto P = productVNat(1, toK, id);
  CHECK(checkVNat(P).passed());
  CHECK(checkVFunctor(productVFunctor(1, K, T)).passed());
}

TEST_CASE("a rewired V-natural component breaks naturality") {
  auto X = std::make_shared<const VCategory>(chaoticVCat(z3base(), {"p"_o, "q"_o}));
  auto T = identityVFunctor(X);
  auto id = identityVNat(T);
  auto comps = id.components();
  comps["p"_o] = "s_*"_m;
  auto r = checkVNat(VNatTransform(T, T, comps));
  CHECK(r.failingDiagrams() == std::set<std::string>{"naturality"});
}
