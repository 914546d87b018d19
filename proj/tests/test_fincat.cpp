#include "doctest.h"

#include "enriched/fincat.hpp"
#include "enriched/shipped.hpp"

using namespace enriched;

namespace {

FinCategory arrowCategory() { return boolSymmetric().monoidal.category(); }

FinCategory withEntry(const FinCategory& c, const MorId& g, const MorId& f, const MorId& h) {
  auto comp = c.composition();
  comp[{g, f}] = h;
  return FinCategory(c.objects(), c.arrows(), c.identities(), comp);
}

}  // namespace

TEST_CASE("identifiers") {
  CHECK(isWellFormedId("top"));
  CHECK(isWellFormedId("((a,b),(c,d))"));
  CHECK_FALSE(isWellFormedId("a,b"));
  CHECK_FALSE(isWellFormedId("(a,b"));
  CHECK_FALSE(isWellFormedId(""));
  CHECK_FALSE(isWellFormedId("a b"));
  std::string a, b;
  REQUIRE(splitPair("((x,y),z)", a, b));
  CHECK(a == "(x,y)");
  CHECK(b == "z");
  CHECK(pairId("p"_o, "(q,r)"_o).str() == "(p,(q,r))");
}

TEST_CASE("composition in the arrow category") {
  auto c = arrowCategory();
  std::vector<MorId> chain{"id_top"_m, "u"_m, "id_bot"_m};
  CHECK(composeChain(c, chain) == "u"_m);
  CHECK_THROWS_AS(compose(c, "u"_m, "u"_m), Error);
  try {
    compose(c, "u"_m, "u"_m);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::CompositionUndefined);
  }
  try {
    composeChain(c, std::vector<MorId>{});
    FAIL("expected EmptyChain");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::EmptyChain);
  }
  CHECK(c.hom("bot"_o, "top"_o) == std::vector<MorId>{"u"_m});
  CHECK(c.hom("top"_o, "bot"_o).empty());
  CHECK_FALSE(c.inverse("u"_m));
  CHECK(c.inverse("id_top"_m) == "id_top"_m);
}

TEST_CASE("malformed tables are rejected at construction") {
  auto c = arrowCategory();
  auto comp = c.composition();
  comp[{"u"_m, "nope"_m}] = "u"_m;
  try {
    FinCategory bad(c.objects(), c.arrows(), c.identities(), comp);
    FAIL("expected MalformedTable");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::MalformedTable);
  }
  auto ids = c.identities();
  ids.erase("top"_o);
  CHECK_THROWS_AS(FinCategory(c.objects(), c.arrows(), ids, c.composition()), Error);
}

TEST_CASE("a category with no objects is malformed") {
  try {
    FinCategory({}, {}, {}, {});
    FAIL("expected MalformedTable");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::MalformedTable);
  }
}

TEST_CASE("checkCategory accepts the shipped categories") {
  CHECK(checkCategory(arrowCategory()).passed());
  CHECK(checkCategory(superZ2Symmetric().monoidal.category()).passed());
  CHECK(checkCategory(cyclicSymmetric(3).monoidal.category()).passed());
  CHECK(checkCategory(productCategory(arrowCategory(), arrowCategory())).passed());
}

TEST_CASE("rewired unit entry is caught as a unit law failure") {
  auto bad = withEntry(arrowCategory(), "u"_m, "id_bot"_m, "id_bot"_m);
  auto r = checkCategory(bad);
  CHECK_FALSE(r.passed());
  CHECK(r.failed("unit-right"));
  bool found = false;
  for (const auto& w : r.witnesses())
    if (w.diagram == "unit-right" && w.instance == std::vector<std::string>{"u", "id_bot"}) found = true;
  CHECK(found);
}

TEST_CASE("non-associative table fails only associativity") {
  auto c = cyclicSymmetric(3).monoidal.category();
  auto bad = withEntry(c, "s_*"_m, "s2_*"_m, "s_*"_m);
  auto r = checkCategory(bad);
  CHECK(r.failingDiagrams() == std::set<std::string>{"associativity"});
}

TEST_CASE("every single-entry composition mutation is detected") {
  for (const auto& base : {arrowCategory(), cyclicSymmetric(3).monoidal.category()}) {
    for (const auto& [gf, h] : base.composition()) {
      for (const auto& other : base.morphisms()) {
        if (other == h) continue;
        auto r = checkCategory(withEntry(base, gf.first, gf.second, other));
        CHECK_FALSE(r.passed());
      }
    }
    // dropping an entry for a composable pair
    for (const auto& [gf, h] : base.composition()) {
      auto comp = base.composition();
      comp.erase(gf);
      auto r = checkCategory(FinCategory(base.objects(), base.arrows(), base.identities(), comp));
      CHECK(r.failed("composition-total"));
    }
  }
}

TEST_CASE("an idempotent rewiring of the sign group is again a category") {
  // {id, s} with s.s = s is the two element idempotent monoid, so nothing may fail here
  auto c = superZ2Symmetric().monoidal.category();
  auto r = checkCategory(withEntry(c, "s_1"_m, "s_1"_m, "s_1"_m));
  CHECK(r.passed());
  CHECK_FALSE(checkCategory(withEntry(c, "s_1"_m, "s_1"_m, "id_0"_m)).passed());
}

TEST_CASE("functors and natural transformations") {
  auto c = std::make_shared<const FinCategory>(arrowCategory());
  std::map<ObjId, ObjId> idObj{{"bot"_o, "bot"_o}, {"top"_o, "top"_o}};
  std::map<MorId, MorId> idMor{{"id_bot"_m, "id_bot"_m}, {"id_top"_m, "id_top"_m}, {"u"_m, "u"_m}};
  auto F = std::make_shared<const FinFunctor>(c, c, idObj, idMor);
  CHECK(checkFunctor(*F).passed());

  FinFunctor swapped(c, c, {{"bot"_o, "top"_o}, {"top"_o, "bot"_o}}, idMor);
  auto r = checkFunctor(swapped);
  CHECK(r.failed("preserves-dom-cod"));

  FinNatTransform idNat(F, F, {{"bot"_o, "id_bot"_m}, {"top"_o, "id_top"_m}});
  CHECK(checkNatural(idNat).passed());
  FinNatTransform bad(F, F, {{"bot"_o, "u"_m}, {"top"_o, "id_top"_m}});
  auto rn = checkNatural(bad);
  CHECK(rn.failed("component-typing"));
  CHECK(rn.failed("naturality"));

  // constant functor at top with the unique transformation id => const
  auto K = std::make_shared<const FinFunctor>(
      c, c, std::map<ObjId, ObjId>{{"bot"_o, "top"_o}, {"top"_o, "top"_o}},
      std::map<MorId, MorId>{{"id_bot"_m, "id_top"_m}, {"id_top"_m, "id_top"_m}, {"u"_m, "id_top"_m}});
  CHECK(checkFunctor(*K).passed());
  FinNatTransform toTop(F, K, {{"bot"_o, "u"_m}, {"top"_o, "id_top"_m}});
  CHECK(checkNatural(toTop).passed());
}
