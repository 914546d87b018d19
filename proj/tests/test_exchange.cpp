#include "doctest.h"

#include "enriched/random.hpp"

using namespace enriched;

namespace {

std::vector<BaseRef> bases() {
  static std::vector<BaseRef> b{share(boolPoset(2)), share(deloopedCyclic(2)), share(superZ2(2))};
  return b;
}

}  // namespace

TEST_CASE("random draws are reproducible") {
  Rng a(7), b(7);
  for (int k = 0; k < 100; ++k) CHECK(a.below(5) == b.below(5));
  Rng r(1);
  auto base = bases()[0];
  auto x = randomVCategory(r, base, {});
  Rng r2(1);
  auto y = randomVCategory(r2, base, {});
  CHECK(x.value == y.value);
  CHECK(x.attempts == y.attempts);
  CHECK(checkVCategory(x.value).passed());
  Bounds none;
  none.maxObjects = 0;
  try {
    randomVCategory(r, base, none);
    FAIL("expected BudgetExhausted");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::BudgetExhausted);
  }
}

TEST_CASE("identity pastings satisfy the exchange identities") {
  auto m = joinMonoidModel(bases()[0]);
  auto r = exchangeSuite(identityPasting(m));
  CHECK(r.passed());
  CHECK(r.diagrams().size() == 4);
}

TEST_CASE("random pastings satisfy the exchange identities") {
  for (std::uint64_t seed = 1; seed <= 6; ++seed)
    for (const auto& base : bases()) {
      Rng rng(seed);
      auto p = randomPasting(rng, base, {});
      auto r = exchangeSuite(p);
      CHECK(r.passed());
      for (const auto& w : r.witnesses()) MESSAGE(w.diagram << " " << w.lhs << " " << w.rhs);
    }
}

TEST_CASE("an ill-typed pasting is refused") {
  auto m = joinMonoidModel(bases()[0]);
  auto p = identityPasting(m);
  Rng rng(3);
  auto other = randomV2Category(rng, bases()[0], {}).value;
  p.W = other.value;
  try {
    exchangeSuite(p);
    FAIL("expected InvalidPasting");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::InvalidPasting);
  }
}
