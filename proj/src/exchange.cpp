#include "enriched/exchange.hpp"

namespace enriched {

namespace {

void need(bool ok, const std::string& what) {
  if (!ok) fail(ErrorKind::InvalidPasting, what);
}

void compare(CheckReport& r, const CheckOptions& opts, const std::string& diagram,
             const std::function<std::optional<Witness>()> run) {
  r.count(diagram);
  try {
    if (auto w = run()) {
      w->diagram = diagram;
      r.fail(opts, *w);
    }
  } catch (const Error& e) {
    r.fail(opts, Witness{diagram, {}, "error", e.what()});
  }
}

}  // namespace

void validatePasting(const Pasting& p) {
  need(p.U && p.V && p.W, "missing V-2-category");
  for (const auto* f : {&p.F, &p.H, &p.P}) {
    need(*f && sameV2Category((*f)->sourceRef(), p.U) && sameV2Category((*f)->targetRef(), p.V),
         "lower functors must run U -> V");
  }
  for (const auto* f : {&p.G, &p.K, &p.Q}) {
    need(*f && sameV2Category((*f)->sourceRef(), p.V) && sameV2Category((*f)->targetRef(), p.W),
         "upper functors must run V -> W");
  }
  const std::array<std::pair<V2FunctorRef, V2FunctorRef>, 4> ends{
      std::pair{p.F, p.H}, std::pair{p.H, p.P}, std::pair{p.G, p.K}, std::pair{p.K, p.Q}};
  for (std::size_t i = 0; i < 4; ++i) {
    for (const auto* a : {&p.alpha[i], &p.beta[i], &p.gamma[i]})
      need(*a && sameV2Functor((*a)->sourceRef(), ends[i].first) && sameV2Functor((*a)->targetRef(), ends[i].second),
           "transformation " + std::to_string(i + 1) + " has the wrong ends");
    need(p.mu[i] && sameV2Nat(p.mu[i]->sourceRef(), p.alpha[i]) && sameV2Nat(p.mu[i]->targetRef(), p.beta[i]),
         "mu" + std::to_string(i + 1) + " must run alpha => beta");
    need(p.nu[i] && sameV2Nat(p.nu[i]->sourceRef(), p.beta[i]) && sameV2Nat(p.nu[i]->targetRef(), p.gamma[i]),
         "nu" + std::to_string(i + 1) + " must run beta => gamma");
  }
}

CheckReport exchangeSuite(const Pasting& p, const CheckOptions& opts) {
  validatePasting(p);
  CheckReport r("exchangeSuite");
  const auto& a = p.alpha;
  const auto &m = p.mu, &n = p.nu;
  auto named = [](std::optional<Witness> w, const std::string& side) {
    if (w) w->instance.insert(w->instance.begin(), side);
    return w;
  };
  compare(r, opts, "exchange-1", [&] {
    auto lhs = composeNatAlongFunctor(ref(hcompNatsAlongCategory(a[3], a[1])), ref(hcompNatsAlongCategory(a[2], a[0])));
    auto rhs = hcompNatsAlongCategory(ref(composeNatAlongFunctor(a[3], a[2])), ref(composeNatAlongFunctor(a[1], a[0])));
    return named(natDifference(lhs, rhs), "exchange-1");
  });
  compare(r, opts, "exchange-2", [&] {
    auto lhs = hcompModificationsAlongNat(ref(vcompModifications(n[1], m[1])), ref(vcompModifications(n[0], m[0])));
    auto rhs = vcompModifications(ref(hcompModificationsAlongNat(n[1], n[0])), ref(hcompModificationsAlongNat(m[1], m[0])));
    return named(modDifference(lhs, rhs), "exchange-2");
  });
  compare(r, opts, "exchange-3", [&] {
    auto lhs = vcompModifications(ref(hcompModsAlongCategory(n[2], n[0])), ref(hcompModsAlongCategory(m[2], m[0])));
    auto rhs = hcompModsAlongCategory(ref(vcompModifications(n[2], m[2])), ref(vcompModifications(n[0], m[0])));
    return named(modDifference(lhs, rhs), "exchange-3");
  });
  compare(r, opts, "exchange-4", [&] {
    auto lhs = hcompModificationsAlongNat(ref(hcompModsAlongCategory(m[3], m[1])), ref(hcompModsAlongCategory(m[2], m[0])));
    auto rhs = hcompModsAlongCategory(ref(hcompModificationsAlongNat(m[3], m[2])), ref(hcompModificationsAlongNat(m[1], m[0])));
    return named(modDifference(lhs, rhs), "exchange-4");
  });
  return r;
}

}  // namespace enriched
