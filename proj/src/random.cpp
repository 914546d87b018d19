#include "enriched/random.hpp"

#include <limits>

namespace enriched {

namespace {

bool thin(const FinCategory& c) {
  for (const auto& a : c.objects())
    for (const auto& b : c.objects())
      if (c.hom(a, b).size() > 1) return false;
  return true;
}

std::vector<MorId> automorphisms(const FinCategory& c, const ObjId& x) {
  std::vector<MorId> out;
  for (const auto& f : c.hom(x, x))
    if (c.inverse(f)) out.push_back(f);
  return out;
}

std::vector<ObjId> objectNames(std::size_t k, char first) {
  std::vector<ObjId> out;
  for (std::size_t i = 0; i < k; ++i) out.push_back(ObjId(std::string(1, char(first + i))));
  return out;
}

[[noreturn]] void exhausted(const std::string& what, std::size_t attempts) {
  fail(ErrorKind::BudgetExhausted, what + ": no candidate passed in " + std::to_string(attempts) + " attempts");
}

std::optional<VCategory> uniformProposal(Rng& rng, const BaseRef& base, const std::vector<ObjId>& obs) {
  const auto& c = base->category();
  HomTable hom;
  for (const auto& a : obs)
    for (const auto& b : obs) hom.emplace(std::pair{a, b}, rng.pick(c.objects()));
  CompTable comp;
  UnitTable unit;
  for (const auto& a : obs) {
    const auto& js = c.hom(base->unit(), hom.at({a, a}));
    if (js.empty()) return std::nullopt;
    unit.emplace(a, rng.pick(js));
    for (const auto& b : obs)
      for (const auto& d : obs) {
        const auto& ms = c.hom(base->tensorObj(1, hom.at({b, d}), hom.at({a, b})), hom.at({a, d}));
        if (ms.empty()) return std::nullopt;
        comp.emplace(std::array{a, b, d}, rng.pick(ms));
      }
  }
  return VCategory(base, obs, std::move(hom), std::move(comp), std::move(unit));
}

VCategory gaugeProposal(Rng& rng, const BaseRef& base, const std::vector<ObjId>& obs) {
  auto X = chaoticVCat(base, obs);
  auto auts = automorphisms(base->category(), base->unit());
  Gauge g;
  for (const auto& a : obs)
    for (const auto& b : obs) g[{a, b}] = rng.pick(auts);
  return gaugeTransform(X, g);
}

// elements, then product index table
struct MonoidSpec {
  std::vector<MorId> elements;
  std::function<int(int, int)> mult;
};

std::vector<MonoidSpec> monoids() {
  return {
      {{"e"_m, "g"_m}, [](int i, int j) { return (i + j) % 2; }},
      {{"e"_m, "t"_m}, [](int i, int j) { return std::max(i, j); }},
      {{"e"_m, "g"_m, "h"_m}, [](int i, int j) { return (i + j) % 3; }},
      // x y = x for x, y != e
      {{"e"_m, "x"_m, "y"_m}, [](int i, int j) { return i == 0 ? j : i; }},
      // a a = z, z absorbing
      {{"e"_m, "a"_m, "z"_m}, [](int i, int j) { return i == 0 ? j : j == 0 ? i : 2; }},
  };
}

bool preservesComposition(const FinCategory& s, const FinCategory& t, const ObjMap& om,
                          const std::map<MorId, MorId>& mm) {
  for (const auto& a : s.objects())
    if (mm.at(s.id(a)) != t.id(om.at(a))) return false;
  for (const auto& [gf, h] : s.composition())
    if (t.tryCompose(mm.at(gf.first), mm.at(gf.second)) != mm.at(h)) return false;
  return true;
}

FunctorModel liftAndTransport(const V2Model& u, const V2Model& w, const ObjMap& om, const std::map<MorId, MorId>& mm) {
  std::map<std::pair<ObjId, ObjId>, ObjMap> cells;
  for (const auto& a : u.cat.objects())
    for (const auto& b : u.cat.objects()) {
      auto& m = cells[{a, b}];
      for (const auto& f : u.cat.hom(a, b)) m.emplace(ObjId(f.str()), ObjId(mm.at(f).str()));
    }
  auto plain = ref(liftV2Functor(u.plain, w.plain, om, cells));
  auto value = ref(gaugeV2Functor(*plain, u.value, u.gauge, w.value, w.gauge));
  return {plain, value};
}

template <class F>
std::optional<Sampled<std::vector<ObjId>>> searchProduct(Rng& rng, const std::vector<std::vector<ObjId>>& options,
                                                         std::size_t attempts, F&& accept) {
  std::size_t total = 1;
  for (const auto& o : options) {
    if (o.empty()) return std::nullopt;
    if (total > std::numeric_limits<std::size_t>::max() / o.size()) return std::nullopt;
    total *= o.size();
  }
  std::vector<std::size_t> order(total);
  for (std::size_t k = 0; k < total; ++k) order[k] = k;
  rng.shuffle(order);
  std::size_t tried = 0;
  for (auto idx : order) {
    if (tried++ >= attempts) break;
    std::vector<ObjId> pick(options.size());
    for (std::size_t k = options.size(); k-- > 0;) {
      pick[k] = options[k][idx % options[k].size()];
      idx /= options[k].size();
    }
    if (accept(pick)) return Sampled<std::vector<ObjId>>{pick, tried};
  }
  return std::nullopt;
}

}  // namespace

std::size_t Rng::below(std::size_t n) {
  if (n == 0) fail(ErrorKind::BudgetExhausted, "empty range");
  const std::uint64_t max = std::numeric_limits<std::uint64_t>::max();
  const std::uint64_t limit = max - max % n;
  std::uint64_t x;
  do x = engine_(); while (x >= limit);
  return std::size_t(x % n);
}

Sampled<VCategory> randomVCategory(Rng& rng, const BaseRef& base, const Bounds& bounds) {
  if (bounds.maxObjects == 0) exhausted("random V-category with no objects allowed", 0);
  const bool isThin = thin(base->category());
  for (std::size_t attempt = 1; attempt <= bounds.attempts; ++attempt) {
    auto obs = objectNames(1 + rng.below(bounds.maxObjects), 'a');
    try {
      std::optional<VCategory> cand;
      if (isThin || rng.chance(1, 2))
        cand = uniformProposal(rng, base, obs);
      else
        cand = gaugeProposal(rng, base, obs);
      if (cand && checkVCategory(*cand).passed()) return {std::move(*cand), attempt};
    } catch (const Error&) {
    }
  }
  exhausted("random V-category", bounds.attempts);
}

FinCategory randomSmallCategory(Rng& rng, const Bounds& bounds) {
  if (bounds.maxObjects == 0 || bounds.maxHom == 0) exhausted("random small category with empty bounds", 0);
  std::vector<MonoidSpec> fit;
  for (auto& m : monoids())
    if (m.elements.size() <= bounds.maxHom) fit.push_back(m);
  if (fit.empty() || rng.chance(1, 2)) {
    auto obs = objectNames(1 + rng.below(std::min<std::size_t>(bounds.maxObjects, 3)), 'A');
    std::set<std::pair<ObjId, ObjId>> rel;
    for (const auto& a : obs) rel.insert({a, a});
    for (const auto& a : obs)
      for (const auto& b : obs)
        if (a != b && rng.chance(1, 3)) rel.insert({a, b});
    for (bool grew = true; grew;) {
      grew = false;
      for (const auto& [a, b] : std::set(rel))
        for (const auto& [b2, c] : std::set(rel))
          if (b == b2 && rel.insert({a, c}).second) grew = true;
    }
    return thinCategory(obs, rel);
  }
  const auto& m = rng.pick(fit);
  return monoidCategory(m.elements, m.mult);
}

V2Model joinMonoidModel(const BaseRef& boolBase) {
  auto J = ref(joinMonoidV2Cat(boolBase));
  return {joinMonoid(), J, {}, J};
}

Sampled<V2Model> randomV2Category(Rng& rng, const BaseRef& base, const Bounds& bounds) {
  // posetal homs only make sense over a Bool-like base; discrete thin bases go the chaotic way
  const bool isThin = thin(base->category()) && base->category().morphisms().size() > base->category().objects().size();
  auto auts = automorphisms(base->category(), base->unit());
  for (std::size_t attempt = 1; attempt <= bounds.attempts; ++attempt) {
    auto c = randomSmallCategory(rng, bounds);
    try {
      V2Model m{c, nullptr, {}, nullptr};
      if (isThin) {
        CellOrder seed;
        for (const auto& a : c.objects())
          for (const auto& b : c.objects())
            for (const auto& f : c.hom(a, b))
              for (const auto& g : c.hom(a, b))
                if (f != g && rng.chance(1, 3)) seed[{a, b}].insert({ObjId(f.str()), ObjId(g.str())});
        m.plain = ref(locallyPosetalV2(base, c, compatibleClosure(c, seed)));
        m.value = m.plain;
      } else {
        m.plain = ref(locallyChaoticV2(base, c));
        for (const auto& [ab, h] : m.plain->homs())
          for (const auto& f : h->objects())
            for (const auto& g : h->objects()) m.gauge[ab][{f, g}] = rng.pick(auts);
        m.value = ref(gaugeV2(*m.plain, m.gauge));
      }
      if (m.value->valid()) return {std::move(m), attempt};
    } catch (const Error&) {
    }
  }
  exhausted("random V-2-category", bounds.attempts);
}

FunctorModel identityModel(const V2Model& u) {
  return {ref(identityV2Functor(u.plain)), ref(identityV2Functor(u.value))};
}

Sampled<FunctorModel> randomV2Functor(Rng& rng, const V2Model& u, const V2Model& w, const Bounds& bounds) {
  const auto& s = u.cat;
  const auto& t = w.cat;
  for (std::size_t attempt = 1; attempt <= bounds.attempts; ++attempt) {
    ObjMap om;
    for (const auto& a : s.objects()) om.emplace(a, rng.pick(t.objects()));
    std::map<MorId, MorId> mm;
    bool typed = true;
    for (const auto& f : s.morphisms()) {
      const auto& choices = t.hom(om.at(s.dom(f)), om.at(s.cod(f)));
      if (choices.empty()) {
        typed = false;
        break;
      }
      mm.emplace(f, s.isIdentity(f) ? t.id(om.at(s.dom(f))) : rng.pick(choices));
    }
    if (!typed || !preservesComposition(s, t, om, mm)) continue;
    try {
      auto fm = liftAndTransport(u, w, om, mm);
      if (fm.plain->valid() && fm.value->valid()) return {fm, attempt};
    } catch (const Error&) {
    }
  }
  // constant at one object: every 1-cell to its identity
  const auto& x = rng.pick(t.objects());
  ObjMap om;
  std::map<MorId, MorId> mm;
  for (const auto& a : s.objects()) om.emplace(a, x);
  for (const auto& f : s.morphisms()) mm.emplace(f, t.id(x));
  return {liftAndTransport(u, w, om, mm), bounds.attempts + 1};
}

std::optional<Sampled<V2NatRef>> randomV2Nat(Rng& rng, const FunctorModel& T, const FunctorModel& S,
                                             const Bounds& bounds) {
  const auto& U = T.value->source();
  const auto& W = T.value->target();
  std::vector<std::vector<ObjId>> options;
  for (const auto& u : U.objects()) options.push_back(W.hom(T.value->object(u), S.value->object(u)).objects());
  V2NatRef found;
  auto hit = searchProduct(rng, options, bounds.attempts, [&](const std::vector<ObjId>& pick) {
    ObjMap cells;
    for (std::size_t k = 0; k < pick.size(); ++k) cells.emplace(U.objects()[k], pick[k]);
    try {
      auto a = ref(liftV2Nat(T.value, S.value, cells));
      if (!a->valid()) return false;
      found = a;
      return true;
    } catch (const Error&) {
      return false;
    }
  });
  if (!hit) return std::nullopt;
  return Sampled<V2NatRef>{found, hit->attempts};
}

std::optional<Sampled<ModificationRef>> randomModification(Rng& rng, const V2NatRef& a, const V2NatRef& b,
                                                           const Bounds& bounds) {
  const auto& U = a->source().source();
  const auto& W = a->source().target();
  const auto& V = W.base();
  std::vector<std::vector<ObjId>> options;
  // morphism ids ride along as ObjIds for the search
  for (const auto& u : U.objects()) {
    const auto& h = W.hom(a->source().object(u), a->target().object(u));
    std::vector<ObjId> ms;
    for (const auto& m : V.category().hom(V.unit(), h.hom(a->cell(u), b->cell(u)))) ms.push_back(ObjId(m.str()));
    options.push_back(ms);
  }
  ModificationRef found;
  auto hit = searchProduct(rng, options, bounds.attempts, [&](const std::vector<ObjId>& pick) {
    std::map<ObjId, MorId> comps;
    for (std::size_t k = 0; k < pick.size(); ++k) comps.emplace(U.objects()[k], MorId(pick[k].str()));
    try {
      auto m = ref(VModification(a, b, comps));
      if (!checkModification(*m).passed()) return false;
      found = m;
      return true;
    } catch (const Error&) {
      return false;
    }
  });
  if (!hit) return std::nullopt;
  return Sampled<ModificationRef>{found, hit->attempts};
}

namespace {

// a functor G' with some transformation G -> G', G itself when none turns up
FunctorModel nextFunctor(Rng& rng, const V2Model& u, const V2Model& w, const FunctorModel& g, const Bounds& b) {
  for (int k = 0; k < 6; ++k) {
    auto h = randomV2Functor(rng, u, w, b).value;
    if (randomV2Nat(rng, g, h, b)) return h;
  }
  return g;
}

struct Column {
  V2NatRef alpha, beta, gamma;
  ModificationRef mu, nu;
};

ModificationRef modOrIdentity(Rng& rng, const V2NatRef& a, const V2NatRef& b, const Bounds& bounds) {
  if (auto m = randomModification(rng, a, b, bounds)) return m->value;
  return ref(idModification(a));
}

Column column(Rng& rng, const FunctorModel& s, const FunctorModel& t, const Bounds& bounds) {
  auto pickNat = [&] {
    auto a = randomV2Nat(rng, s, t, bounds);
    if (!a) fail(ErrorKind::ConstructionFailed, "no transformation between chosen functors");
    return a->value;
  };
  Column c;
  c.alpha = pickNat();
  auto follow = [&](const V2NatRef& from) {
    for (int k = 0; k < 4; ++k) {
      auto to = pickNat();
      if (randomModification(rng, from, to, bounds)) return to;
    }
    return from;
  };
  c.beta = follow(c.alpha);
  c.gamma = follow(c.beta);
  c.mu = modOrIdentity(rng, c.alpha, c.beta, bounds);
  c.nu = modOrIdentity(rng, c.beta, c.gamma, bounds);
  return c;
}

}  // namespace

Pasting randomPasting(Rng& rng, const BaseRef& base, const Bounds& bounds) {
  Bounds small = bounds;
  small.maxObjects = std::min<std::size_t>(bounds.maxObjects, 2);
  // reusing a category keeps identities and endo-functors in play
  auto U = randomV2Category(rng, base, small).value;
  auto V = rng.chance(1, 2) ? U : randomV2Category(rng, base, small).value;
  auto W = rng.chance(1, 2) ? V : randomV2Category(rng, base, small).value;
  auto F = randomV2Functor(rng, U, V, bounds).value;
  auto H = nextFunctor(rng, U, V, F, bounds);
  auto P = nextFunctor(rng, U, V, H, bounds);
  auto G = randomV2Functor(rng, V, W, bounds).value;
  auto K = nextFunctor(rng, V, W, G, bounds);
  auto Q = nextFunctor(rng, V, W, K, bounds);
  Pasting p;
  p.U = U.value;
  p.V = V.value;
  p.W = W.value;
  p.F = F.value;
  p.H = H.value;
  p.P = P.value;
  p.G = G.value;
  p.K = K.value;
  p.Q = Q.value;
  const std::array<std::pair<FunctorModel, FunctorModel>, 4> ends{std::pair{F, H}, std::pair{H, P}, std::pair{G, K},
                                                                  std::pair{K, Q}};
  for (std::size_t i = 0; i < 4; ++i) {
    auto c = column(rng, ends[i].first, ends[i].second, bounds);
    p.alpha[i] = c.alpha;
    p.beta[i] = c.beta;
    p.gamma[i] = c.gamma;
    p.mu[i] = c.mu;
    p.nu[i] = c.nu;
  }
  validatePasting(p);
  return p;
}

Pasting identityPasting(const V2Model& u) {
  Pasting p;
  p.U = p.V = p.W = u.value;
  auto id = ref(identityV2Functor(u.value));
  p.F = p.H = p.P = p.G = p.K = p.Q = id;
  auto n = ref(idNat(id));
  auto m = ref(idModification(n));
  p.alpha.fill(n);
  p.beta.fill(n);
  p.gamma.fill(n);
  p.mu.fill(m);
  p.nu.fill(m);
  return p;
}

}  // namespace enriched
