#pragma once

#include <cstdint>
#include <random>

#include "enriched/exchange.hpp"
#include "enriched/v2examples.hpp"

namespace enriched {

// mt19937_64 with our own unbiased bounded draw, so streams agree across standard libraries
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  std::uint64_t next() { return engine_(); }
  std::size_t below(std::size_t n);
  bool chance(unsigned num, unsigned den) { return below(den) < num; }
  template <class T>
  const T& pick(const std::vector<T>& xs) {
    return xs.at(below(xs.size()));
  }
  template <class T>
  void shuffle(std::vector<T>& xs) {
    for (std::size_t k = xs.size(); k > 1; --k) std::swap(xs[k - 1], xs[below(k)]);
  }

 private:
  std::mt19937_64 engine_;
};

struct Bounds {
  std::size_t maxObjects = 3;
  std::size_t maxHom = 3;
  std::size_t attempts = 400;
};

template <class T>
struct Sampled {
  T value;
  std::size_t attempts = 0;
};

// Rejection sampling: proposals are uniform typed tables or gauge transforms of chaotic
// categories, accepted when checkVCategory passes. BudgetExhausted past bounds.attempts.
Sampled<VCategory> randomVCategory(Rng& rng, const BaseRef& base, const Bounds& bounds);

// thin categories on random preorders, or a small monoid from a fixed list
FinCategory randomSmallCategory(Rng& rng, const Bounds& bounds);

// a V-2-category together with the untransported one it was built from
struct V2Model {
  FinCategory cat;
  V2CategoryRef plain;
  V2Gauge gauge;
  V2CategoryRef value;
};
struct FunctorModel {
  V2FunctorRef plain;
  V2FunctorRef value;
};

// locally posetal over a thin base, locally chaotic plus a random gauge otherwise
Sampled<V2Model> randomV2Category(Rng& rng, const BaseRef& base, const Bounds& bounds);
V2Model joinMonoidModel(const BaseRef& boolBase);
// falls back to a constant functor when no candidate passes
Sampled<FunctorModel> randomV2Functor(Rng& rng, const V2Model& u, const V2Model& w, const Bounds& bounds);
FunctorModel identityModel(const V2Model& u);
// nullopt when no transformation T -> S exists
std::optional<Sampled<V2NatRef>> randomV2Nat(Rng& rng, const FunctorModel& t, const FunctorModel& s,
                                             const Bounds& bounds);
std::optional<Sampled<ModificationRef>> randomModification(Rng& rng, const V2NatRef& a, const V2NatRef& b,
                                                           const Bounds& bounds);

Pasting randomPasting(Rng& rng, const BaseRef& base, const Bounds& bounds);
Pasting identityPasting(const V2Model& u);

}  // namespace enriched
