#include "enriched/kfold.hpp"

#include <mutex>

namespace enriched {

struct KFoldMonoidal::Cache {
  std::once_flag once;
  CheckReport report;
};

KFoldMonoidal::KFoldMonoidal(FinCategory category, ObjId unit, std::vector<TensorTable> tensors,
                             std::vector<AssociatorTable> associators,
                             std::map<InterchangeKey, InterchangeTable> interchanges)
    : category_(std::make_shared<const FinCategory>(std::move(category))),
      unit_(std::move(unit)),
      tensors_(std::move(tensors)),
      associators_(std::move(associators)),
      interchanges_(std::move(interchanges)),
      cache_(std::make_shared<Cache>()) {
  const auto& c = *category_;
  const int n = tensorCount();
  if (n < 1) fail(ErrorKind::MalformedTable, "at least one tensor is required");
  if (!c.hasObject(unit_)) fail(ErrorKind::MalformedTable, "unit " + unit_.str() + " is not an object");
  if (static_cast<int>(associators_.size()) != n)
    fail(ErrorKind::MalformedTable, "one associator table per tensor is required");
  const auto& obs = c.objects();
  const auto& mors = c.morphisms();
  for (int i = 1; i <= n; ++i) {
    const auto& t = tensors_[i - 1];
    std::string tag = "tensor " + std::to_string(i);
    if (t.objects.size() != obs.size() * obs.size() || t.morphisms.size() != mors.size() * mors.size())
      fail(ErrorKind::MalformedTable, tag + " is not total");
    for (const auto& [ab, x] : t.objects)
      if (!c.hasObject(ab.first) || !c.hasObject(ab.second) || !c.hasObject(x))
        fail(ErrorKind::MalformedTable, tag + " references an unknown object");
    for (const auto& [fg, h] : t.morphisms)
      if (!c.hasMorphism(fg.first) || !c.hasMorphism(fg.second) || !c.hasMorphism(h))
        fail(ErrorKind::MalformedTable, tag + " references an unknown morphism");
    const auto& a = associators_[i - 1];
    if (a.size() != obs.size() * obs.size() * obs.size())
      fail(ErrorKind::MalformedTable, "associator " + std::to_string(i) + " is not total");
    for (const auto& [uvw, m] : a) {
      for (const auto& o : uvw)
        if (!c.hasObject(o)) fail(ErrorKind::MalformedTable, "associator references an unknown object");
      if (!c.hasMorphism(m)) fail(ErrorKind::MalformedTable, "associator references an unknown morphism");
    }
  }
  std::size_t pairs = 0;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      ++pairs;
      auto it = interchanges_.find({i, j});
      if (it == interchanges_.end())
        fail(ErrorKind::MalformedTable,
             "missing interchange " + std::to_string(i) + "," + std::to_string(j));
      if (it->second.size() != obs.size() * obs.size() * obs.size() * obs.size())
        fail(ErrorKind::MalformedTable, "interchange table is not total");
      for (const auto& [abcd, m] : it->second) {
        for (const auto& o : abcd)
          if (!c.hasObject(o)) fail(ErrorKind::MalformedTable, "interchange references an unknown object");
        if (!c.hasMorphism(m)) fail(ErrorKind::MalformedTable, "interchange references an unknown morphism");
      }
    }
  if (pairs != interchanges_.size())
    fail(ErrorKind::MalformedTable, "interchanges are indexed by pairs i < j only");
}

void KFoldMonoidal::requireIndex(int i) const {
  if (i < 1 || i > tensorCount())
    fail(ErrorKind::IndexOutOfRange, "tensor index " + std::to_string(i) + " outside 1.." +
                                         std::to_string(tensorCount()));
}

const ObjId& KFoldMonoidal::tensorObj(int i, const ObjId& a, const ObjId& b) const {
  requireIndex(i);
  const auto& t = tensors_[i - 1].objects;
  auto it = t.find({a, b});
  if (it == t.end()) fail(ErrorKind::UnknownObject, pairString(a.str(), b.str()));
  return it->second;
}

const MorId& KFoldMonoidal::tensorMor(int i, const MorId& f, const MorId& g) const {
  requireIndex(i);
  const auto& t = tensors_[i - 1].morphisms;
  auto it = t.find({f, g});
  if (it == t.end()) fail(ErrorKind::UnknownMorphism, pairString(f.str(), g.str()));
  return it->second;
}

const MorId& KFoldMonoidal::associator(int i, const ObjId& u, const ObjId& v, const ObjId& w) const {
  requireIndex(i);
  const auto& t = associators_[i - 1];
  auto it = t.find({u, v, w});
  if (it == t.end()) fail(ErrorKind::UnknownObject, u.str() + "," + v.str() + "," + w.str());
  return it->second;
}

const MorId& KFoldMonoidal::interchange(int i, int j, const ObjId& a, const ObjId& b,
                                        const ObjId& c, const ObjId& d) const {
  requireIndex(i);
  requireIndex(j);
  if (i >= j) fail(ErrorKind::IndexOutOfRange, "interchange needs i < j");
  const auto& t = interchanges_.at({i, j});
  auto it = t.find({a, b, c, d});
  if (it == t.end()) fail(ErrorKind::UnknownObject, a.str() + "," + b.str() + "," + c.str() + "," + d.str());
  return it->second;
}

const CheckReport& KFoldMonoidal::validation() const {
  std::call_once(cache_->once, [this] { cache_->report = checkKFold(*this); });
  return cache_->report;
}

bool operator==(const KFoldMonoidal& a, const KFoldMonoidal& b) {
  if (&a == &b) return true;
  return a.unit_ == b.unit_ && *a.category_ == *b.category_ && a.tensors_ == b.tensors_ &&
         a.associators_ == b.associators_ && a.interchanges_ == b.interchanges_;
}

namespace {

using OptMor = std::optional<MorId>;

// small evaluator for legs of diagrams in the base
struct Legs {
  const KFoldMonoidal& v;
  const FinCategory& c;

  ObjId t(int i, const ObjId& a, const ObjId& b) const { return v.tensorObj(i, a, b); }
  MorId m(int i, const MorId& f, const MorId& g) const { return v.tensorMor(i, f, g); }
  OptMor m(int i, const OptMor& f, const OptMor& g) const {
    if (!f || !g) return std::nullopt;
    return v.tensorMor(i, *f, *g);
  }
  MorId id(const ObjId& a) const { return c.id(a); }
  MorId a(int i, const ObjId& x, const ObjId& y, const ObjId& z) const { return v.associator(i, x, y, z); }
  MorId e(int i, int j, const ObjId& w, const ObjId& x, const ObjId& y, const ObjId& z) const {
    return v.interchange(i, j, w, x, y, z);
  }
  OptMor chain(std::initializer_list<OptMor> fs) const { return c.tryChain(fs); }
  std::string typed(const MorId& f) const {
    return f.str() + ":" + c.dom(f).str() + "->" + c.cod(f).str();
  }
};

std::vector<std::string> label(std::initializer_list<int> idx) {
  std::string s;
  for (int i : idx) s += (s.empty() ? "" : ",") + std::to_string(i);
  return {"i=" + s};
}

template <class T>
std::vector<std::string> withLabel(std::vector<std::string> lab, const std::vector<T>& xs) {
  for (const auto& x : xs) lab.push_back(x.str());
  return lab;
}

std::optional<Witness> compareLegs(const std::vector<std::string>& inst, const OptMor& l, const OptMor& r) {
  if (l && r && *l == *r) return std::nullopt;
  return Witness{"", inst, show(l), show(r)};
}

}  // namespace

CheckReport checkKFold(const KFoldMonoidal& v, const CheckOptions& opts) {
  CheckReport r("checkKFold");
  const auto& c = v.category();
  r.absorb(checkCategory(c, opts), "category");
  Legs L{v, c};
  const auto& obs = c.objects();
  const auto& mors = c.morphisms();
  const ObjId& I = v.unit();
  const int n = v.tensorCount();

  auto cat2 = std::make_shared<const FinCategory>(productCategory(c, c));
  for (int i = 1; i <= n; ++i) {
    auto lab = label({i});
    std::map<ObjId, ObjId> om;
    for (const auto& a : obs)
      for (const auto& b : obs) om.emplace(pairId(a, b), v.tensorObj(i, a, b));
    std::map<MorId, MorId> mm;
    for (const auto& f : mors)
      for (const auto& g : mors) mm.emplace(pairId(f, g), v.tensorMor(i, f, g));
    FinFunctor tensor(cat2, v.categoryRef(), std::move(om), std::move(mm));
    r.absorb(checkFunctor(tensor, opts), "tensor-bifunctor", lab);

    r.family("strict-unit-objects");
    for (const auto& a : obs) {
      r.expectEqual(opts, "strict-unit-objects", withLabel(lab, std::vector{I, a}), v.tensorObj(i, I, a).str(), a.str());
      r.expectEqual(opts, "strict-unit-objects", withLabel(lab, std::vector{a, I}), v.tensorObj(i, a, I).str(), a.str());
    }
    r.family("strict-unit-morphisms");
    for (const auto& f : mors) {
      r.expectEqual(opts, "strict-unit-morphisms", withLabel(lab, std::vector{L.id(I), f}),
                    v.tensorMor(i, L.id(I), f).str(), f.str());
      r.expectEqual(opts, "strict-unit-morphisms", withLabel(lab, std::vector{f, L.id(I)}),
                    v.tensorMor(i, f, L.id(I)).str(), f.str());
    }

    r.family("associator-typing");
    for (std::size_t k = 0; k < tupleCount(obs.size(), 3); ++k) {
      auto x = tupleAt(k, 3, obs);
      auto al = L.a(i, x[0], x[1], x[2]);
      auto from = L.t(i, L.t(i, x[0], x[1]), x[2]);
      auto to = L.t(i, x[0], L.t(i, x[1], x[2]));
      r.expect(opts, "associator-typing", withLabel(lab, x), c.dom(al) == from && c.cod(al) == to,
               L.typed(al), from.str() + "->" + to.str());
      if (!c.inverse(al))
        r.warn(Witness{"associator-invertible", withLabel(lab, x), al.str(), "no inverse"});
    }
    scanFamily(r, opts, "associator-naturality", tupleCount(mors.size(), 3), [&](std::size_t k) {
      auto f = tupleAt(k, 3, mors);
      auto lhs = L.chain({L.a(i, c.cod(f[0]), c.cod(f[1]), c.cod(f[2])), L.m(i, L.m(i, f[0], f[1]), f[2])});
      auto rhs = L.chain({L.m(i, f[0], L.m(i, f[1], f[2])), L.a(i, c.dom(f[0]), c.dom(f[1]), c.dom(f[2]))});
      return compareLegs(withLabel(lab, f), lhs, rhs);
    });
    scanFamily(r, opts, "pentagon", tupleCount(obs.size(), 4), [&](std::size_t k) {
      auto x = tupleAt(k, 4, obs);
      const auto &U = x[0], &V = x[1], &W = x[2], &X = x[3];
      auto lhs = L.chain({L.a(i, U, V, L.t(i, W, X)), L.a(i, L.t(i, U, V), W, X)});
      auto rhs = L.chain({L.m(i, L.id(U), L.a(i, V, W, X)), L.a(i, U, L.t(i, V, W), X),
                          L.m(i, L.a(i, U, V, W), L.id(X))});
      return compareLegs(withLabel(lab, x), lhs, rhs);
    });
  }

  r.family("interchange-typing");
  r.family("interchange-naturality");
  r.family("internal-unit");
  r.family("external-unit");
  r.family("internal-associativity");
  r.family("external-associativity");
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      auto lab = label({i, j});
      for (std::size_t k = 0; k < tupleCount(obs.size(), 4); ++k) {
        auto x = tupleAt(k, 4, obs);
        auto e = L.e(i, j, x[0], x[1], x[2], x[3]);
        auto from = L.t(i, L.t(j, x[0], x[1]), L.t(j, x[2], x[3]));
        auto to = L.t(j, L.t(i, x[0], x[2]), L.t(i, x[1], x[3]));
        r.expect(opts, "interchange-typing", withLabel(lab, x), c.dom(e) == from && c.cod(e) == to,
                 L.typed(e), from.str() + "->" + to.str());
      }
      scanFamily(r, opts, "interchange-naturality", tupleCount(mors.size(), 4), [&](std::size_t k) {
        auto f = tupleAt(k, 4, mors);
        auto lhs = L.chain({L.e(i, j, c.cod(f[0]), c.cod(f[1]), c.cod(f[2]), c.cod(f[3])),
                            L.m(i, L.m(j, f[0], f[1]), L.m(j, f[2], f[3]))});
        auto rhs = L.chain({L.m(j, L.m(i, f[0], f[2]), L.m(i, f[1], f[3])),
                            L.e(i, j, c.dom(f[0]), c.dom(f[1]), c.dom(f[2]), c.dom(f[3]))});
        return compareLegs(withLabel(lab, f), lhs, rhs);
      });
      for (const auto& a : obs)
        for (const auto& b : obs) {
          auto idj = L.id(L.t(j, a, b));
          auto idi = L.id(L.t(i, a, b));
          r.expectEqual(opts, "internal-unit", withLabel(lab, std::vector{a, b, I, I}),
                        L.e(i, j, a, b, I, I).str(), idj.str());
          r.expectEqual(opts, "internal-unit", withLabel(lab, std::vector{I, I, a, b}),
                        L.e(i, j, I, I, a, b).str(), idj.str());
          r.expectEqual(opts, "external-unit", withLabel(lab, std::vector{a, I, b, I}),
                        L.e(i, j, a, I, b, I).str(), idi.str());
          r.expectEqual(opts, "external-unit", withLabel(lab, std::vector{I, a, I, b}),
                        L.e(i, j, I, a, I, b).str(), idi.str());
        }
      scanFamily(r, opts, "internal-associativity", tupleCount(obs.size(), 6), [&](std::size_t k) {
        auto x = tupleAt(k, 6, obs);
        const auto &U = x[0], &V = x[1], &W = x[2], &X = x[3], &Y = x[4], &Z = x[5];
        auto lhs = L.chain({L.m(j, L.a(i, U, W, Y), L.a(i, V, X, Z)),
                            L.e(i, j, L.t(i, U, W), L.t(i, V, X), Y, Z),
                            L.m(i, L.e(i, j, U, V, W, X), L.id(L.t(j, Y, Z)))});
        auto rhs = L.chain({L.e(i, j, U, V, L.t(i, W, Y), L.t(i, X, Z)),
                            L.m(i, L.id(L.t(j, U, V)), L.e(i, j, W, X, Y, Z)),
                            L.a(i, L.t(j, U, V), L.t(j, W, X), L.t(j, Y, Z))});
        return compareLegs(withLabel(lab, x), lhs, rhs);
      });
      scanFamily(r, opts, "external-associativity", tupleCount(obs.size(), 6), [&](std::size_t k) {
        auto x = tupleAt(k, 6, obs);
        const auto &U = x[0], &V = x[1], &W = x[2], &X = x[3], &Y = x[4], &Z = x[5];
        auto lhs = L.chain({L.a(j, L.t(i, U, X), L.t(i, V, Y), L.t(i, W, Z)),
                            L.m(j, L.e(i, j, U, V, X, Y), L.id(L.t(i, W, Z))),
                            L.e(i, j, L.t(j, U, V), W, L.t(j, X, Y), Z)});
        auto rhs = L.chain({L.m(j, L.id(L.t(i, U, X)), L.e(i, j, V, W, Y, Z)),
                            L.e(i, j, U, L.t(j, V, W), X, L.t(j, Y, Z)),
                            L.m(i, L.a(j, U, V, W), L.a(j, X, Y, Z))});
        return compareLegs(withLabel(lab, x), lhs, rhs);
      });
    }
  }

  r.family("hexagon");
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      for (int k = j + 1; k <= n; ++k) {
        auto lab = label({i, j, k});
        scanFamily(r, opts, "hexagon", tupleCount(obs.size(), 8), [&](std::size_t idx) {
          auto x = tupleAt(idx, 8, obs);
          const auto &A = x[0], &A2 = x[1], &B = x[2], &B2 = x[3], &C = x[4], &C2 = x[5], &D = x[6],
                     &D2 = x[7];
          auto lhs = L.chain({L.m(k, L.e(i, j, A, B, C, D), L.e(i, j, A2, B2, C2, D2)),
                              L.e(i, k, L.t(j, A, B), L.t(j, A2, B2), L.t(j, C, D), L.t(j, C2, D2)),
                              L.m(i, L.e(j, k, A, A2, B, B2), L.e(j, k, C, C2, D, D2))});
          auto rhs = L.chain({L.e(j, k, L.t(i, A, C), L.t(i, A2, C2), L.t(i, B, D), L.t(i, B2, D2)),
                              L.m(j, L.e(i, k, A, A2, C, C2), L.e(i, k, B, B2, D, D2)),
                              L.e(i, j, L.t(k, A, A2), L.t(k, B, B2), L.t(k, C, C2), L.t(k, D, D2))});
          return compareLegs(withLabel(lab, x), lhs, rhs);
        });
      }
  return r;
}

CheckReport checkSymmetric(const SymmetricMonoidal& s, const CheckOptions& opts) {
  CheckReport r("checkSymmetric");
  const auto& v = s.monoidal;
  r.absorb(checkKFold(v, opts), "");
  const auto& c = v.category();
  Legs L{v, c};
  const auto& obs = c.objects();
  const auto& mors = c.morphisms();
  const ObjId& I = v.unit();
  const auto tableSize = obs.size() * obs.size();
  if (s.symmetry.size() != tableSize) fail(ErrorKind::MalformedTable, "symmetry table is not total");
  auto sym = [&](const ObjId& a, const ObjId& b) -> MorId {
    auto it = s.symmetry.find({a, b});
    if (it == s.symmetry.end()) fail(ErrorKind::MalformedTable, "symmetry misses " + pairString(a.str(), b.str()));
    if (!c.hasMorphism(it->second)) fail(ErrorKind::MalformedTable, "symmetry references " + it->second.str());
    return it->second;
  };
  r.family("symmetry-typing");
  r.family("symmetry-involution");
  r.family("symmetry-unit");
  for (const auto& a : obs)
    for (const auto& b : obs) {
      auto x = sym(a, b);
      auto from = L.t(1, a, b), to = L.t(1, b, a);
      r.expect(opts, "symmetry-typing", {a.str(), b.str()}, c.dom(x) == from && c.cod(x) == to,
               L.typed(x), from.str() + "->" + to.str());
      r.expectEqual(opts, "symmetry-involution", {a.str(), b.str()}, str(L.chain({sym(b, a), x})),
                    L.id(from).str());
    }
  for (const auto& a : obs)
    r.expectEqual(opts, "symmetry-unit", {a.str(), I.str()}, sym(a, I).str(), L.id(a).str());
  scanFamily(r, opts, "symmetry-naturality", tupleCount(mors.size(), 2), [&](std::size_t k) {
    auto f = tupleAt(k, 2, mors);
    auto lhs = L.chain({sym(c.cod(f[0]), c.cod(f[1])), L.m(1, f[0], f[1])});
    auto rhs = L.chain({L.m(1, f[1], f[0]), sym(c.dom(f[0]), c.dom(f[1]))});
    return compareLegs({f[0].str(), f[1].str()}, lhs, rhs);
  });
  scanFamily(r, opts, "symmetry-hexagon", tupleCount(obs.size(), 3), [&](std::size_t k) {
    auto x = tupleAt(k, 3, obs);
    const auto &A = x[0], &B = x[1], &C = x[2];
    auto lhs = L.chain({L.a(1, B, C, A), sym(A, L.t(1, B, C)), L.a(1, A, B, C)});
    auto rhs = L.chain({L.m(1, L.id(B), sym(A, C)), L.a(1, B, A, C), L.m(1, sym(A, B), L.id(C))});
    return compareLegs(strs(std::array{A, B, C}), lhs, rhs);
  });
  return r;
}

KFoldMonoidal fromSymmetric(const SymmetricMonoidal& s, int k) {
  if (k < 1) fail(ErrorKind::IndexOutOfRange, "fromSymmetric needs k >= 1");
  auto report = checkSymmetric(s);
  if (!report.passed()) {
    const auto& w = report.witnesses().front();
    fail(ErrorKind::NotSymmetric, "diagram " + w.diagram + " fails (" + w.lhs + " vs " + w.rhs + ")");
  }
  const auto& v = s.monoidal;
  const auto& c = v.category();
  Legs L{v, c};
  auto inv = [&](const MorId& f) {
    auto g = c.inverse(f);
    if (!g) fail(ErrorKind::NotSymmetric, "associator " + f.str() + " is not invertible");
    return *g;
  };
  InterchangeTable eta;
  const auto& obs = c.objects();
  for (std::size_t idx = 0; idx < tupleCount(obs.size(), 4); ++idx) {
    auto x = tupleAt(idx, 4, obs);
    const auto &A = x[0], &B = x[1], &C = x[2], &D = x[3];
    auto e = L.chain({inv(L.a(1, A, C, L.t(1, B, D))), L.m(1, L.id(A), L.a(1, C, B, D)),
                      L.m(1, L.id(A), L.m(1, s.symmetry.at({B, C}), L.id(D))),
                      L.m(1, L.id(A), inv(L.a(1, B, C, D))), L.a(1, A, B, L.t(1, C, D))});
    if (!e) fail(ErrorKind::ConstructionFailed, "interchange composite undefined");
    eta.emplace(std::array{A, B, C, D}, *e);
  }
  std::vector<TensorTable> tensors(k, v.tensors().front());
  std::vector<AssociatorTable> assoc(k, v.associators().front());
  std::map<InterchangeKey, InterchangeTable> inter;
  for (int i = 1; i <= k; ++i)
    for (int j = i + 1; j <= k; ++j) inter.emplace(InterchangeKey{i, j}, eta);
  return KFoldMonoidal(c, v.unit(), std::move(tensors), std::move(assoc), std::move(inter));
}

KFoldMonoidal truncate(const KFoldMonoidal& v, int k) {
  if (k < 1 || k > v.tensorCount()) fail(ErrorKind::IndexOutOfRange, "truncate to " + std::to_string(k));
  std::vector<TensorTable> tensors(v.tensors().begin(), v.tensors().begin() + k);
  std::vector<AssociatorTable> assoc(v.associators().begin(), v.associators().begin() + k);
  std::map<InterchangeKey, InterchangeTable> inter;
  for (const auto& [key, t] : v.interchanges())
    if (key.second <= k) inter.emplace(key, t);
  return KFoldMonoidal(v.category(), v.unit(), std::move(tensors), std::move(assoc), std::move(inter));
}

}  // namespace enriched
