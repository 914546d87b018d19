#include "enriched/document.hpp"

#include <fstream>
#include <regex>
#include <set>
#include <sstream>

#include "enriched/shipped.hpp"
#include "json.hpp"

namespace enriched {

using json = nlohmann::json;

namespace {

const ObjId kZero("0");

// ---- writing

json objs(const std::vector<ObjId>& xs) {
  json out = json::array();
  for (const auto& x : xs) out.push_back(x.str());
  return out;
}

json vcatJson(const VCategory& a) {
  json hom = json::array(), comp = json::array(), unit = json::array();
  for (const auto& [ab, x] : a.homTable()) hom.push_back({ab.first.str(), ab.second.str(), x.str()});
  for (const auto& [abc, m] : a.compTable()) comp.push_back({abc[0].str(), abc[1].str(), abc[2].str(), m.str()});
  for (const auto& [x, m] : a.unitTable()) unit.push_back({x.str(), m.str()});
  return {{"objects", objs(a.objects())}, {"hom", hom}, {"composition", comp}, {"identities", unit}};
}

json vfunctorTables(const VFunctor& t) {
  json om = json::array(), hm = json::array();
  for (const auto& [a, x] : t.objectMap()) om.push_back({a.str(), x.str()});
  for (const auto& [ab, m] : t.homMap()) hm.push_back({ab.first.str(), ab.second.str(), m.str()});
  return {{"objects", om}, {"homs", hm}};
}

template <class Map, class Ref>
std::string nameIn(const Map& m, const Ref& r, bool (*same)(const Ref&, const Ref&), const std::string& what) {
  for (const auto& [n, x] : m)
    if (x == r) return n;
  for (const auto& [n, x] : m)
    if (same(x, r)) return n;
  fail(ErrorKind::DanglingReference, what + " is not registered in the document");
}

bool sameVF(const VFunctorRef& a, const VFunctorRef& b) { return a == b || (a && b && *a == *b); }
bool sameVN(const VNatRef& a, const VNatRef& b) { return a == b || (a && b && *a == *b); }
bool sameMod(const ModificationRef& a, const ModificationRef& b) { return a == b || (a && b && *a == *b); }

json baseJson(const Document& d) {
  const auto& V = *d.base;
  const auto& c = V.category();
  json morphisms = json::object(), ids = json::object(), comp = json::array();
  for (const auto& [f, ar] : c.arrows()) morphisms[f.str()] = {ar.dom.str(), ar.cod.str()};
  for (const auto& [a, f] : c.identities()) ids[a.str()] = f.str();
  for (const auto& [gf, h] : c.composition()) comp.push_back({gf.first.str(), gf.second.str(), h.str()});
  json tensors = json::array(), assoc = json::array(), inter = json::array();
  for (const auto& t : V.tensors()) {
    json o = json::array(), m = json::array();
    for (const auto& [ab, x] : t.objects) o.push_back({ab.first.str(), ab.second.str(), x.str()});
    for (const auto& [fg, h] : t.morphisms) m.push_back({fg.first.str(), fg.second.str(), h.str()});
    tensors.push_back({{"objects", o}, {"morphisms", m}});
  }
  for (const auto& a : V.associators()) {
    json t = json::array();
    for (const auto& [abc, m] : a) t.push_back({abc[0].str(), abc[1].str(), abc[2].str(), m.str()});
    assoc.push_back(t);
  }
  for (const auto& [ij, table] : V.interchanges()) {
    json t = json::array();
    for (const auto& [abcd, m] : table) t.push_back({abcd[0].str(), abcd[1].str(), abcd[2].str(), abcd[3].str(), m.str()});
    inter.push_back({{"i", ij.first}, {"j", ij.second}, {"components", t}});
  }
  json out = {{"name", d.baseName},     {"objects", objs(c.objects())}, {"morphisms", morphisms},
              {"identities", ids},      {"composition", comp},          {"unit", V.unit().str()},
              {"tensors", tensors},     {"associators", assoc},         {"interchanges", inter}};
  if (d.symmetry) {
    json s = json::array();
    for (const auto& [ab, m] : *d.symmetry) s.push_back({ab.first.str(), ab.second.str(), m.str()});
    out["symmetry"] = s;
  }
  return out;
}

json v2Json(const V2Category& u) {
  json homs = json::array(), comp = json::array(), units = json::array();
  for (const auto& [ab, h] : u.homs())
    homs.push_back({{"from", ab.first.str()}, {"to", ab.second.str()}, {"vcategory", vcatJson(*h)}});
  for (const auto& [abc, m] : u.compositions()) {
    auto t = vfunctorTables(m);
    t["at"] = {abc[0].str(), abc[1].str(), abc[2].str()};
    comp.push_back(t);
  }
  for (const auto& [a, j] : u.units())
    units.push_back({{"at", a.str()}, {"cell", j.object(kZero).str()}, {"component", j.hom(kZero, kZero).str()}});
  return {{"objects", objs(u.objects())}, {"homs", homs}, {"composition", comp}, {"units", units}};
}

// two-space indent like dump(2), but arrays of scalars stay on one line
void write(std::string& out, const json& j, int depth) {
  auto pad = [&](int d) { out.append(static_cast<std::size_t>(2 * d), ' '); };
  auto flat = [](const json& a) {
    for (const auto& x : a)
      if (x.is_structured()) return false;
    return true;
  };
  if (j.is_object()) {
    if (j.empty()) return void(out += "{}");
    out += "{\n";
    bool first = true;
    for (const auto& [k, v] : j.items()) {
      if (!first) out += ",\n";
      first = false;
      pad(depth + 1);
      out += json(k).dump() + ": ";
      write(out, v, depth + 1);
    }
    out += "\n";
    pad(depth);
    out += "}";
  } else if (j.is_array()) {
    if (flat(j)) {
      out += "[";
      for (std::size_t k = 0; k < j.size(); ++k) out += (k ? ", " : "") + j[k].dump();
      return void(out += "]");
    }
    out += "[\n";
    for (std::size_t k = 0; k < j.size(); ++k) {
      if (k) out += ",\n";
      pad(depth + 1);
      write(out, j[k], depth + 1);
    }
    out += "\n";
    pad(depth);
    out += "]";
  } else {
    out += j.dump();
  }
}

// ---- reading

struct Reader {
  const Document& doc;

  [[noreturn]] static void schema(const std::string& path, const std::string& what) {
    throw ParseError(path + ": " + what, 0, 0);
  }
  [[noreturn]] static void dangling(const std::string& path, const std::string& what) {
    fail(ErrorKind::DanglingReference, path + ": " + what);
  }

  static const json& field(const json& j, const char* key, const std::string& path) {
    if (!j.is_object()) schema(path, "expected an object");
    auto it = j.find(key);
    if (it == j.end()) schema(path, std::string("missing field \"") + key + "\"");
    return *it;
  }
  static const json& arr(const json& j, const std::string& path, std::size_t arity = 0) {
    if (!j.is_array()) schema(path, "expected an array");
    if (arity && j.size() != arity) schema(path, "expected " + std::to_string(arity) + " entries");
    return j;
  }
  static std::string text(const json& j, const std::string& path) {
    if (!j.is_string()) schema(path, "expected a string");
    auto s = j.get<std::string>();
    if (!isWellFormedId(s)) schema(path, "malformed identifier \"" + s + "\"");
    return s;
  }
  static int integer(const json& j, const std::string& path) {
    if (!j.is_number_integer()) schema(path, "expected an integer");
    return j.get<int>();
  }
  static std::string at(const std::string& path, std::size_t k) { return path + "[" + std::to_string(k) + "]"; }
  static std::string at(const std::string& path, const std::string& k) { return path + "." + k; }

  ObjId baseObj(const json& j, const std::string& path) const {
    ObjId x(text(j, path));
    if (!doc.base->category().hasObject(x)) dangling(path, "unknown base object " + x.str());
    return x;
  }
  MorId baseMor(const json& j, const std::string& path) const {
    MorId f(text(j, path));
    if (!doc.base->category().hasMorphism(f)) dangling(path, "unknown base morphism " + f.str());
    return f;
  }
  static ObjId member(const json& j, const std::string& path, const std::set<ObjId>& pool, const char* what) {
    ObjId x(text(j, path));
    if (!pool.count(x)) dangling(path, std::string("unknown ") + what + " " + x.str());
    return x;
  }
  template <class Map>
  static typename Map::mapped_type named(const Map& m, const json& j, const std::string& path, const char* what) {
    if (!j.is_string()) schema(path, "expected a name");
    auto it = m.find(j.get<std::string>());
    if (it == m.end()) dangling(path, std::string("unknown ") + what + " \"" + j.get<std::string>() + "\"");
    return it->second;
  }

  std::vector<ObjId> objectList(const json& j, const std::string& path) const {
    std::vector<ObjId> out;
    for (std::size_t k = 0; k < arr(j, path).size(); ++k) out.emplace_back(text(j[k], at(path, k)));
    return out;
  }

  VCategoryRef vcat(const json& j, const std::string& path) const {
    auto obs = objectList(field(j, "objects", path), at(path, "objects"));
    std::set<ObjId> pool(obs.begin(), obs.end());
    HomTable hom;
    CompTable comp;
    UnitTable unit;
    const auto& h = arr(field(j, "hom", path), at(path, "hom"));
    for (std::size_t k = 0; k < h.size(); ++k) {
      auto p = at(at(path, "hom"), k);
      const auto& e = arr(h[k], p, 3);
      hom[{member(e[0], at(p, 0), pool, "object"), member(e[1], at(p, 1), pool, "object")}] = baseObj(e[2], at(p, 2));
    }
    const auto& c = arr(field(j, "composition", path), at(path, "composition"));
    for (std::size_t k = 0; k < c.size(); ++k) {
      auto p = at(at(path, "composition"), k);
      const auto& e = arr(c[k], p, 4);
      comp[{member(e[0], at(p, 0), pool, "object"), member(e[1], at(p, 1), pool, "object"),
            member(e[2], at(p, 2), pool, "object")}] = baseMor(e[3], at(p, 3));
    }
    const auto& u = arr(field(j, "identities", path), at(path, "identities"));
    for (std::size_t k = 0; k < u.size(); ++k) {
      auto p = at(at(path, "identities"), k);
      const auto& e = arr(u[k], p, 2);
      unit[member(e[0], at(p, 0), pool, "object")] = baseMor(e[1], at(p, 1));
    }
    return ref(VCategory(doc.base, obs, std::move(hom), std::move(comp), std::move(unit)));
  }

  VFunctor vfunctor(const json& j, const std::string& path, const VCategoryRef& s, const VCategoryRef& t) const {
    std::set<ObjId> from(s->objects().begin(), s->objects().end());
    std::set<ObjId> to(t->objects().begin(), t->objects().end());
    ObjMap om;
    HomMap hm;
    const auto& o = arr(field(j, "objects", path), at(path, "objects"));
    for (std::size_t k = 0; k < o.size(); ++k) {
      auto p = at(at(path, "objects"), k);
      const auto& e = arr(o[k], p, 2);
      om[member(e[0], at(p, 0), from, "source object")] = member(e[1], at(p, 1), to, "target object");
    }
    const auto& h = arr(field(j, "homs", path), at(path, "homs"));
    for (std::size_t k = 0; k < h.size(); ++k) {
      auto p = at(at(path, "homs"), k);
      const auto& e = arr(h[k], p, 3);
      hm[{member(e[0], at(p, 0), from, "source object"), member(e[1], at(p, 1), from, "source object")}] =
          baseMor(e[2], at(p, 2));
    }
    return VFunctor(s, t, std::move(om), std::move(hm));
  }

  static std::pair<ObjId, ObjId> fromTo(const json& j, const std::string& path, const std::set<ObjId>& pool) {
    return {member(field(j, "from", path), at(path, "from"), pool, "object"),
            member(field(j, "to", path), at(path, "to"), pool, "object")};
  }

  V2CategoryRef v2(const json& j, const std::string& path) const {
    auto obs = objectList(field(j, "objects", path), at(path, "objects"));
    std::set<ObjId> pool(obs.begin(), obs.end());
    std::map<std::pair<ObjId, ObjId>, VCategoryRef> homs;
    const auto& h = arr(field(j, "homs", path), at(path, "homs"));
    for (std::size_t k = 0; k < h.size(); ++k) {
      auto p = at(at(path, "homs"), k);
      homs[fromTo(h[k], p, pool)] = vcat(field(h[k], "vcategory", p), at(p, "vcategory"));
    }
    auto homAt = [&](const ObjId& a, const ObjId& b, const std::string& p) {
      auto it = homs.find({a, b});
      if (it == homs.end()) dangling(p, "no hom entry for (" + a.str() + "," + b.str() + ")");
      return it->second;
    };
    std::map<std::array<ObjId, 3>, VFunctor> comp;
    const auto& c = arr(field(j, "composition", path), at(path, "composition"));
    for (std::size_t k = 0; k < c.size(); ++k) {
      auto p = at(at(path, "composition"), k);
      const auto& a = arr(field(c[k], "at", p), at(p, "at"), 3);
      std::array<ObjId, 3> abc{member(a[0], at(p, "at[0]"), pool, "object"), member(a[1], at(p, "at[1]"), pool, "object"),
                               member(a[2], at(p, "at[2]"), pool, "object")};
      auto src = productVCatRef(1, homAt(abc[1], abc[2], p), homAt(abc[0], abc[1], p));
      comp.emplace(abc, vfunctor(c[k], p, src, homAt(abc[0], abc[2], p)));
    }
    std::map<ObjId, VFunctor> units;
    auto I = unitVCategoryRef(doc.base);
    const auto& u = arr(field(j, "units", path), at(path, "units"));
    for (std::size_t k = 0; k < u.size(); ++k) {
      auto p = at(at(path, "units"), k);
      auto a = member(field(u[k], "at", p), at(p, "at"), pool, "object");
      auto hAA = homAt(a, a, p);
      std::set<ObjId> cells(hAA->objects().begin(), hAA->objects().end());
      auto cell = member(field(u[k], "cell", p), at(p, "cell"), cells, "1-cell");
      units.emplace(a, VFunctor(I, hAA, {{kZero, cell}}, {{{kZero, kZero}, baseMor(field(u[k], "component", p), at(p, "component"))}}));
    }
    return ref(V2Category(doc.base, obs, std::move(homs), std::move(comp), std::move(units)));
  }

  V2FunctorRef v2functor(const json& j, const std::string& path) const {
    auto U = named(doc.v2categories, field(j, "source", path), at(path, "source"), "V-2-category");
    auto W = named(doc.v2categories, field(j, "target", path), at(path, "target"), "V-2-category");
    std::set<ObjId> from(U->objects().begin(), U->objects().end());
    std::set<ObjId> to(W->objects().begin(), W->objects().end());
    ObjMap om;
    const auto& o = arr(field(j, "objects", path), at(path, "objects"));
    for (std::size_t k = 0; k < o.size(); ++k) {
      auto p = at(at(path, "objects"), k);
      const auto& e = arr(o[k], p, 2);
      om[member(e[0], at(p, 0), from, "source object")] = member(e[1], at(p, 1), to, "target object");
    }
    std::map<std::pair<ObjId, ObjId>, VFunctor> homs;
    const auto& h = arr(field(j, "homs", path), at(path, "homs"));
    for (std::size_t k = 0; k < h.size(); ++k) {
      auto p = at(at(path, "homs"), k);
      auto ab = fromTo(h[k], p, from);
      if (!om.count(ab.first) || !om.count(ab.second)) dangling(p, "object map misses an endpoint");
      homs.emplace(ab, vfunctor(h[k], p, U->homRef(ab.first, ab.second), W->homRef(om.at(ab.first), om.at(ab.second))));
    }
    return ref(V2Functor(U, W, std::move(om), std::move(homs)));
  }

  V2NatRef v2nat(const json& j, const std::string& path) const {
    auto T = named(doc.v2functors, field(j, "source", path), at(path, "source"), "V-2-functor");
    auto S = named(doc.v2functors, field(j, "target", path), at(path, "target"), "V-2-functor");
    const auto& U = T->source();
    std::set<ObjId> pool(U.objects().begin(), U.objects().end());
    std::map<ObjId, VFunctor> comps;
    const auto& c = arr(field(j, "components", path), at(path, "components"));
    for (std::size_t k = 0; k < c.size(); ++k) {
      auto p = at(at(path, "components"), k);
      auto u = member(field(c[k], "at", p), at(p, "at"), pool, "object");
      if (!T->target().hasObject(T->object(u)) || !S->targetRef() || !sameV2Category(T->targetRef(), S->targetRef()))
        dangling(p, "transformation between functors with different targets");
      const auto& h = T->target().homRef(T->object(u), S->object(u));
      std::set<ObjId> cells(h->objects().begin(), h->objects().end());
      auto q = member(field(c[k], "cell", p), at(p, "cell"), cells, "1-cell");
      comps.emplace(u, pointAt(h, q, baseMor(field(c[k], "unit", p), at(p, "unit"))));
    }
    return ref(V2NatTransform(T, S, std::move(comps)));
  }

  ModificationRef modification(const json& j, const std::string& path) const {
    auto a = named(doc.v2nats, field(j, "source", path), at(path, "source"), "V-2-natural transformation");
    auto b = named(doc.v2nats, field(j, "target", path), at(path, "target"), "V-2-natural transformation");
    const auto& U = a->source().source();
    std::set<ObjId> pool(U.objects().begin(), U.objects().end());
    std::map<ObjId, MorId> comps;
    const auto& c = arr(field(j, "components", path), at(path, "components"));
    for (std::size_t k = 0; k < c.size(); ++k) {
      auto p = at(at(path, "components"), k);
      const auto& e = arr(c[k], p, 2);
      comps[member(e[0], at(p, 0), pool, "object")] = baseMor(e[1], at(p, 1));
    }
    return ref(VModification(a, b, std::move(comps)));
  }
};

BaseRef readBase(const json& j, Document& d) {
  const std::string path = "base";
  using R = Reader;
  auto obs = Reader{d}.objectList(R::field(j, "objects", path), "base.objects");
  std::set<ObjId> pool(obs.begin(), obs.end());
  std::map<MorId, Arrow> arrows;
  const auto& ms = R::field(j, "morphisms", path);
  if (!ms.is_object()) R::schema("base.morphisms", "expected an object");
  for (const auto& [name, ends] : ms.items()) {
    auto p = "base.morphisms." + name;
    if (!isWellFormedId(name)) R::schema(p, "malformed identifier");
    const auto& e = R::arr(ends, p, 2);
    arrows.emplace(MorId(name), Arrow{R::member(e[0], R::at(p, 0), pool, "object"), R::member(e[1], R::at(p, 1), pool, "object")});
  }
  std::set<ObjId> morPool;
  for (const auto& [f, a] : arrows) morPool.insert(ObjId(f.str()));
  auto mor = [&](const json& x, const std::string& p) { return MorId(R::member(x, p, morPool, "morphism").str()); };
  std::map<ObjId, MorId> ids;
  const auto& is = R::field(j, "identities", path);
  if (!is.is_object()) R::schema("base.identities", "expected an object");
  for (const auto& [a, f] : is.items()) {
    auto p = "base.identities." + a;
    if (!pool.count(ObjId(a))) R::dangling(p, "unknown object " + a);
    ids.emplace(ObjId(a), mor(f, p));
  }
  CompositionTable comp;
  const auto& cs = R::arr(R::field(j, "composition", path), "base.composition");
  for (std::size_t k = 0; k < cs.size(); ++k) {
    auto p = R::at("base.composition", k);
    const auto& e = R::arr(cs[k], p, 3);
    comp[{mor(e[0], R::at(p, 0)), mor(e[1], R::at(p, 1))}] = mor(e[2], R::at(p, 2));
  }
  FinCategory c(obs, std::move(arrows), std::move(ids), std::move(comp));
  auto unit = R::member(R::field(j, "unit", path), "base.unit", pool, "object");
  std::vector<TensorTable> tensors;
  const auto& ts = R::arr(R::field(j, "tensors", path), "base.tensors");
  for (std::size_t k = 0; k < ts.size(); ++k) {
    auto p = R::at("base.tensors", k);
    TensorTable t;
    const auto& o = R::arr(R::field(ts[k], "objects", p), p + ".objects");
    for (std::size_t i = 0; i < o.size(); ++i) {
      auto q = R::at(p + ".objects", i);
      const auto& e = R::arr(o[i], q, 3);
      t.objects[{R::member(e[0], R::at(q, 0), pool, "object"), R::member(e[1], R::at(q, 1), pool, "object")}] =
          R::member(e[2], R::at(q, 2), pool, "object");
    }
    const auto& m = R::arr(R::field(ts[k], "morphisms", p), p + ".morphisms");
    for (std::size_t i = 0; i < m.size(); ++i) {
      auto q = R::at(p + ".morphisms", i);
      const auto& e = R::arr(m[i], q, 3);
      t.morphisms[{mor(e[0], R::at(q, 0)), mor(e[1], R::at(q, 1))}] = mor(e[2], R::at(q, 2));
    }
    tensors.push_back(std::move(t));
  }
  std::vector<AssociatorTable> assoc;
  const auto& as = R::arr(R::field(j, "associators", path), "base.associators");
  for (std::size_t k = 0; k < as.size(); ++k) {
    auto p = R::at("base.associators", k);
    AssociatorTable t;
    const auto& rows = R::arr(as[k], p);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      auto q = R::at(p, i);
      const auto& e = R::arr(rows[i], q, 4);
      t[{R::member(e[0], R::at(q, 0), pool, "object"), R::member(e[1], R::at(q, 1), pool, "object"),
         R::member(e[2], R::at(q, 2), pool, "object")}] = mor(e[3], R::at(q, 3));
    }
    assoc.push_back(std::move(t));
  }
  std::map<InterchangeKey, InterchangeTable> inter;
  const auto& xs = R::arr(R::field(j, "interchanges", path), "base.interchanges");
  for (std::size_t k = 0; k < xs.size(); ++k) {
    auto p = R::at("base.interchanges", k);
    InterchangeKey key{R::integer(R::field(xs[k], "i", p), p + ".i"), R::integer(R::field(xs[k], "j", p), p + ".j")};
    auto& t = inter[key];
    const auto& rows = R::arr(R::field(xs[k], "components", p), p + ".components");
    for (std::size_t i = 0; i < rows.size(); ++i) {
      auto q = R::at(p + ".components", i);
      const auto& e = R::arr(rows[i], q, 5);
      t[{R::member(e[0], R::at(q, 0), pool, "object"), R::member(e[1], R::at(q, 1), pool, "object"),
         R::member(e[2], R::at(q, 2), pool, "object"), R::member(e[3], R::at(q, 3), pool, "object")}] =
          mor(e[4], R::at(q, 4));
    }
  }
  if (j.contains("name")) d.baseName = R::text(j["name"], "base.name");
  if (j.contains("symmetry")) {
    SymmetryTable s;
    const auto& rows = R::arr(j["symmetry"], "base.symmetry");
    for (std::size_t i = 0; i < rows.size(); ++i) {
      auto q = R::at("base.symmetry", i);
      const auto& e = R::arr(rows[i], q, 3);
      s[{R::member(e[0], R::at(q, 0), pool, "object"), R::member(e[1], R::at(q, 1), pool, "object")}] =
          mor(e[2], R::at(q, 2));
    }
    d.symmetry = std::move(s);
  }
  return share(KFoldMonoidal(std::move(c), unit, std::move(tensors), std::move(assoc), std::move(inter)));
}

std::pair<std::size_t, std::size_t> lineColumn(const std::string& text, std::size_t byte) {
  std::size_t line = 1, col = 1;
  for (std::size_t k = 0; k + 1 < byte && k < text.size(); ++k) {
    if (text[k] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

template <class Map>
std::string freshName(const Map& m, const std::string& name) {
  if (!m.count(name)) return name;
  for (int k = 2;; ++k) {
    auto n = name + "." + std::to_string(k);
    if (!m.count(n)) return n;
  }
}

const char* kSections[] = {"base", "vcategories", "vfunctors", "vnats", "v2categories", "v2functors", "v2nats",
                           "modifications", "pastings", "format"};

}  // namespace

Document::Document(BaseRef b, std::string name) : base(std::move(b)), baseName(std::move(name)) {}

std::string Document::add(const std::string& name, const VCategoryRef& a) {
  for (const auto& [n, x] : vcategories)
    if (sameVCategory(x, a)) return n;
  auto n = freshName(vcategories, name);
  vcategories.emplace(n, a);
  return n;
}

std::string Document::add(const std::string& name, const VFunctorRef& t) {
  for (const auto& [n, x] : vfunctors)
    if (sameVF(x, t)) return n;
  add(name + ".source", t->sourceRef());
  add(name + ".target", t->targetRef());
  auto n = freshName(vfunctors, name);
  vfunctors.emplace(n, t);
  return n;
}

std::string Document::add(const std::string& name, const VNatRef& a) {
  for (const auto& [n, x] : vnats)
    if (sameVN(x, a)) return n;
  add(name + ".source", ref(a->source()));
  add(name + ".target", ref(a->target()));
  auto n = freshName(vnats, name);
  vnats.emplace(n, a);
  return n;
}

std::string Document::add(const std::string& name, const V2CategoryRef& u) {
  for (const auto& [n, x] : v2categories)
    if (sameV2Category(x, u)) return n;
  auto n = freshName(v2categories, name);
  v2categories.emplace(n, u);
  return n;
}

std::string Document::add(const std::string& name, const V2FunctorRef& t) {
  for (const auto& [n, x] : v2functors)
    if (sameV2Functor(x, t)) return n;
  add(name + ".source", t->sourceRef());
  add(name + ".target", t->targetRef());
  auto n = freshName(v2functors, name);
  v2functors.emplace(n, t);
  return n;
}

std::string Document::add(const std::string& name, const V2NatRef& a) {
  for (const auto& [n, x] : v2nats)
    if (sameV2Nat(x, a)) return n;
  add(name + ".source", a->sourceRef());
  add(name + ".target", a->targetRef());
  auto n = freshName(v2nats, name);
  v2nats.emplace(n, a);
  return n;
}

std::string Document::add(const std::string& name, const ModificationRef& m) {
  for (const auto& [n, x] : modifications)
    if (sameMod(x, m)) return n;
  add(name + ".source", m->sourceRef());
  add(name + ".target", m->targetRef());
  auto n = freshName(modifications, name);
  modifications.emplace(n, m);
  return n;
}

std::string Document::add(const std::string& name, const Pasting& p) {
  PastingNames out;
  out.U = add(name + ".U", p.U);
  out.V = add(name + ".V", p.V);
  out.W = add(name + ".W", p.W);
  out.F = add(name + ".F", p.F);
  out.H = add(name + ".H", p.H);
  out.P = add(name + ".P", p.P);
  out.G = add(name + ".G", p.G);
  out.K = add(name + ".K", p.K);
  out.Q = add(name + ".Q", p.Q);
  for (std::size_t i = 0; i < 4; ++i) {
    auto k = std::to_string(i + 1);
    out.alpha[i] = add(name + ".alpha" + k, p.alpha[i]);
    out.beta[i] = add(name + ".beta" + k, p.beta[i]);
    out.gamma[i] = add(name + ".gamma" + k, p.gamma[i]);
    out.mu[i] = add(name + ".mu" + k, p.mu[i]);
    out.nu[i] = add(name + ".nu" + k, p.nu[i]);
  }
  auto n = freshName(pastings, name);
  pastings.emplace(n, out);
  return n;
}

Pasting Document::pasting(const std::string& name) const {
  const auto& pn = pastings.at(name);
  auto get = [](const auto& m, const std::string& k) {
    auto it = m.find(k);
    if (it == m.end()) fail(ErrorKind::DanglingReference, "pasting refers to unknown \"" + k + "\"");
    return it->second;
  };
  Pasting p;
  p.name = name;
  p.U = get(v2categories, pn.U);
  p.V = get(v2categories, pn.V);
  p.W = get(v2categories, pn.W);
  p.F = get(v2functors, pn.F);
  p.H = get(v2functors, pn.H);
  p.P = get(v2functors, pn.P);
  p.G = get(v2functors, pn.G);
  p.K = get(v2functors, pn.K);
  p.Q = get(v2functors, pn.Q);
  for (std::size_t i = 0; i < 4; ++i) {
    p.alpha[i] = get(v2nats, pn.alpha[i]);
    p.beta[i] = get(v2nats, pn.beta[i]);
    p.gamma[i] = get(v2nats, pn.gamma[i]);
    p.mu[i] = get(modifications, pn.mu[i]);
    p.nu[i] = get(modifications, pn.nu[i]);
  }
  return p;
}

std::optional<SymmetricMonoidal> Document::symmetric() const {
  if (!symmetry) return std::nullopt;
  return SymmetricMonoidal{truncate(*base, 1), *symmetry};
}

std::string serialize(const Document& d) {
  if (!d.base) fail(ErrorKind::MalformedTable, "document without a base");
  json out;
  out["format"] = "enriched-document/1";
  out["base"] = baseJson(d);
  json vc = json::object(), vf = json::object(), vn = json::object(), v2 = json::object(), f2 = json::object(),
       n2 = json::object(), mods = json::object(), ps = json::object();
  for (const auto& [n, a] : d.vcategories) vc[n] = vcatJson(*a);
  for (const auto& [n, t] : d.vfunctors) {
    auto j = vfunctorTables(*t);
    j["source"] = nameIn(d.vcategories, t->sourceRef(), &sameVCategory, "source of " + n);
    j["target"] = nameIn(d.vcategories, t->targetRef(), &sameVCategory, "target of " + n);
    vf[n] = j;
  }
  for (const auto& [n, a] : d.vnats) {
    json comps = json::array();
    for (const auto& [x, m] : a->components()) comps.push_back({x.str(), m.str()});
    vn[n] = {{"source", nameIn(d.vfunctors, ref(a->source()), &sameVF, "source of " + n)},
             {"target", nameIn(d.vfunctors, ref(a->target()), &sameVF, "target of " + n)},
             {"components", comps}};
  }
  for (const auto& [n, u] : d.v2categories) v2[n] = v2Json(*u);
  for (const auto& [n, t] : d.v2functors) {
    json om = json::array(), homs = json::array();
    for (const auto& [a, x] : t->objectMap()) om.push_back({a.str(), x.str()});
    for (const auto& [ab, h] : t->homs()) {
      auto j = vfunctorTables(h);
      j["from"] = ab.first.str();
      j["to"] = ab.second.str();
      homs.push_back(j);
    }
    f2[n] = {{"source", nameIn(d.v2categories, t->sourceRef(), &sameV2Category, "source of " + n)},
             {"target", nameIn(d.v2categories, t->targetRef(), &sameV2Category, "target of " + n)},
             {"objects", om},
             {"homs", homs}};
  }
  for (const auto& [n, a] : d.v2nats) {
    json comps = json::array();
    for (const auto& [u, c] : a->components())
      comps.push_back({{"at", u.str()}, {"cell", c.object(kZero).str()}, {"unit", c.hom(kZero, kZero).str()}});
    n2[n] = {{"source", nameIn(d.v2functors, a->sourceRef(), &sameV2Functor, "source of " + n)},
             {"target", nameIn(d.v2functors, a->targetRef(), &sameV2Functor, "target of " + n)},
             {"components", comps}};
  }
  for (const auto& [n, m] : d.modifications) {
    json comps = json::array();
    for (const auto& [u, c] : m->components()) comps.push_back({u.str(), c.str()});
    mods[n] = {{"source", nameIn(d.v2nats, m->sourceRef(), &sameV2Nat, "source of " + n)},
               {"target", nameIn(d.v2nats, m->targetRef(), &sameV2Nat, "target of " + n)},
               {"components", comps}};
  }
  for (const auto& [n, p] : d.pastings) {
    auto list = [](const std::array<std::string, 4>& xs) { return json(std::vector<std::string>(xs.begin(), xs.end())); };
    ps[n] = {{"U", p.U},           {"V", p.V},          {"W", p.W},          {"F", p.F},        {"H", p.H},
             {"P", p.P},           {"G", p.G},          {"K", p.K},          {"Q", p.Q},        {"alpha", list(p.alpha)},
             {"beta", list(p.beta)}, {"gamma", list(p.gamma)}, {"mu", list(p.mu)}, {"nu", list(p.nu)}};
  }
  out["vcategories"] = vc;
  out["vfunctors"] = vf;
  out["vnats"] = vn;
  out["v2categories"] = v2;
  out["v2functors"] = f2;
  out["v2nats"] = n2;
  out["modifications"] = mods;
  out["pastings"] = ps;
  std::string text;
  write(text, out, 0);
  return text + "\n";
}

Document parseDocument(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    auto [line, col] = lineColumn(text, e.byte);
    // drop the library's own prefix and position, ours goes in front
    static const std::regex prefix(R"(^\[json\.exception\.[a-z_.0-9]+\] parse error( at line \d+, column \d+)?: )");
    throw ParseError(std::regex_replace(e.what(), prefix, ""), line, col);
  }
  if (!j.is_object()) throw ParseError("$: expected a JSON object", 0, 0);
  for (const auto& [k, v] : j.items()) {
    bool known = false;
    for (const char* s : kSections) known = known || k == s;
    if (!known) throw ParseError("$." + k + ": unknown section", 0, 0);
  }
  Document d;
  d.base = readBase(Reader::field(j, "base", "$"), d);
  Reader r{d};
  auto section = [&](const char* key) -> json {
    if (!j.contains(key)) return json::object();
    if (!j[key].is_object()) Reader::schema(key, "expected an object keyed by name");
    return j[key];
  };
  const json sec_vcategories = section("vcategories"), sec_vfunctors = section("vfunctors"),
             sec_vnats = section("vnats"), sec_v2categories = section("v2categories"),
             sec_v2functors = section("v2functors"), sec_v2nats = section("v2nats"),
             sec_modifications = section("modifications"), sec_pastings = section("pastings");
  auto checkName = [](const std::string& n, const std::string& p) {
    if (n.empty()) Reader::schema(p, "empty name");
  };
  for (const auto& [n, v] : sec_vcategories.items()) {
    checkName(n, "vcategories");
    d.vcategories.emplace(n, r.vcat(v, "vcategories." + n));
  }
  for (const auto& [n, v] : sec_vfunctors.items()) {
    auto p = "vfunctors." + n;
    auto s = Reader::named(d.vcategories, Reader::field(v, "source", p), p + ".source", "V-category");
    auto t = Reader::named(d.vcategories, Reader::field(v, "target", p), p + ".target", "V-category");
    d.vfunctors.emplace(n, ref(r.vfunctor(v, p, s, t)));
  }
  for (const auto& [n, v] : sec_vnats.items()) {
    auto p = "vnats." + n;
    auto T = Reader::named(d.vfunctors, Reader::field(v, "source", p), p + ".source", "V-functor");
    auto S = Reader::named(d.vfunctors, Reader::field(v, "target", p), p + ".target", "V-functor");
    std::set<ObjId> pool(T->source().objects().begin(), T->source().objects().end());
    std::map<ObjId, MorId> comps;
    const auto& c = Reader::arr(Reader::field(v, "components", p), p + ".components");
    for (std::size_t k = 0; k < c.size(); ++k) {
      auto q = Reader::at(p + ".components", k);
      const auto& e = Reader::arr(c[k], q, 2);
      comps[Reader::member(e[0], Reader::at(q, 0), pool, "object")] = r.baseMor(e[1], Reader::at(q, 1));
    }
    d.vnats.emplace(n, ref(VNatTransform(*T, *S, std::move(comps))));
  }
  for (const auto& [n, v] : sec_v2categories.items()) d.v2categories.emplace(n, r.v2(v, "v2categories." + n));
  for (const auto& [n, v] : sec_v2functors.items()) d.v2functors.emplace(n, r.v2functor(v, "v2functors." + n));
  for (const auto& [n, v] : sec_v2nats.items()) d.v2nats.emplace(n, r.v2nat(v, "v2nats." + n));
  for (const auto& [n, v] : sec_modifications.items())
    d.modifications.emplace(n, r.modification(v, "modifications." + n));
  for (const auto& [n, v] : sec_pastings.items()) {
    auto p = "pastings." + n;
    PastingNames pn;
    auto one = [&](const char* k) {
      const auto& x = Reader::field(v, k, p);
      if (!x.is_string()) Reader::schema(p + "." + k, "expected a name");
      return x.get<std::string>();
    };
    auto four = [&](const char* k) {
      const auto& x = Reader::arr(Reader::field(v, k, p), p + "." + k, 4);
      std::array<std::string, 4> out;
      for (std::size_t i = 0; i < 4; ++i) {
        if (!x[i].is_string()) Reader::schema(Reader::at(p + "." + k, i), "expected a name");
        out[i] = x[i].get<std::string>();
      }
      return out;
    };
    pn.U = one("U");
    pn.V = one("V");
    pn.W = one("W");
    pn.F = one("F");
    pn.H = one("H");
    pn.P = one("P");
    pn.G = one("G");
    pn.K = one("K");
    pn.Q = one("Q");
    pn.alpha = four("alpha");
    pn.beta = four("beta");
    pn.gamma = four("gamma");
    pn.mu = four("mu");
    pn.nu = four("nu");
    d.pastings.emplace(n, pn);
    d.pasting(n);  // resolves every name now
  }
  return d;
}

Document loadDocument(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorKind::ParseError, "cannot open " + path.string());
  std::stringstream ss;
  ss << in.rdbuf();
  return parseDocument(ss.str());
}

void saveDocument(const Document& doc, const std::filesystem::path& path) {
  auto text = serialize(doc);
  std::ofstream out(path, std::ios::binary);
  if (!out) fail(ErrorKind::ParseError, "cannot write " + path.string());
  out << text;
}

}  // namespace enriched
