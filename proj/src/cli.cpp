#include "enriched/cli.hpp"

#include <fstream>
#include <functional>
#include <ostream>
#include <variant>

#include "json.hpp"

namespace enriched {

using json = nlohmann::json;

namespace {

constexpr std::array<Level, 9> kLevels{Level::Base,      Level::VCategory, Level::VFunctor,
                                       Level::VNat,      Level::V2Category, Level::V2Functor,
                                       Level::V2Nat,     Level::Modification, Level::Pasting};

// failures the checkers raise instead of reporting; all count as axiom failures
bool checkerRaised(ErrorKind k) {
  return k == ErrorKind::LowerLevelInvalid || k == ErrorKind::BaseInvalid || k == ErrorKind::AgreementFailure ||
         k == ErrorKind::InvalidPasting || k == ErrorKind::NotSymmetric;
}

template <class F>
CheckEntry entry(Level level, const std::string& name, F&& run) {
  CheckEntry e{level, name, CheckReport{}, std::nullopt};
  try {
    e.report = run();
  } catch (const Error& err) {
    if (!checkerRaised(err.kind())) throw;
    e.error = err.what();
  }
  return e;
}

std::string joined(const std::vector<std::string>& xs) {
  std::string out;
  for (std::size_t k = 0; k < xs.size(); ++k) out += (k ? ", " : "") + xs[k];
  return out;
}

void textReport(const CheckRun& run, std::ostream& out) {
  std::size_t passed = 0, failed = 0;
  for (const auto& e : run.entries) {
    (e.passed() ? passed : failed)++;
    out << "check " << levelName(e.level) << " " << e.name << ": " << (e.passed() ? "pass" : "FAIL");
    if (!e.report.checker().empty()) out << " (" << e.report.checker() << ")";
    out << "\n";
    for (const auto& d : e.report.diagrams()) {
      out << "  " << d.name << ": " << d.instances << " instances";
      if (d.failures) out << ", " << d.failures << " failing";
      if (d.vacuous()) out << ", vacuous";
      out << "\n";
    }
    for (const auto& w : e.report.witnesses())
      out << "  witness " << w.diagram << " (" << joined(w.instance) << "): " << w.lhs << " != " << w.rhs << "\n";
    for (const auto& w : e.report.warnings())
      out << "  warning " << w.diagram << " (" << joined(w.instance) << "): " << w.lhs << " vs " << w.rhs << "\n";
    if (e.error) out << "  error: " << *e.error << "\n";
  }
  for (auto l : run.skipped) out << "skipped " << levelName(l) << ": a lower level failed\n";
  out << "summary: " << passed << " passed, " << failed << " failed, " << run.skipped.size()
      << " levels skipped, exit " << run.exitCode << "\n";
}

void jsonlReport(const CheckRun& run, std::ostream& out) {
  std::size_t passed = 0, failed = 0;
  for (const auto& e : run.entries) {
    (e.passed() ? passed : failed)++;
    const std::string level(levelName(e.level));
    out << json{{"record", "check"},
                {"level", level},
                {"name", e.name},
                {"checker", e.report.checker()},
                {"status", e.passed() ? "pass" : "fail"}}
               .dump()
        << "\n";
    for (const auto& d : e.report.diagrams())
      out << json{{"record", "diagram"}, {"level", level},        {"name", e.name},         {"diagram", d.name},
                  {"instances", d.instances}, {"failures", d.failures}, {"vacuous", d.vacuous()}}
                 .dump()
          << "\n";
    auto cell = [&](const char* kind, const Witness& w) {
      out << json{{"record", kind},        {"level", level}, {"name", e.name}, {"diagram", w.diagram},
                  {"instance", w.instance}, {"lhs", w.lhs},   {"rhs", w.rhs}}
                 .dump()
          << "\n";
    };
    for (const auto& w : e.report.witnesses()) cell("witness", w);
    for (const auto& w : e.report.warnings()) cell("warning", w);
    if (e.error) out << json{{"record", "error"}, {"level", level}, {"name", e.name}, {"message", *e.error}}.dump() << "\n";
  }
  for (auto l : run.skipped) out << json{{"record", "skipped"}, {"level", std::string(levelName(l))}}.dump() << "\n";
  out << json{{"record", "summary"},
              {"passed", passed},
              {"failed", failed},
              {"skipped", run.skipped.size()},
              {"exit", run.exitCode}}
             .dump()
      << "\n";
}

void inputError(const Error& e, Format format, std::ostream& out, std::ostream& err) {
  if (format == Format::Jsonl) {
    json j{{"record", "input-error"}, {"kind", std::string(kindName(e.kind()))}, {"message", e.what()}, {"exit", 2}};
    if (auto* p = dynamic_cast<const ParseError*>(&e); p && p->line()) {
      j["line"] = p->line();
      j["column"] = p->column();
    }
    out << j.dump() << "\n";
  }
  err << "error: " << e.what() << "\n";
}

// ---- constructions

using Result = std::variant<KFoldMonoidal, VCategoryRef, VFunctorRef, VNatRef, V2CategoryRef, V2FunctorRef, V2NatRef,
                            ModificationRef>;

auto& sectionOf(Document& d, const VCategoryRef&) { return d.vcategories; }
auto& sectionOf(Document& d, const VFunctorRef&) { return d.vfunctors; }
auto& sectionOf(Document& d, const VNatRef&) { return d.vnats; }
auto& sectionOf(Document& d, const V2CategoryRef&) { return d.v2categories; }
auto& sectionOf(Document& d, const V2FunctorRef&) { return d.v2functors; }
auto& sectionOf(Document& d, const V2NatRef&) { return d.v2nats; }
auto& sectionOf(Document& d, const ModificationRef&) { return d.modifications; }

struct Inputs {
  const Document& doc;
  const ConstructRequest& req;

  template <class Map>
  typename Map::mapped_type get(const Map& m, std::size_t k, const char* level) const {
    const auto& name = req.inputs.at(k);
    auto it = m.find(name);
    if (it == m.end())
      throw ConstructionError("input " + std::to_string(k + 1) + " of " + req.construction + " must name a " + level +
                                  "; \"" + name + "\" is not one",
                              true);
    return it->second;
  }
  VCategoryRef vcat(std::size_t k) const { return get(doc.vcategories, k, "V-category"); }
  VFunctorRef vfun(std::size_t k) const { return get(doc.vfunctors, k, "V-functor"); }
  VNatRef vnat(std::size_t k) const { return get(doc.vnats, k, "V-natural transformation"); }
  V2CategoryRef v2(std::size_t k) const { return get(doc.v2categories, k, "V-2-category"); }
  V2FunctorRef fun(std::size_t k) const { return get(doc.v2functors, k, "V-2-functor"); }
  V2NatRef nat(std::size_t k) const { return get(doc.v2nats, k, "V-2-natural transformation"); }
  ModificationRef mod(std::size_t k) const { return get(doc.modifications, k, "V-modification"); }
  int i() const { return req.i.value_or(1); }
  int j() const { return req.j.value_or(2); }
};

template <class R>
R agreed(const std::vector<R>& ways, const std::string& what) {
  for (std::size_t k = 1; k < ways.size(); ++k) {
    std::optional<Witness> d;
    if constexpr (std::is_same_v<R, V2NatTransform>)
      d = natDifference(ways[0], ways[k]);
    else
      d = modDifference(ways[0], ways[k]);
    if (d)
      fail(ErrorKind::AgreementFailure,
           what + ": way 1 and way " + std::to_string(k + 1) + " differ at " + joined(d->instance) + ": " + d->lhs +
               " vs " + d->rhs);
  }
  return ways.at(0);
}

struct Construction {
  std::size_t arity;
  std::function<Result(const Inputs&)> build;
};

const std::map<std::string, Construction>& table() {
  using I = const Inputs&;
  static const std::map<std::string, Construction> t{
      {"product-vcat", {2, [](I in) -> Result { return productVCatRef(in.i(), in.vcat(0), in.vcat(1)); }}},
      {"unit-vcat", {0, [](I in) -> Result { return unitVCategoryRef(in.doc.base); }}},
      {"assoc-vcat", {3, [](I in) -> Result { return ref(assocVCat(in.i(), in.vcat(0), in.vcat(1), in.vcat(2))); }}},
      {"interchange-vcat",
       {4, [](I in) -> Result {
          return ref(interchangeVCat(in.i(), in.j(), in.vcat(0), in.vcat(1), in.vcat(2), in.vcat(3)));
        }}},
      {"left-unitor", {1, [](I in) -> Result { return ref(leftUnitor(in.i(), in.vcat(0))); }}},
      {"right-unitor", {1, [](I in) -> Result { return ref(rightUnitor(in.i(), in.vcat(0))); }}},
      {"left-unitor-inv", {1, [](I in) -> Result { return ref(leftUnitorInv(in.i(), in.vcat(0))); }}},
      {"right-unitor-inv", {1, [](I in) -> Result { return ref(rightUnitorInv(in.i(), in.vcat(0))); }}},
      {"identity-vfunctor", {1, [](I in) -> Result { return ref(identityVFunctor(in.vcat(0))); }}},
      {"compose-vfunctors", {2, [](I in) -> Result { return ref(composeVFunctor(*in.vfun(0), *in.vfun(1))); }}},
      {"product-vfunctor",
       {2, [](I in) -> Result { return ref(productVFunctor(in.i(), *in.vfun(0), *in.vfun(1))); }}},
      {"identity-vnat", {1, [](I in) -> Result { return ref(identityVNat(*in.vfun(0))); }}},
      {"compose-vnats", {2, [](I in) -> Result { return ref(composeVNatVert(*in.vnat(0), *in.vnat(1))); }}},
      {"product-vnat", {2, [](I in) -> Result { return ref(productVNat(in.i(), *in.vnat(0), *in.vnat(1))); }}},
      {"product-v2cat", {2, [](I in) -> Result { return ref(productV2Cat(in.i(), in.v2(0), in.v2(1))); }}},
      {"unit-v2cat", {0, [](I in) -> Result { return ref(unitV2Category(in.doc.base)); }}},
      {"from-symmetric",
       {0, [](I in) -> Result {
          auto s = in.doc.symmetric();
          if (!s) throw ConstructionError("from-symmetric needs a base with a symmetry table", true);
          return fromSymmetric(*s, in.req.k.value_or(in.doc.base->tensorCount()));
        }}},
      {"identity-v2functor", {1, [](I in) -> Result { return ref(identityV2Functor(in.v2(0))); }}},
      {"compose-v2functors", {2, [](I in) -> Result { return ref(composeV2Functors(in.fun(0), in.fun(1))); }}},
      {"id-nat", {1, [](I in) -> Result { return ref(idNat(in.fun(0))); }}},
      {"compose-nats", {2, [](I in) -> Result { return ref(composeNatAlongFunctor(in.nat(0), in.nat(1))); }}},
      {"whisker-functor-nat", {2, [](I in) -> Result { return ref(whiskerFunctorNat(in.fun(0), in.nat(1))); }}},
      {"whisker-nat-functor", {2, [](I in) -> Result { return ref(whiskerNatFunctor(in.nat(0), in.fun(1))); }}},
      {"hcomp-nats",
       {2, [](I in) -> Result {
          auto r = hcompNatsAlongCategoryRoutes(in.nat(0), in.nat(1));
          return ref(agreed<V2NatTransform>({r.viaSource, r.viaTarget}, "hcomp-nats"));
        }}},
      {"id-mod", {1, [](I in) -> Result { return ref(idModification(in.nat(0))); }}},
      {"vcomp-mods", {2, [](I in) -> Result { return ref(vcompModifications(in.mod(0), in.mod(1))); }}},
      {"whisker-nat-mod-left", {2, [](I in) -> Result { return ref(whiskerNatModLeft(in.nat(0), in.mod(1))); }}},
      {"whisker-nat-mod-right", {2, [](I in) -> Result { return ref(whiskerNatModRight(in.mod(0), in.nat(1))); }}},
      {"hcomp-mods-along-nat",
       {2, [](I in) -> Result {
          return ref(agreed(hcompModificationsAlongNatRoutes(in.mod(0), in.mod(1)).ways, "hcomp-mods-along-nat"));
        }}},
      {"whisker-functor-mod", {2, [](I in) -> Result { return ref(whiskerFunctorMod(in.fun(0), in.mod(1))); }}},
      {"whisker-mod-functor", {2, [](I in) -> Result { return ref(whiskerModFunctor(in.mod(0), in.fun(1))); }}},
      {"whisker-nat-mod",
       {2, [](I in) -> Result {
          return ref(agreed(whiskerNatModAlongCategoryRoutes(in.nat(0), in.mod(1)).ways, "whisker-nat-mod"));
        }}},
      {"whisker-mod-nat",
       {2, [](I in) -> Result {
          return ref(agreed(whiskerModNatAlongCategoryRoutes(in.mod(0), in.nat(1)).ways, "whisker-mod-nat"));
        }}},
      {"hcomp-mods",
       {2, [](I in) -> Result { return ref(agreed(hcompModsAlongCategoryRoutes(in.mod(0), in.mod(1)).ways, "hcomp-mods")); }}},
  };
  return t;
}

CheckReport revalidate(const Result& r) {
  return std::visit(
      [](const auto& x) -> CheckReport {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, KFoldMonoidal>)
          return checkKFold(x);
        else if constexpr (std::is_same_v<T, VCategoryRef>)
          return checkVCategory(*x);
        else if constexpr (std::is_same_v<T, VFunctorRef>)
          return checkVFunctor(*x);
        else if constexpr (std::is_same_v<T, VNatRef>)
          return checkVNat(*x);
        else if constexpr (std::is_same_v<T, V2CategoryRef>)
          return checkV2Category(*x);
        else if constexpr (std::is_same_v<T, V2FunctorRef>)
          return checkV2Functor(*x);
        else if constexpr (std::is_same_v<T, V2NatRef>)
          return checkV2Nat(*x);
        else
          return checkModification(*x);
      },
      r);
}

int writeDocument(const Document& d, const std::filesystem::path& outPath, std::ostream& out) {
  if (outPath.empty())
    out << serialize(d);
  else
    saveDocument(d, outPath);
  return 0;
}

}  // namespace

std::string_view levelName(Level l) noexcept {
  switch (l) {
    case Level::Base: return "base";
    case Level::VCategory: return "vcategory";
    case Level::VFunctor: return "vfunctor";
    case Level::VNat: return "vnat";
    case Level::V2Category: return "v2category";
    case Level::V2Functor: return "v2functor";
    case Level::V2Nat: return "v2nat";
    case Level::Modification: return "modification";
    case Level::Pasting: return "pasting";
  }
  return "?";
}

Level parseLevel(const std::string& s) {
  for (auto l : kLevels)
    if (levelName(l) == s) return l;
  throw ParseError("unknown level \"" + s + "\"", 0, 0);
}

CheckRun checkDocument(const Document& input, const CheckFlags& flags) {
  Document doc = input;
  if (flags.fuzz) appendFuzz(doc, flags.seed.value_or(0), flags.fuzz);
  CheckOptions opts{flags.allWitnesses, flags.workers};
  CheckRun run;
  bool broken = false;
  for (auto level : kLevels) {
    if (!flags.levels.empty() && !flags.levels.count(level)) continue;
    if (broken && !flags.allWitnesses) {
      run.skipped.push_back(level);
      continue;
    }
    auto before = run.entries.size();
    auto each = [&](const auto& m, auto check) {
      for (const auto& [n, x] : m) run.entries.push_back(entry(level, n, [&] { return check(x); }));
    };
    switch (level) {
      case Level::Base:
        run.entries.push_back(entry(level, doc.baseName, [&] { return checkKFold(*doc.base, opts); }));
        if (auto s = doc.symmetric())
          run.entries.push_back(entry(level, doc.baseName + ".symmetry", [&] { return checkSymmetric(*s, opts); }));
        break;
      case Level::VCategory: each(doc.vcategories, [&](const auto& x) { return checkVCategory(*x, opts); }); break;
      case Level::VFunctor: each(doc.vfunctors, [&](const auto& x) { return checkVFunctor(*x, opts); }); break;
      case Level::VNat: each(doc.vnats, [&](const auto& x) { return checkVNat(*x, opts); }); break;
      case Level::V2Category: each(doc.v2categories, [&](const auto& x) { return checkV2Category(*x, opts); }); break;
      case Level::V2Functor: each(doc.v2functors, [&](const auto& x) { return checkV2Functor(*x, opts); }); break;
      case Level::V2Nat: each(doc.v2nats, [&](const auto& x) { return checkV2Nat(*x, opts); }); break;
      case Level::Modification:
        each(doc.modifications, [&](const auto& x) { return checkModification(*x, opts); });
        break;
      case Level::Pasting:
        for (const auto& [n, p] : doc.pastings)
          run.entries.push_back(entry(level, n, [&] { return exchangeSuite(doc.pasting(n), opts); }));
        break;
    }
    for (auto k = before; k < run.entries.size(); ++k) broken = broken || !run.entries[k].passed();
  }
  for (const auto& e : run.entries)
    if (!e.passed()) run.exitCode = 1;
  return run;
}

void writeReport(const CheckRun& run, Format format, std::ostream& out) {
  if (format == Format::Jsonl)
    jsonlReport(run, out);
  else
    textReport(run, out);
}

const std::vector<std::string>& constructionNames() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [n, c] : table()) out.push_back(n);
    return out;
  }();
  return names;
}

Document construct(const Document& doc, const ConstructRequest& req) {
  auto it = table().find(req.construction);
  if (it == table().end()) throw ConstructionError("unknown construction \"" + req.construction + "\"", true);
  if (req.inputs.size() != it->second.arity)
    throw ConstructionError(req.construction + " takes " + std::to_string(it->second.arity) + " inputs, got " +
                                std::to_string(req.inputs.size()),
                            true);
  std::optional<Result> result;
  try {
    result = it->second.build(Inputs{doc, req});
  } catch (const ConstructionError&) {
    throw;
  } catch (const Error& e) {
    if (checkerRaised(e.kind())) throw ConstructionError(e.what(), false);
    throw ConstructionError(e.what(), true);
  }
  CheckReport report;
  try {
    report = revalidate(*result);
  } catch (const Error& e) {
    throw ConstructionError(std::string("re-validation: ") + e.what(), false);
  }
  if (!report.passed()) throw ConstructionError(req.construction + " output fails " + report.checker(), false, report);

  if (auto* base = std::get_if<KFoldMonoidal>(&*result)) {
    Document out(share(*base), doc.baseName);
    out.symmetry = doc.symmetry;
    return out;
  }
  Document out = doc;
  std::visit(
      [&](const auto& x) {
        if constexpr (!std::is_same_v<std::decay_t<decltype(x)>, KFoldMonoidal>) {
          // an equal entry already exists: still make the result reachable under the asked name
          if (out.add(req.name, x) != req.name) sectionOf(out, x).emplace(req.name, x);
        }
      },
      *result);
  return out;
}

int exitCodeFor(const Error& e) {
  if (auto* c = dynamic_cast<const ConstructionError*>(&e)) return c->inputError() ? 2 : 1;
  return checkerRaised(e.kind()) ? 1 : 2;
}

int runCheck(const std::filesystem::path& path, const CheckFlags& flags, std::ostream& out, std::ostream& err) {
  try {
    if (!std::filesystem::exists(path)) throw ParseError("no such file: " + path.string(), 0, 0);
    auto run = checkDocument(loadDocument(path), flags);
    writeReport(run, flags.format, out);
    return run.exitCode;
  } catch (const Error& e) {
    inputError(e, flags.format, out, err);
    return exitCodeFor(e);
  }
}

int runConstruct(const std::filesystem::path& path, const ConstructRequest& request, const std::filesystem::path& outPath,
                 std::ostream& out, std::ostream& err) {
  try {
    if (!std::filesystem::exists(path)) throw ParseError("no such file: " + path.string(), 0, 0);
    auto result = construct(loadDocument(path), request);
    return writeDocument(result, outPath, out);
  } catch (const ConstructionError& e) {
    err << "error: " << e.what() << "\n";
    for (const auto& w : e.report().witnesses())
      err << "  witness " << w.diagram << " (" << joined(w.instance) << "): " << w.lhs << " != " << w.rhs << "\n";
    return exitCodeFor(e);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return exitCodeFor(e);
  }
}

int runCorpus(const std::string& base, std::uint64_t seed, const std::filesystem::path& outPath, std::ostream& out,
              std::ostream& err) {
  try {
    return writeDocument(corpus(base, seed), outPath, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

int runFuzz(const std::string& base, std::uint64_t seed, std::size_t count, const CheckFlags& flags,
            const std::filesystem::path& outPath, std::ostream& out, std::ostream& err) {
  try {
    auto doc = corpusBase(base);
    appendFuzz(doc, seed, count);
    if (!outPath.empty()) saveDocument(doc, outPath);
    CheckFlags f = flags;
    f.fuzz = 0;
    auto run = checkDocument(doc, f);
    writeReport(run, flags.format, out);
    return run.exitCode;
  } catch (const Error& e) {
    inputError(e, flags.format, out, err);
    return e.kind() == ErrorKind::BudgetExhausted ? 1 : exitCodeFor(e);
  }
}

}  // namespace enriched
