#include <cstdlib>
#include <sstream>

#include "app.hpp"
#include "doctest.h"
#include "fixtures.hpp"

using namespace enriched;
using fixtures::json;

namespace {

const std::filesystem::path golden = GOLDEN_DIR;

struct Ran {
  int code;
  std::string out, err;
};

Ran cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = cliMain(args, out, err);
  return {code, out.str(), err.str()};
}

std::string at(const char* file) { return (golden / file).string(); }

}  // namespace

TEST_CASE("construct product-vcat writes a validated product") {
  auto r = cli({"construct", "product-vcat", "--i", "1", "P", "P", "--in", at("poset.json"), "--name", "PxP"});
  REQUIRE(r.code == 0);
  auto d = parseDocument(r.out);
  REQUIRE(d.vcategories.count("PxP"));
  CHECK(checkVCategory(*d.vcategories.at("PxP")).passed());
  CHECK(d.vcategories.at("PxP")->objects().size() == 4);
}

TEST_CASE("wrong inputs are ConstructionFailed") {
  auto doc = loadDocument(golden / "poset.json");
  ConstructRequest req;
  req.construction = "product-v2cat";
  req.inputs = {"P", "P"};
  try {
    construct(doc, req);
    FAIL("expected ConstructionFailed");
  } catch (const ConstructionError& e) {
    CHECK(e.kind() == ErrorKind::ConstructionFailed);
    CHECK(e.inputError());
    CHECK(exitCodeFor(e) == 2);
  }
  req.construction = "product-vcat";
  req.i = 2;  // boolPoset(2) has no third tensor
  CHECK_THROWS_AS(construct(doc, req), ConstructionError);
}

TEST_CASE("hcomp-mods output agrees with every way of computing it") {
  auto doc = loadDocument(golden / "tower.json");
  ConstructRequest req{"hcomp-mods", {"idmod-arrow", "idmod-arrow"}, {}, {}, {}, "h"};
  auto out = construct(doc, req);
  auto m = out.modifications.at("h");
  auto routes = hcompModsAlongCategoryRoutes(doc.modifications.at("idmod-arrow"), doc.modifications.at("idmod-arrow"));
  for (const auto& w : routes.ways) CHECK_FALSE(modDifference(*m, w));
}

TEST_CASE("from-symmetric rebuilds the base with more tensors") {
  auto r = cli({"construct", "from-symmetric", "--k", "3", "--in", at("poset.json")});
  REQUIRE(r.code == 0);
  auto d = parseDocument(r.out);
  CHECK(d.base->tensorCount() == 3);
  CHECK(*d.base == boolPoset(3));
  CHECK(d.vcategories.empty());
}

TEST_CASE("reports do not depend on the worker count") {
  ::setenv("ENRICHED_WORKERS", "1", 1);
  auto one = cli({"check", at("corpus-bool.json"), "--format", "jsonl"});
  auto bad1 = cli({"check", at("pentagon.json"), "--all-witnesses"});
  ::setenv("ENRICHED_WORKERS", "4", 1);
  auto four = cli({"check", at("corpus-bool.json"), "--format", "jsonl"});
  auto bad4 = cli({"check", at("pentagon.json"), "--all-witnesses"});
  ::unsetenv("ENRICHED_WORKERS");
  CHECK(one.code == 0);
  CHECK(one.out == four.out);
  CHECK(bad1.out == bad4.out);
}

TEST_CASE("jsonl records parse one per line and end with a summary") {
  auto r = cli({"check", at("pentagon.json"), "--format", "jsonl"});
  CHECK(r.code == 1);
  std::istringstream lines(r.out);
  std::string line, last;
  bool pentagon = false;
  while (std::getline(lines, line)) {
    auto j = json::parse(line);
    if (j["record"] == "witness" && j["diagram"] == "pentagon") pentagon = true;
    last = line;
  }
  CHECK(pentagon);
  CHECK(json::parse(last)["record"] == "summary");
  CHECK(json::parse(last)["exit"] == 1);
}

TEST_CASE("--all-witnesses keeps every witness") {
  auto first = cli({"check", at("pentagon.json"), "--format", "jsonl"});
  auto all = cli({"check", at("pentagon.json"), "--format", "jsonl", "--all-witnesses"});
  auto count = [](const std::string& s) {
    std::size_t n = 0;
    for (std::size_t p = 0; (p = s.find("\"record\":\"witness\"", p)) != std::string::npos; ++p) ++n;
    return n;
  };
  CHECK(count(first.out) == 1);
  CHECK(count(all.out) > 1);
}

TEST_CASE("a failing level skips the ones above it") {
  auto doc = loadDocument(golden / "poset.json");
  json j = json::parse(serialize(doc));
  fixtures::setRow(j["vcategories"]["P"]["composition"], {"a", "b", "a"}, "id_bot");
  CheckFlags flags;
  flags.levels = {Level::VCategory, Level::VFunctor};
  // the mutated entry is mistyped, so the document itself still loads
  auto run = checkDocument(parseDocument(j.dump()), flags);
  CHECK(run.exitCode == 1);
  REQUIRE(run.skipped.size() == 1);
  CHECK(run.skipped[0] == Level::VFunctor);
}

TEST_CASE("--seed --fuzz appends generated instances") {
  auto doc = loadDocument(golden / "poset.json");
  CheckFlags plain, fuzz;
  fuzz.seed = 2;
  fuzz.fuzz = 3;
  auto a = checkDocument(doc, plain), b = checkDocument(doc, fuzz);
  CHECK(b.exitCode == 0);
  CHECK(b.entries.size() > a.entries.size());
  auto c = checkDocument(doc, fuzz);
  CHECK(c.entries.size() == b.entries.size());
}

TEST_CASE("input errors exit 2") {
  CHECK(cli({"check", at("missing.json")}).code == 2);
  CHECK(cli({"check", at("empty.json")}).code == 2);
  CHECK(cli({"check", at("dangling.json")}).code == 2);
  CHECK(cli({"check", at("malformed.json")}).code == 2);
  CHECK(cli({"check"}).code == 2);
  CHECK(cli({"corpus", "--base", "nope"}).code == 2);
}

TEST_CASE("mutations fail exactly their checker") {
  for (const auto& m : fixtures::mutations()) {
    auto o = fixtures::runMutation(m);
    CAPTURE(m.id);
    CHECK(o.exitCode == 1);
    CHECK(o.failingCheckers.size() == 1);
    CHECK(o.families.count(m.family));
    CHECK(o.witness);
  }
}
