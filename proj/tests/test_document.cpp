#include "doctest.h"

#include "enriched/corpus.hpp"

using namespace enriched;

namespace {

ErrorKind kindOf(const std::string& text) {
  try {
    parseDocument(text);
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected an error");
  return ErrorKind::ParseError;
}

}  // namespace

TEST_CASE("corpus documents round-trip byte for byte") {
  for (const auto& name : corpusBaseNames()) {
    auto d = corpus(name, 1);
    auto text = serialize(d);
    auto again = serialize(parseDocument(text));
    CHECK_MESSAGE(text == again, name);
    auto back = parseDocument(text);
    CHECK(*back.base == *d.base);
    CHECK(back.vcategories.size() == d.vcategories.size());
    CHECK(back.pastings.size() == d.pastings.size());
    for (const auto& [n, u] : d.v2categories) CHECK(*back.v2categories.at(n) == *u);
  }
}

TEST_CASE("syntax errors carry a position") {
  CHECK(kindOf("") == ErrorKind::ParseError);
  try {
    parseDocument("{\n  \"base\": [1,\n}");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 3);
    CHECK(e.column() >= 1);
  }
  CHECK(kindOf("[]") == ErrorKind::ParseError);
  CHECK(kindOf("{\"bogus\": 1}") == ErrorKind::ParseError);
}

TEST_CASE("unknown ids are dangling references") {
  auto text = serialize(corpusBase("bool"));
  auto at = text.find("\"unit\": \"top\"");
  REQUIRE(at != std::string::npos);
  auto broken = text;
  broken.replace(at, 13, "\"unit\": \"mid\"");
  try {
    parseDocument(broken);
    FAIL("expected DanglingReference");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::DanglingReference);
    CHECK(std::string(e.what()).find("mid") != std::string::npos);
  }
}

TEST_CASE("schema errors name a path") {
  auto text = serialize(corpusBase("bool"));
  auto at = text.find("\"unit\": \"top\"");
  auto broken = text;
  broken.replace(at, 13, "\"unit\": 7    ");
  try {
    parseDocument(broken);
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("base.unit") != std::string::npos);
  }
}
