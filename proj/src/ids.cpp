#include "enriched/error.hpp"
#include "enriched/ids.hpp"

namespace enriched {

std::string pairString(const std::string& a, const std::string& b) {
  std::string out;
  out.reserve(a.size() + b.size() + 3);
  out += '(';
  out += a;
  out += ',';
  out += b;
  out += ')';
  return out;
}

namespace {

bool atomicChar(char c) {
  return c != '(' && c != ')' && c != ',' && c != ' ' && c != '\t' && c != '\n' && c != '\r';
}

// parses one identifier starting at pos; advances pos
bool parseId(const std::string& s, std::size_t& pos) {
  if (pos >= s.size()) return false;
  if (s[pos] == '(') {
    ++pos;
    if (!parseId(s, pos)) return false;
    if (pos >= s.size() || s[pos] != ',') return false;
    ++pos;
    if (!parseId(s, pos)) return false;
    if (pos >= s.size() || s[pos] != ')') return false;
    ++pos;
    return true;
  }
  std::size_t start = pos;
  while (pos < s.size() && atomicChar(s[pos])) ++pos;
  return pos > start;
}

}  // namespace

bool isWellFormedId(const std::string& s) {
  std::size_t pos = 0;
  return parseId(s, pos) && pos == s.size();
}

bool splitPair(const std::string& s, std::string& a, std::string& b) {
  if (s.size() < 5 || s.front() != '(') return false;
  std::size_t pos = 1;
  if (!parseId(s, pos)) return false;
  a = s.substr(1, pos - 1);
  if (pos >= s.size() || s[pos] != ',') return false;
  std::size_t start = ++pos;
  if (!parseId(s, pos)) return false;
  b = s.substr(start, pos - start);
  return pos + 1 == s.size() && s[pos] == ')';
}

std::string_view kindName(ErrorKind k) noexcept {
  switch (k) {
    case ErrorKind::CompositionUndefined: return "CompositionUndefined";
    case ErrorKind::EmptyChain: return "EmptyChain";
    case ErrorKind::MalformedTable: return "MalformedTable";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::UnknownObject: return "UnknownObject";
    case ErrorKind::UnknownMorphism: return "UnknownMorphism";
    case ErrorKind::NotSymmetric: return "NotSymmetric";
    case ErrorKind::NotParallel: return "NotParallel";
    case ErrorKind::NotComposable: return "NotComposable";
    case ErrorKind::AgreementFailure: return "AgreementFailure";
    case ErrorKind::InvalidPasting: return "InvalidPasting";
    case ErrorKind::BaseInvalid: return "BaseInvalid";
    case ErrorKind::LowerLevelInvalid: return "LowerLevelInvalid";
    case ErrorKind::NotPreorder: return "NotPreorder";
    case ErrorKind::BudgetExhausted: return "BudgetExhausted";
    case ErrorKind::ConstructionFailed: return "ConstructionFailed";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::DanglingReference: return "DanglingReference";
  }
  return "Error";
}

}  // namespace enriched
