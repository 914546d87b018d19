#pragma once

#include <array>
#include <compare>
#include <functional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

namespace enriched {

// Identifiers are strings wrapped per kind so objects and morphisms never mix.
template <class Tag>
class Id {
 public:
  Id() = default;
  explicit Id(std::string v) : value_(std::move(v)) {}
  explicit Id(const char* v) : value_(v) {}

  const std::string& str() const noexcept { return value_; }
  bool empty() const noexcept { return value_.empty(); }

  friend auto operator<=>(const Id&, const Id&) = default;
  friend bool operator==(const Id&, const Id&) = default;
  friend std::ostream& operator<<(std::ostream& os, const Id& id) { return os << id.value_; }

 private:
  std::string value_;
};

struct ObjTag;
struct MorTag;
using ObjId = Id<ObjTag>;
using MorId = Id<MorTag>;

inline namespace literals {
inline ObjId operator""_o(const char* s, std::size_t n) { return ObjId(std::string(s, n)); }
inline MorId operator""_m(const char* s, std::size_t n) { return MorId(std::string(s, n)); }
}  // namespace literals

// "(a,b)". Components must themselves be well formed, which keeps the encoding injective.
std::string pairString(const std::string& a, const std::string& b);
template <class Tag>
Id<Tag> pairId(const Id<Tag>& a, const Id<Tag>& b) {
  return Id<Tag>(pairString(a.str(), b.str()));
}

// Atomic identifiers avoid whitespace and the characters ( , ) ; composite ones are
// nested pairs of well formed identifiers.
bool isWellFormedId(const std::string& s);

// Splits "(a,b)" into its components; false if s is atomic.
bool splitPair(const std::string& s, std::string& a, std::string& b);

template <class Tag, std::size_t N>
std::vector<std::string> strs(const std::array<Id<Tag>, N>& ids) {
  std::vector<std::string> out;
  for (const auto& i : ids) out.push_back(i.str());
  return out;
}

}  // namespace enriched

template <class Tag>
struct std::hash<enriched::Id<Tag>> {
  std::size_t operator()(const enriched::Id<Tag>& id) const noexcept {
    return std::hash<std::string>{}(id.str());
  }
};
