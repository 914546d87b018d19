#pragma once

#include <functional>

#include "enriched/cli.hpp"
#include "json.hpp"

namespace fixtures {

using json = nlohmann::json;

// base only, no symmetry unless asked
enriched::Document baseDocument(const enriched::SymmetricMonoidal& s, int k, bool withSymmetry = false);
// Z/2-graded objects with automorphisms Z/3, trivial braiding
enriched::SymmetricMonoidal graded23();

// Over B(Z/3), 2-fold: locally chaotic z3 (Z/3), lz (left-zero monoid {e,x,y}) and arrow
// (thin a <= b, gauged by s on hom(a,b)), with identity functors, identity transformations
// and identity modifications named id-<U>, idnat-<U>, idmod-<U>.
enriched::Document tower();

// sets the last entry of the row of table whose leading entries are key
void setRow(json& table, const std::vector<std::string>& key, const std::string& value);

struct Mutation {
  std::string id;
  std::string description;
  enriched::Level level;
  std::string family;  // diagram family expected to fail
  std::function<enriched::Document()> fixture;
  std::function<void(json&)> apply;
};

const std::vector<Mutation>& mutations();

// outcome of checking a mutated document through the CLI runner
struct MutationOutcome {
  int exitCode = 0;
  std::set<std::string> failingCheckers;  // "<level> <entry>"
  std::set<std::string> families;         // failing diagram families at the failing level
  bool witness = false;                   // a witness names the expected family
  std::string detail;
};
MutationOutcome runMutation(const Mutation& m);

}  // namespace fixtures
