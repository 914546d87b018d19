#pragma once

#include "enriched/document.hpp"
#include "enriched/random.hpp"

namespace enriched {

// bool, bool3, zmod2, superz2, bz3
const std::vector<std::string>& corpusBaseNames();
// just the base and its symmetry; ConstructionFailed on an unknown name
Document corpusBase(const std::string& name);
// a whole validated tower over the named base, deterministic in seed
Document corpus(const std::string& name, std::uint64_t seed);
// appends count generated instances named fuzz<k>: V-categories, and pastings when n >= 2
void appendFuzz(Document& doc, std::uint64_t seed, std::size_t count, const Bounds& bounds = {});

}  // namespace enriched
