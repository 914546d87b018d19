#pragma once

#include <filesystem>
#include <string>

#include "enriched/exchange.hpp"

namespace enriched {

using VFunctorRef = std::shared_ptr<const VFunctor>;
using VNatRef = std::shared_ptr<const VNatTransform>;
using SymmetryTable = std::map<std::pair<ObjId, ObjId>, MorId>;

struct PastingNames {
  std::string U, V, W, F, H, P, G, K, Q;
  std::array<std::string, 4> alpha, beta, gamma, mu, nu;
};

// A whole tower over one base. Cells refer to their endpoints by name.
class Document {
 public:
  Document() = default;
  explicit Document(BaseRef base, std::string name = "base");

  BaseRef base;
  std::string baseName = "base";
  // set when the base came from a symmetric monoidal input
  std::optional<SymmetryTable> symmetry;

  std::map<std::string, VCategoryRef> vcategories;
  std::map<std::string, VFunctorRef> vfunctors;
  std::map<std::string, VNatRef> vnats;
  std::map<std::string, V2CategoryRef> v2categories;
  std::map<std::string, V2FunctorRef> v2functors;
  std::map<std::string, V2NatRef> v2nats;
  std::map<std::string, ModificationRef> modifications;
  std::map<std::string, PastingNames> pastings;

  // Adders register missing endpoints under derived names ("<name>.source", ...) and
  // return the name actually used for the value (an existing equal entry wins).
  std::string add(const std::string& name, const VCategoryRef& a);
  std::string add(const std::string& name, const VFunctorRef& t);
  std::string add(const std::string& name, const VNatRef& a);
  std::string add(const std::string& name, const V2CategoryRef& u);
  std::string add(const std::string& name, const V2FunctorRef& t);
  std::string add(const std::string& name, const V2NatRef& a);
  std::string add(const std::string& name, const ModificationRef& m);
  std::string add(const std::string& name, const Pasting& p);

  Pasting pasting(const std::string& name) const;
  std::optional<SymmetricMonoidal> symmetric() const;
};

// ParseError (with line and column for syntax errors, a JSON path for schema errors) or
// DanglingReference naming the id.
Document parseDocument(const std::string& text);
Document loadDocument(const std::filesystem::path& path);
// canonical: sorted keys, sorted tables, two-space indent, trailing newline
std::string serialize(const Document& doc);
void saveDocument(const Document& doc, const std::filesystem::path& path);

}  // namespace enriched
