#pragma once

#include <map>
#include <memory>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "enriched/error.hpp"
#include "enriched/ids.hpp"
#include "enriched/report.hpp"

namespace enriched {

struct Arrow {
  ObjId dom;
  ObjId cod;
  friend bool operator==(const Arrow&, const Arrow&) = default;
};

using CompositionTable = std::map<std::pair<MorId, MorId>, MorId>;  // (g, f) -> g∘f

class FinCategory {
 public:
  FinCategory(std::vector<ObjId> objects, std::map<MorId, Arrow> morphisms,
              std::map<ObjId, MorId> identities, CompositionTable composition);

  const std::vector<ObjId>& objects() const noexcept { return objects_; }
  const std::vector<MorId>& morphisms() const noexcept { return morphismList_; }
  const std::map<MorId, Arrow>& arrows() const noexcept { return arrows_; }
  const std::map<ObjId, MorId>& identities() const noexcept { return identities_; }
  const CompositionTable& composition() const noexcept { return composition_; }

  bool hasObject(const ObjId& a) const;
  bool hasMorphism(const MorId& f) const;
  const ObjId& dom(const MorId& f) const;
  const ObjId& cod(const MorId& f) const;
  const MorId& id(const ObjId& a) const;
  const std::vector<MorId>& hom(const ObjId& a, const ObjId& b) const;

  std::optional<MorId> tryCompose(const MorId& g, const MorId& f) const;
  // right to left, as written: [h, g, f] is h∘g∘f
  std::optional<MorId> tryChain(std::span<const MorId> fs) const;
  std::optional<MorId> tryChain(std::initializer_list<std::optional<MorId>> fs) const;

  // two-sided inverse, searched in the table
  std::optional<MorId> inverse(const MorId& f) const;
  bool isIdentity(const MorId& f) const;

  friend bool operator==(const FinCategory& a, const FinCategory& b);

 private:
  std::vector<ObjId> objects_;
  std::vector<MorId> morphismList_;
  std::map<MorId, Arrow> arrows_;
  std::map<ObjId, MorId> identities_;
  CompositionTable composition_;
  std::map<std::pair<ObjId, ObjId>, std::vector<MorId>> homs_;
};

using FinCategoryRef = std::shared_ptr<const FinCategory>;

MorId compose(const FinCategory& c, const MorId& g, const MorId& f);
MorId composeChain(const FinCategory& c, std::span<const MorId> fs);

class FinFunctor {
 public:
  FinFunctor(FinCategoryRef source, FinCategoryRef target, std::map<ObjId, ObjId> objMap,
             std::map<MorId, MorId> morMap);

  const FinCategory& source() const noexcept { return *source_; }
  const FinCategory& target() const noexcept { return *target_; }
  const FinCategoryRef& sourceRef() const noexcept { return source_; }
  const FinCategoryRef& targetRef() const noexcept { return target_; }
  const ObjId& object(const ObjId& a) const;
  const MorId& morphism(const MorId& f) const;
  const std::map<ObjId, ObjId>& objectMap() const noexcept { return objMap_; }
  const std::map<MorId, MorId>& morphismMap() const noexcept { return morMap_; }

 private:
  FinCategoryRef source_;
  FinCategoryRef target_;
  std::map<ObjId, ObjId> objMap_;
  std::map<MorId, MorId> morMap_;
};

class FinNatTransform {
 public:
  FinNatTransform(std::shared_ptr<const FinFunctor> source, std::shared_ptr<const FinFunctor> target,
                  std::map<ObjId, MorId> components);

  const FinFunctor& source() const noexcept { return *source_; }
  const FinFunctor& target() const noexcept { return *target_; }
  const MorId& component(const ObjId& a) const;
  const std::map<ObjId, MorId>& components() const noexcept { return components_; }

 private:
  std::shared_ptr<const FinFunctor> source_;
  std::shared_ptr<const FinFunctor> target_;
  std::map<ObjId, MorId> components_;
};

CheckReport checkCategory(const FinCategory& c, const CheckOptions& opts = {});
CheckReport checkFunctor(const FinFunctor& f, const CheckOptions& opts = {});
CheckReport checkNatural(const FinNatTransform& t, const CheckOptions& opts = {});

// objects and morphisms are pairs "(x,y)"
FinCategory productCategory(const FinCategory& c, const FinCategory& d);

}  // namespace enriched
