#pragma once

#include <array>
#include <map>
#include <memory>
#include <vector>

#include "enriched/fincat.hpp"

namespace enriched {

struct TensorTable {
  std::map<std::pair<ObjId, ObjId>, ObjId> objects;
  std::map<std::pair<MorId, MorId>, MorId> morphisms;
  friend bool operator==(const TensorTable&, const TensorTable&) = default;
};

using AssociatorTable = std::map<std::array<ObjId, 3>, MorId>;
using InterchangeTable = std::map<std::array<ObjId, 4>, MorId>;
using InterchangeKey = std::pair<int, int>;  // (i, j) with i < j, 1-based

// An n-fold monoidal category with strict unit. Tensor indices are 1-based.
// eta^{ij}_{ABCD} : (A (x)j B) (x)i (C (x)j D) -> (A (x)i C) (x)j (B (x)i D)
class KFoldMonoidal {
 public:
  KFoldMonoidal(FinCategory category, ObjId unit, std::vector<TensorTable> tensors,
                std::vector<AssociatorTable> associators,
                std::map<InterchangeKey, InterchangeTable> interchanges);

  const FinCategory& category() const noexcept { return *category_; }
  const FinCategoryRef& categoryRef() const noexcept { return category_; }
  int tensorCount() const noexcept { return static_cast<int>(tensors_.size()); }
  const ObjId& unit() const noexcept { return unit_; }

  const ObjId& tensorObj(int i, const ObjId& a, const ObjId& b) const;
  const MorId& tensorMor(int i, const MorId& f, const MorId& g) const;
  const MorId& associator(int i, const ObjId& u, const ObjId& v, const ObjId& w) const;
  const MorId& interchange(int i, int j, const ObjId& a, const ObjId& b, const ObjId& c,
                           const ObjId& d) const;

  const std::vector<TensorTable>& tensors() const noexcept { return tensors_; }
  const std::vector<AssociatorTable>& associators() const noexcept { return associators_; }
  const std::map<InterchangeKey, InterchangeTable>& interchanges() const noexcept {
    return interchanges_;
  }

  // checkKFold on this structure, computed once and shared by copies
  const CheckReport& validation() const;
  bool valid() const { return validation().passed(); }

  friend bool operator==(const KFoldMonoidal& a, const KFoldMonoidal& b);

 private:
  void requireIndex(int i) const;

  FinCategoryRef category_;
  ObjId unit_;
  std::vector<TensorTable> tensors_;
  std::vector<AssociatorTable> associators_;
  std::map<InterchangeKey, InterchangeTable> interchanges_;
  struct Cache;
  std::shared_ptr<Cache> cache_;
};

using BaseRef = std::shared_ptr<const KFoldMonoidal>;

struct SymmetricMonoidal {
  KFoldMonoidal monoidal;  // exactly one tensor
  std::map<std::pair<ObjId, ObjId>, MorId> symmetry;  // c_{A,B} : A (x) B -> B (x) A
};

CheckReport checkKFold(const KFoldMonoidal& v, const CheckOptions& opts = {});
CheckReport checkSymmetric(const SymmetricMonoidal& s, const CheckOptions& opts = {});

// Replicates the tensor k times; interchanges are
// a^-1_{A,C,B(x)D} . (1_A (x) a_{C,B,D}) . (1_A (x) (c_{B,C} (x) 1_D)) . (1_A (x) a^-1_{B,C,D}) . a_{A,B,C(x)D}
KFoldMonoidal fromSymmetric(const SymmetricMonoidal& s, int k);

// Same structure with only the first k tensors kept.
KFoldMonoidal truncate(const KFoldMonoidal& v, int k);

}  // namespace enriched
