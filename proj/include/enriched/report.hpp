#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "enriched/ids.hpp"

namespace enriched {

struct Witness {
  std::string diagram;
  std::vector<std::string> instance;
  std::string lhs;
  std::string rhs;
};

struct DiagramTally {
  std::string name;
  std::size_t instances = 0;
  std::size_t failures = 0;
  bool vacuous() const noexcept { return instances == 0; }
};

struct CheckOptions {
  bool allWitnesses = false;
  // 0 reads ENRICHED_WORKERS, falling back to 1
  unsigned workers = 0;
};

unsigned resolveWorkers(const CheckOptions& opts);

class CheckReport {
 public:
  explicit CheckReport(std::string checker = {}) : checker_(std::move(checker)) {}

  const std::string& checker() const noexcept { return checker_; }
  bool passed() const noexcept { return witnesses_.empty() && !anyFailure(); }

  const std::vector<Witness>& witnesses() const noexcept { return witnesses_; }
  const std::vector<Witness>& warnings() const noexcept { return warnings_; }
  const std::vector<DiagramTally>& diagrams() const noexcept { return diagrams_; }

  const DiagramTally* tally(std::string_view diagram) const;
  bool failed(std::string_view diagram) const;
  bool vacuous(std::string_view diagram) const;
  std::set<std::string> failingDiagrams() const;

  // registers a family even if it turns out empty, so vacuity is visible
  DiagramTally& family(std::string_view diagram);
  void count(std::string_view diagram, std::size_t instances = 1);
  void fail(const CheckOptions& opts, Witness w);
  void warn(Witness w);

  // lhs/rhs: nullopt prints as "undefined"
  bool expectEqual(const CheckOptions& opts, std::string_view diagram,
                   std::vector<std::string> instance, const std::optional<std::string>& lhs,
                   const std::optional<std::string>& rhs);
  bool expect(const CheckOptions& opts, std::string_view diagram, std::vector<std::string> instance,
              bool ok, std::string lhs, std::string rhs);

  // folds a sub-checker's report in, prefixing its diagram names
  void absorb(const CheckReport& sub, std::string_view prefix,
              const std::vector<std::string>& instancePrefix = {});

 private:
  bool anyFailure() const noexcept;

  std::string checker_;
  std::vector<DiagramTally> diagrams_;
  std::vector<Witness> witnesses_;
  std::vector<Witness> warnings_;
};

// Evaluates instances [0, count) of one diagram family, possibly on several threads.
// fn returns a witness for a failing instance. Results are merged in index order so the
// recorded first failure does not depend on scheduling.
void scanFamily(CheckReport& report, const CheckOptions& opts, const std::string& diagram,
                std::size_t count, const std::function<std::optional<Witness>(std::size_t)>& fn);

// Mixed radix decoding used to enumerate tuples lexicographically.
template <class T>
std::vector<T> tupleAt(std::size_t index, std::size_t arity, const std::vector<T>& pool) {
  std::vector<T> out(arity);
  for (std::size_t k = arity; k-- > 0;) {
    out[k] = pool[index % pool.size()];
    index /= pool.size();
  }
  return out;
}

inline std::size_t tupleCount(std::size_t poolSize, std::size_t arity) {
  std::size_t n = 1;
  for (std::size_t k = 0; k < arity; ++k) n *= poolSize;
  return n;
}

inline std::optional<std::string> str(const std::optional<MorId>& m) {
  if (!m) return std::nullopt;
  return m->str();
}
inline std::string show(const std::optional<MorId>& m) { return m ? m->str() : "undefined"; }

}  // namespace enriched
