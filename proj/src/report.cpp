#include "enriched/report.hpp"

#include <algorithm>
#include <cstdlib>
#include <thread>

namespace enriched {

unsigned resolveWorkers(const CheckOptions& opts) {
  if (opts.workers > 0) return opts.workers;
  if (const char* env = std::getenv("ENRICHED_WORKERS")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end != env && v > 0) return static_cast<unsigned>(std::min(v, 256L));
  }
  return 1;
}

const DiagramTally* CheckReport::tally(std::string_view diagram) const {
  for (const auto& d : diagrams_)
    if (d.name == diagram) return &d;
  return nullptr;
}

bool CheckReport::failed(std::string_view diagram) const {
  const auto* t = tally(diagram);
  return t && t->failures > 0;
}

bool CheckReport::vacuous(std::string_view diagram) const {
  const auto* t = tally(diagram);
  return !t || t->vacuous();
}

std::set<std::string> CheckReport::failingDiagrams() const {
  std::set<std::string> out;
  for (const auto& d : diagrams_)
    if (d.failures > 0) out.insert(d.name);
  return out;
}

bool CheckReport::anyFailure() const noexcept {
  return std::any_of(diagrams_.begin(), diagrams_.end(), [](const auto& d) { return d.failures > 0; });
}

DiagramTally& CheckReport::family(std::string_view diagram) {
  for (auto& d : diagrams_)
    if (d.name == diagram) return d;
  diagrams_.push_back(DiagramTally{std::string(diagram), 0, 0});
  return diagrams_.back();
}

void CheckReport::count(std::string_view diagram, std::size_t instances) {
  family(diagram).instances += instances;
}

void CheckReport::fail(const CheckOptions& opts, Witness w) {
  auto& t = family(w.diagram);
  if (opts.allWitnesses || t.failures == 0) witnesses_.push_back(std::move(w));
  ++t.failures;
}

void CheckReport::warn(Witness w) { warnings_.push_back(std::move(w)); }

bool CheckReport::expectEqual(const CheckOptions& opts, std::string_view diagram,
                              std::vector<std::string> instance,
                              const std::optional<std::string>& lhs,
                              const std::optional<std::string>& rhs) {
  count(diagram);
  bool ok = lhs && rhs && *lhs == *rhs;
  if (!ok)
    fail(opts, Witness{std::string(diagram), std::move(instance), lhs.value_or("undefined"),
                       rhs.value_or("undefined")});
  return ok;
}

bool CheckReport::expect(const CheckOptions& opts, std::string_view diagram,
                         std::vector<std::string> instance, bool ok, std::string lhs,
                         std::string rhs) {
  count(diagram);
  if (!ok) fail(opts, Witness{std::string(diagram), std::move(instance), std::move(lhs), std::move(rhs)});
  return ok;
}

void CheckReport::absorb(const CheckReport& sub, std::string_view prefix,
                         const std::vector<std::string>& instancePrefix) {
  auto name = [&](const std::string& d) {
    return prefix.empty() ? d : std::string(prefix) + "/" + d;
  };
  for (const auto& d : sub.diagrams_) {
    auto& t = family(name(d.name));
    t.instances += d.instances;
    t.failures += d.failures;
  }
  for (auto w : sub.witnesses_) {
    w.diagram = name(w.diagram);
    w.instance.insert(w.instance.begin(), instancePrefix.begin(), instancePrefix.end());
    witnesses_.push_back(std::move(w));
  }
  for (auto w : sub.warnings_) {
    w.diagram = name(w.diagram);
    w.instance.insert(w.instance.begin(), instancePrefix.begin(), instancePrefix.end());
    warnings_.push_back(std::move(w));
  }
}

void scanFamily(CheckReport& report, const CheckOptions& opts, const std::string& diagram,
                std::size_t count, const std::function<std::optional<Witness>(std::size_t)>& fn) {
  report.family(diagram);
  auto guarded = [&](std::size_t i) -> std::optional<Witness> {
    try {
      return fn(i);
    } catch (const std::exception& e) {
      return Witness{diagram, {"#" + std::to_string(i)}, "error", e.what()};
    }
  };
  unsigned workers = resolveWorkers(opts);
  std::vector<std::pair<std::size_t, Witness>> found;
  if (workers <= 1 || count < 64) {
    for (std::size_t i = 0; i < count; ++i)
      if (auto w = guarded(i)) found.emplace_back(i, std::move(*w));
  } else {
    std::vector<std::vector<std::pair<std::size_t, Witness>>> parts(workers);
    std::vector<std::thread> pool;
    std::size_t chunk = (count + workers - 1) / workers;
    for (unsigned t = 0; t < workers; ++t) {
      pool.emplace_back([&, t] {
        std::size_t lo = t * chunk, hi = std::min(count, lo + chunk);
        for (std::size_t i = lo; i < hi; ++i)
          if (auto w = guarded(i)) parts[t].emplace_back(i, std::move(*w));
      });
    }
    for (auto& th : pool) th.join();
    for (auto& p : parts)
      for (auto& e : p) found.push_back(std::move(e));
  }
  report.count(diagram, count);
  for (auto& [i, w] : found) {
    w.diagram = diagram;
    report.fail(opts, std::move(w));
  }
}

}  // namespace enriched
