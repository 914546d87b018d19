#pragma once

#include <iosfwd>

#include "enriched/corpus.hpp"

namespace enriched {

enum class Level { Base, VCategory, VFunctor, VNat, V2Category, V2Functor, V2Nat, Modification, Pasting };
std::string_view levelName(Level l) noexcept;
// unknown names throw ParseError
Level parseLevel(const std::string& s);

enum class Format { Text, Jsonl };

struct CheckFlags {
  std::set<Level> levels;  // empty selects everything
  bool allWitnesses = false;
  unsigned workers = 0;
  std::optional<std::uint64_t> seed;
  std::size_t fuzz = 0;
  Format format = Format::Text;
};

struct CheckEntry {
  Level level;
  std::string name;
  CheckReport report;
  // LowerLevelInvalid, AgreementFailure, ... raised while checking
  std::optional<std::string> error;
  bool passed() const { return !error && report.passed(); }
};

struct CheckRun {
  std::vector<CheckEntry> entries;
  std::vector<Level> skipped;  // not run because a lower level failed
  int exitCode = 0;
};

// Levels run bottom up; once one fails, the selected levels above it are skipped.
CheckRun checkDocument(const Document& doc, const CheckFlags& flags);
void writeReport(const CheckRun& run, Format format, std::ostream& out);

// Thrown by construct. inputError separates bad requests (exit 2) from outputs failing
// re-validation (exit 1).
class ConstructionError : public Error {
 public:
  ConstructionError(const std::string& what, bool inputError, CheckReport report = CheckReport())
      : Error(ErrorKind::ConstructionFailed, what), inputError_(inputError), report_(std::move(report)) {}
  bool inputError() const noexcept { return inputError_; }
  const CheckReport& report() const noexcept { return report_; }

 private:
  bool inputError_;
  CheckReport report_;
};

struct ConstructRequest {
  std::string construction;
  std::vector<std::string> inputs;
  std::optional<int> i, j, k;
  std::string name = "result";
};

const std::vector<std::string>& constructionNames();
// returns doc with the validated result added under request.name (from-symmetric: a new document)
Document construct(const Document& doc, const ConstructRequest& request);

// exit status 0 pass, 1 axiom failure, 2 input error
int exitCodeFor(const Error& e);
int runCheck(const std::filesystem::path& path, const CheckFlags& flags, std::ostream& out, std::ostream& err);
// out empty: write the document to the output stream
int runConstruct(const std::filesystem::path& path, const ConstructRequest& request, const std::filesystem::path& outPath,
                 std::ostream& out, std::ostream& err);
int runCorpus(const std::string& base, std::uint64_t seed, const std::filesystem::path& outPath, std::ostream& out,
              std::ostream& err);
// generates count instances over a corpus base and checks them; writes the document when outPath is set
int runFuzz(const std::string& base, std::uint64_t seed, std::size_t count, const CheckFlags& flags,
            const std::filesystem::path& outPath, std::ostream& out, std::ostream& err);

}  // namespace enriched
