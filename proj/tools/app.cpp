#include "app.hpp"

#include <iostream>

#include "CLI11.hpp"

namespace enriched {

int cliMain(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"finite enriched category kernel", "enriched"};
  app.require_subcommand(1);

  std::string format = "text";
  auto addFormat = [&](CLI::App* c) {
    c->add_option("--format", format, "text or jsonl")->check(CLI::IsMember({"text", "jsonl"}));
  };

  // check
  auto* check = app.add_subcommand("check", "run the checkers on a document");
  std::string path;
  std::vector<std::string> levels;
  CheckFlags flags;
  std::uint64_t seed = 0;
  check->add_option("file", path, "document")->required();
  check->add_option("--level", levels, "levels to check (repeatable): base, vcategory, vfunctor, vnat, "
                                       "v2category, v2functor, v2nat, modification, pasting");
  check->add_flag("--all-witnesses", flags.allWitnesses, "record every witness and keep going past failures");
  check->add_option("--seed", seed, "seed for --fuzz");
  check->add_option("--fuzz", flags.fuzz, "append this many generated instances");
  addFormat(check);

  // construct
  auto* cons = app.add_subcommand("construct", "build a derived structure and add it to a document");
  ConstructRequest req;
  std::string input, outPath;
  int i = 0, j = 0, k = 0;
  cons->add_option("construction", req.construction, "construction name")->required();
  cons->add_option("inputs", req.inputs, "names of the inputs in the document");
  cons->add_option("--in", input, "input document")->required();
  cons->add_option("-o,--out", outPath, "output path (stdout if omitted)");
  auto* oi = cons->add_option("--i", i, "tensor index");
  auto* oj = cons->add_option("--j", j, "second tensor index");
  auto* ok = cons->add_option("--k", k, "fold count for from-symmetric");
  cons->add_option("--name", req.name, "name of the result");

  // corpus
  auto* corp = app.add_subcommand("corpus", "emit a shipped example document");
  std::string base = "bool";
  corp->add_option("--base", base, "bool, bool3, zmod2, superz2 or bz3");
  corp->add_option("--seed", seed, "generator seed");
  corp->add_option("-o,--out", outPath, "output path (stdout if omitted)");
  bool list = false;
  corp->add_flag("--list", list, "print the base names and exit");

  // fuzz
  auto* fuzz = app.add_subcommand("fuzz", "generate instances over a shipped base and check them");
  std::size_t count = 10;
  fuzz->add_option("--base", base, "corpus base");
  fuzz->add_option("--seed", seed, "generator seed");
  fuzz->add_option("--count", count, "number of instances");
  fuzz->add_option("-o,--out", outPath, "also write the generated document here");
  addFormat(fuzz);

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  if (check->parsed()) {
    try {
      for (const auto& l : levels) flags.levels.insert(parseLevel(l));
    } catch (const Error& e) {
      err << "error: " << e.what() << "\n";
      return 2;
    }
    if (check->count("--seed")) flags.seed = seed;
    flags.format = format == "jsonl" ? Format::Jsonl : Format::Text;
    return runCheck(path, flags, out, err);
  }
  if (cons->parsed()) {
    if (*oi) req.i = i;
    if (*oj) req.j = j;
    if (*ok) req.k = k;
    return runConstruct(input, req, outPath, out, err);
  }
  if (corp->parsed()) {
    if (list) {
      for (const auto& n : corpusBaseNames()) out << n << "\n";
      return 0;
    }
    return runCorpus(base, seed, outPath, out, err);
  }
  flags.format = format == "jsonl" ? Format::Jsonl : Format::Text;
  return runFuzz(base, seed, count, flags, outPath, out, err);
}

}  // namespace enriched
