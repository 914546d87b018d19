#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "enriched/cli.hpp"

namespace enriched {

// the enriched command line; args exclude the program name
int cliMain(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace enriched
