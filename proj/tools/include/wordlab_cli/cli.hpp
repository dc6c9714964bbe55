#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace wordlab::cli {

// Runs one command; args excludes the program name. Exit codes: 0 success,
// 1 computational negative (result still printed), 2 usage or parse error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace wordlab::cli
