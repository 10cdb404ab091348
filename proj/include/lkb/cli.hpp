#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace lkb::cli {

// Runs one subcommand. Exit code 0 on success or a passing verification,
// 1 on a failing verification or unequal words, 2 on usage errors. Output
// is deterministic for identical arguments.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace lkb::cli
