#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace gfc::cli {

enum ExitCode : int {
    kOk = 0,
    kInternal = 1,
    kInvalid = 2,
    kNotFree = 3,
    kVerificationFailed = 4,
    kResource = 5,
};

// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace gfc::cli
