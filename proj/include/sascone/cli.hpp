#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace sascone::cli {

// Runs the sascone command line on `args` (without the program name) and
// returns the process exit status:
//   0 success, 2 validation error, 3 mathematical precondition failure,
//   4 golden-table mismatch.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sascone::cli
