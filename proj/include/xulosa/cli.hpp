#ifndef XULOSA_CLI_HPP
#define XULOSA_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace xulosa::cli {

/// Runs the command-line tool. Returns 0 on success, 1 on usage errors
/// (including a missing input file), 2 on pipeline errors (the error code
/// name is printed on `err`). `in` backs the `-` stdin convention.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err, std::istream& in);

}  // namespace xulosa::cli

#endif  // XULOSA_CLI_HPP
