#ifndef CFORMS_CLI_HPP
#define CFORMS_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace cforms {

/// Dispatches the command line. Exit contract: 0 ok, 1 negative verdict
/// (failed congruence, mismatch, out-of-tolerance table), 2 usage or
/// parameter error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace cforms

#endif
