#ifndef MODEQ_CLI_HPP
#define MODEQ_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace modeq {

// Command-line entry point. Exit codes: 0 all-pass, 1 bound or
// reconstruction violation, 2 usage/parse errors.
int cli_main(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
             std::ostream& err);

} // namespace modeq

#endif
