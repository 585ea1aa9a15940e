#ifndef GP_TOOLS_GP_CLI_HPP_
#define GP_TOOLS_GP_CLI_HPP_

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "gp/presentation.hpp"

namespace gp::cli {

// Exit statuses of the gp command.
inline constexpr int kOk = 0;
inline constexpr int kFalse = 1;
inline constexpr int kInputError = 2;
inline constexpr int kCapExceeded = 3;

// Parses the line-oriented presentation grammar (see README). Throws
// gp::Error with Errc::Parse, naming the line, on any malformed or unknown
// directive.
RawPresentation parse_input(std::string_view text);

// Runs one gp invocation; args excludes the program name.
int run_command(std::vector<std::string> const& args, std::istream& in,
                std::ostream& out, std::ostream& err);

}  // namespace gp::cli

#endif  // GP_TOOLS_GP_CLI_HPP_
