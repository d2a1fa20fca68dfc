#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace wordcx {

/// Runs one subcommand; args excludes the program name.
/// Returns 0 on success, 1 when a check fails, 2 on usage or input errors.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace wordcx
