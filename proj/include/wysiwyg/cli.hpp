#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace wysiwyg {

/// Exit codes of the command-line tool.
enum ExitCode { kExitOk = 0, kExitDomain = 1, kExitCap = 2 };

/// Runs the `wysiwyg` command line; args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace wysiwyg
