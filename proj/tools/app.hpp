// CLI front end: command definitions and the execution entry point, factored
// so tests can drive commands in-process and snapshot --help output.
#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace normforms::cli {

// Runs one command line (without argv[0]); writes command output to `out`.
// Returns 0 on pass, 1 on a mathematically failed check (with witness in the
// report), 2 on usage or input errors.
int execute(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// Help text of the root command or one subcommand, for the golden tests.
std::string help_text(const std::string& subcommand = "");

// All registered flag/option names per subcommand (golden coverage test).
std::vector<std::string> option_names(const std::string& subcommand);

int run_main(int argc, char** argv);

}  // namespace normforms::cli
