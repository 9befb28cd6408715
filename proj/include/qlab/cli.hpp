#pragma once

#include <string>
#include <vector>

namespace qlab {

// Command-line front end; returns the process exit code (0 ok, 2 parse
// error, 3 size bound exceeded).
int cli_main(const std::vector<std::string>& args);
int cli_main(int argc, char** argv);

}  // namespace qlab
