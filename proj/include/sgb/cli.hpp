#pragma once

#include <string>
#include <vector>

namespace sgb {

// exit codes: 0 affirmative/success, 1 negative verdict, 2 input error
int cli_run(const std::vector<std::string>& args);
int cli_run(int argc, char** argv);

}  // namespace sgb
