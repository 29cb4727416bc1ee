#pragma once

#include <iostream>
#include <string>
#include <vector>

namespace sphconv {

/// Command-line entry point. Exit codes: 0 success or verdict pass, 1 verdict
/// fail, 2 usage or validation error.
int cli_main(int argc, char** argv, std::ostream& out = std::cout, std::ostream& err = std::cerr);
int cli_main(const std::vector<std::string>& args, std::ostream& out = std::cout, std::ostream& err = std::cerr);

}  // namespace sphconv
