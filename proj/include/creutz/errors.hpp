#pragma once

#include <stdexcept>
#include <string>

namespace creutz {

// Bad arguments or malformed configuration; the CLI maps this to exit code 1.
struct invalid_input_error : std::invalid_argument {
  explicit invalid_input_error(const std::string& what) : std::invalid_argument(what) {}
};

// A requested quantity does not exist for the given parameters (empty solution
// set, gapless quench with no finite critical time, ...); CLI exit code 3.
struct no_solution_error : std::runtime_error {
  explicit no_solution_error(const std::string& what) : std::runtime_error(what) {}
};

// arccos(M/2K)/pi was not recognized as a small rational; CLI exit code 3.
struct incommensurate_error : std::runtime_error {
  explicit incommensurate_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace creutz
