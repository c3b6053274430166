#ifndef CHARCALC_CLI_HPP
#define CHARCALC_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace charcalc::cli {

// One module operation and the single command that reaches it.
struct OperationInfo {
  std::string module;
  std::string operation;
  std::string command;               // e.g. "equi mu"
  std::vector<std::string> example;  // a valid argument vector
};

const std::vector<OperationInfo>& operation_registry();

// Parses args (without the program name), runs one operation and writes the
// result to out. Exit codes: 0 success, 2 invalid input, 1 internal error or
// a failing reference suite.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace charcalc::cli

#endif  // CHARCALC_CLI_HPP
