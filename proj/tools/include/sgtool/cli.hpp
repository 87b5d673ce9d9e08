#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace sgtool {

/// Exit codes: 0 success, 1 domain error (cap exceeded, invalid argument,
/// balance required), 2 usage or input parse error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

std::vector<std::string> verbs();

/// One library operation and an invocation that exercises it. Graph paths
/// are relative to the fixture directory.
struct Coverage {
  std::string operation;
  std::vector<std::string> args;
};

const std::vector<Coverage>& coverage();

}  // namespace sgtool
