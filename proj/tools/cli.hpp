#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "ivp/decomposition.hpp"
#include "ivp/poset.hpp"

namespace ivp::cli {

// exit codes: 0 success, 1 usage error, 2 computation error.
// The payload is only ever complete: on any error it stays empty and the
// diagnostics stream carries the message.
struct CommandResult {
  int exit_code = 0;
  std::string payload;
};

CommandResult dispatch(const std::vector<std::string>& args, std::ostream& diagnostics);

// Graphviz emitters. Output is deterministic: node ids follow preorder for
// trees and the element index for posets.
std::string tree_dot(const DecompositionTree& t);
std::string poset_dot(const IntervalPoset& p);

} // namespace ivp::cli
