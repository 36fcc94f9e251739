#pragma once

#include <string>
#include <vector>

namespace wk::cli {

// Exit codes: 0 success or verification pass, 1 verification failure,
// 2 usage or domain error.
int run(std::vector<std::string> args);

}  // namespace wk::cli
