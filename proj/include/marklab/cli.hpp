#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace marklab {

/// Entry point for the `marklab` tool. Exit codes: 0 verified/ok,
/// 1 refuted, 2 usage or input error.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err);

}  // namespace marklab
