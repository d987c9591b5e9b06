// Command-line front end: gen / stats / sums / laplace / verify.
// Exit codes: 0 success, 1 verification failure, 2 usage error.

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace gls {

int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace gls
