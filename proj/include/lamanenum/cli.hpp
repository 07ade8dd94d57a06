#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace laman {

// The batch front end behind the laman_enum binary. Returns the process exit
// code: 0 ok, 2 parse/usage error, 3 genericity violation, 4 invalid
// constraints, 5 verification mismatch.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace laman
