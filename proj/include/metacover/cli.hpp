#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace metacover {

/// Entry point of the metacover tool; args excludes the program name.
/// Returns 0 on success, 1 when a verification fails, 2 on usage errors.
int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace metacover
