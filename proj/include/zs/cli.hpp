#pragma once

#include <iosfwd>

namespace zs {

/// Entry point behind the `zs` executable. Exit codes: 0 pass, 1 fail,
/// 2 usage, domain or evaluation error (and skipped verifications).
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace zs
