#pragma once

#include <ostream>

namespace grl {

/// Exit codes: 0 valid / agreement (including skipped checks), 1 invalid
/// input or usage error, 2 a theorem check disagreed.
inline constexpr int kExitOk = 0;
inline constexpr int kExitInvalid = 1;
inline constexpr int kExitDisagreement = 2;

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace grl
