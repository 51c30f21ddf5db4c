#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace poramsey::cli {

inline constexpr int exit_ok = 0;
inline constexpr int exit_verification_failure = 1;
inline constexpr int exit_usage = 2;

/// Entry point behind main; args excludes the program name.
/// Reports go to out as JSON, diagnostics to err.
int run(const std::vector<std::string> & args, std::istream & in, std::ostream & out, std::ostream & err);

/// Invariant names accepted by --analyze and analyze --invariants.
const std::vector<std::string> & invariant_names();

} // namespace poramsey::cli
