#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "sqexc/types.hpp"

namespace sqexc::cli {

enum ExitCode : int { ok = 0, validation_failed = 1, usage = 2, domain = 3 };

/// Parses "a", "bi", "a+bi", "a-bi" (also "i", "-i").  Empty on malformed input.
std::optional<cplx> parse_complex(const std::string& text);

/// 17 significant digits, as printf "%.17g".
std::string format_number(double x);

/// Entry point shared by the executable and the tests.  args excludes the
/// program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sqexc::cli
