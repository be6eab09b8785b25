// Subcommand implementations. Each one reads a validated RunConfig, computes
// with the core library (always at a = 1, heights in units of a) and writes a
// deterministic CSV or JSON document to the given stream.

#pragma once

#include <iosfwd>

#include "config.hpp"

namespace polder::cli {

// Returns the process exit code: 0 on success, 3 when a verification run
// finds a deviation above tolerance. Configuration problems are reported by
// throwing std::invalid_argument (or std::domain_error from the core), and
// quadrature failures by QuadratureError; the caller maps those to exit
// codes 2 and 3.
int run_command(const RunConfig& cfg, std::ostream& out);

}  // namespace polder::cli
