#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "mhc/trace.hpp"

namespace mhc::cli {

/// Process exit codes.
enum ExitCode : int {
    kSuccess = 0,   // accept / equivalent / suite passed / command done
    kNegative = 1,  // reject / inequivalent / suite failed
    kUsage = 2,     // bad flags, unreadable or invalid input
};

/// Runs one invocation. `args` excludes the program name. Results go to
/// `out`, diagnostics to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Human-readable trace, one event per line.
std::string render_trace_text(const ControlTrace& trace, const std::set<Symbol>& alphabet);

/// Machine-readable trace:
///   {"input": "...", "accepted": bool,
///    "events": [{"kind", "device", "name", ["from", "letter", "to"],
///                ["to_device", "to_name"], ["accepted"]}, ...]}
std::string render_trace_json(const ControlTrace& trace, const std::set<Symbol>& alphabet);

}  // namespace mhc::cli
