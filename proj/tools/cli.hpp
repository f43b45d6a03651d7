#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qlwb::cli {

/// Exit codes. Verdict codes depend on the verdict kind only.
enum ExitCode : int
{
    exit_ok = 0,        // valid, true, found, done
    exit_negative = 1,  // invalid, false, not_found
    exit_unknown = 2,
    exit_usage = 64,
    exit_input = 65,
    exit_internal = 70,
    exit_resource = 75
};

inline constexpr const char * report_schema_id = "qlwb-report/1";

/// Runs one command line (without the program name). The whole report is
/// written to `out` after the command finishes; diagnostics go to `err`.
auto run(const std::vector<std::string> & args, std::ostream & out, std::ostream & err) -> int;

}
