#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace semiform::cli
{

enum class Status { ok, violation, error };

std::string to_string(Status status);

// Exit codes: 0 ok, 1 violation, 2 usage, 3 capacity, 4 invalid input.
struct CommandResult {
    Status status = Status::ok;
    nlohmann::json payload;
    double timing_ms = 0;
    int exit_code = 0;
};

// Runs one command line (without the program name). Canonical output goes to
// out: the JSON payload with --json, aligned text otherwise. Diagnostics, and
// the timing line requested by --timing, go to err.
CommandResult dispatch(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

// Aligned text rendering of a payload; objects shaped like a serialized
// polynomial print as polynomial text.
std::string render_text(const nlohmann::json &payload);

} // namespace semiform::cli
