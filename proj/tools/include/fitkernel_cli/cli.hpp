#pragma once

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace fitkernel::cli {

enum class Format { Json, Text };

struct Command {
  std::string verb;
  nlohmann::json input;
  Format format = Format::Json;
};

struct Outcome {
  int status = 0;
  nlohmann::json report;  // success report or {"error": {...}}
  std::string rendered;   // report in the requested format, newline terminated
};

const std::vector<std::string>& verbs();

// Exit codes: 0 ok, 2 schema error, 3 group not in catalog, 4 unsupported
// field, 5 other library error, 1 anything else.
Outcome run(const Command& command);

// Typed failure report for an error raised outside run().
Outcome report_error(const std::string& verb, const std::string& kind, const std::string& message, Format format);

// Reads a path, "-" for stdin, or inline JSON (anything starting with '{').
nlohmann::json load_input(const std::string& source);

}  // namespace fitkernel::cli
