#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace artin
{

struct Report {
    std::string command;
    nlohmann::json ring = nlohmann::json::object();
    nlohmann::json params = nlohmann::json::object();
    nlohmann::json result = nlohmann::json::object();
    std::optional<long> certified_up_to;
    std::optional<std::uint64_t> seed;
    std::vector<std::string> warnings;
    // Rows for --format csv; falls back to key,value pairs of `result`.
    nlohmann::json csv_rows = nlohmann::json::array();

    nlohmann::json to_json() const;
    std::string to_csv() const;
};

struct CommandOutcome {
    int exit_code = 0;
    std::string output;
    std::string error;
};

// argv excludes the program name. Exit codes: 0 success, 2 precondition or
// usage error, 3 budget exhausted.
CommandOutcome run_command(const std::vector<std::string> &argv);

} // namespace artin
