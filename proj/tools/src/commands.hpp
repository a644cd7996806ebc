#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tuple_io.hpp"

namespace genmat::cli {

// One flag set shared by every subcommand; each command reads the subset it
// documents and validates consistency with file contents.
struct CommandOptions {
    std::optional<int> n;
    std::optional<int> m;
    std::vector<std::string> exprs;           // --expr, repeatable
    std::optional<std::string> builtin_name;  // --builtin
    std::optional<std::string> tuple_path;    // --tuple
    std::optional<std::string> tuples_path;   // --tuples
    std::optional<std::string> target_path;   // --target
    std::optional<int> degree;
    std::optional<int> maxlen;
    std::string mode = "exact";  // exact | random
    std::uint64_t trials = 64;
    std::uint64_t seed = 1;
    int jobs = 1;
};

// Whether the command consumes the seed (so the run record should echo it).
bool command_uses_seed(const std::string& command);

// Executes one subcommand and returns its result payload. Deterministic for
// fixed inputs and seed; --jobs never changes the payload.
Json run_command(const std::string& command, const CommandOptions& options);

}  // namespace genmat::cli
