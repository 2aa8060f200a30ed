#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "radial/config.hpp"

namespace radial {

/// Exit codes: success, a check failed under --strict, an error occurred.
enum ExitStatus : int { kExitOk = 0, kExitCheckFailed = 1, kExitError = 2 };

struct CommandOptions {
    std::filesystem::path out_dir;             // empty: use output.directory from the config
    bool strict = false;
    std::optional<std::filesystem::path> profile;  // classify / verify-bounds on a stored profile CSV
};

const std::vector<std::string>& command_names();

/// Runs one of check-nonlinearity, solve, classify, verify-bounds, sweep and
/// writes its artifacts plus manifest.json. Progress goes to `log`.
int run_command(const std::string& command, const RunConfig& config, const CommandOptions& options,
                std::ostream& log);

}  // namespace radial
