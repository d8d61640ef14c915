#pragma once

#include <string_view>

namespace fatcat {

enum class LogLevel { error = 0, warn = 1, info = 2, debug = 3 };

/// Threshold from the FATCAT_LOG environment variable (error, warn, info,
/// debug); defaults to warn. Read once.
LogLevel log_threshold();

/// Writes "[fatcat <level>] message" to stderr when `level` passes the threshold.
void log(LogLevel level, std::string_view message);

} // namespace fatcat
