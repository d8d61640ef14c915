#include "fatcat/log.hpp"

#include <cstdlib>
#include <iostream>
#include <string>

namespace fatcat {

LogLevel log_threshold() {
  static const LogLevel level = [] {
    const char* env = std::getenv("FATCAT_LOG");
    const std::string v = env ? env : "";
    if (v == "error") return LogLevel::error;
    if (v == "info") return LogLevel::info;
    if (v == "debug") return LogLevel::debug;
    return LogLevel::warn;
  }();
  return level;
}

void log(LogLevel level, std::string_view message) {
  static constexpr const char* kNames[] = {"error", "warn", "info", "debug"};
  if (static_cast<int>(level) > static_cast<int>(log_threshold())) return;
  std::cerr << "[fatcat " << kNames[static_cast<int>(level)] << "] " << message << '\n';
}

} // namespace fatcat
