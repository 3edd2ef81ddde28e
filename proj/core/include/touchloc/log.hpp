#pragma once

#include <sstream>
#include <string>

namespace touchloc {

enum class LogLevel { Error = 0, Warn = 1, Info = 2, Debug = 3 };

// Global log threshold. Initialized from the TOUCHLOC_LOG environment
// variable (error|warn|info|debug); defaults to warn.
LogLevel log_level();
void set_log_level(LogLevel level);

namespace detail {
void log_line(LogLevel level, const std::string& msg);
}

template <typename... Args>
void log(LogLevel level, Args&&... args) {
  if (level > log_level()) return;
  std::ostringstream os;
  (os << ... << args);
  detail::log_line(level, os.str());
}

template <typename... Args>
void log_error(Args&&... args) {
  log(LogLevel::Error, std::forward<Args>(args)...);
}
template <typename... Args>
void log_warn(Args&&... args) {
  log(LogLevel::Warn, std::forward<Args>(args)...);
}
template <typename... Args>
void log_info(Args&&... args) {
  log(LogLevel::Info, std::forward<Args>(args)...);
}
template <typename... Args>
void log_debug(Args&&... args) {
  log(LogLevel::Debug, std::forward<Args>(args)...);
}

}  // namespace touchloc
