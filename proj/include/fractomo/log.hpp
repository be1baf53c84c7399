#pragma once

#include <functional>
#include <string>

namespace fractomo {

// Non-fatal notices (fallbacks taken, truncation diagnostics, rank-1
// deviations). Default handler writes to stderr; tests may capture.
using LogHandler = std::function<void(const std::string&)>;

void set_log_handler(LogHandler handler);
void log_notice(const std::string& message);

}  // namespace fractomo
