#pragma once

#include <functional>
#include <string>

namespace homdip {

using WarningHandler = std::function<void(const std::string&)>;

// Replace the process-wide warning sink and return the previous one.
// The default handler prints "homdip: warning: <msg>" to stderr.
WarningHandler set_warning_handler(WarningHandler handler);

void warn(const std::string& msg);

}  // namespace homdip
