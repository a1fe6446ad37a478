#include "homdip/warnings.hpp"

#include <cstdio>
#include <utility>

namespace homdip {

namespace {

WarningHandler& handler() {
  static WarningHandler h = [](const std::string& msg) {
    std::fprintf(stderr, "homdip: warning: %s\n", msg.c_str());
  };
  return h;
}

}  // namespace

WarningHandler set_warning_handler(WarningHandler h) {
  WarningHandler prev = std::move(handler());
  handler() = std::move(h);
  return prev;
}

void warn(const std::string& msg) {
  if (handler()) handler()(msg);
}

}  // namespace homdip
