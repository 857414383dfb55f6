#include "fracpos/format.hpp"

#include <charconv>

namespace fracpos {

std::string format_double(double x) {
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), x);
  if (ec != std::errc()) return std::to_string(x);
  return std::string(buf, end);
}

}  // namespace fracpos
