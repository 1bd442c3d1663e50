#include "linegraph/limits.hpp"

#include <cstdlib>
#include <string>

#include "linegraph/errors.hpp"

namespace linegraph {

Limits Limits::uniform(std::size_t cap) {
  return Limits{cap, cap, cap, cap, cap};
}

Limits Limits::from_environment() {
  const char* raw = std::getenv("LINEGRAPH_CAP");
  if (raw == nullptr || *raw == '\0') return Limits{};
  std::size_t used = 0;
  unsigned long long value = 0;
  try {
    value = std::stoull(raw, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || raw[used] != '\0')
    throw InvalidInput(std::string("LINEGRAPH_CAP is not a non-negative integer: ") + raw);
  return uniform(static_cast<std::size_t>(value));
}

}  // namespace linegraph
