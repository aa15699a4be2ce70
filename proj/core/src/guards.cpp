#include "wittorders/guards.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>

#include "wittorders/errors.hpp"

namespace wittorders {

Guards apply_guard_override(Guards guards, const std::string& text) {
  std::stringstream stream(text);
  std::string item;
  while (std::getline(stream, item, ',')) {
    if (item.empty()) continue;
    const auto eq = item.find('=');
    if (eq == std::string::npos) throw InvalidInput("guard override entry without '=': " + item);
    const std::string key = item.substr(0, eq);
    std::uint64_t value = 0;
    try {
      value = std::stoull(item.substr(eq + 1));
    } catch (const std::exception&) {
      throw InvalidInput("guard override value is not an integer: " + item);
    }
    if (value == 0) throw InvalidInput("guard ceilings must be positive: " + item);
    if (key == "max-rank") {
      guards.max_rank = std::min(guards.max_rank, value);
    } else if (key == "max-candidates") {
      guards.max_candidates = std::min(guards.max_candidates, value);
    } else if (key == "max-monomials") {
      guards.max_monomials = std::min(guards.max_monomials, value);
    } else {
      throw InvalidInput("unknown guard: " + key);
    }
  }
  return guards;
}

Guards guards_from_environment(Guards guards) {
  if (const char* env = std::getenv("WITTORDERS_GUARD_OVERRIDE")) {
    return apply_guard_override(guards, env);
  }
  return guards;
}

}  // namespace wittorders
