#pragma once

#include <cstdint>
#include <string>

namespace wittorders {

// Resource ceilings for the exponential parts of the library.
struct Guards {
  std::uint64_t max_rank = 64;
  std::uint64_t max_candidates = 1'000'000;
  std::uint64_t max_monomials = 1'000'000;
  std::uint64_t random_draws = 10'000;
  std::uint64_t seed = 0;
};

// Parses "max-rank=N,max-candidates=N,max-monomials=N" and lowers the given
// guards to those ceilings. Unknown keys throw InvalidInput.
Guards apply_guard_override(Guards guards, const std::string& text);

// Applies WITTORDERS_GUARD_OVERRIDE from the environment, if set.
Guards guards_from_environment(Guards guards);

}  // namespace wittorders
