#include "trusskit/limits.hpp"

#include <cstdlib>
#include <limits>
#include <string>

#include "trusskit/errors.hpp"

namespace trusskit {

Limits Limits::from_env() {
  Limits limits;
  if (const char* raw = std::getenv("TRUSSKIT_MAX_ENUM"); raw != nullptr && *raw != '\0') {
    try {
      std::size_t used = 0;
      const auto value = std::stoull(raw, &used);
      if (used != std::string(raw).size() || value == 0) throw std::invalid_argument(raw);
      limits.max_enumeration = value;
    } catch (const std::exception&) {
      throw InvalidInput(std::string("TRUSSKIT_MAX_ENUM is not a positive integer: ") + raw);
    }
  }
  return limits;
}

void check_bound(std::uint64_t count, std::uint64_t bound, std::string_view what) {
  if (count > bound) {
    throw BoundExceeded(std::string(what) + ": " + std::to_string(count) +
                        " exceeds the enumeration bound " + std::to_string(bound));
  }
}

std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b) {
  constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
  if (a != 0 && b > kMax / a) return kMax;
  return a * b;
}

std::uint64_t saturating_pow(std::uint64_t base, std::uint64_t exp) {
  std::uint64_t result = 1;
  for (std::uint64_t i = 0; i < exp; ++i) result = saturating_mul(result, base);
  return result;
}

std::uint64_t saturating_factorial(std::uint64_t n) {
  std::uint64_t result = 1;
  for (std::uint64_t i = 2; i <= n; ++i) result = saturating_mul(result, i);
  return result;
}

}  // namespace trusskit
