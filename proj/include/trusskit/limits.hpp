#pragma once

#include <cstdint>
#include <string_view>

namespace trusskit {

// Size guards for every exhaustive routine. The defaults are desk scale.
struct Limits {
  // Objects produced or scanned by a single enumeration call.
  std::uint64_t max_enumeration = 1'000'000;
  // Entries of a materialized ternary table (n^3).
  std::uint64_t max_table_entries = std::uint64_t{1} << 24;
  // Largest carrier for which heap associativity is swept over all n^5
  // quintuples; above it the check is sampled and reported as such.
  std::uint32_t exhaustive_heap_size = 32;
  std::uint64_t sample_size = 2'000'000;
  // Raw bijection search between truss carriers.
  std::uint32_t bruteforce_iso_carrier = 9;
  // Raw map search between truss carriers (|t|^|s| also bounded).
  std::uint32_t bruteforce_morphism_carrier = 8;

  // Defaults, with max_enumeration taken from TRUSSKIT_MAX_ENUM if set.
  static Limits from_env();
};

// Throws BoundExceeded when count > bound.
void check_bound(std::uint64_t count, std::uint64_t bound, std::string_view what);

// Saturating helpers for size estimates.
std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b);
std::uint64_t saturating_pow(std::uint64_t base, std::uint64_t exp);
std::uint64_t saturating_factorial(std::uint64_t n);

}  // namespace trusskit
