#pragma once

// Exhaustive identity-checking sweeps over dense operation tables.
//
// Tables are row-major over element ids: a ternary table on n elements has
// n^3 entries with [a,b,c] at (a*n + b)*n + c, a binary table n^2 entries.
// Every kernel returns the lexicographically first counterexample tuple, or
// nothing when the identity holds everywhere. All variants of a kernel must
// return identical results; tests pin that down. Every table entry must be a
// valid id and n^3 must stay below 2^31 (gather indices are 32-bit).

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>

namespace trusskit::kernels {

using Id = std::uint32_t;

template <std::size_t N>
using Witness = std::optional<std::array<Id, N>>;

struct KernelSet {
  std::string_view name;

  // [[a,b,c],d,e] == [a,b,[c,d,e]]; witness (a,b,c,d,e).
  Witness<5> (*heap_associativity)(std::span<const Id> ternary, Id n);
  // [a,a,b] == b == [b,a,a]; witness (a,b).
  Witness<2> (*malcev)(std::span<const Id> ternary, Id n);
  // [a,b,c] == [c,b,a]; witness (a,b,c).
  Witness<3> (*heap_commutativity)(std::span<const Id> ternary, Id n);
  // (ab)c == a(bc); witness (a,b,c).
  Witness<3> (*mult_associativity)(std::span<const Id> mult, Id n);
  // d[a,b,c] == [da,db,dc]; witness (d,a,b,c).
  Witness<4> (*left_distributivity)(std::span<const Id> ternary, std::span<const Id> mult, Id n);
  // [a,b,c]d == [ad,bd,cd]; witness (d,a,b,c).
  Witness<4> (*right_distributivity)(std::span<const Id> ternary, std::span<const Id> mult, Id n);
  // f([a,b,c]) == [f(a),f(b),f(c)] for f: src(n) -> dst(m); witness (a,b,c).
  Witness<3> (*preserves_ternary)(std::span<const Id> src, Id n, std::span<const Id> dst, Id m,
                                  std::span<const Id> map);
  // f(ab) == f(a)f(b); witness (a,b).
  Witness<2> (*preserves_binary)(std::span<const Id> src, Id n, std::span<const Id> dst, Id m,
                                 std::span<const Id> map);
};

// Portable reference implementation.
const KernelSet& scalar();
// AVX2 gather implementation; nullptr if not compiled in or unsupported by this CPU.
const KernelSet* avx2();
// Fastest usable set. TRUSSKIT_KERNELS=scalar forces the reference set.
const KernelSet& active();

}  // namespace trusskit::kernels
