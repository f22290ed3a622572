// AVX2 variants of the table sweeps. The innermost index runs eight lanes at
// a time; lookups whose address depends on a table value use 32-bit gathers.
// Tails shorter than a vector fall back to scalar code in the same loop so the
// first counterexample is still found in lexicographic order.

#include <immintrin.h>

#include "kernels_internal.hpp"

namespace trusskit::kernels {
namespace {

constexpr Id kLanes = 8;

inline const int* as_int(const Id* p) { return reinterpret_cast<const int*>(p); }
inline __m256i load(const Id* p) { return _mm256_loadu_si256(reinterpret_cast<const __m256i*>(p)); }
inline __m256i gather(const Id* base, __m256i idx) { return _mm256_i32gather_epi32(as_int(base), idx, 4); }
inline __m256i iota(Id start) {
  const auto s = static_cast<int>(start);
  return _mm256_setr_epi32(s, s + 1, s + 2, s + 3, s + 4, s + 5, s + 6, s + 7);
}

// Bitmask of lanes where x != y.
inline unsigned mismatch(__m256i x, __m256i y) {
  const auto eq = _mm256_cmpeq_epi32(x, y);
  return ~static_cast<unsigned>(_mm256_movemask_ps(_mm256_castsi256_ps(eq))) & 0xFFu;
}

inline Id first_lane(unsigned mask) { return static_cast<Id>(__builtin_ctz(mask)); }

inline std::size_t at3(Id n, Id a, Id b, Id c) {
  return (static_cast<std::size_t>(a) * n + b) * n + c;
}
inline std::size_t at2(Id n, Id a, Id b) { return static_cast<std::size_t>(a) * n + b; }

Witness<5> heap_associativity(std::span<const Id> t, Id n) {
  const Id* T = t.data();
  for (Id a = 0; a < n; ++a)
    for (Id b = 0; b < n; ++b) {
      const Id* ab_row = T + at3(n, a, b, 0);
      for (Id c = 0; c < n; ++c) {
        const Id abc = ab_row[c];
        for (Id d = 0; d < n; ++d) {
          const Id* lhs_row = T + at3(n, abc, d, 0);
          const Id* cd_row = T + at3(n, c, d, 0);
          Id e = 0;
          for (; e + kLanes <= n; e += kLanes) {
            const auto m = mismatch(load(lhs_row + e), gather(ab_row, load(cd_row + e)));
            if (m != 0) return {{a, b, c, d, e + first_lane(m)}};
          }
          for (; e < n; ++e) {
            if (lhs_row[e] != ab_row[cd_row[e]]) return {{a, b, c, d, e}};
          }
        }
      }
    }
  return std::nullopt;
}

Witness<2> malcev(std::span<const Id> t, Id n) {
  const Id* T = t.data();
  const auto stride = _mm256_set1_epi32(static_cast<int>(n * n));
  for (Id a = 0; a < n; ++a) {
    const Id* aa_row = T + at3(n, a, a, 0);
    const Id* col = T + at2(n, a, a);  // [b,a,a] at col[b*n*n]
    Id b = 0;
    for (; b + kLanes <= n; b += kLanes) {
      const auto bs = iota(b);
      const auto m = mismatch(load(aa_row + b), bs) | mismatch(gather(col, _mm256_mullo_epi32(bs, stride)), bs);
      if (m != 0) return {{a, b + first_lane(m)}};
    }
    for (; b < n; ++b) {
      if (aa_row[b] != b || T[at3(n, b, a, a)] != b) return {{a, b}};
    }
  }
  return std::nullopt;
}

Witness<3> heap_commutativity(std::span<const Id> t, Id n) {
  const Id* T = t.data();
  const auto stride = _mm256_set1_epi32(static_cast<int>(n * n));
  for (Id a = 0; a < n; ++a)
    for (Id b = 0; b < n; ++b) {
      const Id* row = T + at3(n, a, b, 0);
      const Id* col = T + at2(n, b, a);  // [c,b,a] at col[c*n*n]
      Id c = 0;
      for (; c + kLanes <= n; c += kLanes) {
        const auto m = mismatch(load(row + c), gather(col, _mm256_mullo_epi32(iota(c), stride)));
        if (m != 0) return {{a, b, c + first_lane(m)}};
      }
      for (; c < n; ++c) {
        if (row[c] != T[at3(n, c, b, a)]) return {{a, b, c}};
      }
    }
  return std::nullopt;
}

Witness<3> mult_associativity(std::span<const Id> mt, Id n) {
  const Id* M = mt.data();
  for (Id a = 0; a < n; ++a) {
    const Id* a_row = M + at2(n, a, 0);
    for (Id b = 0; b < n; ++b) {
      const Id* ab_row = M + at2(n, a_row[b], 0);
      const Id* b_row = M + at2(n, b, 0);
      Id c = 0;
      for (; c + kLanes <= n; c += kLanes) {
        const auto m = mismatch(load(ab_row + c), gather(a_row, load(b_row + c)));
        if (m != 0) return {{a, b, c + first_lane(m)}};
      }
      for (; c < n; ++c) {
        if (ab_row[c] != a_row[b_row[c]]) return {{a, b, c}};
      }
    }
  }
  return std::nullopt;
}

Witness<4> left_distributivity(std::span<const Id> t, std::span<const Id> mt, Id n) {
  const Id* T = t.data();
  const Id* M = mt.data();
  for (Id d = 0; d < n; ++d) {
    const Id* d_row = M + at2(n, d, 0);
    for (Id a = 0; a < n; ++a)
      for (Id b = 0; b < n; ++b) {
        const Id* ab_row = T + at3(n, a, b, 0);
        const Id* rhs_row = T + at3(n, d_row[a], d_row[b], 0);
        Id c = 0;
        for (; c + kLanes <= n; c += kLanes) {
          const auto lhs = gather(d_row, load(ab_row + c));
          const auto rhs = gather(rhs_row, load(d_row + c));
          const auto m = mismatch(lhs, rhs);
          if (m != 0) return {{d, a, b, c + first_lane(m)}};
        }
        for (; c < n; ++c) {
          if (d_row[ab_row[c]] != rhs_row[d_row[c]]) return {{d, a, b, c}};
        }
      }
  }
  return std::nullopt;
}

Witness<4> right_distributivity(std::span<const Id> t, std::span<const Id> mt, Id n) {
  const Id* T = t.data();
  const Id* M = mt.data();
  const auto stride = _mm256_set1_epi32(static_cast<int>(n));
  for (Id d = 0; d < n; ++d) {
    const Id* d_col = M + d;  // x*d at d_col[x*n]
    for (Id a = 0; a < n; ++a)
      for (Id b = 0; b < n; ++b) {
        const Id* ab_row = T + at3(n, a, b, 0);
        const Id* rhs_row = T + at3(n, M[at2(n, a, d)], M[at2(n, b, d)], 0);
        Id c = 0;
        for (; c + kLanes <= n; c += kLanes) {
          const auto lhs = gather(d_col, _mm256_mullo_epi32(load(ab_row + c), stride));
          const auto cd = gather(d_col, _mm256_mullo_epi32(iota(c), stride));
          const auto m = mismatch(lhs, gather(rhs_row, cd));
          if (m != 0) return {{d, a, b, c + first_lane(m)}};
        }
        for (; c < n; ++c) {
          if (M[at2(n, ab_row[c], d)] != rhs_row[M[at2(n, c, d)]]) return {{d, a, b, c}};
        }
      }
  }
  return std::nullopt;
}

Witness<3> preserves_ternary(std::span<const Id> src, Id n, std::span<const Id> dst, Id m,
                             std::span<const Id> map) {
  const Id* S = src.data();
  const Id* D = dst.data();
  const Id* f = map.data();
  for (Id a = 0; a < n; ++a)
    for (Id b = 0; b < n; ++b) {
      const Id* s_row = S + at3(n, a, b, 0);
      const Id* d_row = D + at3(m, f[a], f[b], 0);
      Id c = 0;
      for (; c + kLanes <= n; c += kLanes) {
        const auto mask = mismatch(gather(f, load(s_row + c)), gather(d_row, load(f + c)));
        if (mask != 0) return {{a, b, c + first_lane(mask)}};
      }
      for (; c < n; ++c) {
        if (f[s_row[c]] != d_row[f[c]]) return {{a, b, c}};
      }
    }
  return std::nullopt;
}

Witness<2> preserves_binary(std::span<const Id> src, Id n, std::span<const Id> dst, Id m,
                            std::span<const Id> map) {
  const Id* S = src.data();
  const Id* D = dst.data();
  const Id* f = map.data();
  for (Id a = 0; a < n; ++a) {
    const Id* s_row = S + at2(n, a, 0);
    const Id* d_row = D + at2(m, f[a], 0);
    Id b = 0;
    for (; b + kLanes <= n; b += kLanes) {
      const auto mask = mismatch(gather(f, load(s_row + b)), gather(d_row, load(f + b)));
      if (mask != 0) return {{a, b + first_lane(mask)}};
    }
    for (; b < n; ++b) {
      if (f[s_row[b]] != d_row[f[b]]) return {{a, b}};
    }
  }
  return std::nullopt;
}

}  // namespace

const KernelSet& avx2_set() {
  static const KernelSet set{
      "avx2",         heap_associativity,  malcev,
      heap_commutativity, mult_associativity, left_distributivity,
      right_distributivity, preserves_ternary, preserves_binary,
  };
  return set;
}

}  // namespace trusskit::kernels
