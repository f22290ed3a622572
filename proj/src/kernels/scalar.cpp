#include "kernels_internal.hpp"

namespace trusskit::kernels {
namespace {

inline std::size_t at3(Id n, Id a, Id b, Id c) {
  return (static_cast<std::size_t>(a) * n + b) * n + c;
}
inline std::size_t at2(Id n, Id a, Id b) { return static_cast<std::size_t>(a) * n + b; }

Witness<5> heap_associativity(std::span<const Id> t, Id n) {
  for (Id a = 0; a < n; ++a)
    for (Id b = 0; b < n; ++b)
      for (Id c = 0; c < n; ++c) {
        const Id abc = t[at3(n, a, b, c)];
        for (Id d = 0; d < n; ++d)
          for (Id e = 0; e < n; ++e) {
            if (t[at3(n, abc, d, e)] != t[at3(n, a, b, t[at3(n, c, d, e)])]) return {{a, b, c, d, e}};
          }
      }
  return std::nullopt;
}

Witness<2> malcev(std::span<const Id> t, Id n) {
  for (Id a = 0; a < n; ++a)
    for (Id b = 0; b < n; ++b) {
      if (t[at3(n, a, a, b)] != b || t[at3(n, b, a, a)] != b) return {{a, b}};
    }
  return std::nullopt;
}

Witness<3> heap_commutativity(std::span<const Id> t, Id n) {
  for (Id a = 0; a < n; ++a)
    for (Id b = 0; b < n; ++b)
      for (Id c = 0; c < n; ++c) {
        if (t[at3(n, a, b, c)] != t[at3(n, c, b, a)]) return {{a, b, c}};
      }
  return std::nullopt;
}

Witness<3> mult_associativity(std::span<const Id> m, Id n) {
  for (Id a = 0; a < n; ++a)
    for (Id b = 0; b < n; ++b) {
      const Id ab = m[at2(n, a, b)];
      for (Id c = 0; c < n; ++c) {
        if (m[at2(n, ab, c)] != m[at2(n, a, m[at2(n, b, c)])]) return {{a, b, c}};
      }
    }
  return std::nullopt;
}

Witness<4> left_distributivity(std::span<const Id> t, std::span<const Id> m, Id n) {
  for (Id d = 0; d < n; ++d)
    for (Id a = 0; a < n; ++a)
      for (Id b = 0; b < n; ++b) {
        const Id da = m[at2(n, d, a)];
        const Id db = m[at2(n, d, b)];
        for (Id c = 0; c < n; ++c) {
          if (m[at2(n, d, t[at3(n, a, b, c)])] != t[at3(n, da, db, m[at2(n, d, c)])]) return {{d, a, b, c}};
        }
      }
  return std::nullopt;
}

Witness<4> right_distributivity(std::span<const Id> t, std::span<const Id> m, Id n) {
  for (Id d = 0; d < n; ++d)
    for (Id a = 0; a < n; ++a)
      for (Id b = 0; b < n; ++b) {
        const Id ad = m[at2(n, a, d)];
        const Id bd = m[at2(n, b, d)];
        for (Id c = 0; c < n; ++c) {
          if (m[at2(n, t[at3(n, a, b, c)], d)] != t[at3(n, ad, bd, m[at2(n, c, d)])]) return {{d, a, b, c}};
        }
      }
  return std::nullopt;
}

Witness<3> preserves_ternary(std::span<const Id> src, Id n, std::span<const Id> dst, Id m,
                             std::span<const Id> f) {
  for (Id a = 0; a < n; ++a)
    for (Id b = 0; b < n; ++b)
      for (Id c = 0; c < n; ++c) {
        if (f[src[at3(n, a, b, c)]] != dst[at3(m, f[a], f[b], f[c])]) return {{a, b, c}};
      }
  return std::nullopt;
}

Witness<2> preserves_binary(std::span<const Id> src, Id n, std::span<const Id> dst, Id m,
                            std::span<const Id> f) {
  for (Id a = 0; a < n; ++a)
    for (Id b = 0; b < n; ++b) {
      if (f[src[at2(n, a, b)]] != dst[at2(m, f[a], f[b])]) return {{a, b}};
    }
  return std::nullopt;
}

}  // namespace

const KernelSet& scalar() {
  static const KernelSet set{
      "scalar",         heap_associativity,  malcev,
      heap_commutativity, mult_associativity, left_distributivity,
      right_distributivity, preserves_ternary, preserves_binary,
  };
  return set;
}

}  // namespace trusskit::kernels
