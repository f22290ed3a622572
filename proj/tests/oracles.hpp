#pragma once

// Brute-force reference computations kept independent of the library: they
// work on plain tables built here, scan raw function spaces and never call
// the enumerators or kernels under test.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <vector>

namespace oracle {

using Id = std::uint32_t;
using Table = std::vector<Id>;

// Addition table of Z/n_1 x ... x Z/n_k, elements in mixed radix with the
// last coordinate fastest.
struct Group {
  std::vector<std::uint64_t> orders;
  Id n = 1;
  Table add;
  Table neg;

  explicit Group(std::vector<std::uint64_t> o) : orders(std::move(o)) {
    for (auto x : orders) n *= static_cast<Id>(x);
    add.resize(static_cast<std::size_t>(n) * n);
    neg.resize(n);
    for (Id a = 0; a < n; ++a)
      for (Id b = 0; b < n; ++b) add[a * n + b] = combine(a, b, +1);
    for (Id a = 0; a < n; ++a) neg[a] = combine(0, a, -1);
  }
  Id plus(Id a, Id b) const { return add[a * n + b]; }
  Id ternary(Id a, Id b, Id c) const { return plus(plus(a, neg[b]), c); }

 private:
  Id combine(Id a, Id b, int sign) const {
    Id out = 0, scale = 1;
    for (std::size_t i = orders.size(); i-- > 0;) {
      const auto m = static_cast<Id>(orders[i]);
      const Id x = (a / scale) % m, y = (b / scale) % m;
      const Id z = sign > 0 ? (x + y) % m : (x + m - y) % m;
      out += z * scale;
      scale *= m;
    }
    return out;
  }
};

// Every total map {0..n-1} -> {0..m-1} satisfying `ok` on the already
// assigned prefix; `ok(f, k)` sees f[0..k] assigned and must check only
// constraints whose arguments are all <= k.
inline void search_maps(Id n, Id m, const std::function<bool(const Table&, Id)>& ok,
                        const std::function<void(const Table&)>& visit) {
  Table f(n, 0);
  std::function<void(Id)> rec = [&](Id k) {
    if (k == n) {
      visit(f);
      return;
    }
    for (Id v = 0; v < m; ++v) {
      f[k] = v;
      if (ok(f, k)) rec(k + 1);
    }
  };
  rec(0);
}

// Additive maps G -> H, found by pruned search over all |H|^|G| functions.
inline std::vector<Table> additive_maps(const Group& g, const Group& h) {
  std::vector<Table> out;
  search_maps(
      g.n, h.n,
      [&](const Table& f, Id k) {
        for (Id a = 0; a <= k; ++a)
          for (Id b = 0; b <= k; ++b) {
            const Id s = g.plus(a, b);
            if (s <= k && f[s] != h.plus(f[a], f[b])) return false;
          }
        return true;
      },
      [&](const Table& f) { out.push_back(f); });
  return out;
}

// Maps preserving a - b + c.
inline std::vector<Table> heap_maps(const Group& g, const Group& h) {
  std::vector<Table> out;
  search_maps(
      g.n, h.n,
      [&](const Table& f, Id k) {
        for (Id a = 0; a <= k; ++a)
          for (Id b = 0; b <= k; ++b)
            for (Id c = 0; c <= k; ++c) {
              const Id t = g.ternary(a, b, c);
              if (t <= k && f[t] != h.ternary(f[a], f[b], f[c])) return false;
            }
        return true;
      },
      [&](const Table& f) { out.push_back(f); });
  return out;
}

// A truss on explicit tables.
struct Truss {
  Id n = 0;
  Table ternary;
  Table mult;
  Id t(Id a, Id b, Id c) const { return ternary[(a * n + b) * n + c]; }
  Id m(Id a, Id b) const { return mult[a * n + b]; }
};

// E(G) on all heap endomorphisms (as value tables), pointwise ternary and
// composition (f o g)(x) = f(g(x)).
struct EndoOracle {
  Group g;
  std::vector<Table> maps;
  Truss truss;

  explicit EndoOracle(const Group& base) : g(base), maps(heap_maps(base, base)) {
    std::sort(maps.begin(), maps.end());
    const auto n = static_cast<Id>(maps.size());
    truss.n = n;
    truss.ternary.resize(static_cast<std::size_t>(n) * n * n);
    truss.mult.resize(static_cast<std::size_t>(n) * n);
    Table tmp(g.n);
    for (Id a = 0; a < n; ++a)
      for (Id b = 0; b < n; ++b) {
        for (Id x = 0; x < g.n; ++x) tmp[x] = maps[a][maps[b][x]];
        truss.mult[a * n + b] = index(tmp);
        for (Id c = 0; c < n; ++c) {
          for (Id x = 0; x < g.n; ++x) tmp[x] = g.ternary(maps[a][x], maps[b][x], maps[c][x]);
          truss.ternary[(a * n + b) * n + c] = index(tmp);
        }
      }
  }
  Id index(const Table& f) const {
    return static_cast<Id>(std::lower_bound(maps.begin(), maps.end(), f) - maps.begin());
  }
  bool is_constant(Id a) const {
    return std::all_of(maps[a].begin(), maps[a].end(), [&](Id v) { return v == maps[a][0]; });
  }
};

inline bool preserves(const Truss& s, const Truss& t, const Table& f) {
  for (Id a = 0; a < s.n; ++a)
    for (Id b = 0; b < s.n; ++b) {
      if (f[s.m(a, b)] != t.m(f[a], f[b])) return false;
      for (Id c = 0; c < s.n; ++c)
        if (f[s.t(a, b, c)] != t.t(f[a], f[b], f[c])) return false;
    }
  return true;
}

// All truss morphisms s -> t by scanning every |t|^|s| map.
inline std::vector<Table> truss_morphisms(const Truss& s, const Truss& t) {
  std::vector<Table> out;
  search_maps(
      s.n, t.n, [](const Table&, Id) { return true; },
      [&](const Table& f) {
        if (preserves(s, t, f)) out.push_back(f);
      });
  return out;
}

// All bijective truss morphisms by scanning every permutation.
inline std::vector<Table> truss_isos(const Truss& s, const Truss& t) {
  std::vector<Table> out;
  if (s.n != t.n) return out;
  Table f(s.n);
  std::iota(f.begin(), f.end(), 0);
  do {
    if (preserves(s, t, f)) out.push_back(f);
  } while (std::next_permutation(f.begin(), f.end()));
  return out;
}

// A ring acting on a group by an explicit table act[r * |M| + m].
struct Module {
  Group ring_add;
  Table ring_mult;
  Group group;
  Table act;
  Id a(Id r, Id m) const { return act[r * group.n + m]; }
};

// Maps phi: M -> N that, for every e in M, are module morphisms
// (M, +_e, .e) -> (N, +_phi(e), .phi(e)), where x +_e y = x - e + y and
// r .e x = r x - r e + e.
inline std::vector<Table> every_e_morphisms(const Module& m, const Module& n) {
  std::vector<Table> out;
  const auto& gm = m.group;
  const auto& gn = n.group;
  search_maps(
      gm.n, gn.n, [](const Table&, Id) { return true; },
      [&](const Table& phi) {
        for (Id e = 0; e < gm.n; ++e) {
          const Id pe = phi[e];
          for (Id x = 0; x < gm.n; ++x)
            for (Id y = 0; y < gm.n; ++y)
              if (phi[gm.ternary(x, e, y)] != gn.ternary(phi[x], pe, phi[y])) return;
          for (Id r = 0; r < m.ring_add.n; ++r)
            for (Id x = 0; x < gm.n; ++x) {
              const Id lhs = phi[gm.ternary(m.a(r, x), m.a(r, e), e)];
              const Id rhs = gn.ternary(n.a(r, phi[x]), n.a(r, pe), pe);
              if (lhs != rhs) return;
            }
        }
        out.push_back(phi);
      });
  return out;
}

}  // namespace oracle
