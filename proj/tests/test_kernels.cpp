#include <doctest.h>

#include <random>

#include "trusskit/endo_truss.hpp"
#include "trusskit/heap_truss.hpp"
#include "trusskit/kernels.hpp"
#include "trusskit/ring_module.hpp"

using namespace trusskit;
namespace k = trusskit::kernels;

namespace {

struct Tables {
  Id n;
  std::vector<Id> ternary;
  std::vector<Id> mult;
};

std::vector<Id> random_table(std::mt19937& rng, Id n, std::size_t size) {
  std::uniform_int_distribution<Id> pick(0, n - 1);
  std::vector<Id> t(size);
  for (auto& v : t) v = pick(rng);
  return t;
}

void mutate(std::mt19937& rng, std::vector<Id>& t, Id n) {
  if (n < 2) return;
  std::uniform_int_distribution<std::size_t> pos(0, t.size() - 1);
  std::uniform_int_distribution<Id> shift(1, n - 1);
  auto& v = t[pos(rng)];
  v = (v + shift(rng)) % n;
}

// Valid, randomly corrupted and random tables on 1..13 elements.
std::vector<Tables> corpus() {
  std::mt19937 rng(20240611);
  std::vector<Tables> out;
  for (Id n = 1; n <= 13; ++n) {
    const auto ring = ring_as_truss(make_ring_zn(n));
    std::vector<Id> ternary(ring.heap().table().begin(), ring.heap().table().end());
    std::vector<Id> mult(ring.mult_table().begin(), ring.mult_table().end());
    out.push_back({n, ternary, mult});
    for (int i = 0; i < 4; ++i) {
      auto t = ternary, m = mult;
      mutate(rng, t, n);
      mutate(rng, m, n);
      out.push_back({n, t, m});
      auto t2 = ternary;
      mutate(rng, t2, n);
      out.push_back({n, t2, mult});
      auto m2 = mult;
      mutate(rng, m2, n);
      out.push_back({n, ternary, m2});
    }
    out.push_back({n, random_table(rng, n, std::size_t{n} * n * n), random_table(rng, n, std::size_t{n} * n)});
  }
  for (const auto& g : {make_group({2}), make_group({3})}) {
    const auto t = build_endo_truss(g).to_truss();
    out.push_back({t.size(), {t.heap().table().begin(), t.heap().table().end()},
                   {t.mult_table().begin(), t.mult_table().end()}});
  }
  return out;
}

}  // namespace

TEST_CASE("active kernel set is one of the variants") {
  const auto& active = k::active();
  const bool known = &active == &k::scalar() || (k::avx2() != nullptr && &active == k::avx2());
  CHECK(known);
  MESSAGE("active kernels: " << active.name);
}

TEST_CASE("vector kernels return the scalar witnesses") {
  const auto* fast = k::avx2();
  if (fast == nullptr) {
    MESSAGE("AVX2 kernels unavailable on this machine; equivalence not exercised");
    return;
  }
  const auto& ref = k::scalar();
  std::mt19937 rng(7);
  std::size_t failures_seen = 0;
  for (const auto& c : corpus()) {
    CAPTURE(c.n);
    const auto w = ref.heap_associativity(c.ternary, c.n);
    failures_seen += w.has_value();
    CHECK(fast->heap_associativity(c.ternary, c.n) == w);
    CHECK(fast->malcev(c.ternary, c.n) == ref.malcev(c.ternary, c.n));
    CHECK(fast->heap_commutativity(c.ternary, c.n) == ref.heap_commutativity(c.ternary, c.n));
    CHECK(fast->mult_associativity(c.mult, c.n) == ref.mult_associativity(c.mult, c.n));
    CHECK(fast->left_distributivity(c.ternary, c.mult, c.n) == ref.left_distributivity(c.ternary, c.mult, c.n));
    CHECK(fast->right_distributivity(c.ternary, c.mult, c.n) == ref.right_distributivity(c.ternary, c.mult, c.n));

    // Maps into the same tables: identity, a random map and constants.
    std::vector<std::vector<Id>> maps;
    std::vector<Id> id(c.n);
    for (Id i = 0; i < c.n; ++i) id[i] = i;
    maps.push_back(id);
    maps.push_back(random_table(rng, c.n, c.n));
    maps.push_back(std::vector<Id>(c.n, 0));
    for (const auto& f : maps) {
      CHECK(fast->preserves_ternary(c.ternary, c.n, c.ternary, c.n, f) ==
            ref.preserves_ternary(c.ternary, c.n, c.ternary, c.n, f));
      CHECK(fast->preserves_binary(c.mult, c.n, c.mult, c.n, f) == ref.preserves_binary(c.mult, c.n, c.mult, c.n, f));
    }
  }
  CHECK(failures_seen > 0);
}

TEST_CASE("scalar kernels find the first counterexample") {
  const auto& ref = k::scalar();
  // Z/3 with [0,0,1] corrupted: the first Mal'cev failure is at (a,b) = (0,1).
  const auto heap = heap_from_group(make_group({3})).with_entry(0, 0, 1, 2);
  const auto w = ref.malcev(heap.table(), 3);
  REQUIRE(w.has_value());
  CHECK(*w == std::array<Id, 2>{0, 1});
  CHECK_FALSE(ref.malcev(heap_from_group(make_group({3})).table(), 3).has_value());
  // Table on one element always satisfies everything.
  const std::vector<Id> one{0};
  CHECK_FALSE(ref.heap_associativity(one, 1).has_value());
  CHECK_FALSE(ref.left_distributivity(one, one, 1).has_value());
}

TEST_CASE("maps between carriers of different sizes") {
  const auto* fast = k::avx2();
  const auto& ref = k::scalar();
  const auto s = ring_as_truss(make_ring_zn(6));
  const auto t = ring_as_truss(make_ring_zn(3));
  std::vector<Id> reduce(6), shifted(6);
  for (Id i = 0; i < 6; ++i) {
    reduce[i] = i % 3;
    shifted[i] = (i + 1) % 3;
  }
  CHECK_FALSE(ref.preserves_ternary(s.heap().table(), 6, t.heap().table(), 3, reduce).has_value());
  CHECK_FALSE(ref.preserves_binary(s.mult_table(), 6, t.mult_table(), 3, reduce).has_value());
  CHECK_FALSE(ref.preserves_ternary(s.heap().table(), 6, t.heap().table(), 3, shifted).has_value());
  CHECK(ref.preserves_binary(s.mult_table(), 6, t.mult_table(), 3, shifted).has_value());
  if (fast != nullptr) {
    CHECK(fast->preserves_binary(s.mult_table(), 6, t.mult_table(), 3, shifted) ==
          ref.preserves_binary(s.mult_table(), 6, t.mult_table(), 3, shifted));
  }
}
