#include <doctest.h>

#include <set>

#include "oracles.hpp"
#include "trusskit/endo_truss.hpp"
#include "trusskit/errors.hpp"
#include "trusskit/io.hpp"

using namespace trusskit;

namespace {

GroupElement el(std::vector<Residue> c) { return GroupElement(std::move(c)); }

// Groups of order <= 8 whose E(G) tables fit the default bounds.
const std::vector<std::vector<std::uint64_t>> kGroups = {{1}, {2}, {3}, {4}, {2, 2}, {5}, {6}, {7}, {8}, {2, 4}};

std::vector<oracle::Id> value_table(const EndoTruss& t, Id id) {
  std::vector<oracle::Id> out(t.base().cardinality());
  for (Id x = 0; x < out.size(); ++x) out[x] = t.eval(id, x);
  return out;
}

}  // namespace

TEST_CASE("evaluation") {
  const auto z4 = make_group({4});
  CHECK(HeapMorphism(GroupHom::identity(z4), el({0}))(el({3})) == el({3}));
  CHECK(constant_map(z4, z4, el({2}))(el({1})) == el({2}));
  CHECK(eval(HeapMorphism(GroupHom(z4, z4, {2}), el({1})), el({3})) == el({3}));
  CHECK_THROWS_AS(HeapMorphism(GroupHom::identity(z4), el({4})), InvalidInput);
}

TEST_CASE("decomposition") {
  const auto z4 = make_group({4});
  const std::vector<GroupElement> shift{el({1}), el({2}), el({3}), el({0})};
  const auto phi = decompose(z4, z4, shift);
  CHECK(phi.linear() == GroupHom::identity(z4));
  CHECK(phi.translation() == el({1}));
  const std::vector<GroupElement> square{el({0}), el({1}), el({0}), el({1})};
  CHECK_FALSE(try_decompose(z4, z4, square).has_value());
  CHECK_THROWS_AS(decompose(z4, z4, square), NotAHeapMorphism);
  const auto twice = GroupHom(z4, z4, {2});
  const auto d = decompose(z4, z4, eval_table(HeapMorphism(twice, z4.zero())));
  CHECK(d.linear() == twice);
  CHECK(d.translation() == z4.zero());
  CHECK_THROWS_AS(decompose(z4, z4, std::vector<GroupElement>{el({0})}), InvalidInput);
}

TEST_CASE("decomposition round trip") {
  for (const auto& orders : kGroups) {
    const auto g = make_group(orders);
    for (const auto& phi : heap_morphisms(g, g)) CHECK(decompose(g, g, eval_table(phi)) == phi);
  }
  const auto g = make_group({2}), h = make_group({3, 2});
  for (const auto& phi : heap_morphisms(g, h)) CHECK(decompose(g, h, eval_table(phi)) == phi);
}

TEST_CASE("heap morphism sets") {
  const auto z2 = make_group({2}), z3 = make_group({3});
  CHECK(heap_morphisms(z2, z2).size() == 4);
  CHECK(heap_isos(z2, z2).size() == 2);
  CHECK(heap_isos(z3, z3).size() == 6);
  CHECK(heap_isos(make_group({4}), make_group({2, 2})).empty());
  for (const auto& a : kGroups)
    for (const auto& b : kGroups) {
      const auto g = make_group(a), h = make_group(b);
      if (g.cardinality() * h.cardinality() > 36) continue;
      CHECK(heap_morphisms(g, h).size() == oracle::heap_maps(oracle::Group(a), oracle::Group(b)).size());
      CHECK(heap_isos(g, h).size() == h.cardinality() * group_isomorphisms(g, h).size());
    }
  Limits tight;
  tight.max_enumeration = 10;
  CHECK_THROWS_AS(heap_morphisms(make_group({4}), make_group({4}), tight), BoundExceeded);
}

TEST_CASE("inverse and composition of heap morphisms") {
  const auto g = make_group({2, 3});
  for (const auto& phi : heap_isos(g, g)) {
    const auto inv = inverse(phi);
    for (const auto& x : enumerate_elements(g)) {
      CHECK(inv(phi(x)) == x);
      CHECK(phi(inv(x)) == x);
    }
  }
  const auto z4 = make_group({4});
  CHECK_THROWS_AS(inverse(HeapMorphism(GroupHom(z4, z4, {2}), el({1}))), NotAnIsomorphism);
}

TEST_CASE("endomorphism truss sizes") {
  const auto e2 = build_endo_truss(make_group({2}));
  CHECK(e2.size() == 4);
  CHECK(build_endo_truss(make_group({3})).size() == 9);
  CHECK(build_endo_truss(make_group({2, 2})).size() == 64);
  // Z/2: identity, x -> x + 1 and the two constants.
  std::set<std::vector<oracle::Id>> tables;
  for (Id id = 0; id < e2.size(); ++id) tables.insert(value_table(e2, id));
  CHECK(tables == std::set<std::vector<oracle::Id>>{{0, 1}, {1, 0}, {0, 0}, {1, 1}});
}

TEST_CASE("E(G) laws agree with pointwise maps") {
  for (const auto& orders : kGroups) {
    const auto g = make_group(orders);
    const auto t = build_endo_truss(g);
    CAPTURE(format_group_spec(g));
    CHECK(t.size() == g.cardinality() * hom_count(g, g));
    const Id n = static_cast<Id>(g.cardinality());
    for (Id a = 0; a < t.size(); ++a) {
      const auto ta = value_table(t, a);
      CHECK(t.id_of(t.element(a)) == a);
      for (Id b = 0; b < t.size(); ++b) {
        const auto ab = value_table(t, t.compose(a, b));
        const auto tb = value_table(t, b);
        bool same = true;
        for (Id x = 0; x < n; ++x) same = same && ab[x] == ta[tb[x]];
        CHECK(same);
      }
    }
    // Ternary on a stride of triples.
    const auto h = heap_from_group(g);
    for (Id a = 0; a < t.size(); a += 3)
      for (Id b = 0; b < t.size(); b += 2)
        for (Id c = 0; c < t.size(); c += 5) {
          const auto abc = value_table(t, t.ternary(a, b, c));
          bool same = true;
          for (Id x = 0; x < n; ++x) same = same && abc[x] == h(t.eval(a, x), t.eval(b, x), t.eval(c, x));
          CHECK(same);
        }
  }
}

TEST_CASE("E(G) is a valid truss matching the oracle construction") {
  for (const auto& orders : kGroups) {
    const auto g = make_group(orders);
    const auto t = build_endo_truss(g);
    if (t.size() > 64) continue;
    const auto truss = t.to_truss();
    CAPTURE(format_group_spec(g));
    CHECK(validate_truss(truss).valid());
    CHECK(truss.unit() == t.unit());

    const oracle::EndoOracle o{oracle::Group(orders)};
    REQUIRE(o.maps.size() == t.size());
    std::vector<Id> to_oracle(t.size());
    for (Id id = 0; id < t.size(); ++id) to_oracle[id] = o.index(value_table(t, id));
    const oracle::Truss lib{truss.size(),
                            {truss.heap().table().begin(), truss.heap().table().end()},
                            {truss.mult_table().begin(), truss.mult_table().end()}};
    CHECK(oracle::preserves(lib, o.truss, to_oracle));
  }
}

TEST_CASE("constants") {
  const auto g = make_group({2});
  const auto e2 = build_endo_truss(g);
  const auto cs = e2.constants();
  REQUIRE(cs.size() == 2);
  for (const auto c : cs) CHECK(e2.element(c).is_constant());
  for (const auto& orders : kGroups) {
    const auto gg = make_group(orders);
    const auto t = build_endo_truss(gg);
    const auto sub = constants(t);
    CHECK(validate_truss(sub.truss).valid());
    CHECK(left_absorbers(t.to_truss()) == t.constants());
    const auto elements = enumerate_elements(gg);
    for (const auto& a : elements) {
      CHECK(t.element(t.hat(a))(gg.zero()) == a);
      for (const auto& b : elements) {
        CHECK(t.compose(t.hat(a), t.hat(b)) == t.hat(a));
        for (const auto& c : elements) CHECK(t.ternary(t.hat(a), t.hat(b), t.hat(c)) == t.hat(gg.ternary(a, b, c)));
      }
    }
  }
  CHECK(build_endo_truss(make_group({3})).constants().size() == 3);
}

TEST_CASE("constant maps and composition with constants") {
  for (const auto& orders : kGroups) {
    const auto g = make_group(orders);
    const auto t = build_endo_truss(g);
    const Id n = static_cast<Id>(g.cardinality());
    for (Id phi = 0; phi < t.size(); ++phi) {
      bool absorbs_hats = true;
      for (Id a = 0; a < n; ++a) {
        CHECK(t.compose(phi, t.hat_index(a)) == t.hat_index(t.eval(phi, a)));
        absorbs_hats = absorbs_hats && t.compose(phi, t.hat_index(a)) == phi;
      }
      CHECK(absorbs_hats == t.is_constant(phi));
      if (t.is_constant(phi)) {
        for (Id alpha = 0; alpha < t.size(); ++alpha) CHECK(t.compose(phi, alpha) == phi);
      }
    }
  }
}

TEST_CASE("sub-trusses of E(G) from hom subsets") {
  const auto z4 = make_group({4});
  // {0, id} is not closed under the ternary operation (0 - id + id ok, id - 0 + id = 2).
  CHECK_THROWS_AS(EndoTruss(z4, {GroupHom::zero(z4, z4), GroupHom::identity(z4)}), InvalidInput);
  std::vector<GroupHom> all = hom_enumerate(z4, z4);
  CHECK(EndoTruss(z4, all).size() == 16);
  all.push_back(all.front());
  CHECK_THROWS_AS(EndoTruss(z4, all), InvalidInput);
  const auto z2 = make_group({2});
  CHECK_THROWS_AS(EndoTruss(z4, {GroupHom::identity(z2)}), InvalidInput);
}

TEST_CASE("truss morphism check on endomorphism trusses") {
  const auto e2 = build_endo_truss(make_group({2}));
  std::vector<Id> id(e2.size());
  for (Id i = 0; i < e2.size(); ++i) id[i] = i;
  CHECK(is_truss_morphism(e2, e2, id));
  auto swapped = id;
  std::swap(swapped[e2.unit()], swapped[e2.hat_index(0)]);
  CHECK_FALSE(is_truss_morphism(e2, e2, swapped));
  CHECK(is_truss_morphism(e2, e2, std::vector<Id>(e2.size(), e2.unit())));
}

TEST_CASE("heap morphism JSON form") {
  const auto g = make_group({2, 4});
  const HeapMorphism phi(GroupHom(g, g, {1, 0, 2, 3}), el({1, 2}));
  const auto j = heap_morphism_to_json(phi);
  CHECK(j.dump() == R"({"linear":[[1,0],[2,3]],"translation":[1,2]})");
}
