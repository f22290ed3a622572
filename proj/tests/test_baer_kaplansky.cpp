#include <doctest.h>

#include <map>
#include <set>

#include "oracles.hpp"
#include "trusskit/baer_kaplansky.hpp"
#include "trusskit/errors.hpp"

using namespace trusskit;

namespace {

GroupElement el(std::vector<Residue> c) { return GroupElement(std::move(c)); }

const std::vector<std::vector<std::uint64_t>> kSmall = {{2}, {3}, {4}, {2, 2}, {5}, {6}};

std::vector<TrussMorphism> all_morphisms(const EndoTruss& s, const EndoTruss& t) {
  return enumerate_truss_morphisms(s.to_truss(), t.to_truss());
}

// |Xi| recomputed from raw value tables: heap maps G -> H (oracle search)
// commuting with every Phi(alpha).
std::size_t oracle_xi_count(const EndoTruss& s, const EndoTruss& t, const TrussMorphism& phi) {
  const oracle::Group g(s.base().orders()), h(t.base().orders());
  std::size_t count = 0;
  for (const auto& xi : oracle::heap_maps(g, h)) {
    bool ok = true;
    for (Id alpha = 0; alpha < s.size() && ok; ++alpha)
      for (Id a = 0; a < g.n && ok; ++a) ok = t.eval(phi(alpha), xi[a]) == xi[s.eval(alpha, a)];
    count += ok ? 1 : 0;
  }
  return count;
}

}  // namespace

TEST_CASE("theta and upsilon on E(Z/2)") {
  const auto g = make_group({2});
  const auto e2 = build_endo_truss(g);
  std::vector<Id> id(e2.size());
  for (Id i = 0; i < e2.size(); ++i) id[i] = i;
  const auto identity_heap = HeapMorphism(GroupHom::identity(g), g.zero());
  CHECK(theta(e2, e2, TrussMorphism{id}) == identity_heap);
  CHECK(upsilon(e2, e2, identity_heap).map == id);

  const HeapMorphism swap(GroupHom::identity(g), el({1}));
  const auto conj = upsilon(e2, e2, swap);
  CHECK(conj(e2.unit()) == e2.unit());
  const auto swap_id = e2.id_of(swap);
  CHECK(conj(swap_id) == swap_id);
  CHECK(conj(e2.hat(el({0}))) == e2.hat(el({1})));
  CHECK(conj(e2.hat(el({1}))) == e2.hat(el({0})));
  CHECK(theta(e2, e2, conj) == swap);

  std::set<std::vector<GroupElement>> found;
  for (const auto& phi : enumerate_truss_isos(e2.to_truss(), e2.to_truss())) found.insert(eval_table(theta(e2, e2, phi)));
  std::set<std::vector<GroupElement>> expected;
  for (const auto& phi : heap_isos(g, g)) expected.insert(eval_table(phi));
  CHECK(found == expected);
  CHECK(found.size() == 2);
}

TEST_CASE("theta and upsilon reject non-isomorphisms") {
  const auto g = make_group({2});
  const auto e2 = build_endo_truss(g);
  CHECK_THROWS_AS(theta(e2, e2, TrussMorphism{std::vector<Id>(4, e2.unit())}), NotAnIsomorphism);
  std::vector<Id> swapped{0, 1, 2, 3};
  std::swap(swapped[e2.unit()], swapped[e2.hat_index(0)]);
  CHECK_THROWS_AS(theta(e2, e2, TrussMorphism{swapped}), NotAnIsomorphism);
  CHECK_THROWS_AS(upsilon(e2, e2, constant_map(g, g, g.zero())), NotAnIsomorphism);
  CHECK_THROWS_AS(theta(e2, e2, TrussMorphism{{0, 1}}), InvalidInput);
}

TEST_CASE("upsilon is injective on heap isos of Z/3") {
  const auto g = make_group({3});
  const auto e3 = build_endo_truss(g);
  std::set<std::vector<Id>> images;
  for (const auto& phi : heap_isos(g, g)) {
    const auto big = upsilon(e3, e3, phi);
    CHECK(is_truss_morphism(e3, e3, big.map));
    CHECK(big.is_bijective());
    images.insert(big.map);
  }
  CHECK(images.size() == 6);
}

TEST_CASE("correspondence on all pairs of small groups") {
  for (const auto& a : kSmall)
    for (const auto& b : kSmall) {
      const auto g = make_group(a), h = make_group(b);
      const auto report = verify_bk(g, h, false);
      CAPTURE(format_group_spec(g));
      CAPTURE(format_group_spec(h));
      CHECK(report.theta_upsilon);
      CHECK(report.upsilon_theta);
      CHECK(report.upsilon_injective);
      CHECK(report.upsilon_valid);
      CHECK(report.consistent);
      CHECK(report.groups_isomorphic == (report.heap_iso_count > 0));
      CHECK(report.heap_iso_count == h.cardinality() * group_isomorphisms(g, h).size());
    }
}

TEST_CASE("brute-force truss iso counts") {
  const auto r22 = verify_bk(make_group({2}), make_group({2}), true);
  CHECK(r22.brute_force_run);
  CHECK(r22.truss_iso_count == 2);
  CHECK(r22.count_matches);
  CHECK(r22.consistent);

  const auto r33 = verify_bk(make_group({3}), make_group({3}), true);
  CHECK(r33.brute_force_run);
  CHECK(r33.truss_iso_count == 6);
  CHECK(r33.count_matches);

  // Oracle: bijections of the independently built E(Z/3).
  const oracle::EndoOracle o{oracle::Group({3})};
  CHECK(oracle::truss_isos(o.truss, o.truss).size() == 6);

  const auto r4 = verify_bk(make_group({4}), make_group({2, 2}), true);
  CHECK(r4.truss_iso_count == 0);
  CHECK(r4.truss_iso_exists == false);
  CHECK_FALSE(r4.groups_isomorphic);
  CHECK(r4.consistent);

  const auto r44 = verify_bk(make_group({4}), make_group({4}), true);
  CHECK_FALSE(r44.brute_force_run);
  CHECK_FALSE(r44.truss_iso_count.has_value());
  CHECK_FALSE(r44.note.empty());
  CHECK(r44.truss_iso_exists == true);

  const auto r6 = verify_bk(make_group({6}), make_group({2, 3}), false);
  CHECK(r6.heap_iso_count == 12);
  CHECK(r6.upsilon_injective);
  CHECK(r6.consistent);
}

TEST_CASE("inner data of every truss morphism E(Z/2) -> E(Z/2)") {
  const auto e2 = build_endo_truss(make_group({2}));
  const auto morphisms = all_morphisms(e2, e2);
  REQUIRE(morphisms.size() == 7);
  std::multiset<std::size_t> sizes;
  for (const auto& phi : morphisms) {
    const auto data = inner_data(e2, e2, phi);
    sizes.insert(data.xi_set.size());
    CHECK(data.xi_set.size() == oracle_xi_count(e2, e2, phi));
    const auto check = check_inner(e2, e2, phi);
    CHECK(check.all());
    CHECK(check.epsilon_idempotent);
    CHECK(check.epsilon_kills_e);
    CHECK(check.vartheta_bijective);
    CHECK(check.cardinality);
  }
  CHECK(sizes == std::multiset<std::size_t>{1, 1, 1, 1, 1, 1, 2});
}

TEST_CASE("inner data of every truss morphism E(Z/2) -> E(Z/3)") {
  const auto e2 = build_endo_truss(make_group({2}));
  const auto e3 = build_endo_truss(make_group({3}));
  const auto morphisms = all_morphisms(e2, e3);
  REQUIRE(morphisms.size() == 4);
  std::multiset<std::size_t> sizes;
  for (const auto& phi : morphisms) {
    const auto data = inner_data(e2, e3, phi);
    sizes.insert(data.xi_set.size());
    CHECK(data.xi_set.size() == oracle_xi_count(e2, e3, phi));
    CHECK(check_inner(e2, e3, phi).all());
  }
  CHECK(sizes == std::multiset<std::size_t>{1, 1, 1, 3});
}

TEST_CASE("constant endomorphism of E(Z/2)") {
  const auto g = make_group({2});
  const auto e2 = build_endo_truss(g);
  const TrussMorphism to_zero{std::vector<Id>(e2.size(), e2.hat_index(0))};
  REQUIRE(is_truss_morphism(e2, e2, to_zero.map));
  const auto data = inner_data(e2, e2, to_zero);
  CHECK(data.epsilon.is_zero());
  CHECK(data.e == g.zero());
  REQUIRE(data.xi_set.size() == 1);
  CHECK(data.xi_set.front() == constant_map(g, g, g.zero()));
  CHECK(data.coset == std::vector<GroupElement>{g.zero()});
}

TEST_CASE("xi_b and vartheta") {
  const auto g = make_group({2});
  const auto e2 = build_endo_truss(g);
  for (const auto& phi : all_morphisms(e2, e2)) {
    const auto data = inner_data(e2, e2, phi);
    for (const auto& b : enumerate_elements(g)) {
      const auto xi = xi_b(e2, e2, phi, b);
      CHECK(intertwines(e2, e2, phi, xi));
      CHECK(std::binary_search(data.coset.begin(), data.coset.end(), xi(g.zero())));
    }
    const auto table = vartheta(e2, e2, phi, data);
    std::set<GroupElement> at_zero;
    for (const auto& entry : table) {
      // xi_c(0) = epsilon(c) + e
      CHECK(entry.xi(g.zero()) == g.add(data.epsilon(entry.c), data.e));
      at_zero.insert(entry.xi(g.zero()));
    }
    CHECK(at_zero.size() == table.size());
    for (const auto& xi : data.xi_set) CHECK(xi_b(e2, e2, phi, xi(g.zero())) == xi);
  }
}

TEST_CASE("isomorphisms: xi_b is theta and the intertwiner is unique") {
  for (const auto& orders : std::vector<std::vector<std::uint64_t>>{{2}, {3}, {4}}) {
    const auto g = make_group(orders);
    const auto e = build_endo_truss(g);
    for (const auto& phi : heap_isos(g, g)) {
      const auto big = upsilon(e, e, phi);
      for (const auto& b : enumerate_elements(g)) CHECK(xi_b(e, e, big, b) == phi);
      const auto unique = unique_xi_if_constant(e, e, big);
      REQUIRE(unique.has_value());
      CHECK(*unique == phi);
      const auto data = inner_data(e, e, big);
      CHECK(data.epsilon.is_zero());
      CHECK(data.coset.size() == 1);
      CHECK(maps_constants_to_constants(e, e, big));
    }
  }
}

TEST_CASE("constants are not preserved by every truss morphism") {
  const auto e2 = build_endo_truss(make_group({2}));
  const TrussMorphism to_unit{std::vector<Id>(e2.size(), e2.unit())};
  CHECK(is_truss_morphism(e2, e2, to_unit.map));
  CHECK_FALSE(maps_constants_to_constants(e2, e2, to_unit));
  CHECK_FALSE(unique_xi_if_constant(e2, e2, to_unit).has_value());
  const auto check = check_inner(e2, e2, to_unit);
  CHECK_FALSE(check.unique_xi.has_value());
  CHECK(check.all());
  std::size_t kept = 0;
  const auto morphisms = all_morphisms(e2, e2);
  for (const auto& phi : morphisms) kept += maps_constants_to_constants(e2, e2, phi) ? 1 : 0;
  CHECK(kept == 6);
}

TEST_CASE("constant image forces a unique intertwiner") {
  const auto e2 = build_endo_truss(make_group({2}));
  const auto e3 = build_endo_truss(make_group({3}));
  std::size_t applicable = 0;
  for (const auto& [s, t] : {std::pair{&e2, &e2}, std::pair{&e2, &e3}}) {
    for (const auto& phi : all_morphisms(*s, *t)) {
      const auto check = check_inner(*s, *t, phi);
      if (!check.unique_xi) continue;
      ++applicable;
      CHECK(*check.unique_xi);
      const auto xi = unique_xi_if_constant(*s, *t, phi);
      REQUIRE(xi.has_value());
      CHECK(intertwines(*s, *t, phi, *xi));
    }
  }
  CHECK(applicable == 9);
}
