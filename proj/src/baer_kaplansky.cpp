#include "trusskit/baer_kaplansky.hpp"

#include <algorithm>
#include <set>

#include "trusskit/errors.hpp"

namespace trusskit {
namespace {

void require_total(const EndoTruss& src, const EndoTruss& dst, const TrussMorphism& phi) {
  if (phi.map.size() != src.size()) throw InvalidInput("truss morphism is not total on the source");
  for (const auto v : phi.map) {
    if (v >= dst.size()) throw InvalidInput("truss morphism value out of range");
  }
}

// Image of an element table (indices into H) as a heap morphism G -> H.
HeapMorphism decompose_indices(const AbGroup& g, const AbGroup& h, const std::vector<Id>& values) {
  std::vector<GroupElement> table;
  table.reserve(values.size());
  for (const auto v : values) table.push_back(h.element_at(v));
  return decompose(g, h, table);
}

std::vector<Id> index_table(const HeapMorphism& xi) {
  std::vector<Id> out(xi.source().cardinality());
  for (Id a = 0; a < out.size(); ++a) out[a] = static_cast<Id>(xi.target().index_of(xi(xi.source().element_at(a))));
  return out;
}

bool intertwines_table(const EndoTruss& src, const EndoTruss& dst, const TrussMorphism& phi,
                       const std::vector<Id>& xi) {
  const auto order = static_cast<Id>(src.base().cardinality());
  for (Id alpha = 0; alpha < src.size(); ++alpha) {
    for (Id a = 0; a < order; ++a) {
      if (dst.eval(phi(alpha), xi[a]) != xi[src.eval(alpha, a)]) return false;
    }
  }
  return true;
}

}  // namespace

HeapMorphism theta(const EndoTruss& src, const EndoTruss& dst, const TrussMorphism& phi) {
  require_total(src, dst, phi);
  if (src.size() != dst.size() || !phi.is_bijective()) throw NotAnIsomorphism("theta: map is not a bijection");
  if (!is_truss_morphism(src, dst, phi.map)) throw NotAnIsomorphism("theta: map is not a truss morphism");
  const auto order = static_cast<Id>(src.base().cardinality());
  std::vector<Id> values(order);
  for (Id a = 0; a < order; ++a) values[a] = dst.eval(phi(src.hat_index(a)), 0);
  auto result = decompose_indices(src.base(), dst.base(), values);
  if (!is_bijective(result)) throw NotAnIsomorphism("theta: induced heap map is not bijective");
  return result;
}

TrussMorphism upsilon(const EndoTruss& src, const EndoTruss& dst, const HeapMorphism& phi) {
  if (!(phi.source() == src.base()) || !(phi.target() == dst.base())) {
    throw InvalidInput("upsilon: heap morphism does not connect the truss bases");
  }
  if (!is_bijective(phi)) throw NotAnIsomorphism("upsilon: heap morphism is not bijective");
  const auto inv = inverse(phi);
  TrussMorphism out{std::vector<Id>(src.size())};
  for (Id alpha = 0; alpha < src.size(); ++alpha) {
    const auto conjugate = compose(compose(phi, src.element(alpha)), inv);
    const auto id = dst.find(conjugate);
    if (!id) throw NotAnIsomorphism("upsilon: conjugate leaves the target truss");
    out.map[alpha] = *id;
  }
  return out;
}

BKReport verify_bk(const AbGroup& g, const AbGroup& h, bool brute_force, const Limits& limits) {
  BKReport report;
  report.left = g;
  report.right = h;
  report.groups_isomorphic = groups_isomorphic(g, h);

  const auto isos = heap_isos(g, h, limits);
  report.heap_iso_count = isos.size();
  const auto eg = build_endo_truss(g, limits);
  const auto eh = build_endo_truss(h, limits);

  std::set<std::vector<Id>> constructed;
  for (const auto& phi : isos) {
    const auto big_phi = upsilon(eg, eh, phi);
    report.upsilon_valid = report.upsilon_valid && big_phi.is_bijective() && is_truss_morphism(eg, eh, big_phi.map);
    const auto back = theta(eg, eh, big_phi);
    report.theta_upsilon = report.theta_upsilon && back == phi;
    report.upsilon_theta = report.upsilon_theta && upsilon(eg, eh, back) == big_phi;
    constructed.insert(big_phi.map);
  }
  report.upsilon_injective = constructed.size() == isos.size();
  const std::uint64_t expected_count = h.cardinality() * group_isomorphisms(g, h, limits).size();

  if (eg.size() != eh.size()) {
    report.truss_iso_count = 0;
    report.truss_iso_exists = false;
    report.note = "truss carriers differ in size (" + std::to_string(eg.size()) + " vs " +
                  std::to_string(eh.size()) + ")";
  } else if (brute_force) {
    if (eg.size() <= limits.bruteforce_iso_carrier &&
        saturating_factorial(eg.size()) <= limits.max_enumeration) {
      const auto found = enumerate_truss_isos(eg.to_truss(limits), eh.to_truss(limits), limits);
      report.brute_force_run = true;
      report.truss_iso_count = found.size();
      report.truss_iso_exists = !found.empty();
      report.count_matches = found.size() == expected_count;
      for (const auto& big_phi : found) {
        report.upsilon_theta = report.upsilon_theta && upsilon(eg, eh, theta(eg, eh, big_phi)) == big_phi;
        report.count_matches = report.count_matches && constructed.count(big_phi.map) == 1;
      }
    } else {
      report.note = "brute-force bijection search skipped: carrier of " + std::to_string(eg.size()) +
                    " elements exceeds the bound";
    }
  }
  if (!report.truss_iso_exists && !isos.empty() && report.upsilon_valid) report.truss_iso_exists = true;

  const bool heap_side = (report.heap_iso_count > 0) == report.groups_isomorphic;
  const bool truss_side = !report.truss_iso_exists || *report.truss_iso_exists == report.groups_isomorphic;
  report.consistent = heap_side && truss_side && report.roundtrip() && report.upsilon_injective &&
                      report.upsilon_valid && report.count_matches;
  return report;
}

InnerData inner_data(const EndoTruss& src, const EndoTruss& dst, const TrussMorphism& phi, const Limits& limits) {
  require_total(src, dst, phi);
  const auto image = dst.element(phi(src.hat_index(0)));
  InnerData data{image.linear(), image.translation(), {}, {}};

  for (auto& xi : heap_morphisms(src.base(), dst.base(), limits)) {
    if (intertwines_table(src, dst, phi, index_table(xi))) data.xi_set.push_back(std::move(xi));
  }
  std::set<GroupElement> coset;
  const auto& h = dst.base();
  for (std::uint64_t x = 0; x < h.cardinality(); ++x) coset.insert(h.add(data.epsilon(h.element_at(x)), data.e));
  data.coset.assign(coset.begin(), coset.end());
  return data;
}

HeapMorphism xi_b(const EndoTruss& src, const EndoTruss& dst, const TrussMorphism& phi, const GroupElement& b) {
  require_total(src, dst, phi);
  const auto b_index = static_cast<Id>(dst.base().index_of(b));
  const auto order = static_cast<Id>(src.base().cardinality());
  std::vector<Id> values(order);
  for (Id a = 0; a < order; ++a) values[a] = dst.eval(phi(src.hat_index(a)), b_index);
  return decompose_indices(src.base(), dst.base(), values);
}

bool intertwines(const EndoTruss& src, const EndoTruss& dst, const TrussMorphism& phi, const HeapMorphism& xi) {
  require_total(src, dst, phi);
  if (!(xi.source() == src.base()) || !(xi.target() == dst.base())) return false;
  return intertwines_table(src, dst, phi, index_table(xi));
}

std::vector<VarthetaEntry> vartheta(const EndoTruss& src, const EndoTruss& dst, const TrussMorphism& phi,
                                    const InnerData& data) {
  std::vector<VarthetaEntry> out;
  out.reserve(data.coset.size());
  for (const auto& c : data.coset) out.push_back({c, xi_b(src, dst, phi, c)});
  return out;
}

std::optional<HeapMorphism> unique_xi_if_constant(const EndoTruss& src, const EndoTruss& dst,
                                                  const TrussMorphism& phi, const Limits& limits) {
  require_total(src, dst, phi);
  bool applicable = false;
  for (const auto c : src.constants()) applicable = applicable || dst.is_constant(phi(c));
  if (!applicable) return std::nullopt;
  auto data = inner_data(src, dst, phi, limits);
  if (data.xi_set.size() != 1) throw Error("intertwining heap morphism is not unique");
  return std::move(data.xi_set.front());
}

bool maps_constants_to_constants(const EndoTruss& src, const EndoTruss& dst, const TrussMorphism& phi) {
  require_total(src, dst, phi);
  const auto cs = src.constants();
  return std::all_of(cs.begin(), cs.end(), [&](Id c) { return dst.is_constant(phi(c)); });
}

bool InnerCheck::all() const {
  return epsilon_idempotent && epsilon_kills_e && xi_nonempty && xi_b_members && xi_zero_in_coset && xi_subheap &&
         vartheta_bijective && vartheta_heap_morphism && cardinality && unique_xi.value_or(true);
}

InnerCheck check_inner(const EndoTruss& src, const EndoTruss& dst, const TrussMorphism& phi, const Limits& limits) {
  const auto data = inner_data(src, dst, phi, limits);
  const auto& h = dst.base();
  const auto& g = src.base();
  InnerCheck check;

  check.epsilon_idempotent = compose_homs(data.epsilon, data.epsilon) == data.epsilon;
  check.epsilon_kills_e = data.epsilon(data.e) == h.zero();
  check.xi_nonempty = !data.xi_set.empty();

  auto in_xi = [&](const HeapMorphism& m) {
    return std::find(data.xi_set.begin(), data.xi_set.end(), m) != data.xi_set.end();
  };
  auto in_coset = [&](const GroupElement& x) { return std::binary_search(data.coset.begin(), data.coset.end(), x); };

  check.xi_b_members = true;
  for (std::uint64_t b = 0; b < h.cardinality(); ++b) {
    check.xi_b_members = check.xi_b_members && in_xi(xi_b(src, dst, phi, h.element_at(b)));
  }
  check.xi_zero_in_coset = std::all_of(data.xi_set.begin(), data.xi_set.end(),
                                       [&](const HeapMorphism& xi) { return in_coset(xi(g.zero())); });
  check.xi_subheap = true;
  for (const auto& x : data.xi_set)
    for (const auto& y : data.xi_set)
      for (const auto& z : data.xi_set) check.xi_subheap = check.xi_subheap && in_xi(heap_ternary(x, y, z));

  const auto theta_map = vartheta(src, dst, phi, data);
  std::set<std::size_t> hit;
  bool into = true;
  for (const auto& entry : theta_map) {
    const auto it = std::find(data.xi_set.begin(), data.xi_set.end(), entry.xi);
    if (it == data.xi_set.end()) {
      into = false;
      continue;
    }
    hit.insert(static_cast<std::size_t>(it - data.xi_set.begin()));
  }
  check.vartheta_bijective = into && hit.size() == theta_map.size() && hit.size() == data.xi_set.size();

  check.vartheta_heap_morphism = true;
  for (std::size_t i = 0; i < theta_map.size(); ++i)
    for (std::size_t j = 0; j < theta_map.size(); ++j)
      for (std::size_t k = 0; k < theta_map.size(); ++k) {
        const auto c = h.ternary(theta_map[i].c, theta_map[j].c, theta_map[k].c);
        const auto pos = std::lower_bound(data.coset.begin(), data.coset.end(), c);
        if (pos == data.coset.end() || *pos != c) {
          check.vartheta_heap_morphism = false;
          continue;
        }
        const auto& image = theta_map[static_cast<std::size_t>(pos - data.coset.begin())].xi;
        check.vartheta_heap_morphism =
            check.vartheta_heap_morphism && image == heap_ternary(theta_map[i].xi, theta_map[j].xi, theta_map[k].xi);
      }

  check.cardinality = data.xi_set.size() == hom_image(data.epsilon).size() && data.xi_set.size() == data.coset.size();

  bool applicable = false;
  for (const auto c : src.constants()) applicable = applicable || dst.is_constant(phi(c));
  if (applicable) {
    check.unique_xi = data.xi_set.size() == 1 && intertwines(src, dst, phi, data.xi_set.front());
  }
  return check;
}

}  // namespace trusskit
