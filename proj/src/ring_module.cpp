#include "trusskit/ring_module.hpp"

#include <algorithm>
#include <map>
#include <initializer_list>

#include "trusskit/errors.hpp"

namespace trusskit {
namespace {

using Key = std::vector<Residue>;

Key key_of(const GroupHom& f) { return Key(f.matrix().begin(), f.matrix().end()); }

std::map<Key, Id> index_homs(const std::vector<GroupHom>& homs) {
  std::map<Key, Id> out;
  for (Id i = 0; i < homs.size(); ++i) out.emplace(key_of(homs[i]), i);
  return out;
}

void check_table(const std::vector<Id>& table, std::size_t expected, Id bound, const char* what) {
  if (table.size() != expected) {
    throw InvalidInput(std::string(what) + " table has " + std::to_string(table.size()) + " entries, expected " +
                       std::to_string(expected));
  }
  for (const auto v : table) {
    if (v >= bound) throw InvalidInput(std::string(what) + " table entry " + std::to_string(v) + " out of range");
  }
}

std::vector<Id> group_add_table(const AbGroup& g) {
  const auto n = static_cast<Id>(g.cardinality());
  const auto elements = enumerate_elements(g);
  std::vector<Id> out(static_cast<std::size_t>(n) * n);
  for (Id a = 0; a < n; ++a)
    for (Id b = 0; b < n; ++b) out[static_cast<std::size_t>(a) * n + b] = static_cast<Id>(g.index_of(g.add(elements[a], elements[b])));
  return out;
}

std::vector<Id> negation(Id n, const std::vector<Id>& add, Id zero) {
  std::vector<Id> out(n, zero);
  for (Id a = 0; a < n; ++a)
    for (Id b = 0; b < n; ++b)
      if (add[static_cast<std::size_t>(a) * n + b] == zero) {
        out[a] = b;
        break;
      }
  return out;
}

Id checked_size(const AbGroup& g, const char* what) {
  if (g.cardinality() > (std::uint64_t{1} << 16)) throw BoundExceeded(std::string(what) + " is too large for tables");
  return static_cast<Id>(g.cardinality());
}

// Records the first failing tuple of a lexicographic sweep.
class Sweep {
 public:
  explicit Sweep(std::string axiom) { check_.axiom = std::move(axiom); }
  void test(bool ok, std::initializer_list<Id> tuple) {
    ++check_.checked;
    if (!ok && check_.holds) {
      check_.holds = false;
      check_.counterexample.assign(tuple.begin(), tuple.end());
    }
  }
  AxiomCheck done() { return std::move(check_); }

 private:
  AxiomCheck check_;
};

std::vector<Id> hom_table(const GroupHom& f) {
  std::vector<Id> out(f.source().cardinality());
  for (Id x = 0; x < out.size(); ++x) out[x] = static_cast<Id>(f.target().index_of(f(f.source().element_at(x))));
  return out;
}

bool commutes_with_action(const RModule& m, const RModule& n, const std::vector<Id>& f) {
  for (Id r = 0; r < m.ring().size(); ++r)
    for (Id x = 0; x < m.size(); ++x)
      if (f[m.act(r, x)] != n.act(r, f[x])) return false;
  return true;
}

bool is_permutation_of(const std::vector<Id>& map, std::size_t n) {
  if (map.size() != n) return false;
  std::vector<bool> seen(n, false);
  for (const auto v : map) {
    if (v >= n || seen[v]) return false;
    seen[v] = true;
  }
  return true;
}

// rho(u) mu == mu u for every u, over explicit hom lists.
bool intertwines_mu(const std::vector<GroupHom>& left, const std::vector<GroupHom>& right,
                    const ModuleEquivalence& eq) {
  if (!is_permutation_of(eq.rho, right.size()) || left.size() != right.size()) return false;
  for (Id u = 0; u < left.size(); ++u) {
    if (!(right[eq.rho[u]].source() == eq.mu.target()) || !(left[u].source() == eq.mu.source())) return false;
    if (!(compose_homs(right[eq.rho[u]], eq.mu) == compose_homs(eq.mu, left[u]))) return false;
  }
  return true;
}

}  // namespace

FiniteRing::FiniteRing(Id size, std::vector<Id> add, std::vector<Id> mult, Id zero, Id one,
                       std::optional<AbGroup> additive)
    : size_(size), add_(std::move(add)), mult_(std::move(mult)), zero_(zero), one_(one), additive_(std::move(additive)) {
  if (size_ == 0) throw InvalidInput("ring carrier is empty");
  const auto square = static_cast<std::size_t>(size_) * size_;
  check_table(add_, square, size_, "ring addition");
  check_table(mult_, square, size_, "ring multiplication");
  if (zero_ >= size_ || one_ >= size_) throw InvalidInput("ring zero or one out of range");
  if (additive_ && additive_->cardinality() != size_) throw InvalidInput("additive presentation has the wrong size");
  neg_ = negation(size_, add_, zero_);
}

FiniteRing::FiniteRing(const AbGroup& additive, std::vector<Id> mult, Id one)
    : FiniteRing(checked_size(additive, "ring"), group_add_table(additive), std::move(mult), 0, one, additive) {}

FiniteRing FiniteRing::with_mult_entry(Id a, Id b, Id value) const {
  auto copy = *this;
  if (a >= size_ || b >= size_ || value >= size_) throw InvalidInput("ring entry out of range");
  copy.mult_[static_cast<std::size_t>(a) * size_ + b] = value;
  return copy;
}

FiniteRing make_ring_zn(std::uint64_t n) {
  if (n == 0) throw InvalidInput("Z/n needs n >= 1");
  const AbGroup g({n});
  const auto size = checked_size(g, "ring");
  std::vector<Id> mult(static_cast<std::size_t>(size) * size);
  for (Id a = 0; a < size; ++a)
    for (Id b = 0; b < size; ++b) mult[static_cast<std::size_t>(a) * size + b] = static_cast<Id>((std::uint64_t{a} * b) % n);
  return FiniteRing(g, std::move(mult), static_cast<Id>(1 % n));
}

FiniteRing make_field_fp(std::uint64_t p) {
  bool prime = p >= 2;
  for (std::uint64_t d = 2; prime && d * d <= p; ++d) prime = p % d != 0;
  if (!prime) throw InvalidInput("F_p needs a prime p, got " + std::to_string(p));
  return make_ring_zn(p);
}

FiniteRing make_product_ring(const FiniteRing& r, const FiniteRing& s) {
  if (!r.additive() || !s.additive()) throw InvalidInput("product ring factors need group presentations");
  auto orders = r.additive()->orders();
  orders.insert(orders.end(), s.additive()->orders().begin(), s.additive()->orders().end());
  const AbGroup g(orders);
  const auto size = checked_size(g, "ring");
  const Id ns = s.size();
  std::vector<Id> mult(static_cast<std::size_t>(size) * size);
  for (Id a = 0; a < size; ++a)
    for (Id b = 0; b < size; ++b)
      mult[static_cast<std::size_t>(a) * size + b] = r.mult(a / ns, b / ns) * ns + s.mult(a % ns, b % ns);
  return FiniteRing(g, std::move(mult), r.one() * ns + s.one());
}

ValidationReport validate_ring(const FiniteRing& r) {
  const Id n = r.size();
  ValidationReport report;
  Sweep add_assoc("addition associativity"), add_comm("addition commutativity"), add_zero("additive identity"),
      add_inv("additive inverses");
  for (Id a = 0; a < n; ++a) {
    add_zero.test(r.add(a, r.zero()) == a && r.add(r.zero(), a) == a, {a});
    bool found = false;
    for (Id b = 0; b < n && !found; ++b) found = r.add(a, b) == r.zero();
    add_inv.test(found, {a});
    for (Id b = 0; b < n; ++b) {
      add_comm.test(r.add(a, b) == r.add(b, a), {a, b});
      for (Id c = 0; c < n; ++c) add_assoc.test(r.add(r.add(a, b), c) == r.add(a, r.add(b, c)), {a, b, c});
    }
  }
  Sweep assoc("mult associativity"), left("left distributivity"), right("right distributivity"), unit("unit");
  for (Id a = 0; a < n; ++a) {
    unit.test(r.mult(r.one(), a) == a && r.mult(a, r.one()) == a, {a});
    for (Id b = 0; b < n; ++b)
      for (Id c = 0; c < n; ++c) {
        assoc.test(r.mult(r.mult(a, b), c) == r.mult(a, r.mult(b, c)), {a, b, c});
        left.test(r.mult(a, r.add(b, c)) == r.add(r.mult(a, b), r.mult(a, c)), {a, b, c});
        right.test(r.mult(r.add(a, b), c) == r.add(r.mult(a, c), r.mult(b, c)), {a, b, c});
      }
  }
  for (auto* s : {&add_assoc, &add_comm, &add_zero, &add_inv, &assoc, &left, &right, &unit})
    report.checks.push_back(s->done());
  return report;
}

FiniteTruss ring_as_truss(const FiniteRing& r) {
  const Id n = r.size();
  std::vector<Id> ternary(static_cast<std::size_t>(n) * n * n);
  for (Id a = 0; a < n; ++a)
    for (Id b = 0; b < n; ++b)
      for (Id c = 0; c < n; ++c) ternary[(static_cast<std::size_t>(a) * n + b) * n + c] = r.add(r.sub(a, b), c);
  return FiniteTruss(FiniteHeap(n, std::move(ternary)), r.mult_table(), r.one());
}

RModule::RModule(FiniteRing ring, AbGroup group, std::vector<Id> action)
    : ring_(std::move(ring)), group_(std::move(group)), action_(std::move(action)) {
  size_ = checked_size(group_, "module");
  check_table(action_, static_cast<std::size_t>(ring_.size()) * size_, size_, "module action");
  add_ = group_add_table(group_);
  neg_ = negation(size_, add_, 0);
}

RModule RModule::with_action_entry(Id r, Id m, Id value) const {
  if (r >= ring_.size() || m >= size_ || value >= size_) throw InvalidInput("action entry out of range");
  auto copy = *this;
  copy.action_[static_cast<std::size_t>(r) * size_ + m] = value;
  return copy;
}

RModule regular_module(const FiniteRing& r) {
  if (!r.additive()) throw InvalidInput("regular module needs a group presentation of the ring");
  return RModule(r, *r.additive(), r.mult_table());
}

ValidationReport validate_action(const FiniteRing& ring, Id size, const std::vector<Id>& add, Id zero,
                                 const std::vector<Id>& action) {
  check_table(add, static_cast<std::size_t>(size) * size, size, "module addition");
  check_table(action, static_cast<std::size_t>(ring.size()) * size, size, "module action");
  auto plus = [&](Id a, Id b) { return add[static_cast<std::size_t>(a) * size + b]; };
  auto act = [&](Id r, Id m) { return action[static_cast<std::size_t>(r) * size + m]; };

  ValidationReport report;
  Sweep add_assoc("addition associativity"), add_comm("addition commutativity"), add_zero("additive identity"),
      add_inv("additive inverses");
  for (Id a = 0; a < size; ++a) {
    add_zero.test(plus(a, zero) == a, {a});
    bool found = false;
    for (Id b = 0; b < size && !found; ++b) found = plus(a, b) == zero;
    add_inv.test(found, {a});
    for (Id b = 0; b < size; ++b) {
      add_comm.test(plus(a, b) == plus(b, a), {a, b});
      for (Id c = 0; c < size; ++c) add_assoc.test(plus(plus(a, b), c) == plus(a, plus(b, c)), {a, b, c});
    }
  }
  Sweep ring_add("action left additivity"), mod_add("action right additivity"), assoc("action associativity"),
      unit("action unit");
  for (Id r = 0; r < ring.size(); ++r) {
    for (Id s = 0; s < ring.size(); ++s)
      for (Id m = 0; m < size; ++m) {
        ring_add.test(act(ring.add(r, s), m) == plus(act(r, m), act(s, m)), {r, s, m});
        assoc.test(act(ring.mult(r, s), m) == act(r, act(s, m)), {r, s, m});
      }
    for (Id m = 0; m < size; ++m)
      for (Id m2 = 0; m2 < size; ++m2) mod_add.test(act(r, plus(m, m2)) == plus(act(r, m), act(r, m2)), {r, m, m2});
  }
  for (Id m = 0; m < size; ++m) unit.test(act(ring.one(), m) == m, {m});
  for (auto* s : {&add_assoc, &add_comm, &add_zero, &add_inv, &ring_add, &mod_add, &assoc, &unit})
    report.checks.push_back(s->done());
  return report;
}

ValidationReport validate_module(const RModule& m) {
  std::vector<Id> add(static_cast<std::size_t>(m.size()) * m.size());
  for (Id a = 0; a < m.size(); ++a)
    for (Id b = 0; b < m.size(); ++b) add[static_cast<std::size_t>(a) * m.size() + b] = m.add(a, b);
  return validate_action(m.ring(), m.size(), add, 0, m.action());
}

Id action_at(const RModule& m, Id e, Id r, Id x) {
  if (e >= m.size() || x >= m.size() || r >= m.ring().size()) throw InvalidInput("action_at: argument out of range");
  return m.add(m.add(m.act(r, x), m.neg(m.act(r, e))), e);
}

std::vector<Id> induced_action(const RModule& m, Id e) {
  std::vector<Id> out(static_cast<std::size_t>(m.ring().size()) * m.size());
  for (Id r = 0; r < m.ring().size(); ++r)
    for (Id x = 0; x < m.size(); ++x) out[static_cast<std::size_t>(r) * m.size() + x] = action_at(m, e, r, x);
  return out;
}

ValidationReport validate_induced_module(const RModule& m, Id e) {
  if (e >= m.size()) throw InvalidInput("base point out of range");
  // a +_e c = a - e + c
  std::vector<Id> add(static_cast<std::size_t>(m.size()) * m.size());
  for (Id a = 0; a < m.size(); ++a)
    for (Id c = 0; c < m.size(); ++c) add[static_cast<std::size_t>(a) * m.size() + c] = m.add(m.add(a, m.neg(e)), c);
  return validate_action(m.ring(), m.size(), add, e, induced_action(m, e));
}

std::vector<GroupHom> hom_R(const RModule& m, const RModule& n, const Limits& limits) {
  if (!(m.ring() == n.ring())) throw InvalidInput("hom_R: modules over different rings");
  std::vector<GroupHom> out;
  for (auto& f : hom_enumerate(m.group(), n.group(), limits)) {
    if (commutes_with_action(m, n, hom_table(f))) out.push_back(std::move(f));
  }
  return out;
}

EndRing end_ring(const RModule& m, const Limits& limits) {
  auto homs = hom_R(m, m, limits);
  const auto k = static_cast<Id>(homs.size());
  check_bound(saturating_mul(k, k), limits.max_table_entries, "End_R(M) tables");
  const auto lookup = index_homs(homs);
  auto find = [&](const GroupHom& f) {
    const auto it = lookup.find(key_of(f));
    if (it == lookup.end()) throw Error("End_R(M) is not closed");
    return it->second;
  };
  std::vector<Id> add(static_cast<std::size_t>(k) * k), mult(static_cast<std::size_t>(k) * k);
  for (Id a = 0; a < k; ++a)
    for (Id b = 0; b < k; ++b) {
      add[static_cast<std::size_t>(a) * k + b] = find(add_homs(homs[a], homs[b]));
      mult[static_cast<std::size_t>(a) * k + b] = find(compose_homs(homs[a], homs[b]));
    }
  const auto zero = find(GroupHom::zero(m.group(), m.group()));
  const auto one = find(GroupHom::identity(m.group()));
  return EndRing{FiniteRing(k, std::move(add), std::move(mult), zero, one), std::move(homs)};
}

bool is_linear_heap_morphism(const RModule& m, const RModule& n, const HeapMorphism& phi) {
  if (!(phi.source() == m.group()) || !(phi.target() == n.group())) return false;
  std::vector<Id> t(m.size());
  for (Id x = 0; x < m.size(); ++x) t[x] = static_cast<Id>(n.group().index_of(phi(m.group().element_at(x))));
  for (Id r = 0; r < m.ring().size(); ++r) {
    const Id shift = n.add(n.neg(n.act(r, t[0])), t[0]);
    for (Id x = 0; x < m.size(); ++x)
      if (t[m.act(r, x)] != n.add(n.act(r, t[x]), shift)) return false;
  }
  return true;
}

std::vector<HeapMorphism> linear_heap_morphisms(const RModule& m, const RModule& n, const Limits& limits) {
  const auto homs = hom_R(m, n, limits);
  check_bound(saturating_mul(homs.size(), n.size()), limits.max_enumeration, "H_R(M,N)");
  std::vector<HeapMorphism> out;
  out.reserve(homs.size() * n.size());
  for (const auto& f : homs)
    for (Id h = 0; h < n.size(); ++h) out.emplace_back(f, n.group().element_at(h));
  return out;
}

EndoTruss build_linear_endo_truss(const RModule& m, const Limits& limits) {
  return EndoTruss(m.group(), hom_R(m, m, limits), limits);
}

bool is_module_equivalence(const EndRing& em, const EndRing& en, const ModuleEquivalence& eq) {
  if (em.homs.empty() || en.homs.empty()) return false;
  if (!(eq.mu.source() == em.homs.front().source()) || !(eq.mu.target() == en.homs.front().source())) return false;
  if (!is_bijective(eq.mu) || !intertwines_mu(em.homs, en.homs, eq)) return false;
  const auto& r = em.ring;
  const auto& s = en.ring;
  if (eq.rho[r.one()] != s.one()) return false;
  for (Id a = 0; a < r.size(); ++a)
    for (Id b = 0; b < r.size(); ++b) {
      if (eq.rho[r.add(a, b)] != s.add(eq.rho[a], eq.rho[b])) return false;
      if (eq.rho[r.mult(a, b)] != s.mult(eq.rho[a], eq.rho[b])) return false;
    }
  return true;
}

std::optional<ModuleEquivalence> find_module_equivalence(const RModule& m, const RModule& n, const Limits& limits) {
  if (m.size() != n.size()) return std::nullopt;
  const auto left = hom_R(m, m, limits);
  const auto right = hom_R(n, n, limits);
  if (left.size() != right.size()) return std::nullopt;
  const auto lookup = index_homs(right);
  for (auto& mu : group_isomorphisms(m.group(), n.group(), limits)) {
    const auto inv = inverse_hom(mu);
    std::vector<Id> rho;
    rho.reserve(left.size());
    for (const auto& u : left) {
      const auto it = lookup.find(key_of(compose_homs(compose_homs(mu, u), inv)));
      if (it == lookup.end()) break;
      rho.push_back(it->second);
    }
    if (rho.size() == left.size() && is_permutation_of(rho, right.size())) {
      return ModuleEquivalence{std::move(mu), std::move(rho)};
    }
  }
  return std::nullopt;
}

TrussMorphism truss_iso_from_equivalence(const EndoTruss& em, const EndoTruss& en, const ModuleEquivalence& eq) {
  if (!(eq.mu.source() == em.base()) || !(eq.mu.target() == en.base()) || !is_bijective(eq.mu)) {
    throw InvalidEquivalence("mu is not a bijection between the module groups");
  }
  if (!intertwines_mu(em.linear_parts(), en.linear_parts(), eq)) {
    throw InvalidEquivalence("rho(u) mu != mu u for some u");
  }
  TrussMorphism phi{std::vector<Id>(em.size())};
  for (Id alpha = 0; alpha < em.size(); ++alpha) {
    const auto moved = eq.mu(em.base().element_at(em.translation_index(alpha)));
    phi.map[alpha] = en.make_id(eq.rho[em.linear_index(alpha)], static_cast<Id>(en.base().index_of(moved)));
  }
  if (!phi.is_bijective() || em.size() != en.size() || !is_truss_morphism(em, en, phi.map)) {
    throw InvalidEquivalence("induced map is not a truss isomorphism");
  }
  return phi;
}

ModuleEquivalence equivalence_from_truss_iso(const EndoTruss& em, const EndoTruss& en, const TrussMorphism& phi) {
  if (phi.map.size() != em.size() || em.size() != en.size() || !phi.is_bijective()) {
    throw NotAnIsomorphism("map is not a bijection between the trusses");
  }
  if (!is_truss_morphism(em, en, phi.map)) throw NotAnIsomorphism("map is not a truss morphism");
  std::vector<GroupElement> values;
  values.reserve(em.base().cardinality());
  for (Id x = 0; x < em.base().cardinality(); ++x) {
    values.push_back(en.base().element_at(en.eval(phi(em.hat_index(x)), 0)));
  }
  auto mu = decompose(em.base(), en.base(), values).linear();
  std::vector<Id> rho(em.linear_parts().size());
  for (Id u = 0; u < rho.size(); ++u) rho[u] = en.linear_index(phi(em.make_id(u, 0)));
  return ModuleEquivalence{std::move(mu), std::move(rho)};
}

ModuleBKReport verify_module_bk(const RModule& m, const RModule& n, bool brute_force, const Limits& limits) {
  ModuleBKReport report;
  const auto em = build_linear_endo_truss(m, limits);
  const auto en = build_linear_endo_truss(n, limits);
  report.left_carrier = em.size();
  report.right_carrier = en.size();
  const auto ring_m = end_ring(m, limits);
  const auto ring_n = end_ring(n, limits);

  report.equivalence = find_module_equivalence(m, n, limits);
  if (report.equivalence) {
    try {
      report.truss_iso = truss_iso_from_equivalence(em, en, *report.equivalence);
      const auto back = equivalence_from_truss_iso(em, en, *report.truss_iso);
      report.roundtrip = back.mu == report.equivalence->mu && back.rho == report.equivalence->rho &&
                         is_module_equivalence(ring_m, ring_n, back);
    } catch (const InvalidEquivalence&) {
      report.truss_iso_valid = false;
      report.roundtrip = false;
    }
  }

  if (em.size() != en.size()) {
    report.truss_iso_count = 0;
    report.truss_iso_exists = false;
    report.note = "truss carriers differ in size (" + std::to_string(em.size()) + " vs " +
                  std::to_string(en.size()) + ")";
  } else if (brute_force) {
    if (em.size() <= limits.bruteforce_iso_carrier && saturating_factorial(em.size()) <= limits.max_enumeration) {
      const auto found = enumerate_truss_isos(em.to_truss(limits), en.to_truss(limits), limits);
      report.brute_force_run = true;
      report.truss_iso_count = found.size();
      report.truss_iso_exists = !found.empty();
      for (const auto& phi : found) {
        report.enumerated_yield_equivalences = report.enumerated_yield_equivalences &&
                                               is_module_equivalence(ring_m, ring_n, equivalence_from_truss_iso(em, en, phi));
      }
    } else {
      report.note = "brute-force bijection search skipped: carrier of " + std::to_string(em.size()) +
                    " elements exceeds the bound";
    }
  }
  if (!report.truss_iso_exists && report.truss_iso) report.truss_iso_exists = true;

  if (m.ring() == n.ring()) {
    const auto homs = hom_R(m, n, limits);
    report.module_isomorphic = std::any_of(homs.begin(), homs.end(), [](const GroupHom& f) { return is_bijective(f); });
  }
  const bool iff = !report.truss_iso_exists || *report.truss_iso_exists == report.equivalence.has_value();
  report.consistent = iff && report.truss_iso_valid && report.roundtrip && report.enumerated_yield_equivalences;
  return report;
}

NonIsoExample make_non_iso_example(std::uint64_t p) {
  const auto f = make_field_fp(p);
  auto ring = make_product_ring(f, f);
  const auto q = static_cast<Id>(p);
  std::vector<Id> left(static_cast<std::size_t>(ring.size()) * q), right(left.size());
  for (Id r = 0; r < ring.size(); ++r)
    for (Id x = 0; x < q; ++x) {
      left[static_cast<std::size_t>(r) * q + x] = f.mult(r / q, x);
      right[static_cast<std::size_t>(r) * q + x] = f.mult(r % q, x);
    }
  const AbGroup g({p});
  return NonIsoExample{ring, RModule(ring, g, std::move(left)), RModule(ring, g, std::move(right))};
}

NonIsoReport example_non_iso(std::uint64_t p, const Limits& limits) {
  NonIsoReport report;
  report.p = p;
  const auto ex = make_non_iso_example(p);
  report.modules_valid = validate_module(ex.m).valid() && validate_module(ex.n).valid();
  report.groups_isomorphic = groups_isomorphic(ex.m.group(), ex.n.group());
  const auto em = build_linear_endo_truss(ex.m, limits);
  const auto en = build_linear_endo_truss(ex.n, limits);
  report.truss_carrier = em.size();
  if (const auto eq = find_module_equivalence(ex.m, ex.n, limits)) {
    try {
      report.truss_iso = truss_iso_from_equivalence(em, en, *eq);
      report.truss_iso_valid = report.truss_iso->is_bijective() &&
                               is_truss_morphism(em.to_truss(limits), en.to_truss(limits), report.truss_iso->map);
    } catch (const InvalidEquivalence&) {
      report.truss_iso_valid = false;
    }
  }
  report.hom_mn = hom_R(ex.m, ex.n, limits);
  report.hom_has_bijection =
      std::any_of(report.hom_mn.begin(), report.hom_mn.end(), [](const GroupHom& f) { return is_bijective(f); });
  return report;
}

}  // namespace trusskit
