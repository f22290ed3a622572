#include "trusskit/heap_truss.hpp"

#include <algorithm>
#include <numeric>
#include <random>

#include "trusskit/errors.hpp"
#include "trusskit/kernels.hpp"

namespace trusskit {
namespace {

std::uint64_t cube(std::uint64_t n) { return saturating_mul(saturating_mul(n, n), n); }

void check_ids(std::span<const Id> table, Id size, std::string_view what) {
  for (const auto v : table) {
    if (v >= size) throw InvalidInput(std::string(what) + " entry " + std::to_string(v) + " is out of range");
  }
}

template <std::size_t N>
AxiomCheck from_witness(std::string axiom, const kernels::Witness<N>& w, std::uint64_t checked) {
  AxiomCheck check{std::move(axiom), !w.has_value(), true, checked, true, {}};
  if (w) check.counterexample.assign(w->begin(), w->end());
  return check;
}

AxiomCheck sampled_associativity(const FiniteHeap& h, std::uint64_t samples) {
  std::mt19937_64 rng(0x5eedULL);
  std::uniform_int_distribution<Id> pick(0, h.size() - 1);
  AxiomCheck check{"heap associativity", true, false, 0, true, {}};
  for (std::uint64_t i = 0; i < samples; ++i) {
    const Id a = pick(rng), b = pick(rng), c = pick(rng), d = pick(rng), e = pick(rng);
    ++check.checked;
    if (h(h(a, b, c), d, e) != h(a, b, h(c, d, e))) {
      check.holds = false;
      check.counterexample = {a, b, c, d, e};
      break;
    }
  }
  return check;
}

void append_heap_checks(ValidationReport& report, const FiniteHeap& h, const Limits& limits) {
  const auto& k = kernels::active();
  const auto n = h.size();
  const std::uint64_t nn = std::uint64_t{n} * n;
  report.checks.push_back(from_witness("malcev", k.malcev(h.table(), n), nn));
  if (n <= limits.exhaustive_heap_size) {
    report.checks.push_back(
        from_witness("heap associativity", k.heap_associativity(h.table(), n), saturating_pow(n, 5)));
  } else {
    report.checks.push_back(sampled_associativity(h, limits.sample_size));
  }
}

}  // namespace

// --- carriers --------------------------------------------------------------

FiniteHeap::FiniteHeap(Id size, std::vector<Id> ternary) : size_(size), table_(std::move(ternary)) {
  if (table_.size() != cube(size)) {
    throw InvalidInput("ternary table has " + std::to_string(table_.size()) + " entries, expected n^3 = " +
                       std::to_string(cube(size)));
  }
  check_ids(table_, size_, "ternary table");
}

FiniteHeap FiniteHeap::with_entry(Id a, Id b, Id c, Id value) const {
  auto copy = *this;
  copy.table_.at((static_cast<std::size_t>(a) * size_ + b) * size_ + c) = value;
  check_ids(std::span<const Id>(&value, 1), size_, "ternary table");
  return copy;
}

FiniteTruss::FiniteTruss(FiniteHeap heap, std::vector<Id> mult, std::optional<Id> unit)
    : heap_(std::move(heap)), mult_(std::move(mult)), unit_(unit) {
  const std::uint64_t n = heap_.size();
  if (mult_.size() != n * n) {
    throw InvalidInput("mult table has " + std::to_string(mult_.size()) + " entries, expected n^2 = " +
                       std::to_string(n * n));
  }
  check_ids(mult_, heap_.size(), "mult table");
  if (unit_ && *unit_ >= heap_.size()) throw InvalidInput("unit is out of range");
}

FiniteTruss FiniteTruss::with_mult_entry(Id a, Id b, Id value) const {
  auto mult = mult_;
  mult.at(static_cast<std::size_t>(a) * size() + b) = value;
  return FiniteTruss(heap_, std::move(mult), unit_);
}

FiniteTruss FiniteTruss::with_ternary_entry(Id a, Id b, Id c, Id value) const {
  return FiniteTruss(heap_.with_entry(a, b, c, value), mult_, unit_);
}

bool TrussMorphism::is_bijective() const {
  std::vector<bool> seen(map.size(), false);
  for (const auto v : map) {
    if (v >= map.size() || seen[v]) return false;
    seen[v] = true;
  }
  return true;
}

// --- reports ---------------------------------------------------------------

bool ValidationReport::valid() const {
  return std::all_of(checks.begin(), checks.end(), [](const AxiomCheck& c) { return c.holds || !c.required; });
}

bool ValidationReport::exhaustive() const {
  return std::all_of(checks.begin(), checks.end(), [](const AxiomCheck& c) { return c.exhaustive; });
}

const AxiomCheck* ValidationReport::find(std::string_view axiom) const {
  for (const auto& c : checks) {
    if (c.axiom == axiom) return &c;
  }
  return nullptr;
}

const AxiomCheck* ValidationReport::first_failure() const {
  for (const auto& c : checks) {
    if (!c.holds && c.required) return &c;
  }
  return nullptr;
}

// --- heaps -----------------------------------------------------------------

FiniteHeap heap_from_group(const AbGroup& g, const Limits& limits) {
  check_bound(g.cardinality(), limits.max_enumeration, "heap carrier");
  check_bound(cube(g.cardinality()), limits.max_table_entries, "ternary table");
  const auto n = static_cast<Id>(g.cardinality());
  const auto elements = enumerate_elements(g, limits);
  std::vector<Id> table(cube(n));
  std::size_t pos = 0;
  for (Id a = 0; a < n; ++a)
    for (Id b = 0; b < n; ++b) {
      const auto ab = g.sub(elements[a], elements[b]);
      for (Id c = 0; c < n; ++c) table[pos++] = static_cast<Id>(g.index_of(g.add(ab, elements[c])));
    }
  return FiniteHeap(n, std::move(table));
}

ValidationReport validate_heap(const FiniteHeap& h, const Limits& limits) {
  ValidationReport report;
  append_heap_checks(report, h, limits);
  auto commutativity =
      from_witness("heap commutativity", kernels::active().heap_commutativity(h.table(), h.size()), cube(h.size()));
  commutativity.required = false;
  report.checks.push_back(std::move(commutativity));
  return report;
}

bool is_abelian_heap(const FiniteHeap& h) {
  return !kernels::active().heap_commutativity(h.table(), h.size()).has_value();
}

Id Retract::neg(Id a) const {
  for (Id x = 0; x < size; ++x) {
    if ((*this)(a, x) == identity) return x;
  }
  throw InvalidInput("retract element has no inverse");
}

Retract retract_at(const FiniteHeap& h, Id b, const Limits& limits) {
  if (b >= h.size()) throw InvalidInput("retract base point is out of range");
  if (!validate_heap(h, limits).valid()) throw InvalidInput("retract_at: table is not a heap");
  Retract r{h.size(), std::vector<Id>(static_cast<std::size_t>(h.size()) * h.size()), b};
  for (Id a = 0; a < h.size(); ++a)
    for (Id c = 0; c < h.size(); ++c) r.add[static_cast<std::size_t>(a) * h.size() + c] = h(a, b, c);
  return r;
}

FiniteHeap heap_from_retract(const Retract& r) {
  std::vector<Id> negs(r.size);
  for (Id x = 0; x < r.size; ++x) negs[x] = r.neg(x);
  std::vector<Id> table(cube(r.size));
  std::size_t pos = 0;
  for (Id a = 0; a < r.size; ++a)
    for (Id b = 0; b < r.size; ++b) {
      const Id ab = r(a, negs[b]);
      for (Id c = 0; c < r.size; ++c) table[pos++] = r(ab, c);
    }
  return FiniteHeap(r.size, std::move(table));
}

std::vector<Id> retract_iso(const FiniteHeap& h, Id b, Id b2, const Limits& limits) {
  if (b >= h.size() || b2 >= h.size()) throw InvalidInput("retract base point is out of range");
  if (!validate_heap(h, limits).valid()) throw InvalidInput("retract_iso: table is not a heap");
  std::vector<Id> map(h.size());
  for (Id a = 0; a < h.size(); ++a) map[a] = h(a, b, b2);
  return map;
}

bool is_group_isomorphism(const Retract& from, const Retract& to, std::span<const Id> map) {
  if (from.size != to.size || map.size() != from.size) return false;
  if (!TrussMorphism{{map.begin(), map.end()}}.is_bijective()) return false;
  for (Id x = 0; x < from.size; ++x)
    for (Id y = 0; y < from.size; ++y) {
      if (map[from(x, y)] != to(map[x], map[y])) return false;
    }
  return true;
}

// --- trusses ---------------------------------------------------------------

ValidationReport validate_truss(const FiniteTruss& t, const Limits& limits) {
  const auto& k = kernels::active();
  const auto n = t.size();
  ValidationReport report;
  append_heap_checks(report, t.heap(), limits);
  report.checks.push_back(
      from_witness("heap commutativity", k.heap_commutativity(t.heap().table(), n), cube(n)));
  report.checks.push_back(from_witness("mult associativity", k.mult_associativity(t.mult_table(), n), cube(n)));
  report.checks.push_back(from_witness("left distributivity",
                                       k.left_distributivity(t.heap().table(), t.mult_table(), n),
                                       saturating_pow(n, 4)));
  report.checks.push_back(from_witness("right distributivity",
                                       k.right_distributivity(t.heap().table(), t.mult_table(), n),
                                       saturating_pow(n, 4)));
  if (const auto u = t.unit()) {
    AxiomCheck check{"unit", true, true, 0, true, {}};
    for (Id a = 0; a < n; ++a) {
      ++check.checked;
      if (t.mult(*u, a) != a || t.mult(a, *u) != a) {
        check.holds = false;
        check.counterexample = {a};
        break;
      }
    }
    report.checks.push_back(std::move(check));
  }
  return report;
}

bool preserves_ternary(const FiniteHeap& s, const FiniteHeap& t, std::span<const Id> map) {
  if (map.size() != s.size()) throw InvalidInput("map is not total on the source carrier");
  check_ids(map, t.size(), "map");
  return !kernels::active().preserves_ternary(s.table(), s.size(), t.table(), t.size(), map).has_value();
}

bool is_truss_morphism(const FiniteTruss& s, const FiniteTruss& t, std::span<const Id> map) {
  if (map.size() != s.size()) throw InvalidInput("map is not total on the source carrier");
  check_ids(map, t.size(), "map");
  const auto& k = kernels::active();
  return !k.preserves_binary(s.mult_table(), s.size(), t.mult_table(), t.size(), map) &&
         !k.preserves_ternary(s.heap().table(), s.size(), t.heap().table(), t.size(), map);
}

namespace {

// Calls visit(map) for every total map s -> t in lexicographic order.
template <typename Visit>
void for_each_map(Id from, Id to, Visit&& visit) {
  std::vector<Id> map(from, 0);
  if (from > 0 && to == 0) return;
  while (true) {
    visit(std::as_const(map));
    Id p = from;
    while (true) {
      if (p == 0) return;
      --p;
      if (++map[p] < to) break;
      map[p] = 0;
    }
  }
}

void check_map_search(const FiniteTruss& s, const FiniteTruss& t, const Limits& limits) {
  check_bound(s.size(), limits.bruteforce_morphism_carrier, "brute-force morphism source carrier");
  check_bound(saturating_pow(t.size(), s.size()), limits.max_enumeration, "brute-force map search");
}

}  // namespace

std::vector<TrussMorphism> enumerate_truss_morphisms(const FiniteTruss& s, const FiniteTruss& t,
                                                     const Limits& limits) {
  check_map_search(s, t, limits);
  const auto& k = kernels::active();
  std::vector<TrussMorphism> out;
  for_each_map(s.size(), t.size(), [&](const std::vector<Id>& map) {
    if (k.preserves_binary(s.mult_table(), s.size(), t.mult_table(), t.size(), map)) return;
    if (k.preserves_ternary(s.heap().table(), s.size(), t.heap().table(), t.size(), map)) return;
    out.push_back(TrussMorphism{map});
  });
  return out;
}

std::vector<TrussMorphism> enumerate_semigroup_morphisms(const FiniteTruss& s, const FiniteTruss& t,
                                                         bool surjective_only, const Limits& limits) {
  check_map_search(s, t, limits);
  const auto& k = kernels::active();
  std::vector<TrussMorphism> out;
  for_each_map(s.size(), t.size(), [&](const std::vector<Id>& map) {
    if (k.preserves_binary(s.mult_table(), s.size(), t.mult_table(), t.size(), map)) return;
    if (surjective_only) {
      std::vector<bool> hit(t.size(), false);
      for (const auto v : map) hit[v] = true;
      if (std::find(hit.begin(), hit.end(), false) != hit.end()) return;
    }
    out.push_back(TrussMorphism{map});
  });
  return out;
}

std::vector<TrussMorphism> enumerate_truss_isos(const FiniteTruss& s, const FiniteTruss& t,
                                                const Limits& limits) {
  std::vector<TrussMorphism> out;
  if (s.size() != t.size()) return out;
  check_bound(s.size(), limits.bruteforce_iso_carrier, "brute-force bijection carrier");
  check_bound(saturating_factorial(s.size()), limits.max_enumeration, "brute-force bijection search");
  const auto& k = kernels::active();
  const auto src_absorbers = left_absorbers(s);
  std::vector<bool> dst_absorber(t.size(), false);
  for (const auto a : left_absorbers(t)) dst_absorber[a] = true;

  std::vector<Id> perm(s.size());
  std::iota(perm.begin(), perm.end(), Id{0});
  do {
    if (!std::all_of(src_absorbers.begin(), src_absorbers.end(), [&](Id a) { return dst_absorber[perm[a]]; }))
      continue;
    if (k.preserves_binary(s.mult_table(), s.size(), t.mult_table(), t.size(), perm)) continue;
    if (k.preserves_ternary(s.heap().table(), s.size(), t.heap().table(), t.size(), perm)) continue;
    out.push_back(TrussMorphism{perm});
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

std::vector<Id> left_absorbers(const FiniteTruss& t) {
  std::vector<Id> out;
  for (Id a = 0; a < t.size(); ++a) {
    bool absorbs = true;
    for (Id b = 0; b < t.size() && absorbs; ++b) absorbs = t.mult(a, b) == a;
    if (absorbs) out.push_back(a);
  }
  return out;
}

}  // namespace trusskit
