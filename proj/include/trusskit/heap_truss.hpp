#pragma once

// Heaps and trusses on explicit finite carriers {0, ..., n-1}, exhaustive
// axiom validators, retracts, and brute-force morphism search.

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "trusskit/abelian.hpp"
#include "trusskit/limits.hpp"

namespace trusskit {

using Id = std::uint32_t;

class FiniteHeap {
 public:
  FiniteHeap() = default;
  // Checks the table shape and that every entry is a valid id. Axioms are
  // checked separately by validate_heap.
  FiniteHeap(Id size, std::vector<Id> ternary);

  Id size() const { return size_; }
  Id operator()(Id a, Id b, Id c) const { return table_[(static_cast<std::size_t>(a) * size_ + b) * size_ + c]; }
  std::span<const Id> table() const { return table_; }

  // Copy with one entry replaced; used to probe validators.
  FiniteHeap with_entry(Id a, Id b, Id c, Id value) const;

  friend bool operator==(const FiniteHeap&, const FiniteHeap&) = default;

 private:
  Id size_ = 0;
  std::vector<Id> table_;
};

class FiniteTruss {
 public:
  FiniteTruss() = default;
  FiniteTruss(FiniteHeap heap, std::vector<Id> mult, std::optional<Id> unit = std::nullopt);

  const FiniteHeap& heap() const { return heap_; }
  Id size() const { return heap_.size(); }
  Id ternary(Id a, Id b, Id c) const { return heap_(a, b, c); }
  Id mult(Id a, Id b) const { return mult_[static_cast<std::size_t>(a) * size() + b]; }
  std::span<const Id> mult_table() const { return mult_; }
  std::optional<Id> unit() const { return unit_; }

  FiniteTruss with_mult_entry(Id a, Id b, Id value) const;
  FiniteTruss with_ternary_entry(Id a, Id b, Id c, Id value) const;

  friend bool operator==(const FiniteTruss&, const FiniteTruss&) = default;

 private:
  FiniteHeap heap_;
  std::vector<Id> mult_;
  std::optional<Id> unit_;
};

// A total map between carriers, map[x] the image of x.
struct TrussMorphism {
  std::vector<Id> map;

  Id operator()(Id x) const { return map[x]; }
  bool is_bijective() const;
  friend bool operator==(const TrussMorphism&, const TrussMorphism&) = default;
  friend auto operator<=>(const TrussMorphism&, const TrussMorphism&) = default;
};

struct AxiomCheck {
  std::string axiom;
  bool holds = true;
  // False when the check was sampled rather than swept over its whole domain.
  bool exhaustive = true;
  std::uint64_t checked = 0;
  // Informational checks (e.g. commutativity of a plain heap) do not affect valid().
  bool required = true;
  // First failing tuple in lexicographic order (empty when holds).
  std::vector<Id> counterexample;
};

struct ValidationReport {
  std::vector<AxiomCheck> checks;

  bool valid() const;
  bool exhaustive() const;
  const AxiomCheck* find(std::string_view axiom) const;
  // First failing check, if any.
  const AxiomCheck* first_failure() const;
};

// [a,b,c] = a - b + c over the lexicographically enumerated elements.
FiniteHeap heap_from_group(const AbGroup& g, const Limits& limits = {});

// Mal'cev identities and associativity (all n^5 quintuples when
// n <= limits.exhaustive_heap_size, sampled otherwise). Commutativity is
// reported as an informational check.
ValidationReport validate_heap(const FiniteHeap& h, const Limits& limits = {});
bool is_abelian_heap(const FiniteHeap& h);

// The group (carrier, +_b) with a +_b c = [a,b,c] and identity b.
struct Retract {
  Id size = 0;
  std::vector<Id> add;
  Id identity = 0;

  Id operator()(Id a, Id c) const { return add[static_cast<std::size_t>(a) * size + c]; }
  Id neg(Id a) const;
};

// Throws InvalidInput when h is not a valid heap.
Retract retract_at(const FiniteHeap& h, Id b, const Limits& limits = {});
// [a,b,c] = a - b + c computed in the retract.
FiniteHeap heap_from_retract(const Retract& r);
// a -> [a,b,b'], a group isomorphism (+_b) -> (+_b').
std::vector<Id> retract_iso(const FiniteHeap& h, Id b, Id b2, const Limits& limits = {});
// Exhaustive: map is a bijection with map(x + y) = map(x) + map(y).
bool is_group_isomorphism(const Retract& from, const Retract& to, std::span<const Id> map);

// Heap checks plus multiplicative associativity, both distributive laws and,
// when present, the two-sided unit.
ValidationReport validate_truss(const FiniteTruss& t, const Limits& limits = {});

bool preserves_ternary(const FiniteHeap& s, const FiniteHeap& t, std::span<const Id> map);
bool is_truss_morphism(const FiniteTruss& s, const FiniteTruss& t, std::span<const Id> map);

// Every total map s -> t preserving both operations, in lexicographic order
// of the image tuple. Requires |s| <= bruteforce_morphism_carrier and
// |t|^|s| <= max_enumeration.
std::vector<TrussMorphism> enumerate_truss_morphisms(const FiniteTruss& s, const FiniteTruss& t,
                                                     const Limits& limits = {});
// Bijective truss morphisms, scanning all |s|! bijections in lexicographic
// order. Candidates are rejected on left absorbers first, then on the
// multiplication table, then on the ternary table.
std::vector<TrussMorphism> enumerate_truss_isos(const FiniteTruss& s, const FiniteTruss& t,
                                                const Limits& limits = {});
// Maps preserving only the multiplication.
std::vector<TrussMorphism> enumerate_semigroup_morphisms(const FiniteTruss& s, const FiniteTruss& t,
                                                         bool surjective_only, const Limits& limits = {});

// {a | a*b = a for all b}
std::vector<Id> left_absorbers(const FiniteTruss& t);

}  // namespace trusskit
