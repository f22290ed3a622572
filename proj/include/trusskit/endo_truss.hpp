#pragma once

// Heap morphisms between finite abelian groups kept in decomposed form
// x -> f(x) + h0, and the endomorphism truss E(G) realised on pairs
// (linear part, translation).
//
// Composition is (f o g)(x) = f(g(x)) everywhere; in particular
// (g, k0) o (f, h0) = (g f, g(h0) + k0).

#include <map>
#include <optional>
#include <span>
#include <vector>

#include "trusskit/abelian.hpp"
#include "trusskit/heap_truss.hpp"
#include "trusskit/limits.hpp"

namespace trusskit {

class HeapMorphism {
 public:
  HeapMorphism(GroupHom linear, GroupElement translation);

  const GroupHom& linear() const { return linear_; }
  const GroupElement& translation() const { return translation_; }
  const AbGroup& source() const { return linear_.source(); }
  const AbGroup& target() const { return linear_.target(); }

  GroupElement operator()(const GroupElement& x) const;
  bool is_constant() const { return linear_.is_zero(); }

  friend bool operator==(const HeapMorphism&, const HeapMorphism&) = default;

 private:
  GroupHom linear_;
  GroupElement translation_;
};

GroupElement eval(const HeapMorphism& phi, const GroupElement& x);
// f after g.
HeapMorphism compose(const HeapMorphism& f, const HeapMorphism& g);
// Pointwise [f,g,h](x) = f(x) - g(x) + h(x).
HeapMorphism heap_ternary(const HeapMorphism& f, const HeapMorphism& g, const HeapMorphism& h);
bool is_bijective(const HeapMorphism& phi);
// Throws NotAnIsomorphism when phi is not bijective.
HeapMorphism inverse(const HeapMorphism& phi);
// The constant map source -> target with the given value.
HeapMorphism constant_map(const AbGroup& source, const AbGroup& target, const GroupElement& value);

// Values of phi on every source element, in enumeration order.
std::vector<GroupElement> eval_table(const HeapMorphism& phi);

// Splits a total map (table over enumerated source elements) into
// translation = map(0) and linear part map - map(0). Fails exactly when the
// linear part is not additive.
std::optional<HeapMorphism> try_decompose(const AbGroup& source, const AbGroup& target,
                                          std::span<const GroupElement> table);
// As try_decompose; throws NotAHeapMorphism on failure.
HeapMorphism decompose(const AbGroup& source, const AbGroup& target, std::span<const GroupElement> table);

// Heap(g, h): every pair (linear, translation), linear part major.
std::vector<HeapMorphism> heap_morphisms(const AbGroup& g, const AbGroup& h, const Limits& limits = {});
std::vector<HeapMorphism> heap_isos(const AbGroup& g, const AbGroup& h, const Limits& limits = {});

// A truss of heap endomorphisms of `base` whose linear parts range over a
// fixed set closed under composition and the pointwise ternary operation:
// all of End(G) for E(G), or End_R(M) for E_R(M).
//
// Element ids are linear_index * |G| + translation_index.
class EndoTruss {
 public:
  // Throws InvalidInput when the linear parts are not endomorphisms of base,
  // contain duplicates, miss the zero or identity map, or are not closed
  // under composition and the ternary operation.
  EndoTruss(AbGroup base, std::vector<GroupHom> linear_parts, const Limits& limits = {});

  const AbGroup& base() const { return base_; }
  Id size() const { return size_; }
  const std::vector<GroupHom>& linear_parts() const { return linear_; }

  HeapMorphism element(Id id) const;
  std::optional<Id> find(const HeapMorphism& phi) const;
  // Throws InvalidInput when phi is not in the carrier.
  Id id_of(const HeapMorphism& phi) const;
  std::optional<Id> find_linear(const GroupHom& f) const;

  Id linear_index(Id id) const { return id / order_; }
  Id translation_index(Id id) const { return id % order_; }
  Id make_id(Id linear_index, Id translation_index) const { return linear_index * order_ + translation_index; }

  // f o g
  Id compose(Id f, Id g) const;
  Id ternary(Id f, Id g, Id h) const;
  // Value of element id at the element with the given index.
  Id eval(Id id, Id element_index) const;

  Id hat(const GroupElement& a) const;
  Id hat_index(Id element_index) const { return make_id(zero_linear_, element_index); }
  Id unit() const { return make_id(identity_linear_, 0); }
  bool is_constant(Id id) const { return linear_index(id) == zero_linear_; }
  std::vector<Id> constants() const;

  // Dense tables (n^3 ternary, n^2 composition) with the identity map as unit.
  FiniteTruss to_truss(const Limits& limits = {}) const;

 private:
  Id element_add(Id a, Id b) const { return add_[static_cast<std::size_t>(a) * order_ + b]; }

  AbGroup base_;
  std::vector<GroupHom> linear_;
  Id order_ = 1;
  Id size_ = 1;
  Id zero_linear_ = 0;
  Id identity_linear_ = 0;
  std::map<std::vector<Residue>, Id> linear_lookup_;
  std::vector<Id> add_;          // |G| x |G|
  std::vector<Id> neg_;          // |G|
  std::vector<Id> apply_;        // linear x |G|
  std::vector<Id> linear_mult_;  // linear x linear
  std::vector<Id> linear_ternary_;  // linear^3
};

EndoTruss build_endo_truss(const AbGroup& g, const Limits& limits = {});

// Exhaustive check that a total map between two endomorphism trusses
// preserves the ternary operation and composition.
bool is_truss_morphism(const EndoTruss& s, const EndoTruss& t, std::span<const Id> map);

// The constant maps, a sub-truss isomorphic (as a heap) to the base group.
struct ConstantSubtruss {
  std::vector<Id> members;  // ids in the ambient truss, by element index
  FiniteTruss truss;        // on positions 0..|G|-1
};
ConstantSubtruss constants(const EndoTruss& t, const Limits& limits = {});

}  // namespace trusskit
