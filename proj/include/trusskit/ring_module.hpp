#pragma once

// Finite unital rings and left modules given by explicit tables, the induced
// actions r .e m = r m - r e + e, the linear heap morphisms H_R(M,N), the
// trusses E_R(M), and equivalences of modules over their endomorphism rings.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "trusskit/abelian.hpp"
#include "trusskit/endo_truss.hpp"
#include "trusskit/heap_truss.hpp"
#include "trusskit/limits.hpp"

namespace trusskit {

// Elements are ids 0..n-1. The additive structure is a table; rings built
// from a group presentation also keep it (coordinates of each id).
class FiniteRing {
 public:
  FiniteRing() = default;
  // Shape and id-range checks only; see validate_ring.
  FiniteRing(Id size, std::vector<Id> add, std::vector<Id> mult, Id zero, Id one,
             std::optional<AbGroup> additive = std::nullopt);
  // Addition from the group, ids in its enumeration order.
  FiniteRing(const AbGroup& additive, std::vector<Id> mult, Id one);

  Id size() const { return size_; }
  Id add(Id a, Id b) const { return add_[static_cast<std::size_t>(a) * size_ + b]; }
  Id mult(Id a, Id b) const { return mult_[static_cast<std::size_t>(a) * size_ + b]; }
  Id neg(Id a) const { return neg_[a]; }
  Id sub(Id a, Id b) const { return add(a, neg(b)); }
  Id zero() const { return zero_; }
  Id one() const { return one_; }
  const std::vector<Id>& add_table() const { return add_; }
  const std::vector<Id>& mult_table() const { return mult_; }
  const std::optional<AbGroup>& additive() const { return additive_; }

  FiniteRing with_mult_entry(Id a, Id b, Id value) const;

  friend bool operator==(const FiniteRing& a, const FiniteRing& b) {
    return a.size_ == b.size_ && a.add_ == b.add_ && a.mult_ == b.mult_ && a.zero_ == b.zero_ && a.one_ == b.one_;
  }

 private:
  Id size_ = 1;
  std::vector<Id> add_{0};
  std::vector<Id> mult_{0};
  std::vector<Id> neg_{0};
  Id zero_ = 0;
  Id one_ = 0;
  std::optional<AbGroup> additive_ = AbGroup{};
};

FiniteRing make_ring_zn(std::uint64_t n);
// Throws InvalidInput unless p is prime.
FiniteRing make_field_fp(std::uint64_t p);
// Componentwise; id of (r, s) is r * |S| + s. Both factors need a group
// presentation.
FiniteRing make_product_ring(const FiniteRing& r, const FiniteRing& s);

// Additive group axioms of the table, associativity of mult, both
// distributive laws and the two-sided unit.
ValidationReport validate_ring(const FiniteRing& r);
// The ring as a truss: [a,b,c] = a - b + c with the same multiplication.
FiniteTruss ring_as_truss(const FiniteRing& r);

class RModule {
 public:
  RModule() = default;
  // action[r * |M| + m] = index of r m. Shape and range checks only.
  RModule(FiniteRing ring, AbGroup group, std::vector<Id> action);

  const FiniteRing& ring() const { return ring_; }
  const AbGroup& group() const { return group_; }
  Id size() const { return size_; }
  Id act(Id r, Id m) const { return action_[static_cast<std::size_t>(r) * size_ + m]; }
  const std::vector<Id>& action() const { return action_; }
  Id add(Id a, Id b) const { return add_[static_cast<std::size_t>(a) * size_ + b]; }
  Id neg(Id a) const { return neg_[a]; }

  RModule with_action_entry(Id r, Id m, Id value) const;

 private:
  FiniteRing ring_;
  AbGroup group_;
  Id size_ = 1;
  std::vector<Id> action_{0};
  std::vector<Id> add_{0};
  std::vector<Id> neg_{0};
};

// The ring acting on itself by left multiplication (needs a group presentation).
RModule regular_module(const FiniteRing& r);

// Bi-additivity, compatibility with the ring multiplication and 1 m = m,
// over a module whose addition is given by a table with the given zero.
ValidationReport validate_action(const FiniteRing& ring, Id size, const std::vector<Id>& add, Id zero,
                                 const std::vector<Id>& action);
ValidationReport validate_module(const RModule& m);

// r m - r e + e
Id action_at(const RModule& m, Id e, Id r, Id x);
// Action table of .e
std::vector<Id> induced_action(const RModule& m, Id e);
// (M, +_e, .e) through validate_action.
ValidationReport validate_induced_module(const RModule& m, Id e);

// Additive maps commuting with the action; same ring required.
std::vector<GroupHom> hom_R(const RModule& m, const RModule& n, const Limits& limits = {});

struct EndRing {
  FiniteRing ring;             // ids index homs; multiplication is composition
  std::vector<GroupHom> homs;  // End_R(M) in hom_R order
};
EndRing end_ring(const RModule& m, const Limits& limits = {});

// phi(r m) = r phi(m) - r phi(0) + phi(0) for all r, m.
bool is_linear_heap_morphism(const RModule& m, const RModule& n, const HeapMorphism& phi);
// H_R(M,N): pairs (Hom_R part, translation), Hom_R part major.
std::vector<HeapMorphism> linear_heap_morphisms(const RModule& m, const RModule& n, const Limits& limits = {});
// E_R(M) with linear parts in hom_R order.
EndoTruss build_linear_endo_truss(const RModule& m, const Limits& limits = {});

// mu: M -> N additive bijection; rho[i] is the index in End_S(N) (hom_R
// order) of the image of the i-th element of End_R(M).
struct ModuleEquivalence {
  GroupHom mu;
  std::vector<Id> rho;
};

// mu bijective, rho a bijective ring map with rho(u) mu = mu u for every u.
bool is_module_equivalence(const EndRing& em, const EndRing& en, const ModuleEquivalence& eq);
// First group iso mu (group_isomorphisms order) whose conjugation maps
// End_R(M) onto End_S(N).
std::optional<ModuleEquivalence> find_module_equivalence(const RModule& m, const RModule& n,
                                                         const Limits& limits = {});

// alpha |-> (rho(linear part), mu(translation)). Throws InvalidEquivalence
// unless eq is an equivalence and the result a bijective truss morphism.
TrussMorphism truss_iso_from_equivalence(const EndoTruss& em, const EndoTruss& en, const ModuleEquivalence& eq);
// mu = linear part of m |-> Phi(hat m)(0), rho(u) = linear part of Phi(u).
// Throws NotAnIsomorphism unless Phi is a bijective truss morphism.
ModuleEquivalence equivalence_from_truss_iso(const EndoTruss& em, const EndoTruss& en, const TrussMorphism& phi);

struct ModuleBKReport {
  Id left_carrier = 0;
  Id right_carrier = 0;
  std::optional<ModuleEquivalence> equivalence;
  std::optional<TrussMorphism> truss_iso;   // built from the equivalence
  bool truss_iso_valid = true;
  bool roundtrip = true;                    // eq -> Phi -> eq recovers mu and rho
  std::optional<std::uint64_t> truss_iso_count;  // raw bijection search or 0 by size
  bool brute_force_run = false;
  bool enumerated_yield_equivalences = true;
  std::optional<bool> truss_iso_exists;
  // Only meaningful over a common ring: some element of Hom_R(M,N) is bijective.
  std::optional<bool> module_isomorphic;
  bool consistent = false;
  std::string note;
};

ModuleBKReport verify_module_bk(const RModule& m, const RModule& n, bool brute_force, const Limits& limits = {});

// R = F_p x F_p, M = F_p x 0, N = 0 x F_p.
struct NonIsoExample {
  FiniteRing ring;
  RModule m;
  RModule n;
};
NonIsoExample make_non_iso_example(std::uint64_t p);

struct NonIsoReport {
  std::uint64_t p = 0;
  bool modules_valid = false;
  bool groups_isomorphic = false;
  Id truss_carrier = 0;
  std::optional<TrussMorphism> truss_iso;
  bool truss_iso_valid = false;
  std::vector<GroupHom> hom_mn;
  bool hom_has_bijection = true;
  bool holds() const { return modules_valid && groups_isomorphic && truss_iso_valid && !hom_has_bijection; }
};
NonIsoReport example_non_iso(std::uint64_t p, const Limits& limits = {});

}  // namespace trusskit
