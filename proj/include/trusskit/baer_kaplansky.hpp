#pragma once

// Correspondence between heap isomorphisms G -> H and truss isomorphisms
// E(G) -> E(H), and the structure carried by an arbitrary truss morphism
// E(G) -> E(H).
//
// theta:   Phi  |-> (a |-> Phi(hat a)(0))
// upsilon: phi  |-> (alpha |-> phi o alpha o phi^-1)

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "trusskit/endo_truss.hpp"

namespace trusskit {

// Throws NotAnIsomorphism unless phi is a bijective truss morphism src -> dst.
HeapMorphism theta(const EndoTruss& src, const EndoTruss& dst, const TrussMorphism& phi);
// Throws NotAnIsomorphism unless phi is a bijective heap morphism base(src) -> base(dst).
TrussMorphism upsilon(const EndoTruss& src, const EndoTruss& dst, const HeapMorphism& phi);

struct BKReport {
  AbGroup left;
  AbGroup right;
  std::uint64_t heap_iso_count = 0;
  // Number of truss isomorphisms E(left) -> E(right) when it was counted
  // (by raw bijection search, or as 0 from differing cardinalities).
  std::optional<std::uint64_t> truss_iso_count;
  bool brute_force_run = false;
  // Theta(Upsilon(phi)) == phi for every heap iso phi.
  bool theta_upsilon = true;
  // Upsilon(Theta(Phi)) == Phi for every enumerated truss iso.
  bool upsilon_theta = true;
  bool upsilon_injective = true;
  // Every Upsilon(phi) is a bijective truss morphism.
  bool upsilon_valid = true;
  // Enumerated truss iso count == |H| * #Aut, when enumerated.
  bool count_matches = true;
  bool groups_isomorphic = false;
  // Existence of a truss iso, when decided (constructed, enumerated or
  // refuted by cardinality).
  std::optional<bool> truss_iso_exists;
  bool consistent = false;
  std::string note;

  bool roundtrip() const { return theta_upsilon && upsilon_theta; }
};

// Runs the structural route always and the raw bijection oracle when
// brute_force is set and |E(G)| = |E(H)| <= limits.bruteforce_iso_carrier.
BKReport verify_bk(const AbGroup& g, const AbGroup& h, bool brute_force, const Limits& limits = {});

struct InnerData {
  GroupHom epsilon;                   // linear part of Phi(hat 0)
  GroupElement e;                     // Phi(hat 0)(0)
  std::vector<HeapMorphism> xi_set;   // {xi in Heap(G,H) | Phi(alpha) xi = xi alpha for all alpha}
  std::vector<GroupElement> coset;    // e + Im(epsilon), sorted
};

// Xi is found by filtering all of Heap(G,H); requires that enumeration to
// fit limits.max_enumeration.
InnerData inner_data(const EndoTruss& src, const EndoTruss& dst, const TrussMorphism& phi,
                     const Limits& limits = {});

// a |-> Phi(hat a)(b)
HeapMorphism xi_b(const EndoTruss& src, const EndoTruss& dst, const TrussMorphism& phi, const GroupElement& b);

// Phi(alpha) o xi == xi o alpha for every alpha in src, checked pointwise.
bool intertwines(const EndoTruss& src, const EndoTruss& dst, const TrussMorphism& phi, const HeapMorphism& xi);

struct VarthetaEntry {
  GroupElement c;
  HeapMorphism xi;
};
// c |-> xi_c over the coset, in coset order.
std::vector<VarthetaEntry> vartheta(const EndoTruss& src, const EndoTruss& dst, const TrussMorphism& phi,
                                    const InnerData& data);

// The unique intertwiner when some Phi(hat a) is constant, otherwise nullopt.
std::optional<HeapMorphism> unique_xi_if_constant(const EndoTruss& src, const EndoTruss& dst,
                                                  const TrussMorphism& phi, const Limits& limits = {});

bool maps_constants_to_constants(const EndoTruss& src, const EndoTruss& dst, const TrussMorphism& phi);

struct InnerCheck {
  bool epsilon_idempotent = false;
  bool epsilon_kills_e = false;
  bool xi_nonempty = false;
  bool xi_b_members = false;       // every xi_b lies in Xi
  bool xi_zero_in_coset = false;   // xi(0) in e + Im(epsilon) for every xi in Xi
  bool xi_subheap = false;         // Xi closed under the pointwise ternary operation
  bool vartheta_bijective = false;
  bool vartheta_heap_morphism = false;
  bool cardinality = false;        // |Xi| == |Im(epsilon)| == |coset|
  // Set when some Phi(hat a) is constant: |Xi| == 1 and its element intertwines.
  std::optional<bool> unique_xi;

  bool all() const;
};

InnerCheck check_inner(const EndoTruss& src, const EndoTruss& dst, const TrussMorphism& phi,
                       const Limits& limits = {});

}  // namespace trusskit
