#pragma once

// Finite abelian groups presented as direct sums of cyclic groups
// Z/n_1 + ... + Z/n_k, their elements as residue tuples, and group
// homomorphisms as integer matrices between two such presentations.

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "trusskit/limits.hpp"

namespace trusskit {

using Residue = std::uint64_t;

// Cyclic orders are capped so that a product of two residues fits in 64 bits.
inline constexpr std::uint64_t kMaxCyclicOrder = std::uint64_t{1} << 32;

class GroupElement {
 public:
  GroupElement() = default;
  explicit GroupElement(std::vector<Residue> coords) : coords_(std::move(coords)) {}

  std::span<const Residue> coords() const { return coords_; }
  std::size_t size() const { return coords_.size(); }
  Residue operator[](std::size_t i) const { return coords_[i]; }

  friend bool operator==(const GroupElement&, const GroupElement&) = default;
  friend auto operator<=>(const GroupElement&, const GroupElement&) = default;

 private:
  std::vector<Residue> coords_;
};

std::string to_string(const GroupElement& element);

class AbGroup {
 public:
  // The trivial group.
  AbGroup() = default;

  // Throws InvalidInput for orders of 0 or above kMaxCyclicOrder, or when the
  // cardinality does not fit in 63 bits.
  explicit AbGroup(std::vector<std::uint64_t> orders);

  const std::vector<std::uint64_t>& orders() const { return orders_; }
  std::size_t rank() const { return orders_.size(); }
  std::uint64_t cardinality() const { return cardinality_; }

  bool contains(const GroupElement& a) const;
  // Reduces each coordinate modulo its cyclic order.
  GroupElement element(std::vector<std::uint64_t> coords) const;

  GroupElement zero() const;
  GroupElement add(const GroupElement& a, const GroupElement& b) const;
  GroupElement neg(const GroupElement& a) const;
  GroupElement sub(const GroupElement& a, const GroupElement& b) const;
  // a - b + c
  GroupElement ternary(const GroupElement& a, const GroupElement& b, const GroupElement& c) const;

  // Position in the lexicographic enumeration (last coordinate fastest).
  std::uint64_t index_of(const GroupElement& a) const;
  GroupElement element_at(std::uint64_t index) const;

  friend bool operator==(const AbGroup& a, const AbGroup& b) { return a.orders_ == b.orders_; }

 private:
  void require_member(const GroupElement& a) const;

  std::vector<std::uint64_t> orders_;
  std::uint64_t cardinality_ = 1;
};

AbGroup make_group(std::vector<std::uint64_t> orders);

// "2,2" -> Z/2 + Z/2; "" -> trivial group.
AbGroup parse_group_spec(std::string_view spec);
std::string format_group_spec(const AbGroup& g);

// Every element in lexicographic order.
std::vector<GroupElement> enumerate_elements(const AbGroup& g, const Limits& limits = {});

// Matrix A with A[j][i] the j-th coordinate of the image of the i-th cyclic
// generator; rows index target factors, columns source factors.
class GroupHom {
 public:
  // Validates shape, reduction of entries and well-definedness
  // (n_i * A[j][i] == 0 mod m_j).
  GroupHom(AbGroup source, AbGroup target, std::vector<Residue> matrix);

  static GroupHom zero(const AbGroup& source, const AbGroup& target);
  static GroupHom identity(const AbGroup& g);

  const AbGroup& source() const { return source_; }
  const AbGroup& target() const { return target_; }
  std::span<const Residue> matrix() const { return matrix_; }
  Residue entry(std::size_t row, std::size_t col) const { return matrix_[row * source_.rank() + col]; }
  bool is_zero() const;

  GroupElement operator()(const GroupElement& a) const;

  friend bool operator==(const GroupHom&, const GroupHom&) = default;

 private:
  AbGroup source_;
  AbGroup target_;
  std::vector<Residue> matrix_;
};

GroupElement apply_hom(const GroupHom& f, const GroupElement& a);
// f after g.
GroupHom compose_homs(const GroupHom& f, const GroupHom& g);
// Pointwise f - g + h.
GroupHom hom_ternary(const GroupHom& f, const GroupHom& g, const GroupHom& h);
GroupHom add_homs(const GroupHom& f, const GroupHom& g);
GroupHom sub_homs(const GroupHom& f, const GroupHom& g);

// prod_{i,j} gcd(n_i, m_j), saturating.
std::uint64_t hom_count(const AbGroup& g, const AbGroup& h);
// All of Hom(g, h), matrices in lexicographic order of their row-major entries.
std::vector<GroupHom> hom_enumerate(const AbGroup& g, const AbGroup& h, const Limits& limits = {});

bool is_bijective(const GroupHom& f);
// Throws NotAnIsomorphism when f is not bijective.
GroupHom inverse_hom(const GroupHom& f);
std::vector<GroupHom> group_isomorphisms(const AbGroup& g, const AbGroup& h, const Limits& limits = {});
// Image of f as a sorted list of elements.
std::vector<GroupElement> hom_image(const GroupHom& f);

// Invariant factors d_1 | d_2 | ... | d_l with every d_i >= 2.
AbGroup invariant_factors(const AbGroup& g);
bool groups_isomorphic(const AbGroup& g, const AbGroup& h);

}  // namespace trusskit
