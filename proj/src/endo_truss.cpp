#include "trusskit/endo_truss.hpp"

#include <limits>

#include "trusskit/errors.hpp"

namespace trusskit {

HeapMorphism::HeapMorphism(GroupHom linear, GroupElement translation)
    : linear_(std::move(linear)), translation_(std::move(translation)) {
  if (!linear_.target().contains(translation_)) {
    throw InvalidInput("translation " + to_string(translation_) + " is not in the target group");
  }
}

GroupElement HeapMorphism::operator()(const GroupElement& x) const {
  return target().add(linear_(x), translation_);
}

GroupElement eval(const HeapMorphism& phi, const GroupElement& x) { return phi(x); }

HeapMorphism compose(const HeapMorphism& f, const HeapMorphism& g) {
  return HeapMorphism(compose_homs(f.linear(), g.linear()), f(g.translation()));
}

HeapMorphism heap_ternary(const HeapMorphism& f, const HeapMorphism& g, const HeapMorphism& h) {
  return HeapMorphism(hom_ternary(f.linear(), g.linear(), h.linear()),
                      f.target().ternary(f.translation(), g.translation(), h.translation()));
}

bool is_bijective(const HeapMorphism& phi) { return is_bijective(phi.linear()); }

HeapMorphism inverse(const HeapMorphism& phi) {
  // x = L^{-1}(y - h0)
  auto inv = inverse_hom(phi.linear());
  auto shift = inv(phi.target().neg(phi.translation()));
  return HeapMorphism(std::move(inv), std::move(shift));
}

HeapMorphism constant_map(const AbGroup& source, const AbGroup& target, const GroupElement& value) {
  return HeapMorphism(GroupHom::zero(source, target), value);
}

std::vector<GroupElement> eval_table(const HeapMorphism& phi) {
  std::vector<GroupElement> out;
  out.reserve(phi.source().cardinality());
  for (std::uint64_t i = 0; i < phi.source().cardinality(); ++i) out.push_back(phi(phi.source().element_at(i)));
  return out;
}

std::optional<HeapMorphism> try_decompose(const AbGroup& source, const AbGroup& target,
                                          std::span<const GroupElement> table) {
  if (table.size() != source.cardinality()) throw InvalidInput("decompose: table is not total on the source");
  for (const auto& v : table) {
    if (!target.contains(v)) throw InvalidInput("decompose: value " + to_string(v) + " is not in the target");
  }
  const auto& h0 = table[0];
  // Column i of the linear part is the shifted image of the i-th generator.
  std::vector<Residue> matrix(target.rank() * source.rank());
  for (std::size_t i = 0; i < source.rank(); ++i) {
    std::vector<std::uint64_t> generator(source.rank(), 0);
    generator[i] = 1;
    const auto image = target.sub(table[source.index_of(source.element(generator))], h0);
    for (std::size_t j = 0; j < target.rank(); ++j) matrix[j * source.rank() + i] = image[j];
  }
  std::optional<GroupHom> linear;
  try {
    linear.emplace(source, target, std::move(matrix));
  } catch (const InvalidInput&) {
    return std::nullopt;  // generator images violate the order constraints
  }
  for (std::uint64_t x = 0; x < source.cardinality(); ++x) {
    if ((*linear)(source.element_at(x)) != target.sub(table[x], h0)) return std::nullopt;
  }
  return HeapMorphism(std::move(*linear), h0);
}

HeapMorphism decompose(const AbGroup& source, const AbGroup& target, std::span<const GroupElement> table) {
  auto phi = try_decompose(source, target, table);
  if (!phi) throw NotAHeapMorphism("map minus its value at 0 is not additive");
  return std::move(*phi);
}

std::vector<HeapMorphism> heap_morphisms(const AbGroup& g, const AbGroup& h, const Limits& limits) {
  check_bound(saturating_mul(hom_count(g, h), h.cardinality()), limits.max_enumeration, "Heap enumeration");
  const auto translations = enumerate_elements(h, limits);
  std::vector<HeapMorphism> out;
  for (const auto& f : hom_enumerate(g, h, limits)) {
    for (const auto& t : translations) out.emplace_back(f, t);
  }
  return out;
}

std::vector<HeapMorphism> heap_isos(const AbGroup& g, const AbGroup& h, const Limits& limits) {
  std::vector<HeapMorphism> out;
  if (g.cardinality() != h.cardinality()) return out;
  check_bound(saturating_mul(hom_count(g, h), h.cardinality()), limits.max_enumeration, "Heap enumeration");
  const auto translations = enumerate_elements(h, limits);
  for (const auto& f : group_isomorphisms(g, h, limits)) {
    for (const auto& t : translations) out.emplace_back(f, t);
  }
  return out;
}

// --- EndoTruss -------------------------------------------------------------

EndoTruss::EndoTruss(AbGroup base, std::vector<GroupHom> linear_parts, const Limits& limits)
    : base_(std::move(base)), linear_(std::move(linear_parts)) {
  check_bound(base_.cardinality(), limits.max_enumeration, "endomorphism truss base");
  const auto carrier = saturating_mul(base_.cardinality(), linear_.size());
  check_bound(carrier, limits.max_enumeration, "endomorphism truss carrier");
  const std::uint64_t k = linear_.size();
  check_bound(saturating_mul(saturating_mul(k, k), k), limits.max_table_entries, "linear-part table");
  order_ = static_cast<Id>(base_.cardinality());
  size_ = static_cast<Id>(carrier);

  for (Id i = 0; i < linear_.size(); ++i) {
    const auto& f = linear_[i];
    if (!(f.source() == base_) || !(f.target() == base_)) throw InvalidInput("linear part is not an endomorphism");
    const auto [it, inserted] = linear_lookup_.emplace(std::vector<Residue>(f.matrix().begin(), f.matrix().end()), i);
    if (!inserted) throw InvalidInput("duplicate linear part");
  }
  const auto zero = find_linear(GroupHom::zero(base_, base_));
  const auto identity = find_linear(GroupHom::identity(base_));
  if (!zero || !identity) throw InvalidInput("linear parts must contain the zero and identity maps");
  zero_linear_ = *zero;
  identity_linear_ = *identity;

  const auto elements = enumerate_elements(base_, limits);
  add_.resize(static_cast<std::size_t>(order_) * order_);
  neg_.resize(order_);
  for (Id a = 0; a < order_; ++a) {
    neg_[a] = static_cast<Id>(base_.index_of(base_.neg(elements[a])));
    for (Id b = 0; b < order_; ++b) {
      add_[static_cast<std::size_t>(a) * order_ + b] = static_cast<Id>(base_.index_of(base_.add(elements[a], elements[b])));
    }
  }
  apply_.resize(k * order_);
  for (Id i = 0; i < k; ++i)
    for (Id x = 0; x < order_; ++x) {
      apply_[static_cast<std::size_t>(i) * order_ + x] = static_cast<Id>(base_.index_of(linear_[i](elements[x])));
    }
  linear_mult_.resize(k * k);
  for (Id i = 0; i < k; ++i)
    for (Id j = 0; j < k; ++j) {
      const auto product = find_linear(compose_homs(linear_[i], linear_[j]));
      if (!product) throw InvalidInput("linear parts are not closed under composition");
      linear_mult_[static_cast<std::size_t>(i) * k + j] = *product;
    }
  linear_ternary_.resize(k * k * k);
  for (Id i = 0; i < k; ++i)
    for (Id j = 0; j < k; ++j)
      for (Id l = 0; l < k; ++l) {
        const auto t = find_linear(hom_ternary(linear_[i], linear_[j], linear_[l]));
        if (!t) throw InvalidInput("linear parts are not closed under the ternary operation");
        linear_ternary_[(static_cast<std::size_t>(i) * k + j) * k + l] = *t;
      }
}

std::optional<Id> EndoTruss::find_linear(const GroupHom& f) const {
  if (!(f.source() == base_) || !(f.target() == base_)) return std::nullopt;
  const auto it = linear_lookup_.find(std::vector<Residue>(f.matrix().begin(), f.matrix().end()));
  if (it == linear_lookup_.end()) return std::nullopt;
  return it->second;
}

HeapMorphism EndoTruss::element(Id id) const {
  if (id >= size_) throw InvalidInput("truss element id out of range");
  return HeapMorphism(linear_[linear_index(id)], base_.element_at(translation_index(id)));
}

std::optional<Id> EndoTruss::find(const HeapMorphism& phi) const {
  if (!(phi.source() == base_) || !(phi.target() == base_)) return std::nullopt;
  const auto lin = find_linear(phi.linear());
  if (!lin) return std::nullopt;
  return make_id(*lin, static_cast<Id>(base_.index_of(phi.translation())));
}

Id EndoTruss::id_of(const HeapMorphism& phi) const {
  const auto id = find(phi);
  if (!id) throw InvalidInput("heap morphism is not an element of this truss");
  return *id;
}

Id EndoTruss::compose(Id f, Id g) const {
  const std::size_t k = linear_.size();
  const Id lf = linear_index(f);
  const Id lin = linear_mult_[lf * k + linear_index(g)];
  const Id shift = element_add(apply_[static_cast<std::size_t>(lf) * order_ + translation_index(g)], translation_index(f));
  return make_id(lin, shift);
}

Id EndoTruss::ternary(Id f, Id g, Id h) const {
  const std::size_t k = linear_.size();
  const Id lin = linear_ternary_[(linear_index(f) * k + linear_index(g)) * k + linear_index(h)];
  const Id shift = element_add(element_add(translation_index(f), neg_[translation_index(g)]), translation_index(h));
  return make_id(lin, shift);
}

Id EndoTruss::eval(Id id, Id element_index) const {
  return element_add(apply_[static_cast<std::size_t>(linear_index(id)) * order_ + element_index], translation_index(id));
}

Id EndoTruss::hat(const GroupElement& a) const { return hat_index(static_cast<Id>(base_.index_of(a))); }

std::vector<Id> EndoTruss::constants() const {
  std::vector<Id> out(order_);
  for (Id a = 0; a < order_; ++a) out[a] = hat_index(a);
  return out;
}

FiniteTruss EndoTruss::to_truss(const Limits& limits) const {
  const std::uint64_t n = size_;
  check_bound(saturating_mul(saturating_mul(n, n), n), limits.max_table_entries, "endomorphism truss table");
  std::vector<Id> ternary_table(n * n * n);
  std::vector<Id> mult(n * n);
  std::size_t pos = 0;
  for (Id a = 0; a < size_; ++a)
    for (Id b = 0; b < size_; ++b) {
      mult[static_cast<std::size_t>(a) * n + b] = compose(a, b);
      for (Id c = 0; c < size_; ++c) ternary_table[pos++] = ternary(a, b, c);
    }
  return FiniteTruss(FiniteHeap(size_, std::move(ternary_table)), std::move(mult), unit());
}

EndoTruss build_endo_truss(const AbGroup& g, const Limits& limits) {
  return EndoTruss(g, hom_enumerate(g, g, limits), limits);
}

bool is_truss_morphism(const EndoTruss& s, const EndoTruss& t, std::span<const Id> map) {
  if (map.size() != s.size()) throw InvalidInput("map is not total on the source truss");
  for (const auto v : map) {
    if (v >= t.size()) throw InvalidInput("map value out of range");
  }
  for (Id a = 0; a < s.size(); ++a)
    for (Id b = 0; b < s.size(); ++b) {
      if (map[s.compose(a, b)] != t.compose(map[a], map[b])) return false;
    }
  for (Id a = 0; a < s.size(); ++a)
    for (Id b = 0; b < s.size(); ++b)
      for (Id c = 0; c < s.size(); ++c) {
        if (map[s.ternary(a, b, c)] != t.ternary(map[a], map[b], map[c])) return false;
      }
  return true;
}

ConstantSubtruss constants(const EndoTruss& t, const Limits& limits) {
  const auto members = t.constants();
  const auto n = static_cast<Id>(members.size());
  check_bound(saturating_mul(saturating_mul(n, n), n), limits.max_table_entries, "constant sub-truss table");
  std::vector<Id> position(t.size(), std::numeric_limits<Id>::max());
  for (Id i = 0; i < n; ++i) position[members[i]] = i;
  auto locate = [&](Id id) {
    if (position[id] == std::numeric_limits<Id>::max()) throw Error("constant maps are not closed");
    return position[id];
  };
  std::vector<Id> ternary_table(static_cast<std::size_t>(n) * n * n);
  std::vector<Id> mult(static_cast<std::size_t>(n) * n);
  std::size_t pos = 0;
  for (Id a = 0; a < n; ++a)
    for (Id b = 0; b < n; ++b) {
      mult[static_cast<std::size_t>(a) * n + b] = locate(t.compose(members[a], members[b]));
      for (Id c = 0; c < n; ++c) ternary_table[pos++] = locate(t.ternary(members[a], members[b], members[c]));
    }
  return {members, FiniteTruss(FiniteHeap(n, std::move(ternary_table)), std::move(mult))};
}

}  // namespace trusskit
