#include "trusskit/abelian.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <numeric>
#include <set>

#include "trusskit/errors.hpp"

namespace trusskit {

std::string to_string(const GroupElement& element) {
  std::string out = "(";
  for (std::size_t i = 0; i < element.size(); ++i) {
    if (i != 0) out += ",";
    out += std::to_string(element[i]);
  }
  return out + ")";
}

AbGroup::AbGroup(std::vector<std::uint64_t> orders) : orders_(std::move(orders)) {
  constexpr std::uint64_t kMaxCardinality = std::uint64_t{1} << 63;
  for (const auto n : orders_) {
    if (n == 0) throw InvalidInput("cyclic order must be positive");
    if (n > kMaxCyclicOrder) throw InvalidInput("cyclic order " + std::to_string(n) + " exceeds 2^32");
    if (cardinality_ > kMaxCardinality / n) throw InvalidInput("group cardinality exceeds 2^63");
    cardinality_ *= n;
  }
}

bool AbGroup::contains(const GroupElement& a) const {
  if (a.size() != orders_.size()) return false;
  for (std::size_t i = 0; i < orders_.size(); ++i) {
    if (a[i] >= orders_[i]) return false;
  }
  return true;
}

void AbGroup::require_member(const GroupElement& a) const {
  if (a.size() != orders_.size()) {
    throw InvalidInput("element " + to_string(a) + " has " + std::to_string(a.size()) +
                       " coordinates, group has rank " + std::to_string(orders_.size()));
  }
  if (!contains(a)) throw InvalidInput("element " + to_string(a) + " is not reduced");
}

GroupElement AbGroup::element(std::vector<std::uint64_t> coords) const {
  if (coords.size() != orders_.size()) {
    throw InvalidInput("expected " + std::to_string(orders_.size()) + " coordinates, got " +
                       std::to_string(coords.size()));
  }
  for (std::size_t i = 0; i < coords.size(); ++i) coords[i] %= orders_[i];
  return GroupElement(std::move(coords));
}

GroupElement AbGroup::zero() const { return GroupElement(std::vector<Residue>(orders_.size(), 0)); }

GroupElement AbGroup::add(const GroupElement& a, const GroupElement& b) const {
  require_member(a);
  require_member(b);
  std::vector<Residue> out(orders_.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = (a[i] + b[i]) % orders_[i];
  return GroupElement(std::move(out));
}

GroupElement AbGroup::neg(const GroupElement& a) const {
  require_member(a);
  std::vector<Residue> out(orders_.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = (orders_[i] - a[i]) % orders_[i];
  return GroupElement(std::move(out));
}

GroupElement AbGroup::sub(const GroupElement& a, const GroupElement& b) const { return add(a, neg(b)); }

GroupElement AbGroup::ternary(const GroupElement& a, const GroupElement& b, const GroupElement& c) const {
  return add(sub(a, b), c);
}

std::uint64_t AbGroup::index_of(const GroupElement& a) const {
  require_member(a);
  std::uint64_t index = 0;
  for (std::size_t i = 0; i < orders_.size(); ++i) index = index * orders_[i] + a[i];
  return index;
}

GroupElement AbGroup::element_at(std::uint64_t index) const {
  if (index >= cardinality_) throw InvalidInput("element index out of range");
  std::vector<Residue> coords(orders_.size());
  for (std::size_t i = orders_.size(); i-- > 0;) {
    coords[i] = index % orders_[i];
    index /= orders_[i];
  }
  return GroupElement(std::move(coords));
}

AbGroup make_group(std::vector<std::uint64_t> orders) { return AbGroup(std::move(orders)); }

AbGroup parse_group_spec(std::string_view spec) {
  std::vector<std::uint64_t> orders;
  if (spec.empty()) return AbGroup();
  std::size_t pos = 0;
  while (true) {
    const auto comma = spec.find(',', pos);
    const auto token = spec.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
    std::uint64_t value = 0;
    const auto [end, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (token.empty() || ec != std::errc() || end != token.data() + token.size()) {
      throw InvalidInput("malformed group spec \"" + std::string(spec) + "\"");
    }
    orders.push_back(value);
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return AbGroup(std::move(orders));
}

std::string format_group_spec(const AbGroup& g) {
  std::string out;
  for (std::size_t i = 0; i < g.rank(); ++i) {
    if (i != 0) out += ",";
    out += std::to_string(g.orders()[i]);
  }
  return out;
}

std::vector<GroupElement> enumerate_elements(const AbGroup& g, const Limits& limits) {
  check_bound(g.cardinality(), limits.max_enumeration, "group elements");
  std::vector<GroupElement> out;
  out.reserve(g.cardinality());
  for (std::uint64_t i = 0; i < g.cardinality(); ++i) out.push_back(g.element_at(i));
  return out;
}

// --- homomorphisms ---------------------------------------------------------

GroupHom::GroupHom(AbGroup source, AbGroup target, std::vector<Residue> matrix)
    : source_(std::move(source)), target_(std::move(target)), matrix_(std::move(matrix)) {
  const auto rows = target_.rank();
  const auto cols = source_.rank();
  if (matrix_.size() != rows * cols) {
    throw InvalidInput("hom matrix has " + std::to_string(matrix_.size()) + " entries, expected " +
                       std::to_string(rows * cols));
  }
  for (std::size_t j = 0; j < rows; ++j) {
    const auto m = target_.orders()[j];
    for (std::size_t i = 0; i < cols; ++i) {
      const auto a = matrix_[j * cols + i];
      if (a >= m) throw InvalidInput("hom matrix entry not reduced modulo target order");
      if ((source_.orders()[i] % m) * a % m != 0) {
        throw InvalidInput("hom matrix entry " + std::to_string(a) + " is not well defined from Z/" +
                           std::to_string(source_.orders()[i]) + " to Z/" + std::to_string(m));
      }
    }
  }
}

GroupHom GroupHom::zero(const AbGroup& source, const AbGroup& target) {
  return GroupHom(source, target, std::vector<Residue>(source.rank() * target.rank(), 0));
}

GroupHom GroupHom::identity(const AbGroup& g) {
  const auto k = g.rank();
  std::vector<Residue> m(k * k, 0);
  for (std::size_t i = 0; i < k; ++i) m[i * k + i] = 1 % g.orders()[i];
  return GroupHom(g, g, std::move(m));
}

bool GroupHom::is_zero() const {
  return std::all_of(matrix_.begin(), matrix_.end(), [](Residue r) { return r == 0; });
}

GroupElement GroupHom::operator()(const GroupElement& a) const {
  if (!source_.contains(a)) throw InvalidInput("element " + to_string(a) + " is not in the hom source");
  const auto rows = target_.rank();
  const auto cols = source_.rank();
  std::vector<Residue> out(rows, 0);
  for (std::size_t j = 0; j < rows; ++j) {
    const auto m = target_.orders()[j];
    Residue acc = 0;
    for (std::size_t i = 0; i < cols; ++i) acc = (acc + matrix_[j * cols + i] * (a[i] % m) % m) % m;
    out[j] = acc;
  }
  return GroupElement(std::move(out));
}

GroupElement apply_hom(const GroupHom& f, const GroupElement& a) { return f(a); }

GroupHom compose_homs(const GroupHom& f, const GroupHom& g) {
  if (!(f.source() == g.target())) throw InvalidInput("compose_homs: source of f differs from target of g");
  const auto& src = g.source();
  const auto& mid = g.target();
  const auto& dst = f.target();
  std::vector<Residue> m(dst.rank() * src.rank(), 0);
  for (std::size_t k = 0; k < dst.rank(); ++k) {
    const auto p = dst.orders()[k];
    for (std::size_t i = 0; i < src.rank(); ++i) {
      Residue acc = 0;
      for (std::size_t j = 0; j < mid.rank(); ++j) acc = (acc + f.entry(k, j) * (g.entry(j, i) % p) % p) % p;
      m[k * src.rank() + i] = acc;
    }
  }
  return GroupHom(src, dst, std::move(m));
}

namespace {

void require_parallel(const GroupHom& f, const GroupHom& g) {
  if (!(f.source() == g.source()) || !(f.target() == g.target())) {
    throw InvalidInput("pointwise hom operation on homs with different source or target");
  }
}

GroupHom pointwise(const GroupHom& f, const GroupHom& g, const GroupHom& h, int sign_g) {
  const auto cols = f.source().rank();
  std::vector<Residue> m(f.matrix().begin(), f.matrix().end());
  for (std::size_t j = 0; j < f.target().rank(); ++j) {
    const auto order = f.target().orders()[j];
    for (std::size_t i = 0; i < cols; ++i) {
      auto& v = m[j * cols + i];
      const auto gv = g.entry(j, i);
      v = sign_g < 0 ? (v + order - gv) % order : (v + gv) % order;
      v = (v + h.entry(j, i)) % order;
    }
  }
  return GroupHom(f.source(), f.target(), std::move(m));
}

}  // namespace

GroupHom hom_ternary(const GroupHom& f, const GroupHom& g, const GroupHom& h) {
  require_parallel(f, g);
  require_parallel(f, h);
  return pointwise(f, g, h, -1);
}

GroupHom add_homs(const GroupHom& f, const GroupHom& g) {
  require_parallel(f, g);
  return pointwise(f, g, GroupHom::zero(f.source(), f.target()), +1);
}

GroupHom sub_homs(const GroupHom& f, const GroupHom& g) {
  require_parallel(f, g);
  return pointwise(f, g, GroupHom::zero(f.source(), f.target()), -1);
}

std::uint64_t hom_count(const AbGroup& g, const AbGroup& h) {
  std::uint64_t count = 1;
  for (const auto m : h.orders()) {
    for (const auto n : g.orders()) count = saturating_mul(count, std::gcd(n, m));
  }
  return count;
}

std::vector<GroupHom> hom_enumerate(const AbGroup& g, const AbGroup& h, const Limits& limits) {
  check_bound(hom_count(g, h), limits.max_enumeration, "Hom enumeration");
  const auto rows = h.rank();
  const auto cols = g.rank();
  // Entry (j, i) ranges over multiples of step = m_j / gcd(n_i, m_j).
  std::vector<std::uint64_t> step(rows * cols);
  std::vector<std::uint64_t> radix(rows * cols);
  for (std::size_t j = 0; j < rows; ++j) {
    for (std::size_t i = 0; i < cols; ++i) {
      const auto d = std::gcd(g.orders()[i], h.orders()[j]);
      step[j * cols + i] = h.orders()[j] / d;
      radix[j * cols + i] = d;
    }
  }
  std::vector<GroupHom> out;
  out.reserve(hom_count(g, h));
  std::vector<std::uint64_t> digits(rows * cols, 0);
  while (true) {
    std::vector<Residue> m(rows * cols);
    for (std::size_t p = 0; p < m.size(); ++p) m[p] = digits[p] * step[p];
    out.emplace_back(g, h, std::move(m));
    std::size_t p = digits.size();
    while (p > 0) {
      --p;
      if (++digits[p] < radix[p]) break;
      digits[p] = 0;
      if (p == 0) return out;
    }
    if (digits.empty()) return out;
  }
}

bool is_bijective(const GroupHom& f) {
  if (f.source().cardinality() != f.target().cardinality()) return false;
  const auto& g = f.source();
  const auto zero = f.target().zero();
  for (std::uint64_t i = 1; i < g.cardinality(); ++i) {
    if (f(g.element_at(i)) == zero) return false;
  }
  return true;
}

GroupHom inverse_hom(const GroupHom& f) {
  if (!is_bijective(f)) throw NotAnIsomorphism("group hom is not bijective");
  const auto& g = f.source();
  const auto& h = f.target();
  std::vector<std::uint64_t> preimage(h.cardinality());
  for (std::uint64_t i = 0; i < g.cardinality(); ++i) preimage[h.index_of(f(g.element_at(i)))] = i;
  std::vector<Residue> m(g.rank() * h.rank());
  for (std::size_t j = 0; j < h.rank(); ++j) {
    std::vector<std::uint64_t> basis(h.rank(), 0);
    basis[j] = 1;
    const auto pre = g.element_at(preimage[h.index_of(h.element(basis))]);
    for (std::size_t i = 0; i < g.rank(); ++i) m[i * h.rank() + j] = pre[i];
  }
  return GroupHom(h, g, std::move(m));
}

std::vector<GroupHom> group_isomorphisms(const AbGroup& g, const AbGroup& h, const Limits& limits) {
  std::vector<GroupHom> out;
  if (g.cardinality() != h.cardinality()) return out;
  for (auto& f : hom_enumerate(g, h, limits)) {
    if (is_bijective(f)) out.push_back(std::move(f));
  }
  return out;
}

std::vector<GroupElement> hom_image(const GroupHom& f) {
  std::set<GroupElement> image;
  for (std::uint64_t i = 0; i < f.source().cardinality(); ++i) image.insert(f(f.source().element_at(i)));
  return {image.begin(), image.end()};
}

AbGroup invariant_factors(const AbGroup& g) {
  // prime -> exponents of the prime-power parts of every cyclic factor
  std::map<std::uint64_t, std::vector<std::uint64_t>> powers;
  for (auto n : g.orders()) {
    for (std::uint64_t p = 2; p * p <= n; ++p) {
      if (n % p != 0) continue;
      std::uint64_t q = 1;
      while (n % p == 0) {
        n /= p;
        q *= p;
      }
      powers[p].push_back(q);
    }
    if (n > 1) powers[n].push_back(n);
  }
  std::size_t length = 0;
  for (auto& [p, qs] : powers) {
    std::sort(qs.begin(), qs.end(), std::greater<>());
    length = std::max(length, qs.size());
  }
  // The i-th largest invariant factor collects the i-th largest power of each prime.
  std::vector<std::uint64_t> factors(length, 1);
  for (const auto& [p, qs] : powers) {
    for (std::size_t i = 0; i < qs.size(); ++i) factors[i] *= qs[i];
  }
  std::reverse(factors.begin(), factors.end());
  return AbGroup(std::move(factors));
}

bool groups_isomorphic(const AbGroup& g, const AbGroup& h) { return invariant_factors(g) == invariant_factors(h); }

}  // namespace trusskit
