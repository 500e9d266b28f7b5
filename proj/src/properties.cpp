#include "tomseq/properties.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace tomseq {

std::string_view property_name(Property p) {
  switch (p) {
    case Property::abelian: return "abelian";
    case Property::cyclic: return "cyclic";
    case Property::nilpotent: return "nilpotent";
    case Property::solvable: return "solvable";
    case Property::supersolvable: return "supersolvable";
  }
  return "?";
}

bool PropertyFlags::has(Property p) const noexcept {
  switch (p) {
    case Property::abelian: return abelian;
    case Property::cyclic: return cyclic;
    case Property::nilpotent: return nilpotent;
    case Property::solvable: return solvable;
    case Property::supersolvable: return supersolvable;
  }
  return false;
}

bool PropertyFlags::consistent() const noexcept {
  return (!cyclic || abelian) && (!abelian || nilpotent) && (!nilpotent || supersolvable) &&
         (!supersolvable || solvable);
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    out.push_back(p);
    while (n % p == 0) n /= p;
  }
  if (n > 1) out.push_back(n);
  return out;
}

std::vector<std::uint64_t> divisors(std::uint64_t n) {
  std::vector<std::uint64_t> out{1};
  std::uint64_t rest = n;
  for (std::uint64_t p = 2; p * p <= rest; ++p) {
    if (rest % p) continue;
    std::size_t before = out.size();
    std::uint64_t pk = 1;
    while (rest % p == 0) {
      rest /= p;
      pk *= p;
      for (std::size_t i = 0; i < before; ++i) out.push_back(out[i] * pk);
    }
  }
  if (rest > 1) {
    std::size_t before = out.size();
    for (std::size_t i = 0; i < before; ++i) out.push_back(out[i] * rest);
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool is_abelian(const Group& h) {
  const auto& g = h.generators();
  for (std::size_t i = 0; i < g.size(); ++i)
    for (std::size_t j = i + 1; j < g.size(); ++j)
      if (compose(g[i], g[j]) != compose(g[j], g[i])) return false;
  return true;
}

bool is_cyclic(const Group& h) {
  return std::any_of(h.elements().begin(), h.elements().end(),
                     [&](const Permutation& x) { return x.order() == h.order(); });
}

Group derived_subgroup(const Group& h) {
  std::vector<Permutation> commutators;
  const auto& g = h.generators();
  for (std::size_t i = 0; i < g.size(); ++i)
    for (std::size_t j = i + 1; j < g.size(); ++j) {
      Permutation c = compose(compose(g[i].inverse(), g[j].inverse()), compose(g[i], g[j]));
      if (!c.is_identity()) commutators.push_back(std::move(c));
    }
  return normal_closure(h, commutators);
}

bool is_solvable(const Group& h) {
  Group d = h;
  while (!d.is_trivial()) {
    Group next = derived_subgroup(d);
    if (next.order() == d.order()) return false;
    d = std::move(next);
  }
  return true;
}

namespace {

bool is_power_of(std::uint64_t n, std::uint64_t p) {
  while (n % p == 0) n /= p;
  return n == 1;
}

std::uint64_t prime_part(std::uint64_t n, std::uint64_t p) {
  std::uint64_t part = 1;
  while (n % p == 0) {
    n /= p;
    part *= p;
  }
  return part;
}

bool is_normal_in(const Group& n, const Group& h) {
  for (const auto& t : h.generators())
    for (const auto& s : n.generators())
      if (!n.contains(conjugate(s, t))) return false;
  return true;
}

}  // namespace

Group sylow_subgroup(const Group& h, std::uint64_t p) {
  const std::uint64_t target = prime_part(h.order(), p);
  Group sylow(h.degree());
  for (const auto& x : h.elements()) {
    if (sylow.order() == target) break;
    if (x.is_identity() || !is_power_of(x.order(), p) || sylow.contains(x)) continue;
    std::vector<Permutation> gens = sylow.generators();
    gens.push_back(x);
    auto candidate = bounded_closure(gens, h.degree(), target);
    if (candidate && is_power_of(candidate->order(), p)) sylow = std::move(*candidate);
  }
  return sylow;
}

bool is_nilpotent(const Group& h) {
  for (auto p : prime_factors(h.order()))
    if (!is_normal_in(sylow_subgroup(h, p), h)) return false;
  return true;
}

bool is_nilpotent_by_coprime_commuting(const Group& h) {
  const auto& e = h.elements();
  std::vector<std::uint64_t> orders;
  orders.reserve(e.size());
  for (const auto& x : e) orders.push_back(x.order());
  for (std::size_t i = 0; i < e.size(); ++i)
    for (std::size_t j = i + 1; j < e.size(); ++j)
      if (std::gcd(orders[i], orders[j]) == 1 && compose(e[i], e[j]) != compose(e[j], e[i]))
        return false;
  return true;
}

bool is_supersolvable(const Group& h) {
  if (h.is_trivial()) return true;
  for (const auto& x : h.elements()) {
    const auto order = x.order();
    if (order == 1 || prime_factors(order).size() != 1 || prime_factors(order)[0] != order) continue;
    Group n = closure({x}, h.degree());
    if (!is_normal_in(n, h)) continue;
    // Any normal subgroup of prime order works: quotients of supersolvable
    // groups are supersolvable.
    return is_supersolvable(coset_action(h, n).image());
  }
  return false;
}

PropertyFlags classify(const Group& h) {
  PropertyFlags f;
  f.abelian = is_abelian(h);
  f.cyclic = f.abelian && is_cyclic(h);
  f.nilpotent = f.abelian || is_nilpotent(h);
  f.solvable = is_solvable(h);
  f.supersolvable = f.solvable && is_supersolvable(h);
  if (!f.consistent())
    throw std::logic_error("property flags violate cyclic => abelian => nilpotent => "
                           "supersolvable => solvable");
  return f;
}

PropertyFlags PropertyClassifier::classify(const Group& h) {
  {
    std::lock_guard lock(mutex_);
    if (auto it = cache_.find(h); it != cache_.end()) return it->second;
  }
  PropertyFlags f = tomseq::classify(h);
  std::lock_guard lock(mutex_);
  cache_.emplace(h, f);
  return f;
}

std::size_t PropertyClassifier::cache_size() const {
  std::lock_guard lock(mutex_);
  return cache_.size();
}

std::vector<PropertyFlags> classify_classes(const ClassTable& ct) {
  std::vector<PropertyFlags> out;
  out.reserve(ct.size());
  for (const auto& c : ct.classes) out.push_back(classify(c.representative));
  return out;
}

IntSeq property_class_counts(const std::vector<PropertyFlags>& flags,
                             const std::vector<std::uint64_t>& class_lengths, bool weighted) {
  if (flags.size() != class_lengths.size())
    throw std::invalid_argument("property flags and class lengths differ in length");
  std::vector<std::int64_t> counts(kAllProperties.size(), 0);
  for (std::size_t i = 0; i < flags.size(); ++i)
    for (std::size_t p = 0; p < kAllProperties.size(); ++p)
      if (flags[i].has(kAllProperties[p]))
        counts[p] += weighted ? static_cast<std::int64_t>(class_lengths[i]) : 1;
  return IntSeq(std::move(counts), weighted ? "subgroups by property" : "classes by property");
}

IntSeq property_class_counts(const ClassTable& ct, bool weighted) {
  std::vector<std::uint64_t> lengths;
  for (const auto& c : ct.classes) lengths.push_back(c.class_length);
  return property_class_counts(classify_classes(ct), lengths, weighted);
}

OrderStats subgroup_order_stats(std::uint64_t group_order,
                                const std::vector<std::uint64_t>& class_orders) {
  std::set<std::uint64_t> present(class_orders.begin(), class_orders.end());
  OrderStats s;
  s.distinct_orders = present.size();
  for (auto d : divisors(group_order))
    if (!present.contains(d)) ++s.missing_divisors;
  return s;
}

OrderStats subgroup_order_stats(const ClassTable& ct) {
  std::vector<std::uint64_t> orders;
  for (const auto& c : ct.classes) orders.push_back(c.order);
  return subgroup_order_stats(ct.group.order(), orders);
}

}  // namespace tomseq
