#pragma once

// Abelian, cyclic, nilpotent, solvable and supersolvable subgroups, plus
// subgroup-order statistics.

#include <array>
#include <cstdint>
#include <mutex>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "tomseq/enumerate.hpp"
#include "tomseq/intseq.hpp"
#include "tomseq/perm.hpp"

namespace tomseq {

enum class Property { abelian, cyclic, nilpotent, solvable, supersolvable };

/// Column order used for class-count reports.
inline constexpr std::array<Property, 5> kAllProperties = {
    Property::abelian, Property::cyclic, Property::nilpotent, Property::solvable,
    Property::supersolvable};

std::string_view property_name(Property p);

struct PropertyFlags {
  bool abelian = false;
  bool cyclic = false;
  bool nilpotent = false;
  bool solvable = false;
  bool supersolvable = false;

  bool has(Property p) const noexcept;
  /// cyclic => abelian => nilpotent => supersolvable => solvable
  bool consistent() const noexcept;

  friend bool operator==(const PropertyFlags&, const PropertyFlags&) = default;
};

bool is_abelian(const Group& h);
bool is_cyclic(const Group& h);
bool is_solvable(const Group& h);
/// Every Sylow subgroup is normal.
bool is_nilpotent(const Group& h);
/// Elements of coprime order commute (independent nilpotency check).
bool is_nilpotent_by_coprime_commuting(const Group& h);
/// Has a normal subgroup N of prime order with h/N supersolvable.
bool is_supersolvable(const Group& h);

Group derived_subgroup(const Group& h);
/// A Sylow p-subgroup, grown greedily by p-elements.
Group sylow_subgroup(const Group& h, std::uint64_t p);
std::vector<std::uint64_t> prime_factors(std::uint64_t n);
/// All divisors of n in increasing order (trial division).
std::vector<std::uint64_t> divisors(std::uint64_t n);

/// Throws std::logic_error if the implication chain fails.
PropertyFlags classify(const Group& h);

/// classify() with results memoized by group identity. Thread-safe.
class PropertyClassifier {
 public:
  PropertyFlags classify(const Group& h);
  std::size_t cache_size() const;

 private:
  mutable std::mutex mutex_;
  std::unordered_map<Group, PropertyFlags, GroupHash> cache_;
};

std::vector<PropertyFlags> classify_classes(const ClassTable& ct);

/// Five counts in kAllProperties order; weighted counts sum class lengths.
IntSeq property_class_counts(const ClassTable& ct, bool weighted);
IntSeq property_class_counts(const std::vector<PropertyFlags>& flags,
                             const std::vector<std::uint64_t>& class_lengths, bool weighted);

struct OrderStats {
  std::size_t distinct_orders = 0;
  std::size_t missing_divisors = 0;
};

OrderStats subgroup_order_stats(const ClassTable& ct);
OrderStats subgroup_order_stats(std::uint64_t group_order, const std::vector<std::uint64_t>& class_orders);

}  // namespace tomseq
