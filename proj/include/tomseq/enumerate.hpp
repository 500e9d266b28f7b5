#pragma once

// Exhaustive subgroup enumeration and conjugacy classes of subgroups.

#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "tomseq/perm.hpp"

namespace tomseq {

inline constexpr std::size_t kDefaultOrderBudget = 5040;   // |S_7|
inline constexpr std::size_t kLargeOrderBudget = 40320;    // |S_8|

class BudgetExceeded : public std::runtime_error {
 public:
  BudgetExceeded(std::size_t order, std::size_t budget);
  std::size_t order() const noexcept { return order_; }
  std::size_t budget() const noexcept { return budget_; }

 private:
  std::size_t order_;
  std::size_t budget_;
};

struct EnumerationOptions {
  std::size_t max_order = kDefaultOrderBudget;
};

struct SubgroupClass {
  Group representative;
  std::uint64_t class_length = 1;
  std::uint64_t order = 1;
  std::string label;
  std::size_t index = 0;
};

/// Conjugacy classes of subgroups of `group`, sorted by order and then by
/// representative (the lexicographically least member of each class). The
/// first class is the trivial group and the last is the whole group.
struct ClassTable {
  Group group;
  std::vector<SubgroupClass> classes;

  std::size_t size() const noexcept { return classes.size(); }
  std::uint64_t total_subgroups() const noexcept;
};

namespace detail {
class LatticeEngine;
}

/// The full subgroup lattice of a small group, every subgroup materialized in
/// index space over the group's element list. Immutable once built.
class SubgroupLattice {
 public:
  explicit SubgroupLattice(const Group& g, const EnumerationOptions& options = {});
  ~SubgroupLattice();
  SubgroupLattice(SubgroupLattice&&) noexcept;
  SubgroupLattice& operator=(SubgroupLattice&&) noexcept;

  const Group& group() const noexcept;
  std::size_t subgroup_count() const noexcept;
  std::size_t class_count() const noexcept;
  /// Subgroup ids of class c (canonical class order); the first id is the
  /// class representative.
  const std::vector<std::size_t>& class_members(std::size_t c) const;
  /// Sorted indices into group().elements().
  const std::vector<std::uint32_t>& subgroup_elements(std::size_t id) const;
  const std::vector<std::uint32_t>& subgroup_generators(std::size_t id) const;
  std::size_t class_of_subgroup(std::size_t id) const;

  Group materialize(std::size_t id) const;
  std::vector<Group> all_subgroups() const;
  ClassTable class_table() const;

  /// Class index of a subgroup of group(); nullopt if h is not a subgroup.
  std::optional<std::size_t> class_of(const Group& h) const;

 private:
  std::unique_ptr<detail::LatticeEngine> engine_;
};

/// Every subgroup of g exactly once, ordered by (order, element sequence).
/// Throws BudgetExceeded when |g| > options.max_order.
std::vector<Group> all_subgroups(const Group& g, const EnumerationOptions& options = {});

ClassTable class_table(const Group& g, const EnumerationOptions& options = {});

/// Display label from cheap invariants (order, abelian, cyclic, exponent, ...).
std::string subgroup_label(const Group& h);

struct BlueRedSplit {
  std::size_t blue = 0;  // classes contained in A_n
  std::size_t red = 0;   // classes not contained in A_n
};

/// Splits the classes of an S_n class table by containment in A_n.
BlueRedSplit split_by_alternating(const ClassTable& sn_table);
BlueRedSplit sn_classes_of_an_subgroups(std::size_t n, const EnumerationOptions& options = {});

bool lies_in_alternating(const Group& h);

}  // namespace tomseq
