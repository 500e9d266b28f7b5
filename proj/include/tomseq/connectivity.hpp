#pragma once

// Direct-product decomposition of permutation groups along invariant point
// sets, connected-class counting, and connected partitions.
//
// H on X is connected when no split X = Y | X\Y into H-stable parts has
// H = H_Y x H_{X\Y}. Every group has a finest such split; fixed points become
// singleton blocks with trivial factors.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tomseq/enumerate.hpp"
#include "tomseq/intseq.hpp"
#include "tomseq/perm.hpp"
#include "tomseq/properties.hpp"

namespace tomseq {

struct Decomposition {
  std::vector<std::vector<std::size_t>> blocks;  // sorted, ordered by least point
  std::vector<Group> factors;                    // on the full degree, moving only their block

  bool connected() const noexcept { return blocks.size() == 1; }
};

Decomposition decompose(const Group& h);
bool is_connected(const Group& h);
/// Product of the factors as one group; equals the decomposed group.
Group reassemble(const Decomposition& d);

/// Parts in non-increasing order.
struct Partition {
  std::vector<std::uint32_t> parts;

  std::uint32_t total() const noexcept;
  std::string to_string() const;  // "[6,4,3]"
  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition&, const Partition&) = default;
};

/// All partitions of n, in reverse lexicographic order ([n] first).
std::vector<Partition> partitions_of(std::uint32_t n);
/// Parts are vertices, joined when not coprime; true if that graph is connected.
bool is_connected_partition(const Partition& p);
/// Cycle type of an even permutation: n - (number of parts) is even.
bool is_even_partition(const Partition& p);
/// For an even cycle type: whether the S_n-class of cyclic subgroups
/// generated by such a permutation falls into two A_n-classes, i.e. whether
/// its normalizer in S_n lies inside A_n.
bool splits_in_alternating(const Partition& p);
std::vector<Partition> connected_partitions(std::uint32_t n, bool even_only = false);
/// With even_only, counts A_n-classes of connected cyclic subgroups of A_n:
/// each connected even partition contributes 1, or 2 when it splits.
std::uint64_t connected_partition_count(std::uint32_t n, bool even_only = false);
IntSeq connected_partition_counts(std::uint32_t n_max, bool even_only = false);

enum class ClassFilter {
  all,
  inside_alternating,   // classes of subgroups of A_n
  outside_alternating,  // classes containing an odd permutation
};

/// Classes of `ct` whose representative is connected, optionally restricted
/// by `filter` and to those with property `p`.
std::size_t connected_class_count(const ClassTable& ct, ClassFilter filter = ClassFilter::all,
                                  std::optional<Property> p = std::nullopt);

/// Block sizes as a partition, and for each size i the multiset (sorted list)
/// of S_i-class indices of the factors of that size, after relabelling each
/// block to {0..i-1} in ascending point order. `sn_tables[i - 1]` must be
/// the class table of S_i for every block size i that occurs.
struct PairEncoding {
  Partition shape;
  std::vector<std::vector<std::size_t>> classes;  // classes[i - 1] for size i

  friend bool operator==(const PairEncoding&, const PairEncoding&) = default;
  friend auto operator<=>(const PairEncoding&, const PairEncoding&) = default;
};

PairEncoding pair_encoding(const Group& h, const std::vector<ClassTable>& sn_tables);
/// Class tables of S_1..S_n.
std::vector<ClassTable> symmetric_class_tables(std::size_t n);

}  // namespace tomseq
