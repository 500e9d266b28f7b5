#include <gtest/gtest.h>

#include <set>

#include "tomseq/connectivity.hpp"
#include "tomseq/transforms.hpp"

using namespace tomseq;

namespace {

using Blocks = std::vector<std::vector<std::size_t>>;

IntSeq class_counts(std::size_t n_max, std::optional<Property> p) {
  std::vector<std::int64_t> v;
  for (std::size_t n = 1; n <= n_max; ++n) {
    const auto ct = class_table(symmetric_group(n));
    const auto flags = classify_classes(ct);
    std::int64_t c = 0;
    for (const auto& f : flags) c += !p || f.has(*p);
    v.push_back(c);
  }
  return IntSeq(std::move(v));
}

IntSeq connected_counts(std::size_t n_max, std::optional<Property> p) {
  std::vector<std::int64_t> v;
  for (std::size_t n = 1; n <= n_max; ++n)
    v.push_back(static_cast<std::int64_t>(connected_class_count(class_table(symmetric_group(n)), ClassFilter::all, p)));
  return IntSeq(std::move(v));
}

}  // namespace

TEST(Decompose, ProductOfTranspositionsIsNotConnected) {
  const auto h = closure({Permutation::from_cycles(4, {{0, 1}}), Permutation::from_cycles(4, {{2, 3}})}, 4);
  const auto d = decompose(h);
  EXPECT_EQ(d.blocks, (Blocks{{0, 1}, {2, 3}}));
  EXPECT_FALSE(d.connected());
  EXPECT_EQ(d.factors[0].order(), 2u);
}

TEST(Decompose, DoubleTranspositionIsConnected) {
  const auto h = closure({Permutation::from_cycles(4, {{0, 1}, {2, 3}})}, 4);
  EXPECT_EQ(decompose(h).blocks, (Blocks{{0, 1, 2, 3}}));
  EXPECT_TRUE(is_connected(h));
}

TEST(Decompose, TrivialGroupSplitsIntoPoints) {
  const auto d = decompose(Group(3));
  EXPECT_EQ(d.blocks, (Blocks{{0}, {1}, {2}}));
  for (const auto& f : d.factors) EXPECT_TRUE(f.is_trivial());
  EXPECT_TRUE(is_connected(Group(1)));
}

TEST(Decompose, IdempotentAndReassembles) {
  for (const auto& c : class_table(symmetric_group(6)).classes) {
    const auto d = decompose(c.representative);
    EXPECT_EQ(reassemble(d), c.representative) << c.label;
    for (std::size_t b = 0; b < d.blocks.size(); ++b) {
      const auto inner = decompose(d.factors[b]);
      // The factor fixes everything outside its block.
      std::size_t moved_blocks = 0;
      for (const auto& blk : inner.blocks) moved_blocks += blk == d.blocks[b];
      EXPECT_EQ(moved_blocks, 1u) << c.label;
    }
  }
}

TEST(Partitions, Basics) {
  EXPECT_EQ(partitions_of(5).size(), 7u);
  EXPECT_EQ(partitions_of(5).front().parts, (std::vector<std::uint32_t>{5}));
  EXPECT_EQ((Partition{{6, 4, 3}}).to_string(), "[6,4,3]");
  EXPECT_EQ((Partition{{6, 4, 3}}).total(), 13u);
  EXPECT_TRUE(is_connected_partition(Partition{{13}}));
  EXPECT_TRUE(is_connected_partition(Partition{{6, 4, 3}}));
  EXPECT_FALSE(is_connected_partition(Partition{{3, 2}}));
  EXPECT_FALSE(is_connected_partition(Partition{{2, 1}}));
  EXPECT_TRUE(is_even_partition(Partition{{3, 1}}));
  EXPECT_FALSE(is_even_partition(Partition{{2}}));
}

TEST(Partitions, ConnectedCounts) {
  EXPECT_EQ(connected_partition_count(13), 3u);
  EXPECT_EQ(connected_partition_count(12), 14u);
  EXPECT_EQ(connected_partition_count(8, true), 3u);
  EXPECT_EQ(connected_partition_count(1, true), 1u);
  const auto list = connected_partitions(13);
  EXPECT_NE(std::find(list.begin(), list.end(), Partition{{6, 4, 3}}), list.end());
  EXPECT_THROW(connected_partitions(0), std::invalid_argument);
}

TEST(Partitions, EvenCountsMatchAlternatingClassesOfCyclicSubgroups) {
  // A_n-classes of connected cyclic subgroups, counted directly.
  for (std::size_t n = 1; n <= 7; ++n) {
    const auto ct = class_table(alternating_group(n));
    std::uint64_t direct = 0;
    for (const auto& c : ct.classes)
      if (is_cyclic(c.representative) && is_connected(c.representative)) ++direct;
    EXPECT_EQ(connected_partition_count(static_cast<std::uint32_t>(n), true), direct) << "n=" << n;
  }
}

TEST(Partitions, CountsMatchConnectedCyclicClasses) {
  for (std::size_t n = 1; n <= 7; ++n) {
    const auto ct = class_table(symmetric_group(n));
    EXPECT_EQ(connected_partition_count(static_cast<std::uint32_t>(n)),
              connected_class_count(ct, ClassFilter::all, Property::cyclic))
        << "n=" << n;
  }
}

TEST(Splitting, NeedsDistinctOddParts) {
  EXPECT_FALSE(splits_in_alternating(Partition{{1}}));
  EXPECT_FALSE(splits_in_alternating(Partition{{3, 3}}));
  EXPECT_FALSE(splits_in_alternating(Partition{{2, 2}}));
  EXPECT_FALSE(splits_in_alternating(Partition{{4}}));
  // x -> 2x on Z/5 is a 4-cycle, so an odd permutation normalizes a 5-cycle.
  EXPECT_FALSE(splits_in_alternating(Partition{{5}}));
  EXPECT_TRUE(splits_in_alternating(Partition{{9}}));
}

TEST(PairEncoding, Examples) {
  const auto tables = symmetric_class_tables(4);
  const auto h = closure({Permutation::from_cycles(4, {{0, 1}}), Permutation::from_cycles(4, {{2, 3}})}, 4);
  const auto e = pair_encoding(h, tables);
  EXPECT_EQ(e.shape, (Partition{{2, 2}}));
  EXPECT_EQ(e.classes[1], (std::vector<std::size_t>{1, 1}));
  const auto t = pair_encoding(Group(4), tables);
  EXPECT_EQ(t.shape, (Partition{{1, 1, 1, 1}}));
}

TEST(PairEncoding, IsInjectiveOnClasses) {
  const auto tables = symmetric_class_tables(6);
  for (std::size_t n = 1; n <= 6; ++n) {
    std::set<PairEncoding> seen;
    for (const auto& c : tables[n - 1].classes) seen.insert(pair_encoding(c.representative, tables));
    EXPECT_EQ(seen.size(), tables[n - 1].size()) << "n=" << n;
  }
}

TEST(Lemma, InverseEulerOfClassCountsCountsConnectedClasses) {
  EXPECT_EQ(inverse_euler_transform(class_counts(6, std::nullopt), 6), connected_counts(6, std::nullopt));
}

TEST(Lemma, PropertiesCompatibleWithDirectProducts) {
  for (auto p : {Property::abelian, Property::nilpotent, Property::solvable, Property::supersolvable})
    EXPECT_EQ(inverse_euler_transform(class_counts(6, p), 6), connected_counts(6, p)) << property_name(p);
}

TEST(Lemma, CyclicIsNotCompatible) {
  // Products of cyclic groups need not be cyclic: the all-ones sequence comes out instead.
  EXPECT_EQ(inverse_euler_transform(class_counts(6, Property::cyclic), 6), (IntSeq{1, 1, 1, 1, 1, 1}));
}

TEST(ConnectedClasses, PublishedValues) {
  const auto s6 = class_table(symmetric_group(6));
  EXPECT_EQ(connected_class_count(s6, ClassFilter::all, Property::abelian), 6u);
  const auto s7 = class_table(symmetric_group(7));
  EXPECT_EQ(connected_class_count(s7, ClassFilter::inside_alternating), 12u);
  EXPECT_EQ(connected_class_count(s7, ClassFilter::outside_alternating), 8u);
  EXPECT_EQ(connected_class_count(class_table(alternating_group(7))), 15u);
}
