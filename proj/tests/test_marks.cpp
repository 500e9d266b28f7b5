#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>

#include "tomseq/marks.hpp"

using namespace tomseq;

namespace {

// Rows and columns ordered 1, 2, 2, 3, 2^2, 2^2, 4, S_3, D_8, A_4, S_4.
const IntMatrix kMarksS4 = {
    {24, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},  {12, 4, 0, 0, 0, 0, 0, 0, 0, 0, 0},
    {12, 0, 2, 0, 0, 0, 0, 0, 0, 0, 0},  {8, 0, 0, 2, 0, 0, 0, 0, 0, 0, 0},
    {6, 6, 0, 0, 6, 0, 0, 0, 0, 0, 0},   {6, 2, 2, 0, 0, 2, 0, 0, 0, 0, 0},
    {6, 2, 0, 0, 0, 0, 2, 0, 0, 0, 0},   {4, 0, 2, 1, 0, 0, 0, 1, 0, 0, 0},
    {3, 3, 1, 0, 3, 1, 1, 0, 1, 0, 0},   {2, 2, 0, 2, 2, 0, 0, 0, 0, 2, 0},
    {1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1},
};

MarksTable s_table(std::size_t n) { return marks_table(class_table(symmetric_group(n))); }

IntMatrix permuted(const IntMatrix& m, const std::vector<std::size_t>& p) {
  IntMatrix out(m.size(), std::vector<std::int64_t>(m.size()));
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m.size(); ++j) out[i][j] = m[p[i]][p[j]];
  return out;
}

// True if some reordering of classes of equal order turns `m` into `target`.
bool equal_up_to_block_order(const MarksTable& mt, const IntMatrix& target) {
  const std::size_t r = mt.size();
  std::vector<std::size_t> p(r);
  std::iota(p.begin(), p.end(), 0);
  std::vector<std::pair<std::size_t, std::size_t>> blocks;
  for (std::size_t i = 0; i < r;) {
    std::size_t j = i;
    while (j < r && mt.classes[j].order == mt.classes[i].order) ++j;
    blocks.emplace_back(i, j);
    i = j;
  }
  auto rec = [&](auto&& self, std::size_t b) -> bool {
    if (b == blocks.size()) return permuted(mt.beta, p) == target;
    auto first = p.begin() + static_cast<std::ptrdiff_t>(blocks[b].first);
    auto last = p.begin() + static_cast<std::ptrdiff_t>(blocks[b].second);
    std::sort(first, last);
    do {
      if (self(self, b + 1)) return true;
    } while (std::next_permutation(first, last));
    return false;
  };
  return rec(rec, 0);
}

std::size_t find_class(const MarksTable& mt, std::uint64_t order, std::uint64_t length) {
  for (std::size_t i = 0; i < mt.size(); ++i)
    if (mt.classes[i].order == order && mt.classes[i].length == length) return i;
  throw std::logic_error("class not found");
}

InvalidMarksTable::Violation violation_of(const MarksTable& mt) {
  try {
    validate(mt);
  } catch (const InvalidMarksTable& e) {
    return e.violation();
  }
  ADD_FAILURE() << "table was accepted";
  return InvalidMarksTable::Violation::format;
}

}  // namespace

TEST(Marks, SymmetricGroupOfDegreeFourMatchesPublishedTable) {
  const auto mt = s_table(4);
  ASSERT_EQ(mt.size(), 11u);
  EXPECT_TRUE(equal_up_to_block_order(mt, kMarksS4));
  EXPECT_NO_THROW(validate(mt));
}

TEST(Marks, EntriesAgreeWithDirectCounts) {
  for (std::size_t n = 2; n <= 5; ++n) {
    const auto ct = class_table(symmetric_group(n));
    const auto mt = marks_table(ct);
    for (std::size_t i = 0; i < ct.size(); ++i)
      for (std::size_t j = 0; j < ct.size(); ++j) {
        const auto& h = ct.classes[i].representative;
        const auto& k = ct.classes[j].representative;
        const auto fixed = mark_by_fixed_cosets(ct.group, h, k);
        ASSERT_EQ(fixed, mark_by_conjugates(ct.group, h, k)) << "n=" << n << " " << i << "," << j;
        ASSERT_EQ(static_cast<std::int64_t>(fixed), mt(i, j)) << "n=" << n << " " << i << "," << j;
      }
  }
}

TEST(Marks, DerivedMatricesOfS4) {
  const auto mt = s_table(4);
  const auto d = derived_matrices(mt);
  const auto d8 = find_class(mt, 8, 3);
  const auto v4 = find_class(mt, 4, 1);
  EXPECT_EQ(d.containment[d8][v4], 3);
  std::int64_t c_sum = 0;
  std::size_t ones = 0;
  for (std::size_t i = 0; i < mt.size(); ++i)
    for (std::size_t j = 0; j < mt.size(); ++j) {
      c_sum += d.containment[i][j];
      ones += d.incidence[i][j];
    }
  EXPECT_EQ(c_sum, 68);
  EXPECT_EQ(ones, 44u);
  for (std::size_t i = 0; i < mt.size(); ++i) EXPECT_EQ(d.containment[i][0], static_cast<std::int64_t>(mt.classes[i].length));
}

TEST(Marks, MaximalSubgroupsOfS4) {
  const auto mt = s_table(4);
  std::vector<std::uint64_t> orders;
  for (auto j : maximal_subgroups(mt, mt.size() - 1)) orders.push_back(mt.classes[j].order);
  std::sort(orders.begin(), orders.end());
  EXPECT_EQ(orders, (std::vector<std::uint64_t>{6, 8, 12}));
  EXPECT_TRUE(maximal_subgroups(mt, 0).empty());
  EXPECT_THROW(maximal_subgroups(mt, 11), std::out_of_range);
}

TEST(Marks, SummaryOfSmallGroups) {
  const auto s3 = summarize(s_table(3));
  EXPECT_EQ(s3.total_subgroups, 6u);
  EXPECT_EQ(s3.lattice_edges, 8u);
  const auto s4 = summarize(s_table(4));
  EXPECT_EQ(s4.total_subgroups, 30u);
  EXPECT_EQ(s4.sum_of_marks, 146u);
  EXPECT_EQ(s4.diagonal_sum, 47u);
  EXPECT_EQ(s4.poset_incidences, 44u);
}

TEST(Marks, MaximalAbelianSubgroupsOfS4) {
  auto ct = class_table(symmetric_group(4));
  auto mt = marks_table(ct);
  attach_properties(mt, ct);
  EXPECT_EQ(maximal_property_p(mt, Property::abelian).size(), 4u);
  EXPECT_EQ(total_maximal_property_p(mt, Property::abelian), 11u);
  EXPECT_EQ(maximal_property_p(mt, Property::solvable), (std::vector<std::size_t>{mt.size() - 1}));
}

TEST(Marks, TomTextRoundTrip) {
  for (std::size_t n = 4; n <= 6; ++n) {
    auto ct = class_table(symmetric_group(n));
    auto mt = marks_table(ct);
    attach_properties(mt, ct);
    const auto back = parse_tom_text(to_tom_text(mt));
    EXPECT_EQ(back.name, mt.name);
    EXPECT_EQ(back.group_order, mt.group_order);
    EXPECT_EQ(back.classes, mt.classes);
    EXPECT_EQ(back.beta, mt.beta);
    EXPECT_EQ(back.properties, mt.properties);
    EXPECT_EQ(to_tom_text(back), to_tom_text(mt));
  }
}

TEST(Marks, TomTextToleratesCommentsAndCrlf) {
  const std::string text =
      "# two classes\r\nTOM C2 2\r\n\r\nCLASS 1 order=1 length=1 label=1\r\nCLASS 2 order=2 length=1 label=2\r\n"
      "ROW 1: 2\r\nROW 2: 1 1\r\n";
  const auto mt = parse_tom_text(text);
  EXPECT_EQ(mt.group_order, 2u);
  EXPECT_EQ(mt.beta, (IntMatrix{{2, 0}, {1, 1}}));
  EXPECT_FALSE(mt.properties.has_value());
  EXPECT_THROW(parse_tom_text("TOM C2 2\nCLASS 1 order=1 length=1 label=1\n"), InvalidMarksTable);
}

TEST(Marks, ValidationCatchesEachViolation) {
  using V = InvalidMarksTable::Violation;
  const auto good = s_table(4);
  const auto s3 = find_class(good, 6, 4);
  const auto v4 = find_class(good, 4, 1);

  auto t = good;
  t.beta[3].pop_back();
  EXPECT_EQ(violation_of(t), V::format);

  t = good;
  t.classes[0].order = 2;
  EXPECT_EQ(violation_of(t), V::class_ordering);

  t = good;
  t.beta[0][1] = 1;
  EXPECT_EQ(violation_of(t), V::triangularity);

  t = good;
  t.beta[3][1] = -2;
  EXPECT_EQ(violation_of(t), V::negative_entry);

  t = good;
  t.beta[1][0] = 13;
  EXPECT_EQ(violation_of(t), V::first_column);

  t = good;
  t.beta[1][1] *= 3;
  EXPECT_EQ(violation_of(t), V::normalizer_index);

  t = good;
  t.beta[v4][1] = 5;
  EXPECT_EQ(violation_of(t), V::diagonal_divisibility);

  t = good;
  t.beta[s3][v4] = 1;
  EXPECT_EQ(violation_of(t), V::order_divisibility);
}

TEST(Marks, ThreadedComputationMatchesSerial) {
  const SubgroupLattice lattice(symmetric_group(5));
  const auto serial = marks_table(lattice, 1);
  const auto threaded = marks_table(lattice, 4);
  EXPECT_EQ(serial.beta, threaded.beta);
  EXPECT_EQ(serial.classes, threaded.classes);
}

TEST(Marks, MarkRejectsNonSubgroups) {
  const auto s4 = symmetric_group(4);
  EXPECT_THROW(mark(alternating_group(4), s4, Group(4)), NotASubgroup);
  EXPECT_EQ(mark(s4, Group(4), Group(4)), 24u);
}
