#pragma once

// Tables of marks and the lattice statistics they determine.
//
// Row i, column j of the table holds beta_{G/H_i}(H_j): the number of cosets
// of H_i fixed by H_j, equivalently |N_G(H_i):H_i| times the number of
// conjugates of H_i that contain H_j. Classes are sorted by order, which
// makes the table lower triangular.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "tomseq/enumerate.hpp"
#include "tomseq/perm.hpp"
#include "tomseq/properties.hpp"

namespace tomseq {

struct ClassSummary {
  std::uint64_t order = 1;
  std::uint64_t length = 1;
  std::string label;

  friend bool operator==(const ClassSummary&, const ClassSummary&) = default;
};

using IntMatrix = std::vector<std::vector<std::int64_t>>;

struct MarksTable {
  std::string name;
  std::uint64_t group_order = 1;
  std::vector<ClassSummary> classes;
  IntMatrix beta;  // r x r, zero above the diagonal
  /// Per-class property flags when known (from classification or import).
  std::optional<std::vector<PropertyFlags>> properties;

  std::size_t size() const noexcept { return classes.size(); }
  std::int64_t operator()(std::size_t i, std::size_t j) const { return beta[i][j]; }
};

class InvalidMarksTable : public std::runtime_error {
 public:
  enum class Violation {
    format,
    class_ordering,
    triangularity,
    first_column,         // beta(1) must equal the index |G:H|
    normalizer_index,     // diagonal must equal |N_G(H):H| = |G| / (length * |H|)
    diagonal_divisibility,
    order_divisibility,   // nonzero mark of K on G/H needs |K| dividing |H|
    negative_entry,
  };

  InvalidMarksTable(Violation v, const std::string& detail);
  Violation violation() const noexcept { return violation_; }
  static std::string_view violation_name(Violation v);

 private:
  Violation violation_;
};

/// Throws InvalidMarksTable naming the first violated invariant.
void validate(const MarksTable& mt);

/// Mark of k on g/h, computed by counting fixed cosets and by counting
/// conjugates of h containing k; throws std::logic_error if they differ.
/// Throws NotASubgroup unless h, k <= g.
std::uint64_t mark(const Group& g, const Group& h, const Group& k);
std::uint64_t mark_by_fixed_cosets(const Group& g, const Group& h, const Group& k);
std::uint64_t mark_by_conjugates(const Group& g, const Group& h, const Group& k);

/// Builds the table in the class order of `lattice`. Rows are independent
/// and are split across `threads` workers (0 = hardware concurrency).
MarksTable marks_table(const SubgroupLattice& lattice, unsigned threads = 1);
/// Builds the table in the class order of `ct`.
MarksTable marks_table(const ClassTable& ct, unsigned threads = 1);

/// Attaches classify() results for the classes of `ct`.
void attach_properties(MarksTable& mt, const ClassTable& ct);

/// sum_i beta_i(1) / beta_i(H_i)
std::uint64_t total_subgroups(const MarksTable& mt);

struct DerivedMatrices {
  IntMatrix containment;  // (i, j): conjugates of H_i containing H_j
  std::vector<std::vector<std::uint8_t>> incidence;
};

DerivedMatrices derived_matrices(const MarksTable& mt);

/// Classes maximal in H_i up to conjugacy, ascending. Throws std::out_of_range.
std::vector<std::size_t> maximal_subgroups(const MarksTable& mt, std::size_t i);

/// Number of conjugates of H_i contained in H_j.
std::int64_t edges_up(const MarksTable& mt, std::size_t i, std::size_t j);

/// Classes with the property that are not properly subconjugate to another
/// class with the property. The property must be inherited by subgroups.
std::vector<std::size_t> maximal_property_p(const MarksTable& mt, const std::vector<bool>& has_property);
std::vector<std::size_t> maximal_property_p(const MarksTable& mt, Property p);
std::uint64_t total_maximal_property_p(const MarksTable& mt, const std::vector<bool>& has_property);
std::uint64_t total_maximal_property_p(const MarksTable& mt, Property p);

struct MarksSummary {
  std::uint64_t total_subgroups = 0;
  std::uint64_t sum_of_marks = 0;
  std::uint64_t diagonal_sum = 0;
  std::uint64_t poset_incidences = 0;
  std::uint64_t lattice_incidences = 0;
  std::uint64_t poset_edges = 0;
  std::uint64_t lattice_edges = 0;
};

MarksSummary summarize(const MarksTable& mt);

// ---------------------------------------------------------------- tom-text
//
//   TOM <name> <r>
//   CLASS <i> order=<m> length=<l> label=<s>        (r lines, i = 1..r)
//   ROW <i>: <v_1> ... <v_i>                         (r lines)
//   PROPS <i>: <a> <c> <n> <s> <ss>                  (optional, 0/1 flags)

std::string to_tom_text(const MarksTable& mt);
void write_tom_text(std::ostream& out, const MarksTable& mt);
/// Parses and validates. Throws InvalidMarksTable.
MarksTable parse_tom_text(std::string_view text);

}  // namespace tomseq
