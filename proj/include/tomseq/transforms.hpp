#pragma once

// Euler transform and its inverse, with the number theory they need.
//
//   1 + sum_n m_n x^n = prod_k (1 - x^k)^(-c_k)
//
// Sequences are 1-indexed: c.term(k) is c_k and lives at c.values[k - 1].
// Terms missing from an input read as 0. Arithmetic is exact; any value that
// leaves int64 raises std::overflow_error.

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>

#include "tomseq/intseq.hpp"

namespace tomseq {

/// Inverse transform hit a non-integral c_n.
class NotAnEulerImage : public std::domain_error {
 public:
  NotAnEulerImage(std::size_t index, const std::string& detail);
  std::size_t index() const noexcept { return index_; }

 private:
  std::size_t index_;
};

class SequenceFormatError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// m_1..m_n via b_n = sum_{d|n} d c_d and n m_n = b_n + sum_{k<n} b_k m_{n-k}.
IntSeq euler_transform(const IntSeq& c, std::size_t n);
/// c_1..c_n via b_n = n m_n - sum_{k<n} b_k m_{n-k} and Moebius inversion.
IntSeq inverse_euler_transform(const IntSeq& m, std::size_t n);
/// The same transform summed over partitions of n: each partition with a_i
/// parts equal to i contributes prod_i multichoose(c_i, a_i).
IntSeq euler_transform_by_partitions(const IntSeq& c, std::size_t n);

/// b_1..b_n from c (forward) and from m (backward); equal on Euler pairs.
IntSeq euler_b_from_c(const IntSeq& c, std::size_t n);
IntSeq euler_b_from_m(const IntSeq& m, std::size_t n);

/// Throws std::invalid_argument for n = 0.
int mobius(std::uint64_t n);
/// Multisets of size a drawn from c kinds: binomial(c + a - 1, a).
std::int64_t multiset_coefficient(std::int64_t c, std::int64_t a);

// OEIS b-file (`<index> <value>` per line, indices 1, 2, ...; '#' comments)
// and single-line CSV.
enum class SequenceFormat { bfile, csv };

IntSeq read_bfile(std::string_view text);
IntSeq read_csv(std::string_view text);
/// CSV if any data line contains a comma or a single token, else b-file.
SequenceFormat detect_format(std::string_view text);
IntSeq read_sequence(std::string_view text, SequenceFormat format);
IntSeq read_sequence(std::string_view text);
void write_bfile(std::ostream& out, const IntSeq& s);
void write_csv(std::ostream& out, const IntSeq& s);
std::string format_sequence(const IntSeq& s, SequenceFormat format);

}  // namespace tomseq
