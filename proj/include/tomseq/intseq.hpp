#pragma once

#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace tomseq {

/// Finite integer sequence, 1-indexed at the API surface: term k is
/// values[k - 1].
struct IntSeq {
  std::vector<std::int64_t> values;
  std::string name;

  IntSeq() = default;
  IntSeq(std::initializer_list<std::int64_t> v) : values(v) {}
  explicit IntSeq(std::vector<std::int64_t> v, std::string label = {})
      : values(std::move(v)), name(std::move(label)) {}

  std::size_t size() const noexcept { return values.size(); }
  bool empty() const noexcept { return values.empty(); }

  /// Term k (1-based); terms past the end read as 0.
  std::int64_t term(std::size_t k) const {
    if (k == 0) throw std::out_of_range("IntSeq terms are 1-indexed");
    return k <= values.size() ? values[k - 1] : 0;
  }

  friend bool operator==(const IntSeq& a, const IntSeq& b) { return a.values == b.values; }
};

}  // namespace tomseq
