#pragma once

// Index-space subgroup enumeration. Elements of the ambient group are
// addressed by their position in the canonical element list; products are
// computed on nibble-packed words (degree <= 16), whose numeric order equals
// the lexicographic order of image arrays.

#include <algorithm>
#include <cstdint>
#include <unordered_map>
#include <vector>

#include "tomseq/enumerate.hpp"
#include "tomseq/perm.hpp"

namespace tomseq::detail {

inline constexpr std::size_t kMaxPackedDegree = 16;

using Word = std::uint64_t;

Word pack(const Permutation& p);
Permutation unpack(Word w, std::size_t degree);
Word compose_packed(Word p, Word q, std::size_t degree);

class ElementIndex {
 public:
  explicit ElementIndex(const Group& g);

  std::size_t size() const noexcept { return words_.size(); }
  std::size_t degree() const noexcept { return degree_; }
  std::uint32_t identity() const noexcept { return 0; }
  Word word(std::uint32_t i) const { return words_[i]; }
  std::uint32_t inverse(std::uint32_t i) const { return inverse_[i]; }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
    return index_.find(compose_packed(words_[a], words_[b], degree_))->second;
  }
  std::uint32_t conj(std::uint32_t x, std::uint32_t g) const { return mul(mul(inverse_[g], x), g); }
  /// Returns size() when `w` is not an element.
  std::uint32_t find(Word w) const {
    auto it = index_.find(w);
    return it == index_.end() ? static_cast<std::uint32_t>(size()) : it->second;
  }

 private:
  std::size_t degree_;
  std::vector<Word> words_;
  std::vector<std::uint32_t> inverse_;
  std::unordered_map<Word, std::uint32_t> index_;
};

/// Reusable membership marks over [0, n) cleared in O(1).
class StampSet {
 public:
  explicit StampSet(std::size_t n) : stamp_(n, 0) {}
  void clear() {
    if (++epoch_ == 0) {
      std::fill(stamp_.begin(), stamp_.end(), 0);
      epoch_ = 1;
    }
  }
  void insert(std::uint32_t i) { stamp_[i] = epoch_; }
  bool contains(std::uint32_t i) const { return stamp_[i] == epoch_; }

 private:
  std::vector<std::uint32_t> stamp_;
  std::uint32_t epoch_ = 1;
};

struct IndexSubgroup {
  std::vector<std::uint32_t> elements;  // sorted
  std::vector<std::uint32_t> generators;
  std::size_t klass = 0;
};

class LatticeEngine {
 public:
  LatticeEngine(const Group& g, const EnumerationOptions& options);

  const Group& group() const noexcept { return group_; }
  const ElementIndex& index() const noexcept { return index_; }
  const std::vector<IndexSubgroup>& subgroups() const noexcept { return subgroups_; }
  const std::vector<std::vector<std::size_t>>& classes() const noexcept { return classes_; }

  /// Subgroup id with exactly these (sorted) elements, or npos.
  std::size_t lookup(const std::vector<std::uint32_t>& sorted_elements) const;
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  /// <base, z> in index space; base must be a subgroup (sorted elements).
  IndexSubgroup extend(const IndexSubgroup& base, std::uint32_t z);

 private:
  void enumerate();
  std::size_t register_class(IndexSubgroup first);
  void process_class(std::size_t klass);
  std::vector<std::uint32_t> normalizer_generators(const IndexSubgroup& h);
  void canonicalize();

  Group group_;
  ElementIndex index_;
  StampSet scratch_;
  std::vector<IndexSubgroup> subgroups_;
  std::vector<std::vector<std::size_t>> classes_;
  std::unordered_multimap<std::uint64_t, std::size_t> by_hash_;
  std::vector<std::uint32_t> group_generators_;
};

std::uint64_t hash_elements(const std::vector<std::uint32_t>& sorted_elements);

}  // namespace tomseq::detail
