#pragma once

// Permutations on {0..n-1} and finite permutation groups with materialized
// element sets.
//
// Composition convention: (p * q)(x) = p(q(x)), i.e. q is applied first.
// Conjugation: h^g = g^-1 * h * g.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace tomseq {

class DegreeMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class NotASubgroup : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class Permutation {
 public:
  using Point = std::uint16_t;

  /// Identity on `degree` points.
  explicit Permutation(std::size_t degree = 1);

  /// Throws std::invalid_argument unless `images` is a bijection on {0..n-1}.
  explicit Permutation(std::vector<Point> images);

  /// Builds from disjoint cycles, e.g. from_cycles(4, {{0, 1}, {2, 3}}).
  static Permutation from_cycles(std::size_t degree,
                                 std::initializer_list<std::initializer_list<Point>> cycles);
  static Permutation from_cycles(std::size_t degree,
                                 const std::vector<std::vector<Point>>& cycles);

  std::size_t degree() const noexcept { return images_.size(); }
  Point operator()(Point x) const { return images_[x]; }
  std::span<const Point> images() const noexcept { return images_; }

  Permutation inverse() const;
  bool is_identity() const noexcept;
  bool is_even() const;
  /// Element order (lcm of cycle lengths).
  std::uint64_t order() const;
  std::vector<std::vector<Point>> cycles() const;
  std::string to_string() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  // Lexicographic on image arrays; only meaningful for equal degrees.
  friend auto operator<=>(const Permutation& a, const Permutation& b) {
    return a.images_ <=> b.images_;
  }

 private:
  struct Unchecked {};
  Permutation(Unchecked, std::vector<Point> images) : images_(std::move(images)) {}
  friend Permutation compose(const Permutation& p, const Permutation& q);

  std::vector<Point> images_;
};

/// (p * q)(x) = p(q(x)). Throws DegreeMismatch.
Permutation compose(const Permutation& p, const Permutation& q);
inline Permutation operator*(const Permutation& p, const Permutation& q) { return compose(p, q); }

/// g^-1 * h * g
Permutation conjugate(const Permutation& h, const Permutation& g);
Permutation power(const Permutation& p, std::uint64_t e);

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const noexcept;
};

/// Finite permutation group with its full element set in canonical
/// (lexicographic) order. Immutable after construction.
class Group {
 public:
  /// Trivial group on `degree` points.
  explicit Group(std::size_t degree = 1);

  std::size_t degree() const noexcept { return degree_; }
  std::size_t order() const noexcept { return elements_.size(); }
  const std::vector<Permutation>& elements() const noexcept { return elements_; }
  const std::vector<Permutation>& generators() const noexcept { return generators_; }

  bool contains(const Permutation& p) const;
  /// Position of `p` in elements(), if present.
  std::optional<std::size_t> index_of(const Permutation& p) const;
  bool is_trivial() const noexcept { return elements_.size() == 1; }
  std::size_t hash() const noexcept;

  friend bool operator==(const Group& a, const Group& b) {
    return a.degree_ == b.degree_ && a.elements_ == b.elements_;
  }
  friend auto operator<=>(const Group& a, const Group& b) {
    if (auto c = a.elements_.size() <=> b.elements_.size(); c != 0) return c;
    return a.elements_ <=> b.elements_;
  }

  /// Group from a sorted element list already known to be closed. Generators
  /// are chosen greedily in element order.
  static Group from_closed_elements(std::size_t degree, std::vector<Permutation> sorted_elements);
  /// Group with explicitly supplied generators and closed, sorted elements.
  static Group from_parts(std::size_t degree, std::vector<Permutation> generators,
                          std::vector<Permutation> sorted_elements);

 private:
  std::size_t degree_;
  std::vector<Permutation> generators_;
  std::vector<Permutation> elements_;
};

struct GroupHash {
  std::size_t operator()(const Group& g) const noexcept { return g.hash(); }
};

/// Smallest group containing `generators`. Throws std::invalid_argument on
/// degree 0 and DegreeMismatch on inconsistent generator degrees.
Group closure(std::span<const Permutation> generators, std::size_t degree);
inline Group closure(std::initializer_list<Permutation> generators, std::size_t degree) {
  return closure(std::span<const Permutation>(generators.begin(), generators.size()), degree);
}

/// Like closure(), but gives up (returns nullopt) once the group would exceed
/// `max_order` elements.
std::optional<Group> bounded_closure(std::span<const Permutation> generators, std::size_t degree,
                                     std::size_t max_order);

Group symmetric_group(std::size_t n);
Group alternating_group(std::size_t n);

bool is_subgroup(const Group& h, const Group& g);

/// { g^-1 x g : x in h }
Group conjugate_subgroup(const Group& h, const Permutation& g);

/// Witness x in g with h^x == k, the first one in g's element order; nullopt
/// if h and k are not conjugate in g. Scans right cosets of N_g(h) when
/// |g| > kConjugacyCosetThreshold, otherwise every element of g.
inline constexpr std::size_t kConjugacyCosetThreshold = 1000;
std::optional<Permutation> are_conjugate(const Group& g, const Group& h, const Group& k);
std::optional<Permutation> are_conjugate_by_scan(const Group& g, const Group& h, const Group& k);
std::optional<Permutation> are_conjugate_by_cosets(const Group& g, const Group& h, const Group& k);

/// N_g(h). Throws NotASubgroup.
Group normalizer(const Group& g, const Group& h);

/// Orbits of the natural action, each sorted, ordered by least point.
std::vector<std::vector<std::size_t>> orbits(const Group& h);

/// Action of g on the left cosets x*h by left multiplication. This is a
/// homomorphism g -> Sym(|g:h|); for normal h its image is isomorphic to g/h.
class CosetAction {
 public:
  const Group& image() const noexcept { return image_; }
  std::size_t coset_count() const noexcept { return reps_.size(); }
  /// Least element of each coset, in coset-index order.
  const std::vector<Permutation>& coset_representatives() const noexcept { return reps_; }
  /// Coset index of every element of g (indexed like g.elements()).
  const std::vector<std::size_t>& coset_of() const noexcept { return coset_of_; }
  /// Image of an element of g.
  Permutation image_of(const Permutation& x) const;
  /// Image of every element of g, in g's element order.
  std::vector<Permutation> table() const;

 private:
  friend CosetAction coset_action(const Group& g, const Group& h);
  CosetAction(const Group& g, Group image, std::vector<Permutation> reps,
              std::vector<std::size_t> coset_of);

  const Group* source_;
  Group image_;
  std::vector<Permutation> reps_;
  std::vector<std::size_t> coset_of_;
};

/// Throws NotASubgroup. The returned object refers to `g`, which must outlive it.
CosetAction coset_action(const Group& g, const Group& h);

/// Normal closure of `generators` inside g.
Group normal_closure(const Group& g, std::span<const Permutation> generators);

}  // namespace tomseq
