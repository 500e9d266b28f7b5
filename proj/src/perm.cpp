#include "tomseq/perm.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <unordered_set>

namespace tomseq {

// ---------------------------------------------------------------- Permutation

Permutation::Permutation(std::size_t degree) : images_(degree) {
  if (degree > 0xFFFF) throw std::invalid_argument("permutation degree exceeds 65535");
  std::iota(images_.begin(), images_.end(), Point{0});
}

Permutation::Permutation(std::vector<Point> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (Point x : images_) {
    if (x >= images_.size() || seen[x])
      throw std::invalid_argument("image array is not a bijection on {0..n-1}");
    seen[x] = true;
  }
}

Permutation Permutation::from_cycles(std::size_t degree,
                                     const std::vector<std::vector<Point>>& cycles) {
  std::vector<Point> images(degree);
  std::iota(images.begin(), images.end(), Point{0});
  std::vector<bool> used(degree, false);
  for (const auto& cycle : cycles) {
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      Point a = cycle[i];
      if (a >= degree) throw std::invalid_argument("cycle point out of range");
      if (used[a]) throw std::invalid_argument("cycles are not disjoint");
      used[a] = true;
      images[a] = cycle[(i + 1) % cycle.size()];
    }
  }
  return Permutation(std::move(images));
}

Permutation Permutation::from_cycles(std::size_t degree,
                                     std::initializer_list<std::initializer_list<Point>> cycles) {
  std::vector<std::vector<Point>> cs;
  for (auto c : cycles) cs.emplace_back(c);
  return from_cycles(degree, cs);
}

Permutation Permutation::inverse() const {
  Permutation r(degree());
  for (std::size_t i = 0; i < images_.size(); ++i) r.images_[images_[i]] = static_cast<Point>(i);
  return r;
}

bool Permutation::is_identity() const noexcept {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != i) return false;
  return true;
}

std::vector<std::vector<Permutation::Point>> Permutation::cycles() const {
  std::vector<std::vector<Point>> out;
  std::vector<bool> seen(degree(), false);
  for (std::size_t i = 0; i < degree(); ++i) {
    if (seen[i] || images_[i] == i) continue;
    std::vector<Point> c;
    for (Point x = static_cast<Point>(i); !seen[x]; x = images_[x]) {
      seen[x] = true;
      c.push_back(x);
    }
    out.push_back(std::move(c));
  }
  return out;
}

bool Permutation::is_even() const {
  std::size_t transpositions = 0;
  for (const auto& c : cycles()) transpositions += c.size() - 1;
  return transpositions % 2 == 0;
}

std::uint64_t Permutation::order() const {
  std::uint64_t o = 1;
  for (const auto& c : cycles()) o = std::lcm(o, static_cast<std::uint64_t>(c.size()));
  return o;
}

std::string Permutation::to_string() const {
  auto cs = cycles();
  if (cs.empty()) return "()";
  std::ostringstream os;
  for (const auto& c : cs) {
    os << '(';
    for (std::size_t i = 0; i < c.size(); ++i) os << (i ? " " : "") << c[i];
    os << ')';
  }
  return os.str();
}

Permutation compose(const Permutation& p, const Permutation& q) {
  if (p.degree() != q.degree())
    throw DegreeMismatch("cannot compose permutations of degree " + std::to_string(p.degree()) +
                         " and " + std::to_string(q.degree()));
  std::vector<Permutation::Point> r(p.degree());
  auto pi = p.images();
  auto qi = q.images();
  for (std::size_t x = 0; x < r.size(); ++x) r[x] = pi[qi[x]];
  return Permutation(Permutation::Unchecked{}, std::move(r));
}

Permutation conjugate(const Permutation& h, const Permutation& g) {
  return compose(g.inverse(), compose(h, g));
}

Permutation power(const Permutation& p, std::uint64_t e) {
  Permutation result(p.degree());
  Permutation base = p;
  while (e) {
    if (e & 1) result = compose(result, base);
    base = compose(base, base);
    e >>= 1;
  }
  return result;
}

std::size_t PermutationHash::operator()(const Permutation& p) const noexcept {
  std::uint64_t h = 1469598103934665603ULL;
  for (auto x : p.images()) {
    h ^= x;
    h *= 1099511628211ULL;
  }
  return static_cast<std::size_t>(h);
}

// ---------------------------------------------------------------- closure

namespace {

using PermSet = std::unordered_set<Permutation, PermutationHash>;

// Extends the group held in (elements, members) by `s`, where `gens` already
// contains s. Elements are accumulated as right cosets H*r.
void dimino_extend(std::vector<Permutation>& elements, PermSet& members,
                   const std::vector<Permutation>& gens, std::size_t max_order, bool& overflow) {
  const std::vector<Permutation> base = elements;
  std::vector<Permutation> reps{Permutation(base.front().degree())};
  for (std::size_t pos = 0; pos < reps.size(); ++pos) {
    for (const auto& t : gens) {
      Permutation x = compose(reps[pos], t);
      if (members.contains(x)) continue;
      if (elements.size() + base.size() > max_order) {
        overflow = true;
        return;
      }
      reps.push_back(x);
      for (const auto& h : base) {
        Permutation y = compose(h, x);
        members.insert(y);
        elements.push_back(std::move(y));
      }
    }
  }
}

void check_degrees(std::span<const Permutation> gens, std::size_t degree) {
  if (degree == 0) throw std::invalid_argument("group degree must be positive");
  for (const auto& g : gens)
    if (g.degree() != degree)
      throw DegreeMismatch("generator of degree " + std::to_string(g.degree()) +
                           " in group of degree " + std::to_string(degree));
}

std::optional<Group> closure_impl(std::span<const Permutation> generators, std::size_t degree,
                                  std::size_t max_order) {
  check_degrees(generators, degree);
  std::vector<Permutation> elements{Permutation(degree)};
  PermSet members{elements.front()};
  std::vector<Permutation> gens;
  for (const auto& s : generators) {
    if (members.contains(s)) continue;
    gens.push_back(s);
    bool overflow = false;
    dimino_extend(elements, members, gens, max_order, overflow);
    if (overflow) return std::nullopt;
  }
  std::sort(elements.begin(), elements.end());
  return Group::from_parts(degree, std::move(gens), std::move(elements));
}

}  // namespace

Group::Group(std::size_t degree) : degree_(degree), elements_{Permutation(degree)} {
  if (degree == 0) throw std::invalid_argument("group degree must be positive");
}

Group Group::from_parts(std::size_t degree, std::vector<Permutation> generators,
                        std::vector<Permutation> sorted_elements) {
  Group g(degree);
  g.generators_ = std::move(generators);
  g.elements_ = std::move(sorted_elements);
  return g;
}

Group Group::from_closed_elements(std::size_t degree, std::vector<Permutation> sorted_elements) {
  std::vector<Permutation> current{Permutation(degree)};
  PermSet members{current.front()};
  std::vector<Permutation> gens;
  for (const auto& x : sorted_elements) {
    if (members.contains(x)) continue;
    gens.push_back(x);
    bool overflow = false;
    dimino_extend(current, members, gens, sorted_elements.size(), overflow);
    if (overflow) throw std::logic_error("element list is not closed under composition");
  }
  return from_parts(degree, std::move(gens), std::move(sorted_elements));
}

bool Group::contains(const Permutation& p) const {
  return p.degree() == degree_ && std::binary_search(elements_.begin(), elements_.end(), p);
}

std::optional<std::size_t> Group::index_of(const Permutation& p) const {
  if (p.degree() != degree_) return std::nullopt;
  auto it = std::lower_bound(elements_.begin(), elements_.end(), p);
  if (it == elements_.end() || *it != p) return std::nullopt;
  return static_cast<std::size_t>(it - elements_.begin());
}

std::size_t Group::hash() const noexcept {
  std::size_t h = degree_;
  PermutationHash ph;
  for (const auto& e : elements_) h = h * 1000003u ^ ph(e);
  return h;
}

Group closure(std::span<const Permutation> generators, std::size_t degree) {
  return *closure_impl(generators, degree, static_cast<std::size_t>(-1));
}

std::optional<Group> bounded_closure(std::span<const Permutation> generators, std::size_t degree,
                                     std::size_t max_order) {
  return closure_impl(generators, degree, max_order);
}

Group symmetric_group(std::size_t n) {
  if (n == 0) throw std::invalid_argument("group degree must be positive");
  std::vector<Permutation> gens;
  if (n >= 2) gens.push_back(Permutation::from_cycles(n, {{0, 1}}));
  if (n >= 3) {
    std::vector<Permutation::Point> cycle(n);
    std::iota(cycle.begin(), cycle.end(), Permutation::Point{0});
    gens.push_back(Permutation::from_cycles(n, std::vector<std::vector<Permutation::Point>>{cycle}));
  }
  return closure(gens, n);
}

Group alternating_group(std::size_t n) {
  if (n == 0) throw std::invalid_argument("group degree must be positive");
  std::vector<Permutation> gens;
  for (std::size_t i = 2; i < n; ++i)
    gens.push_back(Permutation::from_cycles(
        n, {{0, 1, static_cast<Permutation::Point>(i)}}));
  return closure(gens, n);
}

// ---------------------------------------------------------------- queries

bool is_subgroup(const Group& h, const Group& g) {
  if (h.degree() != g.degree()) throw DegreeMismatch("subgroup test across different degrees");
  if (g.order() % h.order() != 0) return false;
  return std::all_of(h.generators().begin(), h.generators().end(),
                     [&](const Permutation& x) { return g.contains(x); });
}

Group conjugate_subgroup(const Group& h, const Permutation& g) {
  if (g.degree() != h.degree()) throw DegreeMismatch("conjugating element has wrong degree");
  const Permutation gi = g.inverse();
  std::vector<Permutation> gens;
  gens.reserve(h.generators().size());
  for (const auto& x : h.generators()) gens.push_back(compose(gi, compose(x, g)));
  std::vector<Permutation> elems;
  elems.reserve(h.order());
  for (const auto& x : h.elements()) elems.push_back(compose(gi, compose(x, g)));
  std::sort(elems.begin(), elems.end());
  return Group::from_parts(h.degree(), std::move(gens), std::move(elems));
}

namespace {

bool conjugates_into(const Group& h, const Permutation& x, const Group& k) {
  const Permutation xi = x.inverse();
  for (const auto& s : h.generators())
    if (!k.contains(compose(xi, compose(s, x)))) return false;
  return true;
}

bool normalizes(const Group& h, const Permutation& x) { return conjugates_into(h, x, h); }

}  // namespace

std::optional<Permutation> are_conjugate_by_scan(const Group& g, const Group& h, const Group& k) {
  if (h.order() != k.order() || h.degree() != k.degree()) return std::nullopt;
  for (const auto& x : g.elements())
    if (conjugates_into(h, x, k)) return x;
  return std::nullopt;
}

std::optional<Permutation> are_conjugate_by_cosets(const Group& g, const Group& h,
                                                   const Group& k) {
  if (h.order() != k.order() || h.degree() != k.degree()) return std::nullopt;
  const Group n = normalizer(g, h);
  std::vector<bool> visited(g.order(), false);
  for (std::size_t i = 0; i < g.order(); ++i) {
    if (visited[i]) continue;
    const Permutation& x = g.elements()[i];
    if (conjugates_into(h, x, k)) return x;
    for (const auto& y : n.elements()) visited[*g.index_of(compose(y, x))] = true;
  }
  return std::nullopt;
}

std::optional<Permutation> are_conjugate(const Group& g, const Group& h, const Group& k) {
  if (g.order() > kConjugacyCosetThreshold) return are_conjugate_by_cosets(g, h, k);
  return are_conjugate_by_scan(g, h, k);
}

Group normalizer(const Group& g, const Group& h) {
  if (!is_subgroup(h, g)) throw NotASubgroup("normalizer: h is not a subgroup of g");
  std::vector<Permutation> elems;
  for (const auto& x : g.elements())
    if (normalizes(h, x)) elems.push_back(x);
  return Group::from_closed_elements(g.degree(), std::move(elems));
}

std::vector<std::vector<std::size_t>> orbits(const Group& h) {
  const std::size_t n = h.degree();
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& s : h.generators())
    for (std::size_t x = 0; x < n; ++x) {
      std::size_t a = find(x), b = find(s(static_cast<Permutation::Point>(x)));
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
  std::vector<std::vector<std::size_t>> blocks;
  std::vector<std::size_t> block_of(n, static_cast<std::size_t>(-1));
  for (std::size_t x = 0; x < n; ++x) {
    std::size_t r = find(x);
    if (block_of[r] == static_cast<std::size_t>(-1)) {
      block_of[r] = blocks.size();
      blocks.emplace_back();
    }
    blocks[block_of[r]].push_back(x);
  }
  return blocks;
}

// ---------------------------------------------------------------- coset action

CosetAction::CosetAction(const Group& g, Group image, std::vector<Permutation> reps,
                         std::vector<std::size_t> coset_of)
    : source_(&g), image_(std::move(image)), reps_(std::move(reps)), coset_of_(std::move(coset_of)) {}

Permutation CosetAction::image_of(const Permutation& x) const {
  std::vector<Permutation::Point> images(reps_.size());
  for (std::size_t c = 0; c < reps_.size(); ++c) {
    auto idx = source_->index_of(compose(x, reps_[c]));
    if (!idx) throw NotASubgroup("coset action: element is not in the acting group");
    images[c] = static_cast<Permutation::Point>(coset_of_[*idx]);
  }
  return Permutation(std::move(images));
}

std::vector<Permutation> CosetAction::table() const {
  std::vector<Permutation> out;
  out.reserve(source_->order());
  for (const auto& x : source_->elements()) out.push_back(image_of(x));
  return out;
}

CosetAction coset_action(const Group& g, const Group& h) {
  if (!is_subgroup(h, g)) throw NotASubgroup("coset action: h is not a subgroup of g");
  constexpr auto unset = static_cast<std::size_t>(-1);
  std::vector<std::size_t> coset_of(g.order(), unset);
  std::vector<Permutation> reps;
  for (std::size_t i = 0; i < g.order(); ++i) {
    if (coset_of[i] != unset) continue;
    const Permutation& x = g.elements()[i];
    for (const auto& y : h.elements()) coset_of[*g.index_of(compose(x, y))] = reps.size();
    reps.push_back(x);
  }
  if (reps.size() > 0xFFFF) throw std::invalid_argument("coset action degree exceeds 65535");
  std::vector<Permutation> images;
  for (const auto& t : g.generators()) {
    std::vector<Permutation::Point> im(reps.size());
    for (std::size_t c = 0; c < reps.size(); ++c)
      im[c] = static_cast<Permutation::Point>(coset_of[*g.index_of(compose(t, reps[c]))]);
    images.emplace_back(std::move(im));
  }
  Group image = closure(images, reps.size());
  return CosetAction(g, std::move(image), std::move(reps), std::move(coset_of));
}

Group normal_closure(const Group& g, std::span<const Permutation> generators) {
  std::vector<Permutation> gens(generators.begin(), generators.end());
  Group n = closure(gens, g.degree());
  for (bool changed = true; changed;) {
    changed = false;
    for (const auto& t : g.generators()) {
      for (std::size_t i = 0; i < n.generators().size(); ++i) {
        Permutation c = conjugate(n.generators()[i], t);
        if (n.contains(c)) continue;
        gens.push_back(std::move(c));
        n = closure(gens, g.degree());
        changed = true;
        break;
      }
      if (changed) break;
    }
  }
  return n;
}

}  // namespace tomseq
