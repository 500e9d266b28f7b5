#include "tomseq/enumerate.hpp"

#include <algorithm>
#include <numeric>

#include "lattice_engine.hpp"

namespace tomseq {

BudgetExceeded::BudgetExceeded(std::size_t order, std::size_t budget)
    : std::runtime_error("group order " + std::to_string(order) +
                         " exceeds the enumeration budget of " + std::to_string(budget) +
                         " elements"),
      order_(order),
      budget_(budget) {}

std::uint64_t ClassTable::total_subgroups() const noexcept {
  std::uint64_t total = 0;
  for (const auto& c : classes) total += c.class_length;
  return total;
}

namespace detail {

namespace {
constexpr unsigned nibble_shift(std::size_t i) { return static_cast<unsigned>(4 * (15 - i)); }
}  // namespace

Word pack(const Permutation& p) {
  if (p.degree() > kMaxPackedDegree)
    throw std::invalid_argument("packed permutations support degree <= 16");
  Word w = 0;
  for (std::size_t i = 0; i < p.degree(); ++i) w |= Word{p.images()[i]} << nibble_shift(i);
  return w;
}

Permutation unpack(Word w, std::size_t degree) {
  std::vector<Permutation::Point> images(degree);
  for (std::size_t i = 0; i < degree; ++i)
    images[i] = static_cast<Permutation::Point>((w >> nibble_shift(i)) & 0xF);
  return Permutation(std::move(images));
}

Word compose_packed(Word p, Word q, std::size_t degree) {
  Word r = 0;
  for (std::size_t i = 0; i < degree; ++i) {
    const auto qi = static_cast<std::size_t>((q >> nibble_shift(i)) & 0xF);
    r |= ((p >> nibble_shift(qi)) & 0xF) << nibble_shift(i);
  }
  return r;
}

ElementIndex::ElementIndex(const Group& g) : degree_(g.degree()) {
  words_.reserve(g.order());
  for (const auto& e : g.elements()) words_.push_back(pack(e));
  index_.reserve(words_.size() * 2);
  for (std::uint32_t i = 0; i < words_.size(); ++i) index_.emplace(words_[i], i);
  inverse_.resize(words_.size());
  for (std::uint32_t i = 0; i < words_.size(); ++i)
    inverse_[i] = index_.at(pack(g.elements()[i].inverse()));
}

std::uint64_t hash_elements(const std::vector<std::uint32_t>& sorted_elements) {
  std::uint64_t h = 1469598103934665603ULL;
  for (auto x : sorted_elements) {
    h ^= x;
    h *= 1099511628211ULL;
  }
  return h;
}

LatticeEngine::LatticeEngine(const Group& g, const EnumerationOptions& options)
    : group_(g), index_((g.order() > options.max_order ? throw BudgetExceeded(g.order(), options.max_order) : g)),
      scratch_(g.order()) {
  for (const auto& t : g.generators()) group_generators_.push_back(index_.find(pack(t)));
  enumerate();
}

std::size_t LatticeEngine::lookup(const std::vector<std::uint32_t>& sorted_elements) const {
  auto [lo, hi] = by_hash_.equal_range(hash_elements(sorted_elements));
  for (auto it = lo; it != hi; ++it)
    if (subgroups_[it->second].elements == sorted_elements) return it->second;
  return npos;
}

IndexSubgroup LatticeEngine::extend(const IndexSubgroup& base, std::uint32_t z) {
  scratch_.clear();
  for (auto e : base.elements) scratch_.insert(e);
  IndexSubgroup out{base.elements, base.generators, 0};
  if (scratch_.contains(z)) return out;
  out.generators.push_back(z);
  std::vector<std::uint32_t> reps{index_.identity()};
  for (std::size_t pos = 0; pos < reps.size(); ++pos) {
    for (auto t : out.generators) {
      const std::uint32_t x = index_.mul(reps[pos], t);
      if (scratch_.contains(x)) continue;
      reps.push_back(x);
      for (auto h : base.elements) {
        const std::uint32_t y = index_.mul(h, x);
        scratch_.insert(y);
        out.elements.push_back(y);
      }
    }
  }
  std::sort(out.elements.begin(), out.elements.end());
  return out;
}

std::size_t LatticeEngine::register_class(IndexSubgroup first) {
  const std::size_t klass = classes_.size();
  classes_.emplace_back();
  auto add = [&](IndexSubgroup s) {
    s.klass = klass;
    const std::size_t id = subgroups_.size();
    by_hash_.emplace(hash_elements(s.elements), id);
    subgroups_.push_back(std::move(s));
    classes_[klass].push_back(id);
  };
  add(std::move(first));
  for (std::size_t pos = 0; pos < classes_[klass].size(); ++pos) {
    const IndexSubgroup current = subgroups_[classes_[klass][pos]];
    for (auto t : group_generators_) {
      IndexSubgroup c;
      c.elements.reserve(current.elements.size());
      for (auto e : current.elements) c.elements.push_back(index_.conj(e, t));
      std::sort(c.elements.begin(), c.elements.end());
      if (lookup(c.elements) != npos) continue;
      for (auto s : current.generators) c.generators.push_back(index_.conj(s, t));
      add(std::move(c));
    }
  }
  return klass;
}

std::vector<std::uint32_t> LatticeEngine::normalizer_generators(const IndexSubgroup& h) {
  scratch_.clear();
  for (auto e : h.elements) scratch_.insert(e);
  std::vector<std::uint32_t> normalizer;
  for (std::uint32_t x = 0; x < index_.size(); ++x) {
    bool ok = true;
    for (auto s : h.generators)
      if (!scratch_.contains(index_.conj(s, x))) {
        ok = false;
        break;
      }
    if (ok) normalizer.push_back(x);
  }
  IndexSubgroup current{{index_.identity()}, {}, 0};
  for (auto x : normalizer)
    if (!std::binary_search(current.elements.begin(), current.elements.end(), x))
      current = extend(current, x);
  return current.generators;
}

void LatticeEngine::process_class(std::size_t klass) {
  const IndexSubgroup h = subgroups_[classes_[klass].front()];
  if (h.elements.size() == index_.size()) return;
  const std::vector<std::uint32_t> normalizer_gens = normalizer_generators(h);

  // <h, z> and <h, y> are conjugate whenever y lies in the orbit of z under
  // left multiplication by h and conjugation by N(h).
  std::vector<bool> visited(index_.size(), false);
  for (auto e : h.elements) visited[e] = true;
  std::vector<std::uint32_t> queue;
  for (std::uint32_t z = 0; z < index_.size(); ++z) {
    if (visited[z]) continue;
    IndexSubgroup k = extend(h, z);
    if (lookup(k.elements) == npos) register_class(std::move(k));
    queue.assign(1, z);
    visited[z] = true;
    while (!queue.empty()) {
      const std::uint32_t y = queue.back();
      queue.pop_back();
      auto visit = [&](std::uint32_t w) {
        if (!visited[w]) {
          visited[w] = true;
          queue.push_back(w);
        }
      };
      for (auto s : h.generators) visit(index_.mul(s, y));
      for (auto n : normalizer_gens) visit(index_.conj(y, n));
    }
  }
}

void LatticeEngine::canonicalize() {
  for (auto& members : classes_)
    std::sort(members.begin(), members.end(), [&](std::size_t a, std::size_t b) {
      return subgroups_[a].elements < subgroups_[b].elements;
    });
  std::sort(classes_.begin(), classes_.end(), [&](const auto& a, const auto& b) {
    const auto& ea = subgroups_[a.front()].elements;
    const auto& eb = subgroups_[b.front()].elements;
    if (ea.size() != eb.size()) return ea.size() < eb.size();
    return ea < eb;
  });
  for (std::size_t c = 0; c < classes_.size(); ++c)
    for (auto id : classes_[c]) subgroups_[id].klass = c;
}

void LatticeEngine::enumerate() {
  register_class(IndexSubgroup{{index_.identity()}, {}, 0});
  for (std::size_t c = 0; c < classes_.size(); ++c) process_class(c);
  canonicalize();
}

}  // namespace detail

// ---------------------------------------------------------------- SubgroupLattice

SubgroupLattice::SubgroupLattice(const Group& g, const EnumerationOptions& options)
    : engine_(std::make_unique<detail::LatticeEngine>(g, options)) {}
SubgroupLattice::~SubgroupLattice() = default;
SubgroupLattice::SubgroupLattice(SubgroupLattice&&) noexcept = default;
SubgroupLattice& SubgroupLattice::operator=(SubgroupLattice&&) noexcept = default;

const Group& SubgroupLattice::group() const noexcept { return engine_->group(); }
std::size_t SubgroupLattice::subgroup_count() const noexcept { return engine_->subgroups().size(); }
std::size_t SubgroupLattice::class_count() const noexcept { return engine_->classes().size(); }

const std::vector<std::size_t>& SubgroupLattice::class_members(std::size_t c) const {
  return engine_->classes().at(c);
}
const std::vector<std::uint32_t>& SubgroupLattice::subgroup_elements(std::size_t id) const {
  return engine_->subgroups().at(id).elements;
}
const std::vector<std::uint32_t>& SubgroupLattice::subgroup_generators(std::size_t id) const {
  return engine_->subgroups().at(id).generators;
}
std::size_t SubgroupLattice::class_of_subgroup(std::size_t id) const {
  return engine_->subgroups().at(id).klass;
}

Group SubgroupLattice::materialize(std::size_t id) const {
  const auto& s = engine_->subgroups().at(id);
  const auto& elems = group().elements();
  std::vector<Permutation> gens, members;
  gens.reserve(s.generators.size());
  for (auto i : s.generators) gens.push_back(elems[i]);
  members.reserve(s.elements.size());
  for (auto i : s.elements) members.push_back(elems[i]);
  return Group::from_parts(group().degree(), std::move(gens), std::move(members));
}

std::vector<Group> SubgroupLattice::all_subgroups() const {
  std::vector<std::size_t> ids(subgroup_count());
  std::iota(ids.begin(), ids.end(), std::size_t{0});
  const auto& subs = engine_->subgroups();
  std::sort(ids.begin(), ids.end(), [&](std::size_t a, std::size_t b) {
    if (subs[a].elements.size() != subs[b].elements.size())
      return subs[a].elements.size() < subs[b].elements.size();
    return subs[a].elements < subs[b].elements;
  });
  std::vector<Group> out;
  out.reserve(ids.size());
  for (auto id : ids) out.push_back(materialize(id));
  return out;
}

ClassTable SubgroupLattice::class_table() const {
  ClassTable table{group(), {}};
  for (std::size_t c = 0; c < class_count(); ++c) {
    SubgroupClass sc;
    sc.representative = materialize(class_members(c).front());
    sc.class_length = class_members(c).size();
    sc.order = sc.representative.order();
    sc.label = subgroup_label(sc.representative);
    sc.index = c;
    table.classes.push_back(std::move(sc));
  }
  return table;
}

std::optional<std::size_t> SubgroupLattice::class_of(const Group& h) const {
  if (h.degree() != group().degree()) return std::nullopt;
  const auto& index = engine_->index();
  std::vector<std::uint32_t> elems;
  elems.reserve(h.order());
  for (const auto& e : h.elements()) {
    const auto i = index.find(detail::pack(e));
    if (i == index.size()) return std::nullopt;
    elems.push_back(i);
  }
  std::sort(elems.begin(), elems.end());
  const auto id = engine_->lookup(elems);
  if (id == detail::LatticeEngine::npos) return std::nullopt;
  return engine_->subgroups()[id].klass;
}

// ---------------------------------------------------------------- free functions

std::vector<Group> all_subgroups(const Group& g, const EnumerationOptions& options) {
  return SubgroupLattice(g, options).all_subgroups();
}

ClassTable class_table(const Group& g, const EnumerationOptions& options) {
  return SubgroupLattice(g, options).class_table();
}

std::string subgroup_label(const Group& h) {
  const std::size_t order = h.order();
  if (order == 1) return "1";
  const auto& gens = h.generators();
  bool abelian = true;
  for (std::size_t i = 0; i < gens.size() && abelian; ++i)
    for (std::size_t j = i + 1; j < gens.size() && abelian; ++j)
      abelian = compose(gens[i], gens[j]) == compose(gens[j], gens[i]);
  std::uint64_t exponent = 1, max_element_order = 1;
  for (const auto& e : h.elements()) {
    exponent = std::lcm(exponent, e.order());
    max_element_order = std::max(max_element_order, e.order());
  }
  if (abelian) {
    if (max_element_order == order) return std::to_string(order);
    std::size_t k = 0;
    for (std::size_t m = order; m > 1 && m % exponent == 0; m /= exponent) ++k;
    std::size_t check = 1;
    for (std::size_t i = 0; i < k; ++i) check *= exponent;
    if (check == order) return std::to_string(exponent) + "^" + std::to_string(k);
    return "Ab" + std::to_string(order);
  }
  std::size_t moved = 0;
  for (std::size_t x = 0; x < h.degree(); ++x)
    for (const auto& s : gens)
      if (s(static_cast<Permutation::Point>(x)) != x) {
        ++moved;
        break;
      }
  std::size_t factorial = 1;
  for (std::size_t i = 2; i <= moved; ++i) factorial *= i;
  if (order == factorial) return "S_" + std::to_string(moved);
  if (2 * order == factorial && lies_in_alternating(h)) return "A_" + std::to_string(moved);
  if (2 * max_element_order == order) return "D" + std::to_string(order);
  return "G" + std::to_string(order);
}

bool lies_in_alternating(const Group& h) {
  return std::all_of(h.generators().begin(), h.generators().end(),
                     [](const Permutation& p) { return p.is_even(); });
}

BlueRedSplit split_by_alternating(const ClassTable& sn_table) {
  BlueRedSplit split;
  for (const auto& c : sn_table.classes) (lies_in_alternating(c.representative) ? split.blue : split.red)++;
  return split;
}

BlueRedSplit sn_classes_of_an_subgroups(std::size_t n, const EnumerationOptions& options) {
  return split_by_alternating(class_table(symmetric_group(n), options));
}

}  // namespace tomseq
