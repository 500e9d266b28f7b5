#include "tomseq/connectivity.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace tomseq {

namespace {

using Block = std::vector<std::size_t>;

Permutation restrict_to(const Permutation& p, const Block& points) {
  std::vector<Permutation::Point> images(p.degree());
  std::iota(images.begin(), images.end(), Permutation::Point{0});
  for (auto x : points) images[x] = p(static_cast<Permutation::Point>(x));
  return Permutation(std::move(images));
}

std::vector<Permutation> restrict_all(const std::vector<Permutation>& gens, const Block& points) {
  std::vector<Permutation> out;
  for (const auto& g : gens) {
    Permutation r = restrict_to(g, points);
    if (!r.is_identity()) out.push_back(std::move(r));
  }
  return out;
}

std::size_t closure_order(const std::vector<Permutation>& gens, std::size_t degree) {
  return gens.empty() ? 1 : closure(gens, degree).order();
}

// Splits the union of `orbs` (each H-stable) as finely as possible.
void split(const std::vector<Block>& orbs, const std::vector<Permutation>& gens, std::size_t degree,
           std::vector<Block>& out) {
  const std::size_t k = orbs.size();
  auto join = [&](std::uint64_t mask, bool inside) {
    Block y;
    for (std::size_t i = 0; i < k; ++i)
      if (((mask >> i) & 1) == inside) y.insert(y.end(), orbs[i].begin(), orbs[i].end());
    std::sort(y.begin(), y.end());
    return y;
  };
  if (k > 1) {
    const std::size_t whole = closure_order(gens, degree);
    // Orbit 0 always lies in Y, so each split is tried once.
    for (std::uint64_t mask = 1; mask + 1 < (std::uint64_t{1} << k); mask += 2) {
      const Block y = join(mask, true), z = join(mask, false);
      const auto gy = restrict_all(gens, y), gz = restrict_all(gens, z);
      if (closure_order(gy, degree) * closure_order(gz, degree) != whole) continue;
      std::vector<Block> oy, oz;
      for (std::size_t i = 0; i < k; ++i) ((mask >> i) & 1 ? oy : oz).push_back(orbs[i]);
      split(oy, gy, degree, out);
      split(oz, gz, degree, out);
      return;
    }
  }
  Block all;
  for (const auto& o : orbs) all.insert(all.end(), o.begin(), o.end());
  std::sort(all.begin(), all.end());
  out.push_back(std::move(all));
}

}  // namespace

Decomposition decompose(const Group& h) {
  std::vector<Block> orbs = orbits(h);
  std::vector<Block> blocks;
  split(orbs, h.generators(), h.degree(), blocks);
  std::sort(blocks.begin(), blocks.end());
  Decomposition d;
  for (auto& b : blocks) {
    const auto gens = restrict_all(h.generators(), b);
    d.factors.push_back(gens.empty() ? Group(h.degree()) : closure(gens, h.degree()));
    d.blocks.push_back(std::move(b));
  }
  return d;
}

bool is_connected(const Group& h) { return decompose(h).connected(); }

Group reassemble(const Decomposition& d) {
  if (d.factors.empty()) throw std::invalid_argument("reassemble: empty decomposition");
  std::vector<Permutation> gens;
  for (const auto& f : d.factors)
    for (const auto& g : f.generators()) gens.push_back(g);
  const std::size_t degree = d.factors.front().degree();
  return gens.empty() ? Group(degree) : closure(gens, degree);
}

// ---------------------------------------------------------------- partitions

std::uint32_t Partition::total() const noexcept { return std::accumulate(parts.begin(), parts.end(), 0u); }

std::string Partition::to_string() const {
  std::string s = "[";
  for (std::size_t i = 0; i < parts.size(); ++i) s += (i ? "," : "") + std::to_string(parts[i]);
  return s + "]";
}

std::vector<Partition> partitions_of(std::uint32_t n) {
  std::vector<Partition> out;
  std::vector<std::uint32_t> cur;
  auto rec = [&](auto&& self, std::uint32_t left, std::uint32_t max_part) -> void {
    if (left == 0) {
      out.push_back(Partition{cur});
      return;
    }
    for (std::uint32_t p = std::min(left, max_part); p >= 1; --p) {
      cur.push_back(p);
      self(self, left - p, p);
      cur.pop_back();
    }
  };
  if (n == 0) return {Partition{}};
  rec(rec, n, n);
  return out;
}

bool is_connected_partition(const Partition& p) {
  const std::size_t l = p.parts.size();
  if (l == 0) return false;
  std::vector<std::uint8_t> seen(l, 0);
  std::vector<std::size_t> stack{0};
  seen[0] = 1;
  std::size_t reached = 1;
  while (!stack.empty()) {
    const auto i = stack.back();
    stack.pop_back();
    for (std::size_t j = 0; j < l; ++j)
      if (!seen[j] && std::gcd(p.parts[i], p.parts[j]) != 1) {
        seen[j] = 1;
        ++reached;
        stack.push_back(j);
      }
  }
  return reached == l;
}

bool is_even_partition(const Partition& p) { return (p.total() - p.parts.size()) % 2 == 0; }

namespace {

// Parity of x -> k*x on Z/l (k a unit mod l).
bool multiplication_is_odd(std::uint64_t k, std::uint64_t l) {
  std::vector<std::uint8_t> seen(l, 0);
  std::uint64_t cycles = 0;
  for (std::uint64_t x = 0; x < l; ++x) {
    if (seen[x]) continue;
    ++cycles;
    for (std::uint64_t y = x; !seen[y]; y = y * k % l) seen[y] = 1;
  }
  return (l - cycles) % 2 == 1;
}

}  // namespace

bool splits_in_alternating(const Partition& p) {
  // S_1 = A_1, so nothing can split.
  if (p.total() < 2 || !is_even_partition(p)) return false;
  // The centralizer avoids odd permutations only for distinct odd parts.
  for (std::size_t i = 0; i < p.parts.size(); ++i) {
    if (p.parts[i] % 2 == 0) return false;
    if (i > 0 && p.parts[i] == p.parts[i - 1]) return false;
  }
  // The rest of the normalizer realizes g -> g^k by multiplying each cycle's
  // positions by k.
  std::uint64_t m = 1;
  for (auto l : p.parts) m = std::lcm<std::uint64_t>(m, l);
  for (std::uint64_t k = 2; k < m; ++k) {
    if (std::gcd(k, m) != 1) continue;
    bool odd = false;
    for (auto l : p.parts) odd ^= multiplication_is_odd(k % l, l);
    if (odd) return false;
  }
  return true;
}

std::vector<Partition> connected_partitions(std::uint32_t n, bool even_only) {
  if (n == 0) throw std::invalid_argument("connected partitions need n >= 1");
  std::vector<Partition> out;
  for (auto& p : partitions_of(n))
    if (is_connected_partition(p) && (!even_only || is_even_partition(p))) out.push_back(std::move(p));
  return out;
}

std::uint64_t connected_partition_count(std::uint32_t n, bool even_only) {
  std::uint64_t count = 0;
  for (const auto& p : connected_partitions(n, even_only)) count += even_only && splits_in_alternating(p) ? 2 : 1;
  return count;
}

IntSeq connected_partition_counts(std::uint32_t n_max, bool even_only) {
  std::vector<std::int64_t> v;
  for (std::uint32_t n = 1; n <= n_max; ++n)
    v.push_back(static_cast<std::int64_t>(connected_partition_count(n, even_only)));
  return IntSeq(std::move(v), even_only ? "connected even partitions" : "connected partitions");
}

// ---------------------------------------------------------------- classes

std::size_t connected_class_count(const ClassTable& ct, ClassFilter filter, std::optional<Property> p) {
  std::size_t count = 0;
  for (const auto& c : ct.classes) {
    const Group& h = c.representative;
    if (filter != ClassFilter::all && lies_in_alternating(h) != (filter == ClassFilter::inside_alternating))
      continue;
    if (p && !classify(h).has(*p)) continue;
    if (is_connected(h)) ++count;
  }
  return count;
}

std::vector<ClassTable> symmetric_class_tables(std::size_t n) {
  std::vector<ClassTable> out;
  for (std::size_t i = 1; i <= n; ++i) out.push_back(class_table(symmetric_group(i)));
  return out;
}

PairEncoding pair_encoding(const Group& h, const std::vector<ClassTable>& sn_tables) {
  const Decomposition d = decompose(h);
  PairEncoding e;
  e.classes.resize(h.degree());
  for (std::size_t b = 0; b < d.blocks.size(); ++b) {
    const auto& block = d.blocks[b];
    const std::size_t size = block.size();
    e.shape.parts.push_back(static_cast<std::uint32_t>(size));
    if (size > sn_tables.size())
      throw std::invalid_argument("pair_encoding: no class table for S_" + std::to_string(size));
    const ClassTable& table = sn_tables[size - 1];
    std::vector<std::size_t> local(h.degree(), 0);
    for (std::size_t i = 0; i < size; ++i) local[block[i]] = i;
    std::vector<Permutation> gens;
    for (const auto& g : d.factors[b].generators()) {
      std::vector<Permutation::Point> images(size);
      for (std::size_t i = 0; i < size; ++i) images[i] = static_cast<Permutation::Point>(local[g(static_cast<Permutation::Point>(block[i]))]);
      gens.emplace_back(std::move(images));
    }
    const Group factor = gens.empty() ? Group(size) : closure(gens, size);
    std::optional<std::size_t> found;
    for (std::size_t k = 0; k < table.size() && !found; ++k)
      if (table.classes[k].order == factor.order() &&
          are_conjugate(table.group, table.classes[k].representative, factor))
        found = k;
    if (!found) throw std::logic_error("pair_encoding: factor not found in the class table of S_" + std::to_string(size));
    e.classes[size - 1].push_back(*found);
  }
  std::sort(e.shape.parts.rbegin(), e.shape.parts.rend());
  for (auto& c : e.classes) std::sort(c.begin(), c.end());
  return e;
}

}  // namespace tomseq
