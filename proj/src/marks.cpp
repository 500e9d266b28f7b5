#include "tomseq/marks.hpp"

#include <algorithm>
#include <charconv>
#include <ostream>
#include <sstream>
#include <thread>

#include "lattice_engine.hpp"

namespace tomseq {

using u128 = unsigned __int128;

namespace {

std::uint64_t narrow(u128 v, const char* what) {
  if (v > static_cast<u128>(UINT64_MAX))
    throw std::overflow_error(std::string(what) + " exceeds 64 bits");
  return static_cast<std::uint64_t>(v);
}

}  // namespace

// ---------------------------------------------------------------- validation

InvalidMarksTable::InvalidMarksTable(Violation v, const std::string& detail)
    : std::runtime_error(std::string(violation_name(v)) + ": " + detail), violation_(v) {}

std::string_view InvalidMarksTable::violation_name(Violation v) {
  switch (v) {
    case Violation::format: return "format error";
    case Violation::class_ordering: return "class ordering violation";
    case Violation::triangularity: return "triangularity violation";
    case Violation::first_column: return "first-column/index mismatch";
    case Violation::normalizer_index: return "diagonal is not the normalizer index |N_G(H):H|";
    case Violation::diagonal_divisibility: return "diagonal-divisibility failure";
    case Violation::order_divisibility: return "order-divisibility failure";
    case Violation::negative_entry: return "negative mark";
  }
  return "invalid table of marks";
}

void validate(const MarksTable& mt) {
  using V = InvalidMarksTable::Violation;
  const std::size_t r = mt.size();
  auto at = [](std::size_t i, std::size_t j) {
    return "row " + std::to_string(i + 1) + ", column " + std::to_string(j + 1);
  };
  if (r == 0) throw InvalidMarksTable(V::format, "table has no classes");
  if (mt.beta.size() != r) throw InvalidMarksTable(V::format, "matrix has wrong number of rows");
  for (const auto& row : mt.beta)
    if (row.size() != r) throw InvalidMarksTable(V::format, "matrix row has wrong length");
  if (mt.properties && mt.properties->size() != r)
    throw InvalidMarksTable(V::format, "property block does not cover every class");
  if (mt.classes.front().order != 1)
    throw InvalidMarksTable(V::class_ordering, "first class must be the trivial subgroup");
  if (mt.classes.back().order != mt.group_order || mt.classes.back().length != 1)
    throw InvalidMarksTable(V::class_ordering, "last class must be the whole group");
  for (std::size_t i = 1; i < r; ++i)
    if (mt.classes[i].order < mt.classes[i - 1].order)
      throw InvalidMarksTable(V::class_ordering,
                              "class " + std::to_string(i + 1) + " has smaller order than its predecessor");
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) {
      if (mt.beta[i][j] < 0) throw InvalidMarksTable(V::negative_entry, at(i, j));
      if (j > i && mt.beta[i][j] != 0)
        throw InvalidMarksTable(V::triangularity, "nonzero entry above the diagonal at " + at(i, j));
    }
  for (std::size_t i = 0; i < r; ++i) {
    const auto& c = mt.classes[i];
    const auto& row = mt.beta[i];
    if (c.order == 0 || mt.group_order % c.order != 0 ||
        static_cast<std::uint64_t>(row[0]) != mt.group_order / c.order)
      throw InvalidMarksTable(V::first_column, "row " + std::to_string(i + 1) + " starts with " +
                                                   std::to_string(row[0]) + ", expected |G:H| = " +
                                                   std::to_string(c.order ? mt.group_order / c.order : 0));
    const u128 denom = static_cast<u128>(c.length) * c.order;
    if (denom == 0 || mt.group_order % denom != 0 ||
        static_cast<u128>(row[i]) != mt.group_order / denom)
      throw InvalidMarksTable(V::normalizer_index,
                              "row " + std::to_string(i + 1) + " has diagonal " + std::to_string(row[i]) +
                                  " but class length " + std::to_string(c.length) + " and order " +
                                  std::to_string(c.order));
    for (std::size_t j = 0; j <= i; ++j) {
      if (row[j] % row[i] != 0)
        throw InvalidMarksTable(V::diagonal_divisibility, at(i, j));
      if (row[j] != 0 && c.order % mt.classes[j].order != 0)
        throw InvalidMarksTable(V::order_divisibility, at(i, j));
    }
  }
}

// ---------------------------------------------------------------- single marks

std::uint64_t mark_by_fixed_cosets(const Group& g, const Group& h, const Group& k) {
  if (!is_subgroup(k, g)) throw NotASubgroup("mark: k is not a subgroup of g");
  const CosetAction action = coset_action(g, h);
  std::vector<Permutation> images;
  for (const auto& s : k.generators()) images.push_back(action.image_of(s));
  std::uint64_t fixed = 0;
  for (std::size_t c = 0; c < action.coset_count(); ++c) {
    const auto point = static_cast<Permutation::Point>(c);
    if (std::all_of(images.begin(), images.end(), [&](const Permutation& p) { return p(point) == point; }))
      ++fixed;
  }
  return fixed;
}

std::uint64_t mark_by_conjugates(const Group& g, const Group& h, const Group& k) {
  if (!is_subgroup(k, g)) throw NotASubgroup("mark: k is not a subgroup of g");
  const Group n = normalizer(g, h);
  // Distinct conjugates h^x correspond to right cosets N*x.
  std::vector<bool> visited(g.order(), false);
  std::uint64_t containing = 0;
  for (std::size_t i = 0; i < g.order(); ++i) {
    if (visited[i]) continue;
    const Permutation& x = g.elements()[i];
    for (const auto& y : n.elements()) visited[*g.index_of(compose(y, x))] = true;
    const Permutation xi = x.inverse();
    // k <= h^x  <=>  x k x^-1 <= h
    if (std::all_of(k.generators().begin(), k.generators().end(),
                    [&](const Permutation& s) { return h.contains(compose(x, compose(s, xi))); }))
      ++containing;
  }
  return n.order() / h.order() * containing;
}

std::uint64_t mark(const Group& g, const Group& h, const Group& k) {
  const auto a = mark_by_fixed_cosets(g, h, k);
  const auto b = mark_by_conjugates(g, h, k);
  if (a != b)
    throw std::logic_error("mark: fixed-coset count " + std::to_string(a) +
                           " disagrees with conjugate count " + std::to_string(b));
  return a;
}

// ---------------------------------------------------------------- full table

namespace {

MarksTable marks_table_impl(const SubgroupLattice& lattice, const std::vector<std::size_t>& class_order,
                            unsigned threads) {
  const std::size_t r = class_order.size();
  const std::uint64_t group_order = lattice.group().order();
  MarksTable mt;
  mt.name = "G" + std::to_string(group_order);
  mt.group_order = group_order;
  mt.beta.assign(r, std::vector<std::int64_t>(r, 0));
  std::vector<const std::vector<std::uint32_t>*> rep_gens(r);
  for (std::size_t i = 0; i < r; ++i) {
    const auto& members = lattice.class_members(class_order[i]);
    const auto rep = members.front();
    ClassSummary s;
    s.order = lattice.subgroup_elements(rep).size();
    s.length = members.size();
    s.label = subgroup_label(lattice.materialize(rep));
    mt.classes.push_back(std::move(s));
    rep_gens[i] = &lattice.subgroup_generators(rep);
  }

  auto compute_row = [&](std::size_t i, detail::StampSet& in_conjugate) {
    const auto& members = lattice.class_members(class_order[i]);
    const std::uint64_t order_i = mt.classes[i].order;
    const std::int64_t diagonal = static_cast<std::int64_t>(group_order / (members.size() * order_i));
    std::vector<std::int64_t> containing(i + 1, 0);
    for (auto id : members) {
      in_conjugate.clear();
      for (auto e : lattice.subgroup_elements(id)) in_conjugate.insert(e);
      for (std::size_t j = 0; j <= i; ++j) {
        if (order_i % mt.classes[j].order != 0) continue;
        const auto& gens = *rep_gens[j];
        if (std::all_of(gens.begin(), gens.end(), [&](std::uint32_t s) { return in_conjugate.contains(s); }))
          ++containing[j];
      }
    }
    for (std::size_t j = 0; j <= i; ++j) mt.beta[i][j] = diagonal * containing[j];
  };

  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(r, 1)));
  if (threads <= 1) {
    detail::StampSet stamp(group_order);
    for (std::size_t i = 0; i < r; ++i) compute_row(i, stamp);
  } else {
    std::vector<std::thread> workers;
    for (unsigned t = 0; t < threads; ++t)
      workers.emplace_back([&, t] {
        detail::StampSet stamp(group_order);
        for (std::size_t i = t; i < r; i += threads) compute_row(i, stamp);
      });
    for (auto& w : workers) w.join();
  }
  return mt;
}

}  // namespace

MarksTable marks_table(const SubgroupLattice& lattice, unsigned threads) {
  std::vector<std::size_t> order(lattice.class_count());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  return marks_table_impl(lattice, order, threads);
}

MarksTable marks_table(const ClassTable& ct, unsigned threads) {
  SubgroupLattice lattice(ct.group, EnumerationOptions{std::max<std::size_t>(ct.group.order(), 1)});
  std::vector<std::size_t> order;
  for (const auto& c : ct.classes) {
    auto k = lattice.class_of(c.representative);
    if (!k) throw std::invalid_argument("class representative is not a subgroup of the group");
    order.push_back(*k);
  }
  MarksTable mt = marks_table_impl(lattice, order, threads);
  for (std::size_t i = 0; i < ct.size(); ++i) mt.classes[i].label = ct.classes[i].label;
  return mt;
}

void attach_properties(MarksTable& mt, const ClassTable& ct) {
  if (ct.size() != mt.size()) throw std::invalid_argument("class table does not match marks table");
  mt.properties = classify_classes(ct);
}

// ---------------------------------------------------------------- derived data

std::uint64_t total_subgroups(const MarksTable& mt) {
  u128 total = 0;
  for (std::size_t i = 0; i < mt.size(); ++i) total += mt.beta[i][0] / mt.beta[i][i];
  return narrow(total, "total subgroup count");
}

DerivedMatrices derived_matrices(const MarksTable& mt) {
  const std::size_t r = mt.size();
  DerivedMatrices d;
  d.containment.assign(r, std::vector<std::int64_t>(r, 0));
  d.incidence.assign(r, std::vector<std::uint8_t>(r, 0));
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j <= i; ++j) {
      const auto v = mt.beta[i][j];
      if (v % mt.beta[i][i] != 0)
        throw std::logic_error("diagonal does not divide row entry; table is not a table of marks");
      d.containment[i][j] = v / mt.beta[i][i];
      d.incidence[i][j] = v != 0;
    }
  return d;
}

namespace {

// Proper subgroups of H_i up to conjugacy.
std::vector<std::size_t> below(const MarksTable& mt, std::size_t i) {
  std::vector<std::size_t> out;
  for (std::size_t j = 0; j < i; ++j)
    if (mt.beta[i][j] != 0 && mt.classes[j].order < mt.classes[i].order) out.push_back(j);
  return out;
}

std::vector<std::vector<std::size_t>> all_maximal(const MarksTable& mt) {
  const std::size_t r = mt.size();
  std::vector<std::vector<std::size_t>> rho(r), max(r);
  for (std::size_t i = 0; i < r; ++i) rho[i] = below(mt, i);
  std::vector<std::uint8_t> covered(r);
  for (std::size_t i = 0; i < r; ++i) {
    std::fill(covered.begin(), covered.end(), 0);
    for (auto j : rho[i])
      for (auto k : rho[j]) covered[k] = 1;
    for (auto j : rho[i])
      if (!covered[j]) max[i].push_back(j);
  }
  return max;
}

}  // namespace

std::vector<std::size_t> maximal_subgroups(const MarksTable& mt, std::size_t i) {
  if (i >= mt.size()) throw std::out_of_range("class index " + std::to_string(i) + " out of range");
  const auto rho = below(mt, i);
  std::vector<std::uint8_t> covered(mt.size(), 0);
  for (auto j : rho)
    for (auto k : below(mt, j)) covered[k] = 1;
  std::vector<std::size_t> out;
  for (auto j : rho)
    if (!covered[j]) out.push_back(j);
  return out;
}

std::int64_t edges_up(const MarksTable& mt, std::size_t i, std::size_t j) {
  if (i >= mt.size() || j >= mt.size()) throw std::out_of_range("class index out of range");
  // beta_{G/H_j}(H_i) beta_{G/H_i}(1) / (beta_{G/H_i}(H_i) beta_{G/H_j}(1))
  const auto num = static_cast<__int128>(mt.beta[j][i]) * mt.beta[i][0];
  const auto den = static_cast<__int128>(mt.beta[i][i]) * mt.beta[j][0];
  if (num % den != 0)
    throw std::logic_error("non-integral count of conjugates of class " + std::to_string(i + 1) +
                           " inside class " + std::to_string(j + 1));
  return static_cast<std::int64_t>(num / den);
}

std::vector<std::size_t> maximal_property_p(const MarksTable& mt, const std::vector<bool>& has_property) {
  if (has_property.size() != mt.size()) throw std::invalid_argument("property vector has wrong length");
  const auto max = all_maximal(mt);
  std::vector<std::uint8_t> dominated(mt.size(), 0);
  for (std::size_t j = 0; j < mt.size(); ++j)
    if (has_property[j])
      for (auto k : max[j]) dominated[k] = 1;
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < mt.size(); ++i)
    if (has_property[i] && !dominated[i]) out.push_back(i);
  return out;
}

namespace {
std::vector<bool> property_vector(const MarksTable& mt, Property p) {
  if (!mt.properties) throw std::invalid_argument("marks table carries no property flags");
  std::vector<bool> v;
  for (const auto& f : *mt.properties) v.push_back(f.has(p));
  return v;
}
}  // namespace

std::vector<std::size_t> maximal_property_p(const MarksTable& mt, Property p) {
  return maximal_property_p(mt, property_vector(mt, p));
}

std::uint64_t total_maximal_property_p(const MarksTable& mt, const std::vector<bool>& has_property) {
  u128 total = 0;
  for (auto i : maximal_property_p(mt, has_property)) total += mt.classes[i].length;
  return narrow(total, "maximal property total");
}

std::uint64_t total_maximal_property_p(const MarksTable& mt, Property p) {
  return total_maximal_property_p(mt, property_vector(mt, p));
}

MarksSummary summarize(const MarksTable& mt) {
  const std::size_t r = mt.size();
  u128 sum = 0, diag = 0, poset_inc = 0, lattice_inc = 0, poset_edges = 0, lattice_edges = 0;
  for (std::size_t i = 0; i < r; ++i) {
    diag += mt.beta[i][i];
    for (std::size_t j = 0; j <= i; ++j) {
      const auto v = mt.beta[i][j];
      sum += v;
      if (v != 0) {
        ++poset_inc;
        lattice_inc += v / mt.beta[i][i];
      }
    }
  }
  const auto max = all_maximal(mt);
  for (std::size_t i = 0; i < r; ++i) {
    poset_edges += max[i].size();
    for (auto j : max[i]) lattice_edges += static_cast<u128>(mt.classes[i].length) * edges_up(mt, j, i);
  }
  MarksSummary s;
  s.total_subgroups = total_subgroups(mt);
  s.sum_of_marks = narrow(sum, "sum of marks");
  s.diagonal_sum = narrow(diag, "diagonal sum");
  s.poset_incidences = narrow(poset_inc, "poset incidences");
  s.lattice_incidences = narrow(lattice_inc, "lattice incidences");
  s.poset_edges = narrow(poset_edges, "poset edges");
  s.lattice_edges = narrow(lattice_edges, "lattice edges");
  return s;
}

// ---------------------------------------------------------------- tom-text

namespace {

std::string sanitize_label(const std::string& s) {
  std::string out = s.empty() ? std::string("-") : s;
  for (auto& ch : out)
    if (ch == ' ' || ch == '\t') ch = '_';
  return out;
}

}  // namespace

void write_tom_text(std::ostream& out, const MarksTable& mt) {
  out << "TOM " << (mt.name.empty() ? "G" : mt.name) << ' ' << mt.size() << '\n';
  for (std::size_t i = 0; i < mt.size(); ++i)
    out << "CLASS " << i + 1 << " order=" << mt.classes[i].order << " length=" << mt.classes[i].length
        << " label=" << sanitize_label(mt.classes[i].label) << '\n';
  for (std::size_t i = 0; i < mt.size(); ++i) {
    out << "ROW " << i + 1 << ':';
    for (std::size_t j = 0; j <= i; ++j) out << ' ' << mt.beta[i][j];
    out << '\n';
  }
  if (mt.properties)
    for (std::size_t i = 0; i < mt.size(); ++i) {
      const auto& f = (*mt.properties)[i];
      out << "PROPS " << i + 1 << ": " << f.abelian << ' ' << f.cyclic << ' ' << f.nilpotent << ' '
          << f.solvable << ' ' << f.supersolvable << '\n';
    }
}

std::string to_tom_text(const MarksTable& mt) {
  std::ostringstream os;
  write_tom_text(os, mt);
  return os.str();
}

namespace {

using V = InvalidMarksTable::Violation;

struct LineReader {
  std::vector<std::string> lines;
  std::size_t pos = 0;

  explicit LineReader(std::string_view text) {
    std::size_t start = 0;
    while (start <= text.size()) {
      auto end = text.find('\n', start);
      if (end == std::string_view::npos) end = text.size();
      std::string line(text.substr(start, end - start));
      if (!line.empty() && line.back() == '\r') line.pop_back();
      if (!line.empty() && line.find_first_not_of(" \t") != std::string::npos && line[0] != '#')
        lines.push_back(std::move(line));
      start = end + 1;
    }
  }
  bool done() const { return pos >= lines.size(); }
  const std::string& next(const char* expecting) {
    if (done()) throw InvalidMarksTable(V::format, std::string("unexpected end of input, expected ") + expecting);
    return lines[pos++];
  }
};

std::vector<std::string> split_ws(const std::string& s) {
  std::istringstream is(s);
  std::vector<std::string> out;
  for (std::string tok; is >> tok;) out.push_back(tok);
  return out;
}

template <class T>
T parse_number(std::string_view tok, const std::string& context) {
  T v{};
  auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc{} || p != tok.data() + tok.size())
    throw InvalidMarksTable(V::format, "bad number '" + std::string(tok) + "' in " + context);
  return v;
}

std::string_view value_of(std::string_view tok, std::string_view key, const std::string& context) {
  if (tok.substr(0, key.size()) != key)
    throw InvalidMarksTable(V::format, "expected '" + std::string(key) + "' in " + context);
  return tok.substr(key.size());
}

// "<KEYWORD> <i>:" prefix check; returns remaining tokens.
std::vector<std::string> indexed_line(const std::string& line, std::string_view keyword, std::size_t i) {
  auto toks = split_ws(line);
  const std::string head = std::to_string(i) + ":";
  if (toks.size() < 2 || toks[0] != keyword || toks[1] != head)
    throw InvalidMarksTable(V::format, "expected '" + std::string(keyword) + " " + head + "', got '" + line + "'");
  return {toks.begin() + 2, toks.end()};
}

}  // namespace

MarksTable parse_tom_text(std::string_view text) {
  LineReader in(text);
  MarksTable mt;
  auto header = split_ws(in.next("TOM header"));
  if (header.size() != 3 || header[0] != "TOM")
    throw InvalidMarksTable(V::format, "first line must be 'TOM <name> <r>'");
  mt.name = header[1];
  const auto r = parse_number<std::size_t>(header[2], "TOM header");
  if (r == 0) throw InvalidMarksTable(V::format, "table has no classes");

  for (std::size_t i = 1; i <= r; ++i) {
    const std::string& line = in.next("CLASS line");
    const std::string ctx = "CLASS line " + std::to_string(i);
    auto toks = split_ws(line);
    if (toks.size() != 5 || toks[0] != "CLASS" || toks[1] != std::to_string(i))
      throw InvalidMarksTable(V::format, "expected 'CLASS " + std::to_string(i) +
                                             " order=<m> length=<l> label=<s>', got '" + line + "'");
    ClassSummary c;
    c.order = parse_number<std::uint64_t>(value_of(toks[2], "order=", ctx), ctx);
    c.length = parse_number<std::uint64_t>(value_of(toks[3], "length=", ctx), ctx);
    c.label = std::string(value_of(toks[4], "label=", ctx));
    mt.classes.push_back(std::move(c));
  }
  mt.group_order = mt.classes.back().order;

  mt.beta.assign(r, std::vector<std::int64_t>(r, 0));
  for (std::size_t i = 1; i <= r; ++i) {
    const auto vals = indexed_line(in.next("ROW line"), "ROW", i);
    const std::string ctx = "ROW " + std::to_string(i);
    if (vals.size() < i)
      throw InvalidMarksTable(V::format, ctx + " has " + std::to_string(vals.size()) + " entries, expected " +
                                             std::to_string(i));
    for (std::size_t j = 0; j < vals.size(); ++j) {
      const auto v = parse_number<std::int64_t>(vals[j], ctx);
      if (j >= i) {
        if (v != 0)
          throw InvalidMarksTable(V::triangularity, ctx + " has a nonzero entry in column " +
                                                        std::to_string(j + 1) + " above the diagonal");
        continue;
      }
      mt.beta[i - 1][j] = v;
    }
  }

  if (!in.done()) {
    std::vector<PropertyFlags> props;
    for (std::size_t i = 1; i <= r; ++i) {
      const auto vals = indexed_line(in.next("PROPS line"), "PROPS", i);
      if (vals.size() != 5) throw InvalidMarksTable(V::format, "PROPS line needs five 0/1 flags");
      bool f[5];
      for (int k = 0; k < 5; ++k) {
        if (vals[k] != "0" && vals[k] != "1")
          throw InvalidMarksTable(V::format, "PROPS flags must be 0 or 1");
        f[k] = vals[k] == "1";
      }
      props.push_back(PropertyFlags{f[0], f[1], f[2], f[3], f[4]});
      if (!props.back().consistent())
        throw InvalidMarksTable(V::format, "PROPS " + std::to_string(i) + " violates the implication chain");
    }
    if (!in.done()) throw InvalidMarksTable(V::format, "trailing content after PROPS block");
    mt.properties = std::move(props);
  }
  validate(mt);
  return mt;
}

}  // namespace tomseq
