#include "tomseq/report.hpp"

#include <unistd.h>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <random>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "golden_data.hpp"
#include "tomseq/connectivity.hpp"
#include "tomseq/properties.hpp"
#include "tomseq/transforms.hpp"

namespace tomseq {

using ordered_json = nlohmann::ordered_json;

std::string_view family_name(Family f) { return f == Family::S ? "S" : "A"; }

Family parse_family(std::string_view s) {
  if (s == "S" || s == "s") return Family::S;
  if (s == "A" || s == "a") return Family::A;
  throw std::invalid_argument("unknown family '" + std::string(s) + "' (expected S or A)");
}

Group family_group(Family f, std::size_t n) {
  return f == Family::S ? symmetric_group(n) : alternating_group(n);
}

std::uint64_t family_order(Family f, std::size_t n) {
  std::uint64_t order = 1;
  for (std::size_t k = 2; k <= n; ++k) {
    if (order > UINT64_MAX / k) throw std::overflow_error("group order exceeds 64 bits");
    order *= k;
  }
  return f == Family::A && n >= 2 ? order / 2 : order;
}

// ---------------------------------------------------------------- golden data

const std::vector<std::int64_t>* GoldenTable::row(std::size_t n) const {
  auto it = rows.find(n);
  return it == rows.end() ? nullptr : &it->second;
}

const std::vector<GoldenTable>& golden_registry() {
  static const std::vector<GoldenTable> registry = [] {
    std::vector<GoldenTable> out;
    for (const auto& spec : detail::golden_specs()) {
      GoldenTable t;
      t.table_id = spec.id;
      t.family = spec.family == 'S' ? Family::S : Family::A;
      t.source = spec.description;
      t.columns = spec.columns;
      for (std::size_t i = 0; i < spec.rows.size(); ++i) t.rows.emplace(i + 1, spec.rows[i]);
      out.push_back(std::move(t));
    }
    return out;
  }();
  return registry;
}

const GoldenTable* find_golden(std::string_view table_id, Family f) {
  for (const auto& t : golden_registry())
    if (t.table_id == table_id && t.family == f) return &t;
  return nullptr;
}

const std::vector<std::string>& table_ids() {
  static const std::vector<std::string> ids = [] {
    std::vector<std::string> out;
    for (const auto& spec : detail::golden_specs())
      if (std::find(out.begin(), out.end(), spec.id) == out.end()) out.push_back(spec.id);
    return out;
  }();
  return ids;
}

const std::vector<std::string>& table_columns(std::string_view table_id) {
  for (const auto& spec : detail::golden_specs())
    if (spec.id == table_id) return spec.columns;
  throw std::invalid_argument("unknown table '" + std::string(table_id) + "'");
}

bool table_defined_for(std::string_view table_id, Family f) { return find_golden(table_id, f) != nullptr; }

// ---------------------------------------------------------------- group data

std::vector<bool> GroupData::inside_alternating() const {
  const std::size_t r = marks.size();
  if (family == Family::A || n < 2) return std::vector<bool>(r, true);
  const std::uint64_t half = marks.group_order / 2;
  for (std::size_t a = 0; a < r; ++a)
    if (marks.classes[a].order == half) {
      std::vector<bool> inside(r, false);
      for (std::size_t j = 0; j <= a; ++j) inside[j] = marks.beta[a][j] != 0;
      return inside;
    }
  throw std::logic_error("table of marks of S_" + std::to_string(n) + " has no subgroup of index 2");
}

GroupData compute_group_data(Family f, std::size_t n, std::size_t max_order, unsigned threads) {
  const Group g = family_group(f, n);
  const SubgroupLattice lattice(g, EnumerationOptions{max_order});
  GroupData d;
  d.family = f;
  d.n = n;
  d.marks = marks_table(lattice, threads);
  d.marks.name = std::string(family_name(f)) + std::to_string(n);
  const ClassTable ct = lattice.class_table();
  d.marks.properties = classify_classes(ct);
  std::vector<bool> connected;
  for (const auto& c : ct.classes) connected.push_back(is_connected(c.representative));
  d.connected = std::move(connected);
  return d;
}

GroupData imported_group_data(Family f, std::size_t n, MarksTable marks) {
  const auto expected = family_order(f, n);
  if (marks.group_order != expected)
    throw std::invalid_argument("imported table " + marks.name + " has group order " +
                                std::to_string(marks.group_order) + ", but " + std::string(family_name(f)) +
                                "_" + std::to_string(n) + " has order " + std::to_string(expected));
  GroupData d;
  d.family = f;
  d.n = n;
  d.marks = std::move(marks);
  d.imported = true;
  return d;
}

// ---------------------------------------------------------------- cache

std::filesystem::path resolve_cache_dir(const std::optional<std::filesystem::path>& flag) {
  if (flag && !flag->empty()) return *flag;
  if (const char* env = std::getenv(kCacheDirEnv); env && *env) return env;
  if (const char* xdg = std::getenv("XDG_CACHE_HOME"); xdg && *xdg) return std::filesystem::path(xdg) / "tomseq";
  if (const char* home = std::getenv("HOME"); home && *home)
    return std::filesystem::path(home) / ".cache" / "tomseq";
  return {};
}

GroupDataCache::GroupDataCache(std::filesystem::path dir) : dir_(std::move(dir)) {}

std::filesystem::path GroupDataCache::entry_path(Family f, std::size_t n) const {
  return dir_ / (std::string(family_name(f)) + std::to_string(n) + "-" + std::string(kCacheFormatVersion) + ".json");
}

std::string group_data_to_json(const GroupData& d) {
  ordered_json j;
  j["format"] = kCacheFormatVersion;
  j["family"] = family_name(d.family);
  j["n"] = d.n;
  j["tom"] = to_tom_text(d.marks);
  if (d.connected) j["connected"] = *d.connected;
  return j.dump(1);
}

GroupData group_data_from_json(std::string_view text) {
  try {
    const auto j = ordered_json::parse(text);
    if (j.at("format").get<std::string>() != kCacheFormatVersion)
      throw std::invalid_argument("cache entry has a different format version");
    GroupData d;
    d.family = parse_family(j.at("family").get<std::string>());
    d.n = j.at("n").get<std::size_t>();
    d.marks = parse_tom_text(j.at("tom").get<std::string>());
    if (j.contains("connected")) {
      d.connected = j.at("connected").get<std::vector<bool>>();
      if (d.connected->size() != d.marks.size())
        throw std::invalid_argument("connectivity flags do not cover every class");
    }
    return d;
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("malformed group data: ") + e.what());
  } catch (const InvalidMarksTable& e) {
    throw std::invalid_argument(std::string("malformed group data: ") + e.what());
  }
}

std::optional<GroupData> GroupDataCache::load(Family f, std::size_t n) const {
  if (dir_.empty()) return std::nullopt;
  std::ifstream in(entry_path(f, n), std::ios::binary);
  if (!in) return std::nullopt;
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    GroupData d = group_data_from_json(buf.str());
    if (d.family != f || d.n != n || !d.marks.properties || !d.connected) return std::nullopt;
    return d;
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

bool GroupDataCache::store(const GroupData& d) const noexcept {
  if (dir_.empty() || d.imported) return false;
  try {
    std::filesystem::create_directories(dir_);
    const auto target = entry_path(d.family, d.n);
    std::random_device rd;
    auto tmp = target;
    tmp += ".tmp." + std::to_string(::getpid()) + "." + std::to_string(rd());
    {
      std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
      out << group_data_to_json(d);
      if (!out.flush()) {
        std::filesystem::remove(tmp);
        return false;
      }
    }
    std::filesystem::rename(tmp, target);
    return true;
  } catch (...) {
    return false;
  }
}

// ---------------------------------------------------------------- reports

std::size_t Report::mismatch_count() const {
  std::size_t count = 0;
  for (const auto& t : tables)
    for (const auto& [n, cells] : t.rows)
      for (const auto& c : cells) count += c.mismatch();
  return count;
}

std::size_t Report::missing_count() const {
  std::size_t count = 0;
  for (const auto& t : tables)
    for (const auto& [n, cells] : t.rows)
      for (const auto& c : cells) count += !c.value;
  return count;
}

namespace {

using Cells = std::vector<std::optional<std::int64_t>>;

class DataSource {
 public:
  explicit DataSource(const ReportOptions& o) : options_(o) {}

  const GroupData* get(Family f, std::size_t n) {
    const auto key = std::make_pair(f, n);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second ? &*it->second : nullptr;
    std::optional<GroupData> d;
    if (auto it = options_.imported.find(key); it != options_.imported.end()) {
      d = imported_group_data(f, n, it->second);
    } else if (options_.cache && (d = options_.cache->load(f, n))) {
    } else if (within_budget(f, n)) {
      d = compute_group_data(f, n, options_.max_order, options_.threads);
      if (options_.cache) options_.cache->store(*d);
    }
    auto [it, _] = memo_.emplace(key, std::move(d));
    return it->second ? &*it->second : nullptr;
  }

 private:
  bool within_budget(Family f, std::size_t n) const {
    try {
      return family_order(f, n) <= options_.max_order;
    } catch (const std::overflow_error&) {
      return false;
    }
  }

  const ReportOptions& options_;
  std::map<std::pair<Family, std::size_t>, std::optional<GroupData>> memo_;
};

std::int64_t count_with(const MarksTable& mt, Property p, bool weighted) {
  std::int64_t c = 0;
  for (std::size_t i = 0; i < mt.size(); ++i)
    if ((*mt.properties)[i].has(p)) c += weighted ? static_cast<std::int64_t>(mt.classes[i].length) : 1;
  return c;
}

std::int64_t as_i64(std::uint64_t v) {
  if (v > static_cast<std::uint64_t>(INT64_MAX)) throw std::overflow_error("value exceeds int64");
  return static_cast<std::int64_t>(v);
}

const std::vector<Property> kMaxColumns = {Property::solvable, Property::supersolvable, Property::abelian,
                                           Property::cyclic, Property::nilpotent};
const std::vector<Property> kConnectedColumns = {Property::abelian, Property::nilpotent, Property::solvable,
                                                 Property::supersolvable};

std::optional<std::int64_t> connected_count(const GroupData& d, std::optional<Property> p,
                                            std::optional<bool> inside = std::nullopt) {
  if (!d.connected || (p && !d.marks.properties)) return std::nullopt;
  const auto in_a = inside ? d.inside_alternating() : std::vector<bool>();
  std::int64_t c = 0;
  for (std::size_t i = 0; i < d.marks.size(); ++i) {
    if (!(*d.connected)[i]) continue;
    if (p && !(*d.marks.properties)[i].has(*p)) continue;
    if (inside && in_a[i] != *inside) continue;
    ++c;
  }
  return c;
}

Cells table_cells(std::string_view id, Family f, std::size_t n, DataSource& src) {
  const std::size_t width = table_columns(id).size();
  Cells cells(width);

  if (id == "connseq") {
    if (const auto* a = src.get(Family::A, n)) cells[0] = connected_count(*a, std::nullopt);
    if (const auto* s = src.get(Family::S, n)) {
      cells[1] = connected_count(*s, std::nullopt, true);
      cells[2] = connected_count(*s, std::nullopt, false);
    }
    cells[3] = as_i64(connected_partition_count(static_cast<std::uint32_t>(n), false));
    cells[4] = as_i64(connected_partition_count(static_cast<std::uint32_t>(n), true));
    return cells;
  }
  if (id == "redblue") {
    const auto* s = src.get(Family::S, n);
    const auto* a = src.get(Family::A, n);
    if (s) {
      cells[0] = as_i64(s->marks.size());
      const auto inside = s->inside_alternating();
      const auto blue = std::count(inside.begin(), inside.end(), true);
      cells[2] = blue;
      cells[3] = static_cast<std::int64_t>(inside.size()) - blue;
    }
    if (a) cells[1] = as_i64(a->marks.size());
    return cells;
  }

  const GroupData* d = src.get(f, n);
  if (id == "connected") {
    if (d) cells[0] = as_i64(d->marks.size());
    if (d && d->connected) {
      for (std::size_t k = 0; k < kConnectedColumns.size(); ++k) cells[k + 1] = connected_count(*d, kConnectedColumns[k]);
      return cells;
    }
    // For S_n the connected counts are inverse Euler transforms of the class
    // counts, which imports can supply.
    if (f != Family::S) return cells;
    std::vector<std::vector<std::int64_t>> columns(kConnectedColumns.size());
    for (std::size_t k = 1; k <= n; ++k) {
      const auto* dk = src.get(Family::S, k);
      if (!dk || !dk->marks.properties) return cells;
      for (std::size_t c = 0; c < kConnectedColumns.size(); ++c)
        columns[c].push_back(count_with(dk->marks, kConnectedColumns[c], false));
    }
    for (std::size_t c = 0; c < kConnectedColumns.size(); ++c)
      cells[c + 1] = inverse_euler_transform(IntSeq(columns[c]), n).term(n);
    return cells;
  }
  if (!d) return cells;
  const MarksTable& mt = d->marks;
  const bool props = mt.properties.has_value();

  if (id == "classcounts") {
    cells[0] = as_i64(mt.size());
    if (props)
      for (std::size_t k = 0; k < kAllProperties.size(); ++k) cells[k + 1] = count_with(mt, kAllProperties[k], false);
  } else if (id == "subtotals") {
    cells[0] = as_i64(total_subgroups(mt));
    if (props)
      for (std::size_t k = 0; k < kAllProperties.size(); ++k) cells[k + 1] = count_with(mt, kAllProperties[k], true);
  } else if (id == "orders") {
    std::vector<std::uint64_t> orders;
    for (const auto& c : mt.classes) orders.push_back(c.order);
    const auto stats = subgroup_order_stats(mt.group_order, orders);
    cells[0] = as_i64(stats.distinct_orders);
    cells[1] = as_i64(stats.missing_divisors);
  } else if (id == "maxprop" || id == "maxtotals") {
    if (props)
      for (std::size_t k = 0; k < kMaxColumns.size(); ++k)
        cells[k] = id == "maxprop" ? as_i64(maximal_property_p(mt, kMaxColumns[k]).size())
                                   : as_i64(total_maximal_property_p(mt, kMaxColumns[k]));
  } else {
    const MarksSummary s = summarize(mt);
    if (id == "totals") {
      cells[0] = as_i64(s.total_subgroups);
    } else if (id == "sums") {
      cells[0] = as_i64(s.sum_of_marks);
      cells[1] = as_i64(s.diagonal_sum);
    } else if (id == "incidences") {
      cells[0] = as_i64(s.poset_incidences);
      cells[1] = as_i64(s.lattice_incidences);
    } else if (id == "edges") {
      cells[0] = as_i64(s.poset_edges);
      cells[1] = as_i64(s.lattice_edges);
    } else {
      throw std::invalid_argument("unknown table '" + std::string(id) + "'");
    }
  }
  return cells;
}

}  // namespace

Report build_report(const ReportOptions& options) {
  if (options.n_min < 1 || options.n_max < options.n_min)
    throw std::invalid_argument("need 1 <= n_min <= n_max");
  std::vector<std::string> ids = options.tables;
  if (ids.empty())
    for (const auto& id : table_ids())
      if (table_defined_for(id, options.family)) ids.push_back(id);
  for (const auto& id : ids) {
    if (std::find(table_ids().begin(), table_ids().end(), id) == table_ids().end())
      throw std::invalid_argument("unknown table '" + id + "'");
    if (!table_defined_for(id, options.family))
      throw std::invalid_argument("table '" + id + "' is not defined for family " +
                                  std::string(family_name(options.family)));
  }
  DataSource src(options);
  Report report;
  report.family = options.family;
  report.n_min = options.n_min;
  report.n_max = options.n_max;
  for (const auto& id : ids) {
    ReportTable t;
    t.table_id = id;
    t.family = options.family;
    t.columns = table_columns(id);
    const GoldenTable* golden = find_golden(id, options.family);
    for (std::size_t n = options.n_min; n <= options.n_max; ++n) {
      const Cells values = table_cells(id, options.family, n, src);
      const auto* expected = golden ? golden->row(n) : nullptr;
      std::vector<ReportCell> row;
      for (std::size_t c = 0; c < values.size(); ++c)
        row.push_back(ReportCell{values[c], expected ? std::optional((*expected)[c]) : std::nullopt});
      t.rows.emplace(n, std::move(row));
    }
    report.tables.push_back(std::move(t));
  }
  return report;
}

ReportFormat parse_report_format(std::string_view s) {
  if (s == "csv") return ReportFormat::csv;
  if (s == "json") return ReportFormat::json;
  if (s == "bfile") return ReportFormat::bfile;
  throw std::invalid_argument("unknown format '" + std::string(s) + "' (expected csv, json or bfile)");
}

namespace {
std::string cell_text(const ReportCell& c) {
  return c.value ? std::to_string(*c.value) : std::string(kRequiresImport);
}
}  // namespace

std::string render_csv(const Report& r) {
  std::ostringstream os;
  bool first = true;
  for (const auto& t : r.tables) {
    if (!first) os << '\n';
    first = false;
    os << "table,family,n";
    for (const auto& c : t.columns) os << ',' << c;
    os << '\n';
    for (const auto& [n, cells] : t.rows) {
      os << t.table_id << ',' << family_name(t.family) << ',' << n;
      for (const auto& c : cells) os << ',' << cell_text(c);
      os << '\n';
    }
  }
  return os.str();
}

std::string render_json(const Report& r) {
  ordered_json j;
  j["family"] = family_name(r.family);
  j["n_min"] = r.n_min;
  j["n_max"] = r.n_max;
  j["tables"] = ordered_json::array();
  ordered_json mismatches = ordered_json::array();
  for (const auto& t : r.tables) {
    ordered_json jt;
    jt["id"] = t.table_id;
    jt["columns"] = t.columns;
    jt["rows"] = ordered_json::array();
    for (const auto& [n, cells] : t.rows) {
      ordered_json row;
      row["n"] = n;
      ordered_json values = ordered_json::array();
      for (std::size_t c = 0; c < cells.size(); ++c) {
        if (cells[c].value)
          values.push_back(*cells[c].value);
        else
          values.push_back(kRequiresImport);
        if (cells[c].mismatch())
          mismatches.push_back({{"table", t.table_id}, {"n", n}, {"column", t.columns[c]},
                                {"computed", *cells[c].value}, {"expected", *cells[c].expected}});
      }
      row["values"] = std::move(values);
      jt["rows"].push_back(std::move(row));
    }
    j["tables"].push_back(std::move(jt));
  }
  j["mismatches"] = std::move(mismatches);
  return j.dump(2) + "\n";
}

std::map<std::string, std::string> render_bfiles(const Report& r) {
  std::map<std::string, std::string> out;
  for (const auto& t : r.tables)
    for (std::size_t c = 0; c < t.columns.size(); ++c) {
      std::ostringstream os;
      for (const auto& [n, cells] : t.rows) {
        if (!cells[c].value) break;
        os << n << ' ' << *cells[c].value << '\n';
      }
      out[t.table_id + "_" + std::string(family_name(t.family)) + "_" + t.columns[c]] = os.str();
    }
  return out;
}

std::string describe_mismatches(const Report& r) {
  std::ostringstream os;
  for (const auto& t : r.tables)
    for (const auto& [n, cells] : t.rows)
      for (std::size_t c = 0; c < cells.size(); ++c)
        if (cells[c].mismatch())
          os << t.table_id << ' ' << family_name(t.family) << " n=" << n << ' ' << t.columns[c] << ": computed "
             << *cells[c].value << ", expected " << *cells[c].expected << '\n';
  return os.str();
}

}  // namespace tomseq
