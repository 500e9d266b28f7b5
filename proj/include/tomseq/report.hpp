#pragma once

// Reference tables, per-group derived data, caching and report rendering.

#include <cstdint>
#include <filesystem>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tomseq/enumerate.hpp"
#include "tomseq/marks.hpp"

namespace tomseq {

enum class Family { S, A };

std::string_view family_name(Family f);  // "S" or "A"
/// Accepts "S"/"A" in either case; throws std::invalid_argument otherwise.
Family parse_family(std::string_view s);
Group family_group(Family f, std::size_t n);
/// n! for S, n!/2 for A (n >= 2). Throws std::overflow_error past 64 bits.
std::uint64_t family_order(Family f, std::size_t n);

// ---------------------------------------------------------------- golden data

struct GoldenTable {
  std::string table_id;
  Family family;
  std::string source;
  std::vector<std::string> columns;
  std::map<std::size_t, std::vector<std::int64_t>> rows;  // keyed by n

  const std::vector<std::int64_t>* row(std::size_t n) const;
};

/// Every reference table, read-only.
const std::vector<GoldenTable>& golden_registry();
const GoldenTable* find_golden(std::string_view table_id, Family f);
/// Known table ids in report order.
const std::vector<std::string>& table_ids();
/// Column names of a table (independent of whether reference data exists).
const std::vector<std::string>& table_columns(std::string_view table_id);
bool table_defined_for(std::string_view table_id, Family f);

// ---------------------------------------------------------------- group data

/// Everything the reports need about one group, computed by enumeration or
/// taken from an imported table of marks.
struct GroupData {
  Family family = Family::S;
  std::size_t n = 1;
  MarksTable marks;  // properties present unless imported without them
  /// Per-class connectivity of the representative; absent for imports.
  std::optional<std::vector<bool>> connected;
  bool imported = false;

  /// Per-class containment in A_n, read from the marks on G/A_n (S family).
  std::vector<bool> inside_alternating() const;
};

/// Enumerates. Throws BudgetExceeded when the group is larger than max_order.
GroupData compute_group_data(Family f, std::size_t n, std::size_t max_order = kDefaultOrderBudget,
                             unsigned threads = 1);
/// Wraps an imported table. Throws std::invalid_argument if its group order
/// does not match the family and degree.
GroupData imported_group_data(Family f, std::size_t n, MarksTable marks);

// ---------------------------------------------------------------- cache

/// Format tag mixed into every cache key.
inline constexpr std::string_view kCacheFormatVersion = "tomseq-cache-1";
inline constexpr const char* kCacheDirEnv = "TOMSEQ_CACHE_DIR";

/// flag > $TOMSEQ_CACHE_DIR > $XDG_CACHE_HOME/tomseq > $HOME/.cache/tomseq.
/// Empty when none applies.
std::filesystem::path resolve_cache_dir(const std::optional<std::filesystem::path>& flag);

/// Write-once-per-key store of GroupData. Writes go to a temporary file that
/// is renamed into place; unreadable or stale entries are ignored.
class GroupDataCache {
 public:
  explicit GroupDataCache(std::filesystem::path dir);
  std::filesystem::path entry_path(Family f, std::size_t n) const;
  std::optional<GroupData> load(Family f, std::size_t n) const;
  /// False if the entry could not be written; the cache is best-effort.
  bool store(const GroupData& d) const noexcept;

 private:
  std::filesystem::path dir_;
};

std::string group_data_to_json(const GroupData& d);
/// Throws std::invalid_argument on malformed input.
GroupData group_data_from_json(std::string_view text);

// ---------------------------------------------------------------- reports

inline constexpr std::string_view kRequiresImport = "requires import";

struct ReportCell {
  std::optional<std::int64_t> value;     // absent: requires import
  std::optional<std::int64_t> expected;  // absent: no reference value

  bool mismatch() const { return value && expected && *value != *expected; }
};

struct ReportTable {
  std::string table_id;
  Family family;
  std::vector<std::string> columns;
  std::map<std::size_t, std::vector<ReportCell>> rows;
};

struct Report {
  Family family = Family::S;
  std::size_t n_min = 1;
  std::size_t n_max = 1;
  std::vector<ReportTable> tables;

  std::size_t mismatch_count() const;
  std::size_t missing_count() const;
};

struct ReportOptions {
  Family family = Family::S;
  std::size_t n_min = 1;
  std::size_t n_max = 7;
  std::vector<std::string> tables;  // empty: every table defined for the family
  std::size_t max_order = kDefaultOrderBudget;
  unsigned threads = 1;
  /// Imported tables of marks, keyed by (family, n).
  std::map<std::pair<Family, std::size_t>, MarksTable> imported;
  std::optional<GroupDataCache> cache;
};

/// Throws std::invalid_argument for unknown or inapplicable table ids.
Report build_report(const ReportOptions& options);

enum class ReportFormat { csv, json, bfile };
ReportFormat parse_report_format(std::string_view s);

std::string render_csv(const Report& r);
std::string render_json(const Report& r);
/// One b-file per column, keyed by "<table>_<family>_<column>". Missing
/// cells end the file (b-files cannot have gaps).
std::map<std::string, std::string> render_bfiles(const Report& r);
/// Human-readable list of mismatches, one per line.
std::string describe_mismatches(const Report& r);

}  // namespace tomseq
