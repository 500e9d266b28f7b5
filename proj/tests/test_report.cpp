#include <gtest/gtest.h>

#include <cstdlib>
#include <fstream>
#include <unistd.h>
#include <json.hpp>

#include "tomseq/report.hpp"

using namespace tomseq;
namespace fs = std::filesystem;

namespace {

fs::path fresh_dir(const std::string& name) {
  const auto dir = fs::temp_directory_path() / ("tomseq-test-" + name + "-" + std::to_string(::getpid()));
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

ReportOptions options(Family f, std::size_t n_max, std::vector<std::string> tables) {
  ReportOptions o;
  o.family = f;
  o.n_max = n_max;
  o.tables = std::move(tables);
  return o;
}

class ScopedEnv {
 public:
  ScopedEnv(const char* name, const char* value) : name_(name) {
    if (const char* old = std::getenv(name)) old_ = old;
    if (value)
      ::setenv(name, value, 1);
    else
      ::unsetenv(name);
  }
  ~ScopedEnv() {
    if (old_)
      ::setenv(name_, old_->c_str(), 1);
    else
      ::unsetenv(name_);
  }

 private:
  const char* name_;
  std::optional<std::string> old_;
};

}  // namespace

TEST(Registry, SpotValues) {
  const auto* totals = find_golden("totals", Family::S);
  ASSERT_NE(totals, nullptr);
  EXPECT_EQ(*totals->row(4), (std::vector<std::int64_t>{30}));
  EXPECT_EQ(totals->row(14), nullptr);
  EXPECT_EQ(*find_golden("classcounts", Family::S)->row(4), (std::vector<std::int64_t>{11, 7, 5, 8, 11, 9}));
  EXPECT_EQ(*find_golden("totals", Family::A)->row(5), (std::vector<std::int64_t>{59}));
  EXPECT_EQ(*find_golden("edges", Family::S)->row(1), (std::vector<std::int64_t>{0, 0}));
  EXPECT_FALSE(table_defined_for("redblue", Family::A));
  EXPECT_TRUE(table_defined_for("connseq", Family::A));
  for (const auto& g : golden_registry())
    for (const auto& [n, row] : g.rows) EXPECT_EQ(row.size(), g.columns.size()) << g.table_id << " n=" << n;
}

TEST(Families, Basics) {
  EXPECT_EQ(parse_family("s"), Family::S);
  EXPECT_EQ(parse_family("A"), Family::A);
  EXPECT_THROW(parse_family("D"), std::invalid_argument);
  EXPECT_EQ(family_order(Family::A, 5), 60u);
  EXPECT_EQ(family_order(Family::A, 1), 1u);
  EXPECT_EQ(family_group(Family::S, 3).order(), 6u);
}

TEST(Report, SmallDegreesMatchReferenceValues) {
  for (Family f : {Family::S, Family::A}) {
    auto o = options(f, 5, {});
    // The published totals of maximal property-P subgroups of A_n cannot be
    // reproduced under any reading; see the README.
    if (f == Family::A) {
      for (const auto& id : table_ids())
        if (id != "maxtotals" && table_defined_for(id, f)) o.tables.push_back(id);
    }
    const Report r = build_report(o);
    EXPECT_EQ(r.missing_count(), 0u) << family_name(f);
    EXPECT_EQ(r.mismatch_count(), 0u) << describe_mismatches(r);
  }
}

TEST(Report, PublishedAlternatingMaxTotalsDisagree) {
  const Report r = build_report(options(Family::A, 3, {"maxtotals"}));
  EXPECT_EQ(r.tables[0].rows.at(3)[0].value, 1);
  EXPECT_EQ(r.tables[0].rows.at(3)[0].expected, 3);
}

TEST(Report, BeyondBudgetRequiresImport) {
  auto o = options(Family::S, 3, {"totals", "connseq"});
  o.max_order = 2;
  const Report r = build_report(o);
  ASSERT_EQ(r.tables.size(), 2u);
  EXPECT_TRUE(r.tables[0].rows.at(2)[0].value.has_value());
  EXPECT_FALSE(r.tables[0].rows.at(3)[0].value.has_value());
  // The partition columns never need a group.
  EXPECT_EQ(r.tables[1].rows.at(3)[3].value, 1);
  EXPECT_NE(render_csv(r).find("totals,S,3,requires import"), std::string::npos);
  EXPECT_GT(r.missing_count(), 0u);
}

TEST(Report, ImportedTablesFillCells) {
  auto o = options(Family::S, 4, {"totals", "classcounts", "connected"});
  o.max_order = 0;
  for (std::size_t n = 1; n <= 4; ++n) o.imported[{Family::S, n}] = compute_group_data(Family::S, n).marks;
  const Report r = build_report(o);
  EXPECT_EQ(r.missing_count(), 0u);
  EXPECT_EQ(r.mismatch_count(), 0u) << describe_mismatches(r);
  // Connected counts come from the class counts by the inverse transform.
  EXPECT_EQ(r.tables[2].rows.at(4)[1].value, find_golden("connected", Family::S)->row(4)->at(1));
}

TEST(Report, ImportWithWrongOrderIsRejected) {
  auto o = options(Family::S, 4, {"totals"});
  o.imported[{Family::S, 4}] = compute_group_data(Family::A, 4).marks;
  EXPECT_THROW(build_report(o), std::invalid_argument);
}

TEST(Report, ConnectedAlternatingNeedsDirectData) {
  auto o = options(Family::A, 4, {"connected"});
  o.max_order = 0;
  o.imported[{Family::A, 4}] = compute_group_data(Family::A, 4).marks;
  const Report r = build_report(o);
  EXPECT_TRUE(r.tables[0].rows.at(4)[0].value.has_value());
  EXPECT_FALSE(r.tables[0].rows.at(4)[1].value.has_value());
}

TEST(Report, UnknownTables) {
  EXPECT_THROW(build_report(options(Family::S, 3, {"nope"})), std::invalid_argument);
  EXPECT_THROW(build_report(options(Family::A, 3, {"redblue"})), std::invalid_argument);
  auto o = options(Family::S, 3, {"totals"});
  o.n_min = 0;
  EXPECT_THROW(build_report(o), std::invalid_argument);
}

TEST(Render, CsvJsonAndBfiles) {
  const Report r = build_report(options(Family::S, 4, {"totals", "edges"}));
  const auto csv = render_csv(r);
  EXPECT_EQ(csv.substr(0, csv.find('\n')), "table,family,n,subgroups");
  EXPECT_NE(csv.find("totals,S,4,30\n\ntable,family,n,poset,lattice\n"), std::string::npos);

  const auto j = nlohmann::json::parse(render_json(r));
  EXPECT_EQ(j["family"], "S");
  EXPECT_EQ(j["tables"][0]["id"], "totals");
  EXPECT_EQ(j["tables"][0]["rows"][3]["values"][0], 30);
  EXPECT_TRUE(j["mismatches"].empty());

  const auto files = render_bfiles(r);
  EXPECT_EQ(files.at("totals_S_subgroups"), "1 1\n2 2\n3 6\n4 30\n");
  EXPECT_EQ(files.size(), 3u);
}

TEST(Render, MismatchesAreListed) {
  Report r = build_report(options(Family::S, 3, {"totals"}));
  r.tables[0].rows.at(3)[0].value = 7;
  EXPECT_EQ(r.mismatch_count(), 1u);
  EXPECT_EQ(describe_mismatches(r), "totals S n=3 subgroups: computed 7, expected 6\n");
  const auto j = nlohmann::json::parse(render_json(r));
  EXPECT_EQ(j["mismatches"][0]["expected"], 6);
}

TEST(Cache, RoundTrip) {
  const auto dir = fresh_dir("roundtrip");
  const GroupDataCache cache(dir);
  EXPECT_EQ(cache.entry_path(Family::A, 5).filename(), "A5-tomseq-cache-1.json");
  EXPECT_FALSE(cache.load(Family::S, 4).has_value());
  const auto d = compute_group_data(Family::S, 4);
  ASSERT_TRUE(cache.store(d));
  const auto back = cache.load(Family::S, 4);
  ASSERT_TRUE(back.has_value());
  EXPECT_EQ(back->marks.beta, d.marks.beta);
  EXPECT_EQ(back->marks.properties, d.marks.properties);
  EXPECT_EQ(back->connected, d.connected);
  EXPECT_FALSE(cache.load(Family::S, 5).has_value());
  fs::remove_all(dir);
}

TEST(Cache, CorruptEntriesAreIgnored) {
  const auto dir = fresh_dir("corrupt");
  const GroupDataCache cache(dir);
  const auto write = [&](const std::string& text) { std::ofstream(cache.entry_path(Family::S, 3)) << text; };
  write("{ not json");
  EXPECT_FALSE(cache.load(Family::S, 3).has_value());
  auto j = nlohmann::json::parse(group_data_to_json(compute_group_data(Family::S, 3)));
  j["format"] = "tomseq-cache-0";
  write(j.dump());
  EXPECT_FALSE(cache.load(Family::S, 3).has_value());
  j["format"] = std::string(kCacheFormatVersion);
  j["n"] = 4;
  write(j.dump());
  EXPECT_FALSE(cache.load(Family::S, 3).has_value());
  // A report still succeeds and repairs the entry.
  auto o = options(Family::S, 3, {"totals"});
  o.cache.emplace(dir);
  EXPECT_EQ(build_report(o).mismatch_count(), 0u);
  EXPECT_TRUE(cache.load(Family::S, 3).has_value());
  fs::remove_all(dir);
}

TEST(Cache, ImportedDataIsNotStored) {
  const auto dir = fresh_dir("imported");
  const GroupDataCache cache(dir);
  EXPECT_FALSE(cache.store(imported_group_data(Family::S, 3, compute_group_data(Family::S, 3).marks)));
  EXPECT_FALSE(GroupDataCache(fs::path()).store(compute_group_data(Family::S, 2)));
  fs::remove_all(dir);
}

TEST(Cache, DirectoryPrecedence) {
  ScopedEnv env(kCacheDirEnv, "/tmp/from-env");
  ScopedEnv xdg("XDG_CACHE_HOME", "/tmp/xdg");
  ScopedEnv home("HOME", "/tmp/home");
  EXPECT_EQ(resolve_cache_dir(fs::path("/tmp/flag")), fs::path("/tmp/flag"));
  EXPECT_EQ(resolve_cache_dir(std::nullopt), fs::path("/tmp/from-env"));
  {
    ScopedEnv unset(kCacheDirEnv, nullptr);
    EXPECT_EQ(resolve_cache_dir(std::nullopt), fs::path("/tmp/xdg/tomseq"));
    ScopedEnv unset_xdg("XDG_CACHE_HOME", nullptr);
    EXPECT_EQ(resolve_cache_dir(std::nullopt), fs::path("/tmp/home/.cache/tomseq"));
  }
}

TEST(GroupDataTest, InsideAlternatingFromMarks) {
  const auto d = compute_group_data(Family::S, 5);
  const auto inside = d.inside_alternating();
  EXPECT_EQ(std::count(inside.begin(), inside.end(), true), 9);
  const auto a = compute_group_data(Family::A, 5);
  const auto all = a.inside_alternating();
  EXPECT_EQ(std::count(all.begin(), all.end(), true), static_cast<long>(a.marks.size()));
}
