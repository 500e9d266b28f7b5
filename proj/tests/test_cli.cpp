#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <unistd.h>
#include <sstream>

#include "tomseq/cli.hpp"

namespace fs = std::filesystem;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "tomseq");
  std::ostringstream out, err;
  const int code = tomseq::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

fs::path scratch(const std::string& name) {
  const auto dir = fs::temp_directory_path() / ("tomseq-cli-" + std::to_string(::getpid()));
  fs::create_directories(dir);
  return dir / name;
}

void write_file(const fs::path& p, const std::string& text) { std::ofstream(p, std::ios::binary) << text; }

std::string read_file(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

}  // namespace

TEST(Cli, ReportClassCounts) {
  const auto r = run({"report", "--family", "S", "--max-n", "6", "--tables", "classcounts", "--no-cache"});
  EXPECT_EQ(r.code, tomseq::cli::kExitOk) << r.err;
  EXPECT_NE(r.out.find("classcounts,S,6,56,"), std::string::npos);
}

TEST(Cli, ReportAlternatingTotalsAsJson) {
  const auto r = run({"report", "--family", "A", "--max-n", "5", "--tables", "totals", "--format", "json", "--no-cache"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("\"mismatches\": []"), std::string::npos);
}

TEST(Cli, ReportBfilesIntoDirectory) {
  const auto dir = scratch("bfiles");
  const auto r = run({"report", "--max-n", "1", "--tables", "edges", "--format", "bfile", "-o", dir.string(), "--no-cache"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(read_file(dir / "edges_S_poset.txt"), "1 0\n");
  EXPECT_EQ(read_file(dir / "edges_S_lattice.txt"), "1 0\n");
}

TEST(Cli, BudgetRefusal) {
  const auto r = run({"report", "--min-n", "8", "--max-n", "8", "--tables", "totals", "--no-cache"});
  EXPECT_EQ(r.code, tomseq::cli::kExitBudget);
  EXPECT_NE(r.out.find("requires import"), std::string::npos);
  EXPECT_NE(r.err.find("--tom"), std::string::npos);
  EXPECT_EQ(run({"tom", "export", "--n", "8"}).code, tomseq::cli::kExitBudget);
}

TEST(Cli, BadInputs) {
  EXPECT_EQ(run({}).code, tomseq::cli::kExitInput);
  EXPECT_EQ(run({"report", "--family", "Q", "--no-cache"}).code, tomseq::cli::kExitInput);
  EXPECT_EQ(run({"report", "--format", "xml", "--max-n", "2", "--no-cache"}).code, tomseq::cli::kExitInput);
  EXPECT_EQ(run({"report", "--tables", "bogus", "--no-cache"}).code, tomseq::cli::kExitInput);
  EXPECT_EQ(run({"tom", "import", scratch("missing.tom").string()}).code, tomseq::cli::kExitInput);
  EXPECT_EQ(run({"--help"}).code, tomseq::cli::kExitOk);
}

TEST(Cli, TransformInverseCsv) {
  const auto in = scratch("classes.csv");
  write_file(in, "1,2,4,11,19,56\n");
  const auto r = run({"transform", "--direction", "inverse", in.string()});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out, "1,1,2,6,6,27\n");
}

TEST(Cli, TransformEulerBfileRoundTrip) {
  const auto in = scratch("c.b");
  const auto mid = scratch("m.b");
  write_file(in, "1 1\n2 0\n3 0\n4 0\n");
  ASSERT_EQ(run({"transform", "--direction", "euler", in.string(), "-o", mid.string()}).code, 0);
  EXPECT_EQ(read_file(mid), "1 1\n2 1\n3 1\n4 1\n");
  const auto back = run({"transform", "--direction", "inverse", mid.string()});
  EXPECT_EQ(back.out, read_file(in));
}

TEST(Cli, TransformReportsBadIndex) {
  const auto in = scratch("bad.csv");
  write_file(in, "-1,1\n");
  const auto r = run({"transform", "--direction", "inverse", in.string()});
  EXPECT_EQ(r.code, tomseq::cli::kExitInput);
  EXPECT_NE(r.err.find("c_1"), std::string::npos) << r.err;
  write_file(in, "1 2\n3 4\n");
  EXPECT_EQ(run({"transform", in.string()}).code, tomseq::cli::kExitInput);
}

TEST(Cli, TomExportImportVerify) {
  const auto path = scratch("S4.tom");
  ASSERT_EQ(run({"tom", "export", "--family", "S", "--n", "4", "-o", path.string()}).code, 0);
  const auto imp = run({"tom", "import", path.string()});
  EXPECT_EQ(imp.code, 0) << imp.err;
  EXPECT_NE(imp.out.find("total_subgroups 30\n"), std::string::npos);
  EXPECT_NE(imp.out.find("sum_of_marks 146\n"), std::string::npos);
  EXPECT_NE(imp.out.find("diagonal_sum 47\n"), std::string::npos);
  const auto ver = run({"tom", "verify", path.string()});
  EXPECT_EQ(ver.code, 0) << ver.err;
  EXPECT_NE(ver.out.find("verified against reference values"), std::string::npos);
}

TEST(Cli, CorruptedDiagonalIsRejected) {
  const auto path = scratch("S3.tom");
  ASSERT_EQ(run({"tom", "export", "--n", "3", "-o", path.string()}).code, 0);
  std::string text = read_file(path);
  const auto pos = text.find("ROW 2: 3 1");
  ASSERT_NE(pos, std::string::npos) << text;
  text.replace(pos, 10, "ROW 2: 3 3");
  write_file(path, text);
  const auto r = run({"tom", "import", path.string()});
  EXPECT_EQ(r.code, tomseq::cli::kExitInput);
  EXPECT_NE(r.err.find("normalizer"), std::string::npos) << r.err;
}

TEST(Cli, VerifyReportsMismatch) {
  // The cyclic group of order 6 has the order of S_3 but not its subgroups.
  const auto path = scratch("C6.tom");
  write_file(path,
             "TOM S3 4\n"
             "CLASS 1 order=1 length=1 label=1\nCLASS 2 order=2 length=1 label=2\n"
             "CLASS 3 order=3 length=1 label=3\nCLASS 4 order=6 length=1 label=6\n"
             "ROW 1: 6\nROW 2: 3 3\nROW 3: 2 0 2\nROW 4: 1 1 1 1\n");
  const auto r = run({"tom", "verify", path.string()});
  EXPECT_EQ(r.code, tomseq::cli::kExitMismatch);
  EXPECT_NE(r.err.find("totals S n=3 subgroups: computed 4, expected 6"), std::string::npos) << r.err;
  const auto rep = run({"report", "--max-n", "3", "--tables", "totals", "--tom", path.string(), "--no-cache"});
  EXPECT_EQ(rep.code, tomseq::cli::kExitMismatch);
}

TEST(Cli, Partitions) {
  auto r = run({"partitions", "--n", "13", "--connected"});
  EXPECT_EQ(r.out, "3\n");
  r = run({"partitions", "--n", "13", "--connected", "--list"});
  EXPECT_NE(r.out.find("[6,4,3]\n"), std::string::npos);
  EXPECT_EQ(run({"partitions", "--n", "5", "--connected"}).out, "1\n");
  EXPECT_EQ(run({"partitions", "--n", "1", "--connected", "--even"}).out, "1\n");
  EXPECT_EQ(run({"partitions", "--n", "5"}).out, "7\n");
  EXPECT_EQ(run({"partitions", "--n", "8", "--connected", "--even", "--sequence"}).out, "1,0,1,1,1,2,1,3\n");
  EXPECT_EQ(run({"partitions", "--n", "0"}).code, tomseq::cli::kExitInput);
}
