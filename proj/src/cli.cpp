#include "tomseq/cli.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <regex>
#include <sstream>

#include <CLI11.hpp>

#include "tomseq/connectivity.hpp"
#include "tomseq/marks.hpp"
#include "tomseq/report.hpp"
#include "tomseq/transforms.hpp"

namespace tomseq::cli {

namespace {

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    return buf.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_output(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f || !(f << text)) throw InputError("cannot write '" + path + "'");
}

// "S8" -> (S, 8)
std::optional<std::pair<Family, std::size_t>> family_of_name(const std::string& name) {
  static const std::regex re("^([SsAa])([0-9]{1,2})$");
  std::smatch m;
  if (!std::regex_match(name, m, re)) return std::nullopt;
  const auto n = static_cast<std::size_t>(std::stoul(m[2].str()));
  if (n == 0) return std::nullopt;
  return std::make_pair(parse_family(m[1].str()), n);
}

std::size_t budget(bool allow_large, std::ostream& err) {
  if (!allow_large) return kDefaultOrderBudget;
  err << "warning: enumeration budget raised to " << kLargeOrderBudget
      << " elements; degree-8 symmetric groups take minutes and gigabytes\n";
  return kLargeOrderBudget;
}

void print_summary(const MarksTable& mt, std::ostream& out) {
  const MarksSummary s = summarize(mt);
  out << "name " << mt.name << '\n'
      << "classes " << mt.size() << '\n'
      << "group_order " << mt.group_order << '\n'
      << "total_subgroups " << s.total_subgroups << '\n'
      << "sum_of_marks " << s.sum_of_marks << '\n'
      << "diagonal_sum " << s.diagonal_sum << '\n'
      << "poset_incidences " << s.poset_incidences << '\n'
      << "lattice_incidences " << s.lattice_incidences << '\n'
      << "poset_edges " << s.poset_edges << '\n'
      << "lattice_edges " << s.lattice_edges << '\n';
}

// ---------------------------------------------------------------- report

struct ReportArgs {
  std::string family = "S";
  std::size_t min_n = 1;
  std::size_t max_n = 7;
  std::vector<std::string> tables;
  std::string format = "csv";
  std::string output;
  std::vector<std::string> tom_files;
  std::string cache_dir;
  bool no_cache = false;
  bool allow_large = false;
  unsigned threads = 1;
};

int cmd_report(const ReportArgs& a, std::ostream& out, std::ostream& err) {
  ReportOptions o;
  o.family = parse_family(a.family);
  o.n_min = a.min_n;
  o.n_max = a.max_n;
  for (const auto& t : a.tables) {
    std::stringstream ss(t);
    for (std::string id; std::getline(ss, id, ',');)
      if (!id.empty()) o.tables.push_back(id);
  }
  o.max_order = budget(a.allow_large, err);
  o.threads = a.threads;
  for (const auto& path : a.tom_files) {
    MarksTable mt;
    try {
      mt = parse_tom_text(read_input(path));
    } catch (const InvalidMarksTable& e) {
      throw InputError(path + ": " + e.what());
    }
    const auto key = family_of_name(mt.name);
    if (!key) throw InputError(path + ": table name '" + mt.name + "' must look like S8 or A10");
    imported_group_data(key->first, key->second, mt);  // checks the group order
    o.imported[*key] = std::move(mt);
  }
  if (!a.no_cache) {
    const auto dir = resolve_cache_dir(a.cache_dir.empty() ? std::nullopt
                                                           : std::optional<std::filesystem::path>(a.cache_dir));
    if (!dir.empty()) o.cache.emplace(dir);
  }
  const ReportFormat format = parse_report_format(a.format);
  const Report r = build_report(o);

  if (format == ReportFormat::bfile) {
    const auto files = render_bfiles(r);
    if (a.output.empty() || a.output == "-") {
      for (const auto& [key, text] : files) out << "# " << key << '\n' << text;
    } else {
      std::filesystem::create_directories(a.output);
      for (const auto& [key, text] : files) write_output((std::filesystem::path(a.output) / (key + ".txt")).string(), text, out);
    }
  } else {
    write_output(a.output, format == ReportFormat::csv ? render_csv(r) : render_json(r), out);
  }

  if (r.mismatch_count() > 0) {
    err << describe_mismatches(r) << r.mismatch_count() << " cell(s) differ from the reference values\n";
    return kExitMismatch;
  }
  if (r.missing_count() > 0) {
    err << r.missing_count() << " cell(s) exceed the enumeration budget of " << o.max_order
        << " elements; supply tables of marks with --tom\n";
    return kExitBudget;
  }
  return kExitOk;
}

// ---------------------------------------------------------------- transform

int cmd_transform(const std::string& direction, const std::string& input, std::size_t terms,
                  const std::string& output, std::ostream& out) {
  const std::string text = read_input(input);
  IntSeq s;
  SequenceFormat fmt;
  try {
    fmt = detect_format(text);
    s = read_sequence(text, fmt);
  } catch (const SequenceFormatError& e) {
    throw InputError(input + ": " + e.what());
  }
  const std::size_t n = terms ? terms : s.size();
  IntSeq result;
  try {
    result = direction == "euler" ? euler_transform(s, n) : inverse_euler_transform(s, n);
  } catch (const NotAnEulerImage& e) {
    throw InputError(e.what());
  }
  write_output(output, format_sequence(result, fmt), out);
  return kExitOk;
}

// ---------------------------------------------------------------- tom

int cmd_tom_export(const std::string& family, std::size_t n, const std::string& output, bool allow_large,
                   unsigned threads, std::ostream& out, std::ostream& err) {
  const Family f = parse_family(family);
  GroupData d;
  try {
    d = compute_group_data(f, n, budget(allow_large, err), threads);
  } catch (const BudgetExceeded& e) {
    err << "error: " << e.what() << '\n';
    return kExitBudget;
  }
  write_output(output, to_tom_text(d.marks), out);
  return kExitOk;
}

int cmd_tom_check(const std::string& path, bool verify, std::ostream& out, std::ostream& err) {
  MarksTable mt;
  try {
    mt = parse_tom_text(read_input(path));
  } catch (const InvalidMarksTable& e) {
    throw InputError(path + ": " + e.what());
  }
  print_summary(mt, out);
  if (!verify) return kExitOk;

  const auto key = family_of_name(mt.name);
  if (!key) {
    out << "no reference values for '" << mt.name << "'\n";
    return kExitOk;
  }
  ReportOptions o;
  o.family = key->first;
  o.n_min = o.n_max = key->second;
  o.tables = {"totals", "sums", "incidences", "edges"};
  if (mt.properties)
    for (const char* id : {"classcounts", "maxprop", "maxtotals", "subtotals"}) o.tables.push_back(id);
  o.imported[*key] = mt;
  o.max_order = 0;  // never enumerate here
  const Report r = build_report(o);
  if (r.mismatch_count() > 0) {
    err << describe_mismatches(r);
    return kExitMismatch;
  }
  bool any_reference = false;
  for (const auto& t : r.tables)
    for (const auto& [n, cells] : t.rows)
      for (const auto& c : cells) any_reference |= c.expected.has_value();
  out << (any_reference ? "verified against reference values\n" : "no reference values for this group\n");
  return kExitOk;
}

// ---------------------------------------------------------------- partitions

int cmd_partitions(std::size_t n, bool connected, bool even, bool list, bool sequence, std::ostream& out) {
  if (n == 0) throw InputError("n must be at least 1");
  const auto nn = static_cast<std::uint32_t>(n);
  if (sequence) {
    if (!connected) throw InputError("--sequence needs --connected");
    write_csv(out, connected_partition_counts(nn, even));
    return kExitOk;
  }
  if (list) {
    std::vector<Partition> parts = connected ? connected_partitions(nn, even) : partitions_of(nn);
    if (!connected && even) std::erase_if(parts, [](const Partition& p) { return !is_even_partition(p); });
    for (const auto& p : parts)
      out << p.to_string() << (connected && even && splits_in_alternating(p) ? " x2" : "") << '\n';
    return kExitOk;
  }
  if (connected) {
    out << connected_partition_count(nn, even) << '\n';
  } else {
    auto parts = partitions_of(nn);
    out << (even ? std::count_if(parts.begin(), parts.end(), is_even_partition)
                 : static_cast<std::ptrdiff_t>(parts.size()))
        << '\n';
  }
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Subgroup lattices, tables of marks and integer sequences of S_n and A_n", "tomseq"};
  app.require_subcommand(1);

  ReportArgs ra;
  auto* report = app.add_subcommand("report", "Compute sequence tables and compare with reference values");
  report->add_option("--family", ra.family, "S or A")->capture_default_str();
  report->add_option("--min-n", ra.min_n, "First degree")->capture_default_str();
  report->add_option("--max-n", ra.max_n, "Last degree")->capture_default_str();
  report->add_option("--tables", ra.tables, "Table ids, comma separated (default: all)");
  report->add_option("--format", ra.format, "csv, json or bfile")->capture_default_str();
  report->add_option("-o,--output", ra.output, "Output file (directory for bfile)");
  report->add_option("--tom", ra.tom_files, "Imported tom-text files named S<n> or A<n>");
  report->add_option("--cache-dir", ra.cache_dir, "Cache directory (overrides TOMSEQ_CACHE_DIR)");
  report->add_flag("--no-cache", ra.no_cache, "Do not read or write the cache");
  report->add_flag("--allow-large", ra.allow_large, "Raise the enumeration budget to 40320 elements");
  report->add_option("--threads", ra.threads, "Worker threads for tables of marks")->capture_default_str();

  std::string direction = "inverse", input = "-", t_output;
  std::size_t terms = 0;
  auto* transform = app.add_subcommand("transform", "Euler or inverse Euler transform of a b-file or CSV");
  transform->add_option("--direction", direction, "euler or inverse")
      ->check(CLI::IsMember({"euler", "inverse"}))
      ->capture_default_str();
  transform->add_option("input", input, "Input file, - for stdin")->capture_default_str();
  transform->add_option("--terms", terms, "Number of output terms (default: input length)");
  transform->add_option("-o,--output", t_output, "Output file");

  auto* tom = app.add_subcommand("tom", "Export, import or verify tom-text tables of marks");
  tom->require_subcommand(1);
  std::string x_family = "S", x_output, tom_path;
  std::size_t x_n = 4;
  bool x_large = false;
  unsigned x_threads = 1;
  auto* tom_export = tom->add_subcommand("export", "Compute and write a table of marks");
  tom_export->add_option("--family", x_family, "S or A")->capture_default_str();
  tom_export->add_option("--n", x_n, "Degree")->required();
  tom_export->add_option("-o,--output", x_output, "Output file");
  tom_export->add_flag("--allow-large", x_large, "Raise the enumeration budget to 40320 elements");
  tom_export->add_option("--threads", x_threads, "Worker threads")->capture_default_str();
  auto* tom_import = tom->add_subcommand("import", "Validate a table of marks and print derived counts");
  tom_import->add_option("path", tom_path, "tom-text file, - for stdin")->required();
  auto* tom_verify = tom->add_subcommand("verify", "As import, then compare with reference values");
  tom_verify->add_option("path", tom_path, "tom-text file, - for stdin")->required();

  std::size_t p_n = 1;
  bool p_connected = false, p_even = false, p_list = false, p_sequence = false;
  auto* partitions = app.add_subcommand("partitions", "Count or list (connected) partitions of n");
  partitions->add_option("--n", p_n, "n")->required();
  partitions->add_flag("--connected", p_connected, "Only partitions whose non-coprimality graph is connected");
  partitions->add_flag("--even", p_even, "Only cycle types of even permutations (A_n-classes when connected)");
  partitions->add_flag("--list", p_list, "List the partitions");
  partitions->add_flag("--sequence", p_sequence, "Print counts for 1..n as CSV");

  // CLI11 consumes arguments from the back.
  std::vector<std::string> reversed(args.begin() + (args.empty() ? 0 : 1), args.end());
  std::reverse(reversed.begin(), reversed.end());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInput;
  }

  try {
    if (*report) return cmd_report(ra, out, err);
    if (*transform) return cmd_transform(direction, input, terms, t_output, out);
    if (*tom_export) return cmd_tom_export(x_family, x_n, x_output, x_large, x_threads, out, err);
    if (*tom_import) return cmd_tom_check(tom_path, false, out, err);
    if (*tom_verify) return cmd_tom_check(tom_path, true, out, err);
    if (*partitions) return cmd_partitions(p_n, p_connected, p_even, p_list, p_sequence, out);
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const BudgetExceeded& e) {
    err << "error: " << e.what() << '\n';
    return kExitBudget;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const std::overflow_error& e) {
    err << "error: " << e.what() << '\n';
    return kExitInput;
  }
  return kExitInput;
}

}  // namespace tomseq::cli
