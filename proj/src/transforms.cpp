#include "tomseq/transforms.hpp"

#include <charconv>
#include <functional>
#include <ostream>
#include <sstream>
#include <vector>

namespace tomseq {

namespace {

using i128 = __int128;

std::int64_t to_i64(i128 v, const char* what) {
  if (v > INT64_MAX || v < INT64_MIN) throw std::overflow_error(std::string(what) + " overflows int64");
  return static_cast<std::int64_t>(v);
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b, const char* what) {
  return to_i64(static_cast<i128>(a) * b, what);
}

std::int64_t checked_add(std::int64_t a, std::int64_t b, const char* what) {
  return to_i64(static_cast<i128>(a) + b, what);
}

}  // namespace

NotAnEulerImage::NotAnEulerImage(std::size_t index, const std::string& detail)
    : std::domain_error("not an Euler transform of an integer sequence: c_" + std::to_string(index) + " " +
                        detail),
      index_(index) {}

int mobius(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("mobius: n must be positive");
  int mu = 1;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    n /= p;
    if (n % p == 0) return 0;
    mu = -mu;
  }
  return n > 1 ? -mu : mu;
}

std::int64_t multiset_coefficient(std::int64_t c, std::int64_t a) {
  if (c < 0 || a < 0) throw std::invalid_argument("multiset_coefficient: arguments must be non-negative");
  if (a == 0) return 1;
  if (c == 0) return 0;
  // r_k = binomial(c + k - 1, k) stays integral at every step.
  i128 r = 1;
  for (std::int64_t k = 1; k <= a; ++k) {
    r = r * (c + k - 1);
    if (r > static_cast<i128>(INT64_MAX) * k) throw std::overflow_error("multiset coefficient overflows int64");
    r /= k;
  }
  return to_i64(r, "multiset coefficient");
}

IntSeq euler_b_from_c(const IntSeq& c, std::size_t n) {
  std::vector<std::int64_t> b(n, 0);
  for (std::size_t d = 1; d <= n; ++d) {
    const auto dc = checked_mul(static_cast<std::int64_t>(d), c.term(d), "b_n");
    for (std::size_t k = d; k <= n; k += d) b[k - 1] = checked_add(b[k - 1], dc, "b_n");
  }
  return IntSeq(std::move(b), "b");
}

IntSeq euler_b_from_m(const IntSeq& m, std::size_t n) {
  std::vector<std::int64_t> b(n, 0);
  for (std::size_t k = 1; k <= n; ++k) {
    i128 v = static_cast<i128>(k) * m.term(k);
    for (std::size_t j = 1; j < k; ++j) v -= static_cast<i128>(b[j - 1]) * m.term(k - j);
    b[k - 1] = to_i64(v, "b_n");
  }
  return IntSeq(std::move(b), "b");
}

IntSeq euler_transform(const IntSeq& c, std::size_t n) {
  const IntSeq b = euler_b_from_c(c, n);
  std::vector<std::int64_t> m(n, 0);
  for (std::size_t k = 1; k <= n; ++k) {
    i128 v = b.values[k - 1];
    for (std::size_t j = 1; j < k; ++j) v += static_cast<i128>(b.values[j - 1]) * m[k - j - 1];
    if (v % static_cast<i128>(k) != 0)
      throw std::logic_error("euler_transform: non-integral m_" + std::to_string(k));
    m[k - 1] = to_i64(v / static_cast<i128>(k), "m_n");
  }
  return IntSeq(std::move(m), c.name.empty() ? std::string() : "euler(" + c.name + ")");
}

IntSeq inverse_euler_transform(const IntSeq& m, std::size_t n) {
  if (n >= 1 && m.term(1) < 0) throw NotAnEulerImage(1, "would be negative (m_1 < 0)");
  const IntSeq b = euler_b_from_m(m, n);
  std::vector<std::int64_t> c(n, 0);
  for (std::size_t k = 1; k <= n; ++k) {
    i128 v = 0;
    for (std::size_t d = 1; d <= k; ++d)
      if (k % d == 0) v += static_cast<i128>(mobius(k / d)) * b.values[d - 1];
    if (v % static_cast<i128>(k) != 0)
      throw NotAnEulerImage(k, "is not an integer (" + std::to_string(to_i64(v, "b")) + "/" +
                                   std::to_string(k) + ")");
    c[k - 1] = to_i64(v / static_cast<i128>(k), "c_n");
  }
  return IntSeq(std::move(c), m.name.empty() ? std::string() : "inverse_euler(" + m.name + ")");
}

IntSeq euler_transform_by_partitions(const IntSeq& c, std::size_t n) {
  std::vector<std::int64_t> m(n, 0);
  for (std::size_t total = 1; total <= n; ++total) {
    i128 sum = 0;
    // Choose a multiplicity a_i for each part size i, largest first.
    std::function<void(std::size_t, std::size_t, i128)> rec = [&](std::size_t part, std::size_t left,
                                                                  i128 product) {
      if (left == 0) {
        sum += product;
        return;
      }
      if (part == 0) return;
      for (std::size_t a = 0; a * part <= left; ++a) {
        const i128 next = product * multiset_coefficient(c.term(part), static_cast<std::int64_t>(a));
        to_i64(next, "partition-sum term");
        if (next == 0 && a > 0) break;
        rec(part - 1, left - a * part, next);
      }
    };
    rec(total, total, 1);
    m[total - 1] = to_i64(sum, "m_n");
  }
  return IntSeq(std::move(m));
}

// ---------------------------------------------------------------- I/O

namespace {

std::vector<std::string_view> data_lines(std::string_view text) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (start < text.size()) {
    auto end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    const auto first = line.find_first_not_of(" \t\r");
    if (first != std::string_view::npos && line[first] != '#') {
      const auto last = line.find_last_not_of(" \t\r");
      out.push_back(line.substr(first, last - first + 1));
    }
    start = end + 1;
  }
  return out;
}

std::int64_t parse_int(std::string_view tok) {
  if (!tok.empty() && tok.front() == '+') tok.remove_prefix(1);
  std::int64_t v{};
  auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec == std::errc::result_out_of_range) throw std::overflow_error("value '" + std::string(tok) + "' overflows int64");
  if (ec != std::errc{} || p != tok.data() + tok.size())
    throw SequenceFormatError("not an integer: '" + std::string(tok) + "'");
  return v;
}

std::vector<std::string_view> tokens(std::string_view line, std::string_view seps) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    const auto start = line.find_first_not_of(seps, i);
    if (start == std::string_view::npos) break;
    auto end = line.find_first_of(seps, start);
    if (end == std::string_view::npos) end = line.size();
    out.push_back(line.substr(start, end - start));
    i = end;
  }
  return out;
}

}  // namespace

IntSeq read_bfile(std::string_view text) {
  std::vector<std::int64_t> values;
  for (auto line : data_lines(text)) {
    const auto t = tokens(line, " \t\r");
    if (t.size() != 2) throw SequenceFormatError("b-file line must be '<index> <value>': '" + std::string(line) + "'");
    const auto index = parse_int(t[0]);
    if (index != static_cast<std::int64_t>(values.size()) + 1)
      throw SequenceFormatError("b-file indices must run 1, 2, 3, ...; got " + std::to_string(index) +
                                " where " + std::to_string(values.size() + 1) + " was expected");
    values.push_back(parse_int(t[1]));
  }
  return IntSeq(std::move(values));
}

IntSeq read_csv(std::string_view text) {
  const auto lines = data_lines(text);
  if (lines.size() > 1) throw SequenceFormatError("CSV sequence must be a single line");
  std::vector<std::int64_t> values;
  if (lines.empty()) return IntSeq(std::move(values));
  std::vector<std::string_view> fields;
  for (std::string_view line = lines.front();;) {
    const auto comma = line.find(',');
    fields.push_back(line.substr(0, comma));
    if (comma == std::string_view::npos) break;
    line.remove_prefix(comma + 1);
  }
  for (auto field : fields) {
    const auto first = field.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) throw SequenceFormatError("empty CSV field");
    const auto last = field.find_last_not_of(" \t\r");
    values.push_back(parse_int(field.substr(first, last - first + 1)));
  }
  return IntSeq(std::move(values));
}

SequenceFormat detect_format(std::string_view text) {
  for (auto line : data_lines(text))
    if (line.find(',') != std::string_view::npos || tokens(line, " \t\r").size() == 1)
      return SequenceFormat::csv;
  return SequenceFormat::bfile;
}

IntSeq read_sequence(std::string_view text, SequenceFormat format) {
  return format == SequenceFormat::csv ? read_csv(text) : read_bfile(text);
}

IntSeq read_sequence(std::string_view text) { return read_sequence(text, detect_format(text)); }

void write_bfile(std::ostream& out, const IntSeq& s) {
  for (std::size_t k = 1; k <= s.size(); ++k) out << k << ' ' << s.term(k) << '\n';
}

void write_csv(std::ostream& out, const IntSeq& s) {
  for (std::size_t k = 1; k <= s.size(); ++k) out << (k > 1 ? "," : "") << s.term(k);
  out << '\n';
}

std::string format_sequence(const IntSeq& s, SequenceFormat format) {
  std::ostringstream os;
  if (format == SequenceFormat::csv)
    write_csv(os, s);
  else
    write_bfile(os, s);
  return os.str();
}

}  // namespace tomseq
