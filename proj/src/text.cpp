#include "schur_ohno/text.hpp"

#include <charconv>
#include <iomanip>
#include <locale>
#include <sstream>

#include "schur_ohno/error.hpp"

namespace schur_ohno {

namespace {

std::string_view trim(std::string_view s) {
  const auto ws = " \t\r\n";
  const auto b = s.find_first_not_of(ws);
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(ws);
  return s.substr(b, e - b + 1);
}

int parse_int(std::string_view s) {
  s = trim(s);
  int v = 0;
  const auto* end = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(s.data(), end, v);
  if (s.empty() || ec != std::errc() || ptr != end) {
    throw InvalidArgument("not an integer: '" + std::string(s) + "'");
  }
  return v;
}

double parse_double(std::string_view s) {
  s = trim(s);
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  double v = 0.0;
  const auto* end = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(s.data(), end, v);
  if (s.empty() || ec != std::errc() || ptr != end) {
    throw InvalidArgument("not a number: '" + std::string(s) + "'");
  }
  return v;
}

std::vector<int> parse_list(std::string_view text, char sep) {
  std::vector<int> out;
  text = trim(text);
  if (text.empty()) return out;
  std::size_t start = 0;
  while (true) {
    const auto pos = text.find(sep, start);
    out.push_back(parse_int(text.substr(start, pos - start)));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

std::vector<int> parse_words(std::string_view text) {
  std::vector<int> out;
  std::istringstream is{std::string(text)};
  std::string word;
  while (is >> word) out.push_back(parse_int(word));
  return out;
}

std::string join(std::span<const int> xs, std::string_view sep) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += sep;
    out += std::to_string(xs[i]);
  }
  return out;
}

}  // namespace

Partition parse_partition(std::string_view text) { return Partition(parse_list(text, ',')); }

EzIndex parse_ez(std::string_view text) {
  auto xs = parse_list(text, ',');
  if (xs.empty()) throw InvalidArgument("empty index");
  return EzIndex(std::move(xs));
}

std::vector<std::vector<int>> parse_rows(std::string_view text) {
  std::vector<std::vector<int>> rows;
  std::size_t start = 0;
  while (true) {
    const auto pos = text.find('/', start);
    rows.push_back(parse_words(text.substr(start, pos - start)));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return rows;
}

TableauIndex parse_index_spec(std::string_view lambda, std::string_view mu, std::string_view rows) {
  return TableauIndex::from_rows(SkewShape(parse_partition(lambda), parse_partition(mu)),
                                 parse_rows(rows));
}

std::complex<double> parse_complex(std::string_view text) {
  const auto s = trim(text);
  if (s.empty()) throw InvalidArgument("empty complex literal");
  if (s.back() != 'i') return {parse_double(s), 0.0};
  const auto body = s.substr(0, s.size() - 1);
  // Split at the last sign that is neither leading nor part of an exponent.
  std::size_t split = std::string_view::npos;
  for (std::size_t i = body.size(); i-- > 1;) {
    if ((body[i] == '+' || body[i] == '-') && body[i - 1] != 'e' && body[i - 1] != 'E') {
      split = i;
      break;
    }
  }
  auto imag_part = [](std::string_view t) {
    if (t.empty() || t == "+") return 1.0;
    if (t == "-") return -1.0;
    return parse_double(t);
  };
  if (split == std::string_view::npos) return {0.0, imag_part(body)};
  return {parse_double(body.substr(0, split)), imag_part(body.substr(split))};
}

std::string format_partition(const Partition& p) { return join(p.parts(), ","); }

std::string format_ez(const EzIndex& k) { return join(k.exponents(), ","); }

std::string format_rows(const TableauIndex& k) {
  std::string out;
  const auto rows = k.rows();
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (r) out += " / ";
    out += join(rows[r], " ");
  }
  return out;
}

std::string format_number(double x) {
  std::ostringstream os;
  os.imbue(std::locale::classic());
  os << std::setprecision(15) << x;
  return os.str();
}

std::string format_complex(std::complex<double> z) {
  if (z.imag() == 0.0) return format_number(z.real());
  std::string im = format_number(std::abs(z.imag()));
  return format_number(z.real()) + (std::signbit(z.imag()) ? "-" : "+") + im + "i";
}

}  // namespace schur_ohno
