#include "gsflow/rational.hpp"

#include <cctype>
#include <charconv>

namespace gsflow {

namespace {

std::int64_t parse_int(std::string_view s, std::string_view whole) {
  std::int64_t v = 0;
  if (s.empty())
    throw std::invalid_argument("invalid rational '" + std::string(whole) + "'");
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec == std::errc::result_out_of_range)
    throw std::invalid_argument("rational out of 64-bit range: '" + std::string(whole) + "'");
  if (ec != std::errc() || ptr != s.data() + s.size())
    throw std::invalid_argument("invalid rational '" + std::string(whole) + "'");
  return v;
}

}  // namespace

Rational Rational::parse(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_int(text, text));
  std::int64_t n = parse_int(text.substr(0, slash), text);
  std::int64_t d = parse_int(text.substr(slash + 1), text);
  if (d == 0) throw std::invalid_argument("invalid rational '" + std::string(text) + "': zero denominator");
  return Rational(n, d);
}

std::string Rational::width_note(i128 n, i128 d) {
  // best-effort context for the overflow message; exact digits are not needed
  auto approx = [](i128 v) {
    int bits = 0;
    if (v < 0) v = -v;
    while (v > 0) {
      v >>= 1;
      ++bits;
    }
    return bits;
  };
  return "needs " + std::to_string(approx(n)) + "/" + std::to_string(approx(d)) + " bits";
}

}  // namespace gsflow
