#include "harmconv/angle.hpp"

#include <cctype>
#include <charconv>
#include <numbers>
#include <string>

#include "harmconv/error.hpp"

namespace harmconv {
namespace {

[[noreturn]] void malformed(std::string_view text) {
  throw ParameterError("malformed angle '" + std::string(text) + "'");
}

double parse_number(std::string_view s, std::string_view whole) {
  if (s.empty()) malformed(whole);
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size()) malformed(whole);
  return value;
}

}  // namespace

double parse_angle(std::string_view text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(char(std::tolower(c)));
  if (s.empty()) malformed(text);

  const auto pi_pos = s.find("pi");
  if (pi_pos == std::string::npos) return parse_number(s, text);

  double sign = 1.0;
  std::string_view sv(s);
  if (sv.front() == '-' || sv.front() == '+') {
    sign = sv.front() == '-' ? -1.0 : 1.0;
    sv.remove_prefix(1);
  }
  const auto p = sv.find("pi");
  std::string_view before = sv.substr(0, p);
  std::string_view after = sv.substr(p + 2);
  if (!before.empty() && before.back() == '*') before.remove_suffix(1);

  // Numerator factor and an optional denominator either side of "pi":
  // "7pi/8", "7*pi/8", "7/8pi", "pi/8", "pi".
  double num = 1.0, den = 1.0;
  if (!before.empty()) {
    const auto slash = before.find('/');
    if (slash == std::string_view::npos) {
      num = parse_number(before, text);
    } else {
      num = parse_number(before.substr(0, slash), text);
      den = parse_number(before.substr(slash + 1), text);
    }
  }
  if (!after.empty()) {
    if (after.front() != '/' || den != 1.0) malformed(text);
    den = parse_number(after.substr(1), text);
  }
  if (den == 0.0) malformed(text);
  return sign * (num * std::numbers::pi) / den;
}

}  // namespace harmconv
