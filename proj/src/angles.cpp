#include "qwalk/angles.hpp"

#include <charconv>
#include <string>

#include "qwalk/coin.hpp"

namespace qwalk {

namespace {

// Parses the whole range as a decimal number; offset names the error position.
double parse_decimal(std::string_view text, std::size_t offset) {
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size()) {
    const std::size_t bad = offset + static_cast<std::size_t>(ptr - text.data());
    throw ParseError("malformed number", bad);
  }
  return value;
}

}  // namespace

double parse_angle(std::string_view text) {
  std::size_t begin = 0;
  std::size_t end = text.size();
  while (begin < end && (text[begin] == ' ' || text[begin] == '\t')) ++begin;
  while (end > begin && (text[end - 1] == ' ' || text[end - 1] == '\t')) --end;
  if (begin == end) throw ParseError("empty angle literal", begin);

  double sign = 1.0;
  if (text[begin] == '+' || text[begin] == '-') {
    if (text[begin] == '-') sign = -1.0;
    ++begin;
    if (begin == end) throw ParseError("expected a number after the sign", begin);
  }

  const std::string_view body = text.substr(begin, end - begin);
  const std::size_t pi_pos = body.find("pi");
  if (pi_pos == std::string_view::npos) {
    return sign * parse_decimal(body, begin);
  }

  double multiplier = 1.0;
  if (pi_pos > 0) multiplier = parse_decimal(body.substr(0, pi_pos), begin);

  double denominator = 1.0;
  const std::size_t after_pi = pi_pos + 2;
  if (after_pi < body.size()) {
    if (body[after_pi] != '/') {
      throw ParseError("expected '/' after pi", begin + after_pi);
    }
    const std::string_view denom_text = body.substr(after_pi + 1);
    if (denom_text.empty()) {
      throw ParseError("expected a denominator after '/'", begin + body.size());
    }
    denominator = parse_decimal(denom_text, begin + after_pi + 1);
    if (denominator == 0.0) {
      throw ParseError("zero denominator", begin + after_pi + 1);
    }
  }

  return sign * multiplier * kPi / denominator;
}

}  // namespace qwalk
