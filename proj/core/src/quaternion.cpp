#include "qpseudo/quaternion.hpp"

#include <cctype>
#include <charconv>
#include <cstdio>

#include "qpseudo/error.hpp"

namespace qps {

namespace {

[[noreturn]] void fail(std::string_view text, std::size_t pos, const char* why) {
  throw ParseError("quaternion '" + std::string(text) + "' at offset " + std::to_string(pos) + ": " + why);
}

}  // namespace

Quaternion parse_quaternion(std::string_view text) {
  Quaternion q;
  std::size_t pos = 0;
  const auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };

  skip_ws();
  if (pos == text.size()) fail(text, pos, "empty");

  bool seen[4] = {false, false, false, false};
  bool first = true;
  while (true) {
    skip_ws();
    if (pos == text.size()) break;

    double sign = 1.0;
    if (text[pos] == '+' || text[pos] == '-') {
      sign = text[pos] == '-' ? -1.0 : 1.0;
      ++pos;
      skip_ws();
    } else if (!first) {
      fail(text, pos, "expected '+' or '-'");
    }
    first = false;

    double coeff = 1.0;
    bool have_number = false;
    if (pos < text.size() && (std::isdigit(static_cast<unsigned char>(text[pos])) || text[pos] == '.')) {
      const char* begin = text.data() + pos;
      const char* end = text.data() + text.size();
      auto [ptr, ec] = std::from_chars(begin, end, coeff);
      if (ec != std::errc()) fail(text, pos, "bad number");
      pos += static_cast<std::size_t>(ptr - begin);
      have_number = true;
    }
    skip_ws();
    if (pos < text.size() && text[pos] == '*') {
      ++pos;
      skip_ws();
    }

    int slot = 0;
    if (pos < text.size() && (text[pos] == 'i' || text[pos] == 'j' || text[pos] == 'k')) {
      slot = text[pos] == 'i' ? 1 : text[pos] == 'j' ? 2 : 3;
      ++pos;
    } else if (!have_number) {
      fail(text, pos, "expected a number or unit");
    }
    if (seen[slot]) fail(text, pos, "repeated component");
    seen[slot] = true;

    const double v = sign * coeff;
    switch (slot) {
      case 0: q.w = v; break;
      case 1: q.x = v; break;
      case 2: q.y = v; break;
      default: q.z = v; break;
    }
  }
  return q;
}

std::string to_string(const Quaternion& q) {
  char buf[160];
  std::snprintf(buf, sizeof buf, "%.17g%+.17gi%+.17gj%+.17gk", q.w, q.x, q.y, q.z);
  return buf;
}

}  // namespace qps
