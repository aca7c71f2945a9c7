#include "itmon/seq.hpp"

#include <cctype>
#include <charconv>
#include <limits>

namespace itmon {

std::vector<Nat> parse_nat_list(std::string_view text) {
  std::vector<Nat> out;
  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  skip_ws();
  if (pos >= text.size() || text[pos] != '[') throw ParseError("expected '['", pos);
  ++pos;
  skip_ws();
  if (pos < text.size() && text[pos] == ']') {
    ++pos;
  } else {
    for (;;) {
      skip_ws();
      Nat value = 0;
      auto [end, ec] = std::from_chars(text.data() + pos, text.data() + text.size(), value);
      if (ec != std::errc{}) throw ParseError("expected a non-negative integer", pos);
      pos = static_cast<std::size_t>(end - text.data());
      out.push_back(value);
      skip_ws();
      if (pos < text.size() && text[pos] == ',') {
        ++pos;
        continue;
      }
      if (pos < text.size() && text[pos] == ']') {
        ++pos;
        break;
      }
      throw ParseError("expected ',' or ']'", pos);
    }
  }
  skip_ws();
  if (pos != text.size()) throw ParseError("trailing characters", pos);
  return out;
}

std::string format_nat_list(std::span<const Nat> values) {
  std::string out = "[";
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(values[i]);
  }
  out += ']';
  return out;
}

FinSeq parse_seq(std::string_view text) { return FinSeq(parse_nat_list(text)); }

std::string format_seq(const FinSeq& s) { return format_nat_list(s.entries()); }

}  // namespace itmon
