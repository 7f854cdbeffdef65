#include "motzkin/bigint.hpp"

#include <cctype>

#include "motzkin/error.hpp"

namespace motzkin {

std::string to_string(const BigInt& value) { return value.str(); }

BigInt parse_bigint(std::string_view text) {
  std::size_t begin = 0;
  std::size_t end = text.size();
  while (begin < end && std::isspace(static_cast<unsigned char>(text[begin]))) ++begin;
  while (end > begin && std::isspace(static_cast<unsigned char>(text[end - 1]))) --end;
  std::string_view body = text.substr(begin, end - begin);
  std::size_t digits = (!body.empty() && (body[0] == '-' || body[0] == '+')) ? 1 : 0;
  if (digits == body.size()) {
    throw Error(Errc::ParseError, "empty integer '" + std::string(text) + "'");
  }
  for (std::size_t i = digits; i < body.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(body[i]))) {
      throw Error(Errc::ParseError, "bad integer '" + std::string(text) + "'");
    }
  }
  BigInt value(std::string(body[0] == '+' ? body.substr(1) : body));
  return value;
}

std::string format_sequence(const Sequence& seq) {
  std::string out;
  for (std::size_t i = 0; i < seq.size(); ++i) {
    if (i != 0) out += ',';
    out += seq[i].str();
  }
  return out;
}

Sequence parse_sequence(std::string_view text) {
  Sequence out;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t comma = text.find(',', start);
    std::string_view field =
        text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
    bool blank = true;
    for (char c : field) blank = blank && std::isspace(static_cast<unsigned char>(c));
    if (!blank) {
      out.push_back(parse_bigint(field));
    } else if (comma != std::string_view::npos && comma + 1 < text.size()) {
      // an empty field is only allowed as the trailing one
      bool rest_blank = true;
      for (char c : text.substr(comma + 1)) rest_blank = rest_blank && std::isspace(static_cast<unsigned char>(c));
      if (!rest_blank) throw Error(Errc::ParseError, "empty field in sequence");
    }
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

}  // namespace motzkin
