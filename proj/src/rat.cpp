#include "nsmb/rat.hpp"

#include <cctype>
#include <cstdlib>

namespace nsmb {

namespace {

std::int64_t parse_digits(std::string_view s, std::size_t& pos) {
  if (pos >= s.size() || !std::isdigit(static_cast<unsigned char>(s[pos])))
    throw std::invalid_argument("expected digits in rational: '" + std::string(s) + "'");
  std::int64_t v = 0;
  while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
    v = v * 10 + (s[pos] - '0');
    ++pos;
  }
  return v;
}

}  // namespace

Rat Rat::parse(std::string_view text) {
  std::size_t pos = 0;
  std::int64_t ipart = parse_digits(text, pos);
  if (pos < text.size() && text[pos] == '/') {
    ++pos;
    std::int64_t den = parse_digits(text, pos);
    if (pos != text.size()) throw std::invalid_argument("trailing characters in rational");
    return Rat(ipart, den);
  }
  if (pos < text.size() && text[pos] == '.') {
    ++pos;
    std::int64_t num = ipart;
    std::int64_t den = 1;
    if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])))
      throw std::invalid_argument("expected digits after decimal point");
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      num = num * 10 + (text[pos] - '0');
      den *= 10;
      ++pos;
    }
    if (pos != text.size()) throw std::invalid_argument("trailing characters in rational");
    return Rat(num, den);
  }
  if (pos != text.size()) throw std::invalid_argument("trailing characters in rational");
  return Rat(ipart, 1);
}

std::string Rat::str() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

}  // namespace nsmb
