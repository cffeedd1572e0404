#include "icat/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace icat {

Rational parse_rational(std::string_view text) {
  std::string s;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  }
  if (s.empty()) throw std::invalid_argument("empty rational literal");
  for (std::size_t i = 0; i < s.size(); ++i) {
    const char c = s[i];
    const bool ok = std::isdigit(static_cast<unsigned char>(c)) || c == '/' ||
                    ((c == '-' || c == '+') && (i == 0 || s[i - 1] == '/'));
    if (!ok) throw std::invalid_argument("malformed rational literal '" + s + "'");
  }
  Rational value;
  try {
    value = Rational(s[0] == '+' ? s.substr(1) : s, 10);
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("malformed rational literal '" + s + "'");
  }
  if (value.get_den() == 0) throw std::invalid_argument("zero denominator in '" + s + "'");
  value.canonicalize();
  return value;
}

std::string to_string(const Rational& value) {
  if (value.get_den() == 1) return value.get_num().get_str();
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

Integer height(const Rational& value) {
  Integer n = abs(value.get_num());
  const Integer& d = value.get_den();
  return n > d ? n : d;
}

}  // namespace icat
