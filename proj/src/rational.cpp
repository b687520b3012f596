#include "fimod/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace fimod {

std::string to_string(const Rational& q) {
  // mpq_class keeps its value canonical, so get_str() already prints "p" or "p/q".
  return q.get_str();
}

namespace {

bool is_integer_literal(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!is_integer_literal(num) || !is_integer_literal(den)) {
    throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
  }
  std::string n(num.front() == '+' ? num.substr(1) : num);
  std::string d(den.front() == '+' ? den.substr(1) : den);
  Integer dz(d);
  if (dz == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
  Rational q(Integer(n), dz);
  q.canonicalize();
  return q;
}

}  // namespace fimod
