#include "islands/rational.hpp"

#include <cctype>

#include "islands/errors.hpp"

namespace islands {

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
  const auto slash = text.find('/');
  const std::string_view num = text.substr(0, slash);
  const std::string_view den =
      slash == std::string_view::npos ? std::string_view{"1"} : text.substr(slash + 1);
  if (!is_integer_literal(num) || !is_integer_literal(den) || den.front() == '-' ||
      den.front() == '+') {
    throw PreconditionError("not an exact rational literal: '" + std::string(text) + "'");
  }
  std::string num_s(num);
  if (num_s.front() == '+') num_s.erase(0, 1);
  mpz_class n(num_s, 10);
  mpz_class d(std::string(den), 10);
  if (d == 0) throw PreconditionError("zero denominator in '" + std::string(text) + "'");
  Rational r(n, d);
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& value) { return value.get_str(10); }

}  // namespace islands
