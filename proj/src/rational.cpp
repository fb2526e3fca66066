#include "atyp/rational.hpp"

#include <cctype>
#include <ostream>

namespace atyp {

Rational Rational::from_string(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("Rational: empty string");
  std::string t;
  for (char c : s)
    if (!std::isspace(static_cast<unsigned char>(c))) t.push_back(c);
  if (t.empty()) throw std::invalid_argument("Rational: blank string");
  auto check_part = [](const std::string& p, bool sign_ok) {
    if (p.empty()) return false;
    size_t k = 0;
    if (sign_ok && (p[0] == '+' || p[0] == '-')) k = 1;
    if (k == p.size()) return false;
    for (; k < p.size(); ++k)
      if (!std::isdigit(static_cast<unsigned char>(p[k]))) return false;
    return true;
  };
  auto slash = t.find('/');
  if (slash == std::string::npos) {
    if (!check_part(t, true)) throw std::invalid_argument("Rational: bad integer '" + s + "'");
    return Rational(mpq_class(t));
  }
  std::string num = t.substr(0, slash), den = t.substr(slash + 1);
  if (!check_part(num, true) || !check_part(den, false))
    throw std::invalid_argument("Rational: bad fraction '" + s + "'");
  mpq_class q(num + "/" + den);
  if (q.get_den() == 0) throw std::invalid_argument("Rational: zero denominator in '" + s + "'");
  q.canonicalize();
  return Rational(std::move(q));
}

long Rational::to_long() const {
  if (!is_integer()) throw std::domain_error("Rational: not an integer: " + str());
  if (!v_.get_num().fits_slong_p()) throw std::domain_error("Rational: integer out of long range");
  return v_.get_num().get_si();
}

std::string Rational::str() const {
  if (is_integer()) return v_.get_num().get_str();
  return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& a) { return os << a.str(); }

}  // namespace atyp
