#include "pcsf/rat.hpp"

#include <sstream>
#include <stdexcept>

namespace pcsf {

Rat rat_from_decimal(std::string_view text, int max_frac_digits) {
  if (text.empty()) throw std::invalid_argument("empty number");
  std::string integral;
  std::string fractional;
  std::size_t pos = 0;
  bool seen_dot = false;
  for (; pos < text.size(); ++pos) {
    char c = text[pos];
    if (c == '.') {
      if (seen_dot) throw std::invalid_argument("two decimal points");
      seen_dot = true;
    } else if (c >= '0' && c <= '9') {
      (seen_dot ? fractional : integral) += c;
    } else {
      throw std::invalid_argument("invalid character in number: " +
                                  std::string(text));
    }
  }
  if (integral.empty() && fractional.empty())
    throw std::invalid_argument("no digits in number");
  if (static_cast<int>(fractional.size()) > max_frac_digits)
    throw std::invalid_argument("more than " +
                                std::to_string(max_frac_digits) +
                                " fractional digits");
  mpz_class num(integral.empty() ? "0" : integral);
  for (char c : fractional) {
    num *= 10;
    num += c - '0';
  }
  mpz_class den(1);
  for (std::size_t i = 0; i < fractional.size(); ++i) den *= 10;
  Rat r(num, den);
  r.canonicalize();
  return r;
}

std::string rat_to_string(const Rat& r) {
  Rat c = r;
  c.canonicalize();  // literals like Rat(4, 2) arrive unreduced
  std::ostringstream out;
  if (c.get_den() == 1) {
    out << c.get_num();
  } else {
    out << c.get_num() << '/' << c.get_den();
  }
  return out.str();
}

std::string ext_rat_to_string(const ExtRat& r) {
  return r.is_finite() ? rat_to_string(r.value()) : std::string("inf");
}

}  // namespace pcsf
