#include "spotted/rational.hpp"

#include <cstdlib>

namespace spotted {

std::string to_string(const Rational& r) {
  std::int64_t den = r.denominator();
  int twos = 0, fives = 0;
  while (den % 2 == 0) { den /= 2; ++twos; }
  while (den % 5 == 0) { den /= 5; ++fives; }
  if (den != 1) {
    return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
  }
  return to_fixed(r, twos > fives ? twos : fives);
}

std::string to_fixed(const Rational& r, int digits) {
  std::int64_t scale = 1;
  for (int i = 0; i < digits; ++i) scale *= 10;
  const bool negative = r.numerator() < 0;
  const std::int64_t num = std::llabs(r.numerator());
  const std::int64_t den = r.denominator();
  // round(|r| * scale), half away from zero
  std::int64_t scaled = (2 * num * scale + den) / (2 * den);
  std::string out = negative && scaled != 0 ? "-" : "";
  out += std::to_string(scaled / scale);
  if (digits > 0) {
    std::string frac = std::to_string(scaled % scale);
    out += '.' + std::string(static_cast<std::size_t>(digits) - frac.size(), '0') + frac;
  }
  return out;
}

}  // namespace spotted
