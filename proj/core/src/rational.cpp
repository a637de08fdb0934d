#include "orthopoly/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace orthopoly {

Rat rat_from_string(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("empty rational literal");
  for (char ch : text) {
    if (!(std::isdigit(static_cast<unsigned char>(ch)) || ch == '-' ||
          ch == '+' || ch == '/')) {
      throw std::invalid_argument("malformed rational literal: " + text);
    }
  }
  Rat value;
  try {
    value = Rat(text);
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("malformed rational literal: " + text);
  }
  if (value.get_den() == 0) {
    throw std::invalid_argument("zero denominator in rational literal: " + text);
  }
  value.canonicalize();
  return value;
}

std::string to_string(const Rat& value) { return value.get_str(); }

bool is_nonnegative_integer(const Rat& value) {
  return value >= 0 && value.get_den() == 1;
}

long to_long(const Rat& value) {
  if (value.get_den() != 1 || !value.get_num().fits_slong_p()) {
    throw std::overflow_error("rational does not fit in long: " +
                              value.get_str());
  }
  return value.get_num().get_si();
}

Rat pochhammer(long nu, long k) {
  Rat product(1);
  for (long i = 0; i < k; ++i) product *= Rat(nu + i);
  return product;
}

Int factorial(long n) {
  Int product(1);
  for (long i = 2; i <= n; ++i) product *= i;
  return product;
}

}  // namespace orthopoly
