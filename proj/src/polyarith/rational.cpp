#include "dmod/rational.hpp"

#include "dmod/errors.hpp"

namespace dmod {

Rational make_rational(long num, long den) {
  if (den == 0) throw InvalidArgument("zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw InvalidArgument("zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Rational parse_rational(std::string_view text) {
  std::string s(text);
  auto slash = s.find('/');
  Integer num, den = 1;
  auto parse_int = [](const std::string& part) {
    Integer z;
    if (part.empty() || z.set_str(part[0] == '+' ? part.substr(1) : part, 10) != 0)
      throw InvalidArgument("malformed rational '" + part + "'");
    return z;
  };
  if (slash == std::string::npos) {
    num = parse_int(s);
  } else {
    num = parse_int(s.substr(0, slash));
    den = parse_int(s.substr(slash + 1));
  }
  return make_rational(num, den);
}

std::string to_string(const Rational& q) { return q.get_str(); }

std::size_t bit_size(const Rational& q) {
  return mpz_sizeinbase(q.get_num_mpz_t(), 2) + mpz_sizeinbase(q.get_den_mpz_t(), 2);
}

}  // namespace dmod
