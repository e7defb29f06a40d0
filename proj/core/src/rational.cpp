#include "hesselink/rational.hpp"

#include <cstdio>
#include <stdexcept>

namespace hesselink {

Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Rational parse_rational(const std::string& text) {
  // mpq accepts "p/q" but not surrounding whitespace; trim first.
  size_t a = text.find_first_not_of(" \t");
  size_t b = text.find_last_not_of(" \t");
  if (a == std::string::npos)
    throw std::invalid_argument("empty rational literal");
  std::string trimmed = text.substr(a, b - a + 1);

  mpq_t raw;
  mpq_init(raw);
  if (mpq_set_str(raw, trimmed.c_str(), 10) != 0) {
    mpq_clear(raw);
    throw std::invalid_argument("malformed rational literal '" + text + "'");
  }
  if (mpz_sgn(mpq_denref(raw)) == 0) {
    mpq_clear(raw);
    throw std::invalid_argument("zero denominator in '" + text + "'");
  }
  Rational q(raw);
  mpq_clear(raw);
  q.canonicalize();
  return q;
}

std::string fraction_string(const Rational& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string approx_string(const Rational& q) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6f", q.get_d());
  std::string s = q.get_str();
  return s + " (~ " + buf + ")";
}

Rational dot(const RatVec& a, const RatVec& b) {
  if (a.size() != b.size())
    throw std::invalid_argument("dot of mismatched vectors");
  Rational acc(0);
  for (size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
  return acc;
}

Rational norm_squared(const RatVec& a) { return dot(a, a); }

bool is_zero_vec(const RatVec& a) {
  for (const auto& x : a)
    if (x != 0) return false;
  return true;
}

Integer binomial(long n, long k) {
  if (k < 0 || k > n || n < 0) return Integer(0);
  Integer result;
  mpz_bin_uiui(result.get_mpz_t(), static_cast<unsigned long>(n),
               static_cast<unsigned long>(k));
  return result;
}

}  // namespace hesselink
