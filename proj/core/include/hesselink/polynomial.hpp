#pragma once

#include <map>
#include <string>
#include <vector>

#include "hesselink/monomial.hpp"
#include "hesselink/rational.hpp"

namespace hesselink {

// Nonzero homogeneous polynomial in x0..xr with exact rational coefficients.
// Invariants: at least one term, no zero coefficients, every monomial has
// r + 1 exponents and the same total degree.
class HomogeneousPolynomial {
 public:
  using TermMap = std::map<Monomial, Rational>;

  // Drops zero coefficients; throws ParseError(ZeroPolynomial) if nothing
  // survives and std::invalid_argument on mixed degrees or variable counts.
  static HomogeneousPolynomial from_terms(int r, TermMap terms);

  static HomogeneousPolynomial monomial(int r, Monomial m,
                                        Rational coeff = Rational(1));

  int r() const { return r_; }
  int degree() const { return degree_; }
  const TermMap& terms() const { return terms_; }
  int term_count() const { return static_cast<int>(terms_.size()); }

  const std::vector<Monomial>& support() const { return support_; }

  Rational coefficient(const Monomial& m) const;  // 0 when absent

  bool operator==(const HomogeneousPolynomial& other) const;

  Rational evaluate(const RatVec& point) const;

 private:
  HomogeneousPolynomial(int r, int degree, TermMap terms);

  int r_ = 0;
  int degree_ = 0;
  TermMap terms_;
  std::vector<Monomial> support_;  // keys of terms_, ascending canonical
};

// Grammar (ASCII, whitespace ignored):
//   poly     := term (("+"|"-") term)*
//   term     := [sign] [rational "*"] factor ("*" factor)*
//   factor   := "x" index ["^" exponent]
//   rational := integer ["/" positive-integer]
// Variables run x0..xr. Throws ParseError with kind Syntax, UnknownVariable,
// NonHomogeneous, or ZeroPolynomial (terms may cancel to zero).
HomogeneousPolynomial parse_polynomial(const std::string& text, int r);

// Canonical form: terms in descending canonical monomial order, coefficient
// "p/q*" prefixes except for +-1, factors ascending by variable index,
// exponent 1 left implicit. parse(serialize(f)) == f.
std::string serialize_polynomial(const HomogeneousPolynomial& f);

// Multiplication by a monomial (degree shifts by m.degree()).
HomogeneousPolynomial multiply(const HomogeneousPolynomial& f,
                               const Monomial& m);

// General product; used by the matrix action on polynomials.
HomogeneousPolynomial multiply(const HomogeneousPolynomial& f,
                               const HomogeneousPolynomial& g);

}  // namespace hesselink
