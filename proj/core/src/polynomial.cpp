#include "hesselink/polynomial.hpp"

#include <cctype>
#include <stdexcept>

#include "hesselink/errors.hpp"

namespace hesselink {

HomogeneousPolynomial::HomogeneousPolynomial(int r, int degree, TermMap terms)
    : r_(r), degree_(degree), terms_(std::move(terms)) {
  support_.reserve(terms_.size());
  for (const auto& [m, c] : terms_) support_.push_back(m);
}

HomogeneousPolynomial HomogeneousPolynomial::from_terms(int r, TermMap terms) {
  if (r < 0) throw std::invalid_argument("negative variable index bound");
  for (auto it = terms.begin(); it != terms.end();) {
    if (it->second == 0)
      it = terms.erase(it);
    else
      ++it;
  }
  if (terms.empty())
    throw ParseError(ParseError::Kind::ZeroPolynomial,
                     "all terms cancelled; the zero polynomial has no "
                     "hypersurface");
  int degree = -1;
  for (const auto& [m, c] : terms) {
    if (m.num_vars() != r + 1)
      throw std::invalid_argument("term variable count mismatch");
    if (degree < 0)
      degree = m.degree();
    else if (m.degree() != degree)
      throw ParseError(ParseError::Kind::NonHomogeneous,
                       "terms of degree " + std::to_string(degree) + " and " +
                           std::to_string(m.degree()) + " mixed");
  }
  return HomogeneousPolynomial(r, degree, std::move(terms));
}

HomogeneousPolynomial HomogeneousPolynomial::monomial(int r, Monomial m,
                                                      Rational coeff) {
  TermMap terms;
  terms.emplace(std::move(m), std::move(coeff));
  return from_terms(r, std::move(terms));
}

Rational HomogeneousPolynomial::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

bool HomogeneousPolynomial::operator==(const HomogeneousPolynomial& other) const {
  return r_ == other.r_ && terms_ == other.terms_;
}

Rational HomogeneousPolynomial::evaluate(const RatVec& point) const {
  if (static_cast<int>(point.size()) != r_ + 1)
    throw std::invalid_argument("evaluate: wrong point dimension");
  Rational total(0);
  for (const auto& [m, c] : terms_) {
    Rational v = c;
    for (int i = 0; i <= r_; ++i)
      for (int k = 0; k < m[i]; ++k) v *= point[static_cast<size_t>(i)];
    total += v;
  }
  return total;
}

namespace {

// Hand-rolled scanner for the tiny term grammar; positions feed error text.
struct Cursor {
  const std::string& s;
  size_t i = 0;

  void skip_ws() {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  }
  bool done() {
    skip_ws();
    return i >= s.size();
  }
  char peek() {
    skip_ws();
    return i < s.size() ? s[i] : '\0';
  }
  char take() {
    skip_ws();
    return s[i++];
  }
  [[noreturn]] void fail(const std::string& msg) {
    throw ParseError(ParseError::Kind::Syntax,
                     msg + " at position " + std::to_string(i));
  }
};

Integer scan_integer(Cursor& c) {
  c.skip_ws();
  std::string digits;
  while (c.i < c.s.size() && std::isdigit(static_cast<unsigned char>(c.s[c.i])))
    digits += c.s[c.i++];
  if (digits.empty()) c.fail("expected an integer");
  return Integer(digits);
}

// factor := "x" index ["^" exponent]
void scan_factor(Cursor& c, int r, std::vector<int>& exps) {
  if (c.peek() != 'x') c.fail("expected a variable factor");
  c.take();
  if (c.i >= c.s.size() || !std::isdigit(static_cast<unsigned char>(c.s[c.i])))
    c.fail("expected a variable index after 'x'");
  Integer index = scan_integer(c);
  if (index > r)
    throw ParseError(ParseError::Kind::UnknownVariable,
                     "variable x" + index.get_str() + " outside x0..x" +
                         std::to_string(r));
  int idx = static_cast<int>(index.get_si());
  int exponent = 1;
  if (c.peek() == '^') {
    c.take();
    Integer e = scan_integer(c);
    if (e > 64) c.fail("exponent too large");
    exponent = static_cast<int>(e.get_si());
  }
  exps[static_cast<size_t>(idx)] += exponent;
}

// term := [rational "*"] factor ("*" factor)*   (sign handled by the caller)
void scan_term(Cursor& c, int r, int sign,
               HomogeneousPolynomial::TermMap& terms) {
  Rational coeff(sign);
  if (std::isdigit(static_cast<unsigned char>(c.peek()))) {
    Integer num = scan_integer(c);
    Integer den(1);
    if (c.peek() == '/') {
      c.take();
      den = scan_integer(c);
      if (den == 0) c.fail("zero denominator");
    }
    coeff *= make_rational(num, den);
    if (c.peek() != '*') c.fail("expected '*' between coefficient and factor");
    c.take();
  }
  std::vector<int> exps(static_cast<size_t>(r) + 1, 0);
  scan_factor(c, r, exps);
  while (c.peek() == '*') {
    c.take();
    scan_factor(c, r, exps);
  }
  terms[Monomial(exps)] += coeff;
}

}  // namespace

HomogeneousPolynomial parse_polynomial(const std::string& text, int r) {
  if (r < 0) throw std::invalid_argument("negative variable index bound");
  Cursor c{text};
  if (c.done())
    throw ParseError(ParseError::Kind::Syntax, "empty polynomial");

  HomogeneousPolynomial::TermMap terms;
  int sign = 1;
  if (c.peek() == '+' || c.peek() == '-') sign = c.take() == '-' ? -1 : 1;
  scan_term(c, r, sign, terms);
  while (!c.done()) {
    char op = c.peek();
    if (op != '+' && op != '-') c.fail("expected '+' or '-' between terms");
    c.take();
    scan_term(c, r, op == '-' ? -1 : 1, terms);
  }
  return HomogeneousPolynomial::from_terms(r, std::move(terms));
}

std::string serialize_polynomial(const HomogeneousPolynomial& f) {
  std::string out;
  // Descending canonical order: leading term first.
  for (auto it = f.terms().rbegin(); it != f.terms().rend(); ++it) {
    const auto& [m, c] = *it;
    bool negative = c < 0;
    Rational mag = abs(c);
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    std::string monomial_part = m.degree() == 0 ? "" : m.str();
    if (mag != 1 || monomial_part.empty()) {
      out += mag.get_str();
      if (!monomial_part.empty()) out += "*";
    }
    out += monomial_part;
  }
  return out;
}

HomogeneousPolynomial multiply(const HomogeneousPolynomial& f,
                               const Monomial& m) {
  if (m.num_vars() != f.r() + 1)
    throw std::invalid_argument("multiplier variable count mismatch");
  HomogeneousPolynomial::TermMap terms;
  for (const auto& [mono, c] : f.terms()) terms.emplace(mono * m, c);
  return HomogeneousPolynomial::from_terms(f.r(), std::move(terms));
}

HomogeneousPolynomial multiply(const HomogeneousPolynomial& f,
                               const HomogeneousPolynomial& g) {
  if (f.r() != g.r())
    throw std::invalid_argument("product across variable counts");
  HomogeneousPolynomial::TermMap terms;
  for (const auto& [mf, cf] : f.terms())
    for (const auto& [mg, cg] : g.terms()) terms[mf * mg] += cf * cg;
  return HomogeneousPolynomial::from_terms(f.r(), std::move(terms));
}

}  // namespace hesselink
