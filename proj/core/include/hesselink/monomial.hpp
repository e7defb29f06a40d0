#pragma once

#include <compare>
#include <string>
#include <vector>

namespace hesselink {

// Exponent vector of a monomial in x0..xr. The same type doubles as a lattice
// point of a state set: a product of Q degree-t monomials is recorded as the
// (entrywise) sum of their exponent vectors, a monomial of degree t*Q.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::vector<int> exps);

  int num_vars() const { return static_cast<int>(e_.size()); }  // r + 1
  int degree() const;

  int operator[](int i) const { return e_[static_cast<size_t>(i)]; }
  int& operator[](int i) { return e_[static_cast<size_t>(i)]; }
  const std::vector<int>& exps() const { return e_; }

  // Entrywise sum; both factors must have the same variable count.
  Monomial operator*(const Monomial& other) const;

  bool operator==(const Monomial& other) const { return e_ == other.e_; }
  bool operator!=(const Monomial& other) const { return e_ != other.e_; }

  // Canonical order: degree first, then lexicographic with x_r most
  // significant (x_i < x_{i+1} as variables). "x0^2 < x0*x1 < x1^2" for r=1.
  std::strong_ordering operator<=>(const Monomial& other) const;

  // "x0^3*x2" style rendering; degree-0 monomials render as "1".
  std::string str() const;

 private:
  std::vector<int> e_;
};

// All degree-D monomials in x0..xr in ascending canonical order.
// Size C(r+D, r). D = 0 yields the single empty-exponent monomial.
std::vector<Monomial> enumerate_monomials(int r, int D);

}  // namespace hesselink
