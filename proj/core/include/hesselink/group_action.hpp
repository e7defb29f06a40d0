#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hesselink/polynomial.hpp"
#include "hesselink/rational.hpp"

namespace hesselink {

// Invertible (r+1)x(r+1) rational matrix acting on forms by substitution:
//   act(g, f)(v) = f(v * g)  with v a row vector.
// Hypersurface points move by p -> p * g^-1, so act(outer, act(inner, f)) ==
// act(outer * inner, f).
class GroupElement {
 public:
  // Throws std::invalid_argument if the matrix is singular or ragged.
  explicit GroupElement(std::vector<RatVec> rows);

  static GroupElement identity(int n);
  // sigma maps coordinate i to coordinate sigma[i]; the matrix has a 1 in
  // row i, column sigma[i]. act with it sends exponent vector a to a o sigma.
  static GroupElement permutation(const std::vector<int>& sigma);

  int n() const { return static_cast<int>(rows_.size()); }
  const RatVec& row(int i) const { return rows_[static_cast<size_t>(i)]; }
  const Rational& at(int i, int j) const {
    return rows_[static_cast<size_t>(i)][static_cast<size_t>(j)];
  }
  const Rational& det() const { return det_; }

  GroupElement operator*(const GroupElement& other) const;
  GroupElement inverse() const;

  bool is_lower_triangular() const;
  bool operator==(const GroupElement& other) const { return rows_ == other.rows_; }

  // Row-major "p/q" entries, the canonical form used for tie-breaking and JSON.
  std::string str() const;

 private:
  std::vector<RatVec> rows_;
  Rational det_;
};

Rational determinant(std::vector<RatVec> rows);

// Point of P^r, normalized so the first nonzero coordinate is 1.
class ProjectivePoint {
 public:
  explicit ProjectivePoint(RatVec coords);  // throws on the zero vector

  int r() const { return static_cast<int>(coords_.size()) - 1; }
  const RatVec& coords() const { return coords_; }

  static ProjectivePoint coordinate_point(int r, int i);  // e_i

  bool operator==(const ProjectivePoint& other) const {
    return coords_ == other.coords_;
  }

  std::string str() const;  // "[1 : 2 : 0]"

 private:
  RatVec coords_;
};

// Integer weight vector of a diagonal one-parameter subgroup
// diag(t^w0, ..., t^wr). Not identically zero.
class OneParamSubgroup {
 public:
  explicit OneParamSubgroup(std::vector<Integer> weights);

  int n() const { return static_cast<int>(w_.size()); }
  const Integer& operator[](int i) const { return w_[static_cast<size_t>(i)]; }
  const std::vector<Integer>& weights() const { return w_; }

  Integer norm_squared() const;
  Integer min_weight() const;
  Integer max_weight() const;
  bool sum_is_zero() const;           // SL-normalized
  bool is_indivisible() const;        // integer entries with gcd 1
  bool weakly_increasing() const;

  bool operator==(const OneParamSubgroup& other) const { return w_ == other.w_; }
  bool operator!=(const OneParamSubgroup& other) const { return w_ != other.w_; }
  bool operator<(const OneParamSubgroup& other) const { return w_ < other.w_; }

  std::string str() const;  // "(3, -1, -1, -1)"

 private:
  std::vector<Integer> w_;
};

HomogeneousPolynomial act(const GroupElement& g, const HomogeneousPolynomial& f);

ProjectivePoint act_point(const ProjectivePoint& p, const GroupElement& g);

// <lambda, m> = sum_i lambda_i * m_i, the weight of the monomial under the
// one-parameter subgroup.
Integer pairing(const OneParamSubgroup& lambda, const Monomial& m);
Rational pairing(const RatVec& direction, const Monomial& m);

// min over the support of f of pairing(lambda, .). Positive value certifies
// instability of f.
Integer mu(const HomogeneousPolynomial& f, const OneParamSubgroup& lambda);

// Order induced by lambda: higher pairing first, canonical lex on ties.
// Returns <0 / 0 / >0 when a sorts before / equal / after b.
int monomial_cmp(const OneParamSubgroup& lambda, const Monomial& a,
                 const Monomial& b);

// Pull-back along sigma, chosen so that
//   mu(act(permutation(sigma), f), conjugate_by_permutation(sigma, lambda))
//   == mu(f, lambda).
OneParamSubgroup conjugate_by_permutation(const std::vector<int>& sigma,
                                          const OneParamSubgroup& lambda);

// Weights sorted weakly decreasing: the distinguished representative of the
// Weyl orbit. Two subgroups are conjugate by a permutation iff reps are equal.
OneParamSubgroup canonical_class_rep(const OneParamSubgroup& lambda);

// The unique indivisible integer vector that is a positive multiple of v.
// Throws std::invalid_argument on the zero vector.
OneParamSubgroup primitive(const RatVec& v);

}  // namespace hesselink
