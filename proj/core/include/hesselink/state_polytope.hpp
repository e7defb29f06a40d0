#pragma once

#include <optional>
#include <vector>

#include "hesselink/group_action.hpp"
#include "hesselink/polynomial.hpp"
#include "hesselink/rational.hpp"

namespace hesselink {

// Finite set of lattice points spanning the state polytope of a hypersurface
// at twist t: each point is a sum of Q distinct degree-t monomials (one
// nonvanishing maximal minor of the multiplication matrix), so every point
// has coordinate sum t*Q. At t = d the state is just the support of f (Q=1).
class StateSet {
 public:
  StateSet(int r, int t, Integer Q, std::vector<Monomial> points);

  int r() const { return r_; }
  int t() const { return t_; }
  const Integer& Q() const { return Q_; }
  const std::vector<Monomial>& points() const { return points_; }  // sorted

  // Barycenter target t*Q/(r+1) * (1,...,1); the state polytope contains it
  // exactly when the hypersurface is torus-semistable in these coordinates.
  RatVec center() const;

 private:
  int r_;
  int t_;
  Integer Q_;
  std::vector<Monomial> points_;
};

// Exact solution of the nearest-point problem from the barycenter to the
// state polytope, with certificates.
struct PolytopeAnalysis {
  StateSet state;
  RatVec center;
  RatVec nearest;          // h, the closest polytope point to center
  Rational delta_squared;  // ||h - center||^2
  // Convex-combination certificate: weights[i] pairs with state.points()[i],
  // nonnegative, summing to 1, reproducing h.
  std::vector<Rational> weights;
  // Present iff delta_squared > 0: the primitive integer direction of
  // h - center, the worst one-parameter subgroup in these coordinates.
  std::optional<OneParamSubgroup> lambda;
  // min over the state of pairing(lambda, .); 0 when lambda is absent.
  // Satisfies mu^2 == delta_squared * ||lambda||^2.
  Integer mu;

  bool unstable() const { return delta_squared > 0; }
};

StateSet state_degree_d(const HomogeneousPolynomial& f);

// Matrix of multiplication by f from degree-D forms to degree-(d+D) forms:
// rows indexed by enumerate_monomials(r, D), columns by
// enumerate_monomials(r, d+D); entry (i, j) is the coefficient of the j-th
// degree-(d+D) monomial in m_i * f. Always has full row rank.
struct MultiplicationMatrix {
  int r = 0;
  int d = 0;
  int D = 0;
  std::vector<Monomial> row_monomials;
  std::vector<Monomial> col_monomials;
  std::vector<RatVec> entries;  // row-major, |rows| x |cols|

  int rank() const;
};

MultiplicationMatrix multiplication_matrix(const HomogeneousPolynomial& f,
                                           int D);

// State at twist d+D: weights sum(col tuple) over the size-|M_D| column
// tuples of the multiplication matrix with nonvanishing minor. Columns that
// are identically zero are discarded up front, and tuples provably below the
// worst-direction threshold are pruned (both preserve the result exactly).
// Throws CapExceeded when more than cap candidate tuples would be enumerated.
StateSet state_degree_dD(const HomogeneousPolynomial& f, int D,
                         long cap = 1000000);

// Exact minimum-norm point: nearest point of conv(points) to center, via an
// active-set (Wolfe) iteration over rationals with deterministic pivoting.
PolytopeAnalysis nearest_point(const StateSet& state);

// Signed squared distance max_{candidates} min_{state} of the normalized
// pairing: the value is sign(v) * v^2 / ||lambda||^2 for the best candidate,
// a strictly monotone encoding of the true signed distance, so exact
// comparison needs no square roots. Equals delta_squared of the analysis
// when the worst direction is among the candidates.
Rational maxmin_delta(const StateSet& state,
                      const std::vector<OneParamSubgroup>& candidates);

// How squared instability distances rescale from twist d to twist d+D:
// multiplication by C(r+D, r)^2.
Rational tau_squared(const Rational& delta_squared, int r, int D);

// Stratification stability across twists: recomputing the state at d+D
// rescales delta^2 by exactly C(r+D,r)^2 and keeps the same worst
// one-parameter subgroup class.
struct DegreeShiftReport {
  int r = 0;
  int d = 0;
  int D = 0;
  bool unstable_at_d = false;  // the check is vacuous-but-run when false
  PolytopeAnalysis at_d;
  PolytopeAnalysis at_dD;
  Rational expected_delta_squared;  // tau_squared(at_d.delta_squared, r, D)
  bool scaling_holds = false;
  bool class_preserved = false;

  bool passed() const { return scaling_holds && class_preserved; }
};

DegreeShiftReport verify_degree_shift(const HomogeneousPolynomial& f, int D,
                                      long cap = 1000000);

namespace detail {

// Shared solver core: min-norm point of conv(points - center), returned in
// original coordinates. Exposed for the oracle-equivalence tests.
struct MinNormResult {
  RatVec nearest;
  Rational delta_squared;
  std::vector<Rational> weights;
};

MinNormResult min_norm_point(const std::vector<RatVec>& points,
                             const RatVec& center);

// Pruning knob for differential testing of state_degree_dD.
StateSet state_degree_dD_impl(const HomogeneousPolynomial& f, int D, long cap,
                              bool prune);

}  // namespace detail

}  // namespace hesselink
