#pragma once

// Independent reference implementations used to validate the library. These
// deliberately avoid the production code paths: the nearest-point oracle
// enumerates affinely independent subsets instead of running the active-set
// iteration, products are re-derived by direct convolution, and singularity
// is decided from partial derivatives rather than from moved polynomials.

#include <optional>
#include <random>
#include <utility>
#include <vector>

#include "hesselink/polynomial.hpp"
#include "hesselink/rational.hpp"
#include "hesselink/state_polytope.hpp"

namespace hesselink::oracle {

struct NearestPoint {
  RatVec nearest;
  Rational delta_squared;
};

// Exhaustive minimum-norm point over conv(points): project the center onto
// the affine hull of every affinely independent subset, keep projections
// that land inside the subset's convex hull, take the closest. Exponential,
// exact, and independent of the solver under test.
NearestPoint brute_force_nearest(const std::vector<RatVec>& points,
                                 const RatVec& center);

// Coefficient list of f * g by direct convolution, sorted canonically.
std::vector<std::pair<Monomial, Rational>> convolve(
    const HomogeneousPolynomial& f, const HomogeneousPolynomial& g);

// Terms of the partial derivative df/dx_i (possibly empty).
std::vector<std::pair<Monomial, Rational>> derivative(
    const HomogeneousPolynomial& f, int i);

// True iff f and all its partial derivatives vanish at the point.
bool singular_at(const HomogeneousPolynomial& f, const RatVec& point);

// Deterministic random instances. All draw from the passed engine only.
StateSet random_state(std::mt19937_64& rng);
HomogeneousPolynomial random_sparse_polynomial(std::mt19937_64& rng,
                                               int max_r, int max_d);
Monomial random_weakly_increasing_exponents(std::mt19937_64& rng, int r,
                                            int max_d);

}  // namespace hesselink::oracle
