#pragma once

#include <optional>
#include <vector>

#include "hesselink/instability.hpp"

namespace hesselink {

// Multiplicity of the hypersurface at a point, read off after moving the
// point to e0: value = d - (largest x0-exponent in the moved polynomial).
// 0 iff the point is off the hypersurface, >= 2 iff it is singular there.
struct MultiplicityReport {
  ProjectivePoint point;
  int value = 0;
  HomogeneousPolynomial moved;  // act(move_point_to_e(point), f)
};

MultiplicityReport multiplicity_at(const HomogeneousPolynomial& f,
                                   const ProjectivePoint& p);

// Largest multiplicity over the coordinate points plus any extra candidates,
// with a deterministic winner (first maximum in evaluation order).
MultiplicityReport max_multiplicity(
    const HomogeneousPolynomial& f,
    const std::vector<ProjectivePoint>& extra_candidates = {});

// After moving a point to e0 the leading x0-exponent must witness the
// multiplicity: no support monomial exceeds x0^(d-n) and some monomial
// attains it, where n is the multiplicity at e0.
bool check_leading_exponent(const HomogeneousPolynomial& f);

// Two-sided bound on the worst multiplicity of an unstable hypersurface in
// terms of its stratum data. With a = min weight, b = max weight of lambda:
//   lower = (mu - a*d) / (b - a)
//   upper = r*d/(r+1) - a*mu/||lambda||^2
// lower <= upper always holds for a certified label (checked).
struct BoundsReport {
  Rational lower;
  Rational upper;
  OneParamSubgroup lambda_class;
  Integer mu;
  Integer min_weight;  // a
  Integer max_weight;  // b
  int d = 0;
  int r = 0;

  bool contains(int n) const { return lower <= n && Rational(n) <= upper; }
};

BoundsReport hesselink_bounds(const StratumLabel& label, int d, int r);

// For d >= r+1 the lower multiplicity bound of any unstable hypersurface
// exceeds d/(r+1), forcing a point of multiplicity >= 2. Not applicable
// (nullopt fields) when d < r+1.
struct SingularityCheck {
  bool applicable = false;
  Rational lower;       // lower multiplicity bound from the label
  Rational threshold;   // d/(r+1)
  bool implies_singular = false;  // lower > threshold
};

SingularityCheck check_singular_if_unstable(const StratumLabel& label, int d,
                                            int r);

}  // namespace hesselink
