#include "hesselink/multiplicity.hpp"

#include <stdexcept>

namespace hesselink {

MultiplicityReport multiplicity_at(const HomogeneousPolynomial& f,
                                   const ProjectivePoint& p) {
  if (p.r() != f.r())
    throw std::invalid_argument("point dimension does not match polynomial");
  HomogeneousPolynomial moved = act(move_point_to_e(p), f);
  // With the point at e0 = [1:0:...:0], dehomogenizing at x0 = 1 grades the
  // polynomial by total degree in the remaining variables, which is
  // d - (x0-exponent). The multiplicity is the lowest grade present.
  int max_x0 = 0;
  for (const auto& m : moved.support()) max_x0 = std::max(max_x0, m[0]);
  return MultiplicityReport{p, f.degree() - max_x0, std::move(moved)};
}

MultiplicityReport max_multiplicity(
    const HomogeneousPolynomial& f,
    const std::vector<ProjectivePoint>& extra_candidates) {
  std::vector<ProjectivePoint> candidates;
  for (int i = 0; i <= f.r(); ++i)
    candidates.push_back(ProjectivePoint::coordinate_point(f.r(), i));
  for (const auto& p : extra_candidates) candidates.push_back(p);

  std::optional<MultiplicityReport> best;
  for (const auto& p : candidates) {
    MultiplicityReport report = multiplicity_at(f, p);
    if (!best.has_value() || report.value > best->value)
      best = std::move(report);
  }
  return *best;  // candidate list is never empty
}

bool check_leading_exponent(const HomogeneousPolynomial& f) {
  int max_x0 = 0;
  for (const auto& m : f.support()) max_x0 = std::max(max_x0, m[0]);
  int n = f.degree() - max_x0;
  bool attained = false;
  for (const auto& m : f.support()) {
    if (m[0] > f.degree() - n) return false;
    if (m[0] == f.degree() - n) attained = true;
  }
  return attained;
}

BoundsReport hesselink_bounds(const StratumLabel& label, int d, int r) {
  if (d < 1 || r < 1) throw std::invalid_argument("bounds need d, r >= 1");
  const OneParamSubgroup& lambda = label.lambda_class;
  Integer a = lambda.min_weight();
  Integer b = lambda.max_weight();
  if (a >= b) throw std::invalid_argument("degenerate weight spread");

  Rational lower = make_rational(label.mu - a * d, b - a);
  Rational upper = make_rational(Integer(r) * d, Integer(r + 1)) -
                   Rational(a) * Rational(label.mu) /
                       Rational(lambda.norm_squared());
  BoundsReport report{lower, upper, lambda, label.mu, a, b, d, r};
  if (!(lower <= upper))
    throw std::logic_error("multiplicity bounds crossed; label is malformed");
  return report;
}

SingularityCheck check_singular_if_unstable(const StratumLabel& label, int d,
                                            int r) {
  SingularityCheck out;
  out.threshold = make_rational(Integer(d), Integer(r + 1));
  if (d < r + 1) {
    out.applicable = false;
    return out;
  }
  out.applicable = true;
  out.lower = hesselink_bounds(label, d, r).lower;
  out.implies_singular = out.lower > out.threshold;
  return out;
}

}  // namespace hesselink
