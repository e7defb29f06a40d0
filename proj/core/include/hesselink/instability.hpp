#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hesselink/group_action.hpp"
#include "hesselink/state_polytope.hpp"

namespace hesselink {

// Certified instability data for one hypersurface: a coordinate change
// witness_g and the worst torus direction found in those coordinates.
// delta_squared is a lower bound for the true stratum value; it is exact
// whenever the search visited an optimal coordinate frame.
struct StratumLabel {
  OneParamSubgroup lambda_class;    // canonical (sorted) Weyl representative
  Rational delta_squared;           // > 0
  Integer mu;                       // min pairing in witness coordinates
  OneParamSubgroup witness_lambda;  // worst direction for act(witness_g, f)
  GroupElement witness_g;
};

struct SearchConfig {
  int budget = 200;        // random coordinate changes to try
  uint64_t seed = 0;
  int entry_bound = 3;     // max |numerator| and denominator of random entries
  std::vector<ProjectivePoint> candidate_points;  // extra move targets
};

struct ClassificationResult {
  // Engaged iff some candidate frame had positive squared distance.
  std::optional<StratumLabel> label;
  // Honest wording: absence of a label only means the search found no
  // destabilizing direction within budget, not that none exists.
  std::string verdict;
  long frames_examined = 0;

  bool unstable() const { return label.has_value(); }
};

// Deterministic search for a destabilizing coordinate frame. Tries, in order:
// coordinate permutations; the move-a-point-to-e0 change for each coordinate
// point and each configured candidate point, composed with permutations;
// seeded random bounded-entry matrices; lower-triangular perturbations of the
// structured incumbent. Every returned label is re-verified from scratch
// before being returned. Same config, same result, byte for byte; enlarging
// the budget never lowers the returned delta_squared.
ClassificationResult classify(const HomogeneousPolynomial& f,
                              const SearchConfig& cfg = {});

// g = q * l with q a transposition and l lower triangular, chosen so that
// act_point(e0, g) == y. Moving a hypersurface by this element carries y to
// the distinguished point e0 = [1:0:...:0].
GroupElement move_point_to_e(const ProjectivePoint& y);

// Invariance of the torus analysis under a lower-triangular follow-up change
// of coordinates. Requires the worst direction of act(g, f) to exist with
// weakly increasing weights (throws HypothesisNotMet otherwise; conjugate by
// a permutation first). Meaningful when g realizes the incumbent maximum,
// which the caller is trusted to ensure. l must be lower triangular.
bool check_lower_triangular_invariance(const HomogeneousPolynomial& f,
                                       const GroupElement& g,
                                       const GroupElement& l);

// Torus analysis after moving p to e0: the destabilizing data a singular
// point contributes. Most useful when p lies on the hypersurface.
PolytopeAnalysis destabilize_at_point(const HomogeneousPolynomial& f,
                                      const ProjectivePoint& p);

}  // namespace hesselink
