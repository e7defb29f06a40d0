#pragma once

#include "hesselink/rational.hpp"

namespace hesselink {

// Hilbert data of a degree-d hypersurface in P^r at twist t >= d:
//   hilbert_polynomial = C(r+t, r) - C(r+t-d, r)   (dimension of the degree-t
//                        piece of the homogeneous coordinate ring)
//   complement        = C(r+t-d, r)                (codimension in the full
//                        space of degree-t forms; equals 1 at t = d)
// The Gotzmann regularity bound for this Hilbert polynomial is d itself,
// which is why t < d is rejected.
struct HilbertValues {
  Integer hilbert_polynomial;
  Integer complement;
};

// Throws std::domain_error unless r >= 1, d >= 1, t >= d.
HilbertValues hilbert_values(int r, int d, int t);

struct HilbertData {
  int r = 0;
  int d = 0;

  Integer P(int t) const { return hilbert_values(r, d, t).hilbert_polynomial; }
  Integer Q(int t) const { return hilbert_values(r, d, t).complement; }
  int gotzmann_bound() const { return d; }
};

}  // namespace hesselink
