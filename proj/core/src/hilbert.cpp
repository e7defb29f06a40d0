#include "hesselink/hilbert.hpp"

#include <stdexcept>
#include <string>

namespace hesselink {

HilbertValues hilbert_values(int r, int d, int t) {
  if (r < 1) throw std::domain_error("hilbert_values: need r >= 1");
  if (d < 1) throw std::domain_error("hilbert_values: need d >= 1");
  if (t < d)
    throw std::domain_error("hilbert_values: twist t = " + std::to_string(t) +
                            " below the regularity bound d = " +
                            std::to_string(d));
  Integer full = binomial(r + t, r);
  Integer complement = binomial(r + t - d, r);
  return HilbertValues{full - complement, complement};
}

}  // namespace hesselink
