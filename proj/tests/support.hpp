#pragma once

#include <string>

#include "oracle.hpp"
#include "stsp/hvector.hpp"
#include "stsp/rng.hpp"

namespace testing {

inline stsp::Scalar draw(const stsp::Ring& ring, stsp::Rng& rng, long bound = 8) {
  if (ring.is_finite()) return ring(static_cast<long>(rng.below(ring.modulus())));
  return ring(rng.uniform(-bound, bound));
}

inline stsp::HVector random_vector(const stsp::Ring& ring, int l, stsp::Rng& rng, long bound = 8) {
  stsp::HVector v(ring, l);
  for (int i : oracle::basis(l)) v.set(i, draw(ring, rng, bound));
  return v;
}

// w - u <c, w> / <c, u> is not available over general rings; instead take
// <c, w> u' - <c, u'> w for a second random u', which is orthogonal to c.
inline stsp::HVector orthogonal_to(const stsp::HVector& c, stsp::Rng& rng) {
  stsp::HVector w = random_vector(c.ring(), c.rank(), rng);
  stsp::HVector x = random_vector(c.ring(), c.rank(), rng);
  return x * stsp::form(c, w) - w * stsp::form(c, x);
}

}  // namespace testing
