// Value-preserving (or value-negating) rewrites of a continued fraction's
// terms: the two sign identities, general scalar equivalence, and
// denominator clearing.

#pragma once

#include <vector>

#include "gcflab/cf.hpp"

namespace gcflab {

struct zero_scalar : std::domain_error {
  explicit zero_scalar(long n)
      : std::domain_error("equivalence scalar c_" + std::to_string(n) + " is zero") {}
};

// b0 -> -b0 and b_n -> -b_n for every n, partial numerators untouched; every
// convergent of the result is the exact negation of the input's.  Rule shape
// is preserved.
cf_spec negate(const cf_spec& spec);

// a_n -> -a_n for every n and b_n -> -b_n for odd n only (b0 untouched);
// every convergent is exactly preserved.  Closed-form rules stay closed-form:
// an odd period doubles (blocks split into odd/even positions), an even
// period is rewritten slot by slot.
cf_spec sign_flip(const cf_spec& spec);

// a_n -> c_n c_{n-1} a_n, b_n -> c_n b_n with c_0 = 1.  Scalars beyond the
// list are 1; every listed scalar must be nonzero.  The result is an
// explicit rule of exactly `depth` terms with convergents preserved.
cf_spec equivalence_scale(const cf_spec& spec, const std::vector<rational>& scalars,
                          long depth);

// The least positive rational c such that c*x and c*y are both integers:
// c = L/g with L = lcm(den(x), den(y)) and g = gcd(x*L, y*L).
rational least_positive_scalar(const rational& x, const rational& y);

// Chooses scalars making every term an integer while preserving all
// convergents, and returns an explicit rule of `depth` terms.
//
// For a spec with a single closed-form slot the scalars are chosen uniformly
// in n: the least-positive rule above is solved over rational functions of n
// (lcm/gcd in Z[n], integer content included) as a fixed point of the
// left-to-right chaining, so the scalar at index n is the generic minimum
// rather than the accidental per-value minimum.  Per-value minima are not
// forward-stable: a lucky cancellation at one index (the value-level gcd
// exceeding the generic one) poisons every later scalar.  When no consistent
// closed form exists, or any resulting term fails the integrality check, the
// transform falls back to the literal per-value chain, which always succeeds.
cf_spec clear_denominators(const cf_spec& spec, long depth);

}  // namespace gcflab
