// The built-in collection of named expansions for e and pi: each entry
// carries its terms, the constant it converges to, a proof status, optional
// closed-form convergent formulas, and any corrections applied to the
// sources it was copied from.  Reference decimals for e and pi are computed
// on demand from exact rational brackets with proven tail bounds.

#pragma once

#include <string>
#include <utility>
#include <vector>

#include "gcflab/cf.hpp"

namespace gcflab {

struct unknown_entry : std::out_of_range {
  explicit unknown_entry(const std::string& name)
      : std::out_of_range("no catalog entry named \"" + name + "\"") {}
};

struct no_oracle : std::logic_error {
  explicit no_oracle(const std::string& name)
      : std::logic_error("entry \"" + name + "\" has no closed-form convergent oracle") {}
};

enum class constant_base { e, pi };

// scale * base + offset
struct constant_expr {
  constant_base base = constant_base::e;
  rational scale = 1;
  rational offset = 0;

  std::string str() const;  // e.g. "(1/2)e", "pi/3", "-(1/2)pi - 1"
};

// theorem: proved (here or in a cited source); classical: long-established;
// conjecture: numeric evidence only, never held to exactness
enum class entry_status { theorem, conjecture, classical };

std::string status_name(entry_status s);

struct catalog_entry {
  std::string name;
  cf_spec spec;
  constant_expr target;
  entry_status status = entry_status::theorem;
  bool has_oracle = false;
  std::vector<std::string> errata;  // corrections applied, kept visible
};

// All entries, in a fixed presentation order.
const std::vector<catalog_entry>& catalog_entries();
const catalog_entry& catalog_get(const std::string& name);  // throws unknown_entry

// Derangement count D(n): permutations of n elements with no fixed point.
integer subfactorial(long n);

// Closed-form (A_n, B_n) for entries that have one ("e_half", "e_minus_2",
// both for n >= 1); exact, independent of the recurrence.
std::pair<rational, rational> oracle_convergent(const std::string& name, long n);

// Decimal expansion of the base constant, truncated toward zero, correct in
// every digit: computed by narrowing an exact rational bracket until both
// ends truncate identically.  Guard digits beyond the request are computed
// and memoized per process.
decimal_string reference_constant(constant_base base, int digits);

// Same guarantee for scale * base + offset.
decimal_string target_decimal(const constant_expr& expr, int digits);

struct verify_report {
  std::string name;
  entry_status status = entry_status::theorem;
  long depth = 0;
  backend kind = backend::exact;
  int precision = 0;  // approx backend only
  int digits_matched = 0;
  int threshold = 0;
  bool passed = false;
  std::string value;  // decimal rendering of the computed convergent
  std::vector<std::string> errata;
};

// Evaluates the entry at the given depth and counts matching decimal digits
// against the target constant; passes when digits_matched >= threshold.
// Conjecture entries report like any other — policy about whether their
// failures matter belongs to the caller.
verify_report verify_entry(const std::string& name, long depth, backend kind,
                           int digit_threshold,
                           int precision = approx_real::default_precision);

}  // namespace gcflab
