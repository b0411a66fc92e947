// Generalized continued fractions b0 + a1/(b1 + a2/(b2 + ...)): term rules,
// the three-term recurrences for the convergent numerators/denominators, and
// evaluation in exact-rational or fixed-precision backends.

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gcflab/numerics.hpp"
#include "gcflab/poly.hpp"

namespace gcflab {

struct term_pair {
  rational a, b;
  bool operator==(const term_pair& o) const { return a == o.a && b == o.b; }
};

// One closed-form slot: partial numerator and denominator as functions of an
// integer argument (a polynomial is just a quotient with denominator 1).
struct slot_pair {
  poly_quot a, b;
  bool operator==(const slot_pair& o) const { return a == o.a && b == o.b; }
};

struct index_out_of_rule : std::out_of_range {
  explicit index_out_of_rule(long n)
      : std::out_of_range("term index " + std::to_string(n) +
                          " is beyond the explicit rule") {}
};

struct zero_denominator_convergent : std::domain_error {
  explicit zero_denominator_convergent(long n)
      : std::domain_error("convergent undefined: B_" + std::to_string(n) + " = 0") {}
};

// Produces (a_n, b_n) for n >= 1.  The representation is uniform: an explicit
// head for n = 1..head(), then closed-form slots cycling with the period,
// indexed by the *global* position n (slot (n-1) mod p, evaluated at the
// block index ceil(n/p)).  The familiar shapes are special cases:
//   explicit list        head only, period 0
//   single closed form   period 1 (slot evaluated at n itself)
//   interleaved          period >= 2
//   explicit prefix + closed tail   head plus any of the above
struct term_rule {
  std::vector<term_pair> head;
  std::vector<slot_pair> slots;

  static term_rule explicit_terms(std::vector<term_pair> terms);
  static term_rule closed_form(poly_quot a, poly_quot b);
  static term_rule interleaved(std::vector<slot_pair> s);
  static term_rule with_prefix(std::vector<term_pair> prefix, term_rule tail);

  int period() const { return static_cast<int>(slots.size()); }
  bool finite() const { return slots.empty(); }
  long head_length() const { return static_cast<long>(head.size()); }

  // Throws index_out_of_rule past a finite rule, zero_denominator at a slot
  // pole.
  term_pair at(long n) const;

  bool operator==(const term_rule& o) const {
    return head == o.head && slots == o.slots;
  }
};

struct cf_spec {
  rational b0;
  term_rule rule;
  std::string name;  // optional label, carried through files

  term_pair term(long n) const { return rule.at(n); }
};

// Rolling window of the convergent recurrences
//   A_n = b_n A_{n-1} + a_n A_{n-2},   B_n = b_n B_{n-1} + a_n B_{n-2}
// seeded with A_{-1} = 1, A_0 = b0, B_{-1} = 0, B_0 = 1, plus the running
// product of the a_k (which the determinant identity is checked against).
struct cf_state {
  long n = 0;
  rational A_curr, A_prev;
  rational B_curr, B_prev;
  rational a_product;
};

cf_state init_state(const rational& b0);
void step(cf_state& s, const rational& a, const rational& b);
inline void step(cf_state& s, const term_pair& t) { step(s, t.a, t.b); }

// A_n/B_n; throws zero_denominator_convergent when B_n = 0 (the caller may
// keep stepping — a vanishing B_n at one index is not fatal).
rational convergent(const cf_state& s);

// A_n B_{n-1} - A_{n-1} B_n, which must equal (-1)^(n-1) * prod a_k.
rational determinant(const cf_state& s);

enum class backend { exact, approx };

struct eval_report {
  long depth = 0;         // requested
  long last_defined = 0;  // largest n <= depth with B_n != 0
  backend kind = backend::exact;
  int precision = 0;  // bits, approx backend only

  std::optional<rational> value;      // exact backend
  std::optional<approx_real> approx;  // approx backend

  // Heuristic |x_n - x_m| over the last two defined convergents; absent when
  // fewer than two exist.  Not a rigorous bound.
  std::optional<rational> error_estimate;
  std::optional<approx_real> approx_error;

  long renormalizations = 0;  // power-of-two rescales in the approx backend
  double wall_ms = 0.0;
};

// Folds the recurrences over terms 1..depth.  The exact backend carries full
// rationals; the approx backend runs the same recurrence at the stated
// precision, rescaling all four state values by a power of two whenever the
// denominator's binary exponent leaves [-p/2, p/2] (the ratio is unchanged).
eval_report evaluate(const cf_spec& spec, long depth, backend kind,
                     int precision = approx_real::default_precision);

// Convenience: exact value at exactly this depth (no skipping); throws
// zero_denominator_convergent when B_depth = 0.
rational eval_exact(const cf_spec& spec, long depth);

struct convergent_row {
  long n = 0;
  rational a, b;  // the step's terms (zero at n=0)
  rational A, B;
  bool defined = false;
  rational x;  // A/B when defined
};

// Rows for n = 0..depth, including the undefined ones.
std::vector<convergent_row> convergent_table(const cf_spec& spec, long depth);

}  // namespace gcflab
