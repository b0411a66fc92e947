// Turning other exact descriptions of a number into continued fraction
// terms: a convergent series can be folded so that the n-th convergent is
// exactly the n-th partial sum, and a pair of convergent sequences (A_n),
// (B_n) can be inverted back into the (a_n, b_n) that produce them.

#pragma once

#include <utility>
#include <vector>

#include "gcflab/cf.hpp"

namespace gcflab {

struct zero_series_term : std::domain_error {
  explicit zero_series_term(long k)
      : std::domain_error("series term c_" + std::to_string(k) + " is zero") {}
};

struct bad_initial_conditions : std::domain_error {
  explicit bad_initial_conditions(const std::string& what) : std::domain_error(what) {}
};

struct singular_step : std::domain_error {
  explicit singular_step(long n)
      : std::domain_error("sequence step " + std::to_string(n) +
                          " is singular: A_{n-1}B_{n-2} - A_{n-2}B_{n-1} = 0"),
        index(n) {}
  long index;
};

struct zero_b : std::domain_error {
  explicit zero_b(long k)
      : std::domain_error("ratio form needs B_" + std::to_string(k) + " nonzero"),
        index(k) {}
  long index;
};

// One summand (-1)^(k+1) num(k)/den(k), or num(k)/den(k) when `alternating`
// is off.  Poles at positive integers surface as zero_denominator on use.
struct signed_poly_quotient {
  polyq num;
  polyq den{rational(1)};
  bool alternating = false;

  // num(k)/den(k) without the sign
  rational magnitude(long k) const;
};

enum class series_kind { explicit_terms, quotient, sum };

// A series sum_{k>=1} c_k given either as a finite explicit list or in
// closed form (a signed polynomial quotient, or a like-signed sum of them).
// Terms must be nonzero; this is checked where each term is produced.
struct series_spec {
  series_kind kind = series_kind::explicit_terms;
  std::vector<rational> terms;               // kind explicit_terms
  std::vector<signed_poly_quotient> parts;   // kinds quotient / sum

  static series_spec from_terms(std::vector<rational> c);
  static series_spec from_quotient(signed_poly_quotient q);
  // all parts must carry the same `alternating` flag so the term ratio stays
  // a single rational function of k
  static series_spec from_sum(std::vector<signed_poly_quotient> summands);

  bool finite() const { return kind == series_kind::explicit_terms; }
  long length() const { return static_cast<long>(terms.size()); }
  bool alternating() const;

  // c_k; throws zero_series_term on a vanishing term, index_out_of_rule past
  // a finite list, zero_denominator at a pole
  rational term(long k) const;

  // the shared unsigned part of a closed-form series as one rational
  // function of k
  poly_quot magnitude_function() const;
};

// Exact c_1 + ... + c_n (n >= 1).
rational partial_sum(const series_spec& series, long n);

// Folds the series into a continued fraction whose n-th convergent equals
// the n-th partial sum exactly: b0 = 0, (a_1, b_1) = (2 c_1, 2), and for
// n >= 2 a_n = -4 c_n / c_{n-1}, b_n = 2 (c_n + c_{n-1}) / c_{n-1}.
// Closed-form input yields a closed-form rule (one slot after the first
// term), so the result is usable by clear_denominators; explicit input
// yields an explicit rule of the same length.
cf_spec series_to_cf(const series_spec& series);

// Prospective convergent numerators and denominators, both indexed from -1:
// position i of each list holds the value at index i-1.
struct sequence_pair {
  std::vector<rational> A, B;

  long max_index() const { return static_cast<long>(A.size()) - 2; }
  const rational& A_at(long n) const { return A[static_cast<std::size_t>(n + 1)]; }
  const rational& B_at(long n) const { return B[static_cast<std::size_t>(n + 1)]; }
};

// Inverts the three-term recurrence: finds b0 and (a_n, b_n) for
// 1 <= n <= max_index such that running the recurrence reproduces A and B
// exactly.  Requires A_{-1} = 1, B_{-1} = 0, B_0 = 1 (bad_initial_conditions)
// and A_{n-1}B_{n-2} - A_{n-2}B_{n-1} != 0 at every step (singular_step).
cf_spec sequences_to_cf(const sequence_pair& seqs);

// The same inversion at a single index n, rewritten in terms of the
// convergent ratios x_k = A_k/B_k:
//   b_n = (x_n - x_{n-2})/(x_{n-1} - x_{n-2}) * B_n/B_{n-1}
//   a_n = (x_{n-1} - x_n)/(x_{n-1} - x_{n-2}) * B_n/B_{n-2}
// Needs B_{n-2}, B_{n-1}, B_n all nonzero (zero_b, so never usable at n = 1
// where B_{-1} = 0).  Returns (a_n, b_n).
std::pair<rational, rational> rewrite_ratio_form(const sequence_pair& seqs, long n);

}  // namespace gcflab
