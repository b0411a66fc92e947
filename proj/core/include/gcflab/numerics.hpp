// Exact rational arithmetic plus a fixed-precision binary float wrapper.
// Everything else in the library is defined in terms of these value types.

#pragma once

#include <gmpxx.h>
#include <mpfr.h>

#include <stdexcept>
#include <string>

namespace gcflab {

using integer = mpz_class;
using rational = mpq_class;

struct zero_denominator : std::domain_error {
  zero_denominator() : std::domain_error("rational with zero denominator") {}
  explicit zero_denominator(const std::string& what) : std::domain_error(what) {}
};

struct insufficient_reference_digits : std::domain_error {
  explicit insufficient_reference_digits(int have)
      : std::domain_error("reference decimal has only " + std::to_string(have) +
                          " digits, not enough to resolve the comparison") {}
};

struct parse_error : std::runtime_error {
  explicit parse_error(const std::string& what) : std::runtime_error(what) {}
};

// Builds a canonical rational (positive denominator, reduced, 0 -> 0/1).
rational rat_make(const integer& num, const integer& den);

// "p/q" with q omitted when it is 1; the only textual form used in files.
rational rational_from_string(const std::string& text);
std::string rational_to_string(const rational& value);

// A decimal rendering: sign, integer digits and a fixed count of fractional
// digits obtained by truncation toward zero (never rounding).  Truncation
// keeps digit matching monotone: extending the digit count refines the value
// without ever contradicting a shorter rendering.
struct decimal_string {
  bool negative = false;
  std::string int_digits = "0";  // no sign, no leading zeros
  std::string frac_digits;

  int digit_count() const { return static_cast<int>(frac_digits.size()); }
  std::string str() const;
  rational value() const;  // the exact rational the digits denote

  static decimal_string parse(const std::string& text);
};

decimal_string rat_to_decimal(const rational& value, int digits);

// Arbitrary-precision binary float with explicit precision and
// round-to-nearest semantics.  Binary operations carry the larger of the two
// operand precisions, so precision never degrades silently.
class approx_real {
 public:
  static constexpr int default_precision = 256;

  explicit approx_real(int precision = default_precision);
  approx_real(const rational& value, int precision = default_precision);
  approx_real(const integer& value, int precision = default_precision);
  approx_real(long value, int precision = default_precision);
  approx_real(const approx_real& other);
  approx_real(approx_real&& other) noexcept;
  approx_real& operator=(const approx_real& other);
  approx_real& operator=(approx_real&& other) noexcept;
  ~approx_real();

  int precision() const { return prec_; }
  bool is_zero() const { return mpfr_zero_p(value_) != 0; }
  int sign() const { return mpfr_sgn(value_); }
  // Binary exponent of the value; only meaningful when nonzero.
  long exponent() const { return mpfr_get_exp(value_); }

  approx_real& operator+=(const approx_real& rhs);
  approx_real& operator-=(const approx_real& rhs);
  approx_real& operator*=(const approx_real& rhs);
  approx_real& operator/=(const approx_real& rhs);
  approx_real operator-() const;
  approx_real abs() const;

  // Scales by 2^e.  This is exact at any precision, which is what makes it
  // safe to use for in-flight renormalization of recurrence state.
  void mul_2exp(long e);

  // Every finite float is a dyadic rational; the conversion is exact.
  rational to_rational() const;
  decimal_string to_decimal(int digits) const;

  int compare(const approx_real& rhs) const { return mpfr_cmp(value_, rhs.value_); }
  int compare(const rational& rhs) const { return mpfr_cmp_q(value_, rhs.get_mpq_t()); }

  mpfr_srcptr raw() const { return value_; }
  mpfr_ptr raw() { return value_; }

 private:
  mpfr_t value_;
  int prec_;
};

approx_real operator+(const approx_real& a, const approx_real& b);
approx_real operator-(const approx_real& a, const approx_real& b);
approx_real operator*(const approx_real& a, const approx_real& b);
approx_real operator/(const approx_real& a, const approx_real& b);

inline bool operator<(const approx_real& a, const approx_real& b) { return a.compare(b) < 0; }
inline bool operator==(const approx_real& a, const approx_real& b) { return a.compare(b) == 0; }

// The largest d >= 0 with |x - y| < 10^-d (so 0 whenever they differ by one
// or more).  The strict inequality matters: a difference of exactly 10^-5
// matches 4 digits, not 5.  When x equals the reference exactly the answer is
// the reference's own digit count; when the difference is smaller than the
// reference can resolve (but not zero), the reference is too short to decide
// and insufficient_reference_digits is thrown.
int matched_digits(const rational& x, const decimal_string& y);
int matched_digits(const approx_real& x, const decimal_string& y);

}  // namespace gcflab
