#include "gcflab/numerics.hpp"

#include <cctype>
#include <utility>

namespace gcflab {

rational rat_make(const integer& num, const integer& den) {
  if (den == 0) throw zero_denominator();
  rational r(num, den);
  r.canonicalize();
  return r;
}

namespace {

integer integer_from_string(const std::string& text) {
  if (text.empty()) throw parse_error("empty integer literal");
  const bool negative = text[0] == '-';
  std::size_t i = (text[0] == '-' || text[0] == '+') ? 1 : 0;
  if (i == text.size()) throw parse_error("sign without digits: '" + text + "'");
  for (std::size_t k = i; k < text.size(); ++k)
    if (!std::isdigit(static_cast<unsigned char>(text[k])))
      throw parse_error("bad integer literal: '" + text + "'");
  // Base must be explicit: the auto-detecting constructor would read a
  // leading zero as octal.
  integer out(text.substr(i), 10);
  return negative ? integer(-out) : out;
}

}  // namespace

rational rational_from_string(const std::string& text) {
  const auto slash = text.find('/');
  if (slash == std::string::npos) return rational(integer_from_string(text));
  const integer num = integer_from_string(text.substr(0, slash));
  const integer den = integer_from_string(text.substr(slash + 1));
  if (den == 0) throw zero_denominator();
  return rat_make(num, den);
}

std::string rational_to_string(const rational& value) {
  if (value.get_den() == 1) return value.get_num().get_str();
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

std::string decimal_string::str() const {
  std::string out;
  if (negative) out += '-';
  out += int_digits;
  if (!frac_digits.empty()) {
    out += '.';
    out += frac_digits;
  }
  return out;
}

rational decimal_string::value() const {
  integer scaled(int_digits + frac_digits, 10);
  if (negative) scaled = -scaled;
  integer denom = 1;
  for (int i = 0; i < digit_count(); ++i) denom *= 10;
  return rat_make(scaled, denom);
}

decimal_string decimal_string::parse(const std::string& text) {
  decimal_string out;
  std::size_t i = 0;
  if (i < text.size() && (text[i] == '-' || text[i] == '+')) {
    out.negative = text[i] == '-';
    ++i;
  }
  std::string ip, fp;
  for (; i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])); ++i)
    ip += text[i];
  if (i < text.size()) {
    if (text[i] != '.') throw parse_error("bad decimal literal: '" + text + "'");
    for (++i; i < text.size(); ++i) {
      if (!std::isdigit(static_cast<unsigned char>(text[i])))
        throw parse_error("bad decimal literal: '" + text + "'");
      fp += text[i];
    }
  }
  if (ip.empty() && fp.empty()) throw parse_error("bad decimal literal: '" + text + "'");
  if (ip.empty()) ip = "0";
  // normalize leading zeros ("007" -> "7") while keeping a lone zero
  const auto nz = ip.find_first_not_of('0');
  ip = (nz == std::string::npos) ? "0" : ip.substr(nz);
  out.int_digits = ip;
  out.frac_digits = fp;
  return out;
}

decimal_string rat_to_decimal(const rational& value, int digits) {
  if (digits < 0) throw std::invalid_argument("negative digit count");
  decimal_string out;
  out.negative = sgn(value) < 0;
  integer num = ::abs(value.get_num());
  const integer& den = value.get_den();
  integer ipart = num / den;  // both nonnegative: plain truncation
  integer rem = num - ipart * den;
  out.int_digits = ipart.get_str();
  if (digits > 0) {
    integer scale = 1;
    for (int i = 0; i < digits; ++i) scale *= 10;
    integer frac = rem * scale / den;
    std::string fd = frac.get_str();
    out.frac_digits = std::string(static_cast<std::size_t>(digits) - fd.size(), '0') + fd;
  }
  return out;
}

// ---- approx_real -----------------------------------------------------------

approx_real::approx_real(int precision) : prec_(precision) {
  mpfr_init2(value_, precision);
  mpfr_set_zero(value_, 1);
}

approx_real::approx_real(const rational& value, int precision) : prec_(precision) {
  mpfr_init2(value_, precision);
  mpfr_set_q(value_, value.get_mpq_t(), MPFR_RNDN);
}

approx_real::approx_real(const integer& value, int precision) : prec_(precision) {
  mpfr_init2(value_, precision);
  mpfr_set_z(value_, value.get_mpz_t(), MPFR_RNDN);
}

approx_real::approx_real(long value, int precision) : prec_(precision) {
  mpfr_init2(value_, precision);
  mpfr_set_si(value_, value, MPFR_RNDN);
}

approx_real::approx_real(const approx_real& other) : prec_(other.prec_) {
  mpfr_init2(value_, prec_);
  mpfr_set(value_, other.value_, MPFR_RNDN);
}

approx_real::approx_real(approx_real&& other) noexcept : prec_(other.prec_) {
  mpfr_init2(value_, prec_);
  mpfr_swap(value_, other.value_);
}

approx_real& approx_real::operator=(const approx_real& other) {
  if (this != &other) {
    mpfr_set_prec(value_, other.prec_);
    prec_ = other.prec_;
    mpfr_set(value_, other.value_, MPFR_RNDN);
  }
  return *this;
}

approx_real& approx_real::operator=(approx_real&& other) noexcept {
  if (this != &other) {
    mpfr_swap(value_, other.value_);
    std::swap(prec_, other.prec_);
  }
  return *this;
}

approx_real::~approx_real() { mpfr_clear(value_); }

// Binary ops round once into the wider of the two operand precisions.
approx_real& approx_real::operator+=(const approx_real& rhs) {
  approx_real out(prec_ > rhs.prec_ ? prec_ : rhs.prec_);
  mpfr_add(out.value_, value_, rhs.value_, MPFR_RNDN);
  return *this = std::move(out);
}

approx_real& approx_real::operator-=(const approx_real& rhs) {
  approx_real out(prec_ > rhs.prec_ ? prec_ : rhs.prec_);
  mpfr_sub(out.value_, value_, rhs.value_, MPFR_RNDN);
  return *this = std::move(out);
}

approx_real& approx_real::operator*=(const approx_real& rhs) {
  approx_real out(prec_ > rhs.prec_ ? prec_ : rhs.prec_);
  mpfr_mul(out.value_, value_, rhs.value_, MPFR_RNDN);
  return *this = std::move(out);
}

approx_real& approx_real::operator/=(const approx_real& rhs) {
  approx_real out(prec_ > rhs.prec_ ? prec_ : rhs.prec_);
  mpfr_div(out.value_, value_, rhs.value_, MPFR_RNDN);
  return *this = std::move(out);
}

approx_real approx_real::operator-() const {
  approx_real out(prec_);
  mpfr_neg(out.value_, value_, MPFR_RNDN);
  return out;
}

approx_real approx_real::abs() const {
  approx_real out(prec_);
  mpfr_abs(out.value_, value_, MPFR_RNDN);
  return out;
}

void approx_real::mul_2exp(long e) { mpfr_mul_2si(value_, value_, e, MPFR_RNDN); }

rational approx_real::to_rational() const {
  if (!mpfr_number_p(value_)) throw std::domain_error("non-finite float has no rational value");
  rational out;
  mpfr_get_q(out.get_mpq_t(), value_);
  return out;
}

decimal_string approx_real::to_decimal(int digits) const {
  // Exact by construction: convert the dyadic value and truncate in integers.
  return rat_to_decimal(to_rational(), digits);
}

approx_real operator+(const approx_real& a, const approx_real& b) {
  approx_real out(a);
  out += b;
  return out;
}

approx_real operator-(const approx_real& a, const approx_real& b) {
  approx_real out(a);
  out -= b;
  return out;
}

approx_real operator*(const approx_real& a, const approx_real& b) {
  approx_real out(a);
  out *= b;
  return out;
}

approx_real operator/(const approx_real& a, const approx_real& b) {
  approx_real out(a);
  out /= b;
  return out;
}

// ---- digit matching --------------------------------------------------------

int matched_digits(const rational& x, const decimal_string& y) {
  const rational ref = y.value();
  const int have = y.digit_count();
  if (x == ref) return have;

  const rational diff = ::abs(x - ref);
  rational resolution(1);
  for (int i = 0; i < have; ++i) resolution /= 10;
  if (diff < resolution) throw insufficient_reference_digits(have);
  if (diff >= 1) return 0;

  int d = 0;
  rational t = diff * 10;
  while (t < 1) {
    ++d;
    t *= 10;
  }
  return d;
}

int matched_digits(const approx_real& x, const decimal_string& y) {
  return matched_digits(x.to_rational(), y);
}

}  // namespace gcflab
