#include "gcflab/poly.hpp"

#include <algorithm>

namespace gcflab {

polyq::polyq(const rational& constant) {
  if (constant != 0) c_.push_back(constant);
}

polyq::polyq(std::initializer_list<rational> coeffs) : c_(coeffs) { trim(); }

polyq::polyq(std::vector<rational> coeffs) : c_(std::move(coeffs)) { trim(); }

polyq polyq::variable() { return polyq{rational(0), rational(1)}; }

void polyq::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

rational polyq::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(c_.size())) return rational(0);
  return c_[static_cast<std::size_t>(i)];
}

const rational& polyq::leading() const {
  if (c_.empty()) throw std::logic_error("leading coefficient of zero polynomial");
  return c_.back();
}

rational polyq::eval(const rational& x) const {
  rational acc(0);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

polyq polyq::compose_affine(const rational& alpha, const rational& beta) const {
  // Horner with the affine image as the indeterminate.
  const polyq image{beta, alpha};
  polyq acc;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * image + polyq(*it);
  return acc;
}

rational polyq::content() const {
  if (c_.empty()) return rational(0);
  integer num_gcd = 0, den_lcm = 1;
  for (const rational& x : c_) {
    num_gcd = gcd(num_gcd, x.get_num());
    den_lcm = lcm(den_lcm, x.get_den());
  }
  return rat_make(::abs(num_gcd), den_lcm);
}

polyq polyq::primitive_part() const {
  if (c_.empty()) return polyq();
  polyq out = *this;
  out /= content();
  return out;
}

polyq polyq::operator-() const {
  polyq out = *this;
  for (rational& x : out.c_) x = -x;
  return out;
}

polyq& polyq::operator+=(const polyq& rhs) {
  if (c_.size() < rhs.c_.size()) c_.resize(rhs.c_.size(), rational(0));
  for (std::size_t i = 0; i < rhs.c_.size(); ++i) c_[i] += rhs.c_[i];
  trim();
  return *this;
}

polyq& polyq::operator-=(const polyq& rhs) {
  if (c_.size() < rhs.c_.size()) c_.resize(rhs.c_.size(), rational(0));
  for (std::size_t i = 0; i < rhs.c_.size(); ++i) c_[i] -= rhs.c_[i];
  trim();
  return *this;
}

polyq& polyq::operator*=(const polyq& rhs) {
  if (c_.empty() || rhs.c_.empty()) {
    c_.clear();
    return *this;
  }
  std::vector<rational> out(c_.size() + rhs.c_.size() - 1, rational(0));
  for (std::size_t i = 0; i < c_.size(); ++i)
    for (std::size_t j = 0; j < rhs.c_.size(); ++j) out[i + j] += c_[i] * rhs.c_[j];
  c_ = std::move(out);
  trim();
  return *this;
}

polyq& polyq::operator*=(const rational& scalar) {
  if (scalar == 0) {
    c_.clear();
    return *this;
  }
  for (rational& x : c_) x *= scalar;
  return *this;
}

polyq& polyq::operator/=(const rational& scalar) {
  if (scalar == 0) throw zero_denominator();
  for (rational& x : c_) x /= scalar;
  return *this;
}

polyq operator+(polyq a, const polyq& b) { return a += b; }
polyq operator-(polyq a, const polyq& b) { return a -= b; }
polyq operator*(const polyq& a, const polyq& b) {
  polyq out = a;
  return out *= b;
}
polyq operator*(const rational& s, polyq p) { return p *= s; }
polyq operator*(polyq p, const rational& s) { return p *= s; }

std::pair<polyq, polyq> poly_divmod(const polyq& a, const polyq& b) {
  if (b.is_zero()) throw zero_denominator();
  polyq rem = a;
  std::vector<rational> q(
      a.degree() >= b.degree() ? static_cast<std::size_t>(a.degree() - b.degree()) + 1 : 0,
      rational(0));
  while (!rem.is_zero() && rem.degree() >= b.degree()) {
    const int shift = rem.degree() - b.degree();
    const rational factor = rem.leading() / b.leading();
    q[static_cast<std::size_t>(shift)] = factor;
    std::vector<rational> sub(static_cast<std::size_t>(shift), rational(0));
    sub.push_back(factor);
    rem -= polyq(std::move(sub)) * b;
  }
  return {polyq(std::move(q)), rem};
}

polyq poly_divexact(const polyq& a, const polyq& b) {
  auto [q, r] = poly_divmod(a, b);
  if (!r.is_zero()) throw std::domain_error("polynomial division is not exact");
  return q;
}

namespace {

// Euclidean gcd of the primitive parts, returned primitive with positive
// leading coefficient.
polyq primitive_gcd(polyq a, polyq b) {
  while (!b.is_zero()) {
    polyq r = poly_divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  polyq g = a.primitive_part();
  if (!g.is_zero() && g.leading() < 0) g = -g;
  return g;
}

rational content_gcd(const rational& a, const rational& b) {
  return rat_make(gcd(a.get_num(), b.get_num()), lcm(a.get_den(), b.get_den()));
}

rational content_lcm(const rational& a, const rational& b) {
  return rat_make(lcm(a.get_num(), b.get_num()), gcd(a.get_den(), b.get_den()));
}

}  // namespace

polyq poly_gcd(const polyq& a, const polyq& b) {
  if (a.is_zero() && b.is_zero()) return polyq();
  if (a.is_zero()) return b.content() * primitive_gcd(b, polyq());
  if (b.is_zero()) return a.content() * primitive_gcd(a, polyq());
  return content_gcd(a.content(), b.content()) * primitive_gcd(a, b);
}

polyq poly_lcm(const polyq& a, const polyq& b) {
  if (a.is_zero() || b.is_zero()) return polyq();
  polyq prim = poly_divexact(a.primitive_part() * b.primitive_part(),
                             primitive_gcd(a, b));
  if (prim.leading() < 0) prim = -prim;
  return content_lcm(a.content(), b.content()) * prim;
}

std::string polyq::str() const {
  if (c_.empty()) return "0";
  std::string out;
  for (int i = degree(); i >= 0; --i) {
    const rational x = coeff(i);
    if (x == 0) continue;
    const bool first = out.empty();
    if (!first) out += sgn(x) < 0 ? " - " : " + ";
    else if (sgn(x) < 0) out += "-";
    const rational mag = abs(x);
    const bool unit = mag == 1 && i > 0;
    if (!unit) {
      const std::string lit = rational_to_string(mag);
      // Parenthesize fractions next to the variable so "5/2n" cannot be
      // misread as 5/(2n).
      out += (mag.get_den() != 1 && i > 0) ? "(" + lit + ")" : lit;
    }
    if (i > 0) out += "n";
    if (i > 1) out += "^" + std::to_string(i);
  }
  return out;
}

// ---- poly_quot -------------------------------------------------------------

poly_quot::poly_quot(polyq num, polyq den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw zero_denominator();
  reduce();
}

void poly_quot::reduce() {
  if (num_.is_zero()) {
    den_ = polyq(rational(1));
    return;
  }
  const polyq g = poly_gcd(num_, den_);
  num_ = poly_divexact(num_, g);
  den_ = poly_divexact(den_, g);
  // Push the denominator's content (and sign) into the numerator.
  rational scale = den_.content();
  if (den_.leading() < 0) scale = -scale;
  num_ /= scale;
  den_ /= scale;
}

rational poly_quot::eval(const integer& n) const {
  const rational d = den_.eval(n);
  if (d == 0) throw zero_denominator();
  return num_.eval(n) / d;
}

poly_quot poly_quot::compose_affine(const rational& alpha, const rational& beta) const {
  return poly_quot(num_.compose_affine(alpha, beta), den_.compose_affine(alpha, beta));
}

poly_quot poly_quot::operator-() const {
  poly_quot out = *this;
  out.num_ = -out.num_;
  return out;
}

poly_quot& poly_quot::operator+=(const poly_quot& rhs) {
  return *this = poly_quot(num_ * rhs.den_ + rhs.num_ * den_, den_ * rhs.den_);
}

poly_quot& poly_quot::operator-=(const poly_quot& rhs) {
  return *this = poly_quot(num_ * rhs.den_ - rhs.num_ * den_, den_ * rhs.den_);
}

poly_quot& poly_quot::operator*=(const poly_quot& rhs) {
  return *this = poly_quot(num_ * rhs.num_, den_ * rhs.den_);
}

poly_quot& poly_quot::operator/=(const poly_quot& rhs) {
  if (rhs.num_.is_zero()) throw zero_denominator();
  return *this = poly_quot(num_ * rhs.den_, den_ * rhs.num_);
}

std::string poly_quot::str() const {
  if (is_polynomial()) return num_.str();
  const std::string n = num_.str();
  int terms = 0;
  for (const rational& x : num_.coeffs()) terms += x != 0;
  return (terms > 1 ? "(" + n + ")" : n) + " / (" + den_.str() + ")";
}

poly_quot operator+(poly_quot a, const poly_quot& b) { return a += b; }
poly_quot operator-(poly_quot a, const poly_quot& b) { return a -= b; }
poly_quot operator*(poly_quot a, const poly_quot& b) { return a *= b; }
poly_quot operator/(poly_quot a, const poly_quot& b) { return a /= b; }

}  // namespace gcflab
