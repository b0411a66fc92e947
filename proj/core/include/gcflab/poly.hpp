// Dense univariate polynomials over the rationals, plus quotients of them.
// Term rules with closed forms are stored in these types, and the
// denominator-clearing transform does its generic-index reasoning here.

#pragma once

#include <string>
#include <utility>
#include <vector>

#include "gcflab/numerics.hpp"

namespace gcflab {

// Coefficients are stored constant-first with no trailing zeros, so the zero
// polynomial is the empty vector and degree() is size()-1.
class polyq {
 public:
  polyq() = default;
  polyq(const rational& constant);  // NOLINT: implicit by design
  polyq(std::initializer_list<rational> coeffs);
  explicit polyq(std::vector<rational> coeffs);

  static polyq variable();  // the monomial n

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  // Zero beyond the degree, so callers never bounds-check.
  rational coeff(int i) const;
  const rational& leading() const;
  const std::vector<rational>& coeffs() const { return c_; }

  rational eval(const rational& x) const;
  rational eval(const integer& n) const { return eval(rational(n)); }

  // P(alpha*x + beta): every reindexing this library needs is affine.
  polyq compose_affine(const rational& alpha, const rational& beta) const;

  // The positive rational c with (1/c)*P integer-coefficient and coprime;
  // zero for the zero polynomial.  primitive_part() keeps the leading sign.
  rational content() const;
  polyq primitive_part() const;

  polyq operator-() const;
  polyq& operator+=(const polyq& rhs);
  polyq& operator-=(const polyq& rhs);
  polyq& operator*=(const polyq& rhs);
  polyq& operator*=(const rational& scalar);
  polyq& operator/=(const rational& scalar);

  bool operator==(const polyq& rhs) const { return c_ == rhs.c_; }
  bool operator!=(const polyq& rhs) const { return c_ != rhs.c_; }

  // Human form in the variable n, e.g. "2n^2 - n + 5" or "(5/2)n - 1".
  std::string str() const;

 private:
  void trim();
  std::vector<rational> c_;
};

polyq operator+(polyq a, const polyq& b);
polyq operator-(polyq a, const polyq& b);
polyq operator*(const polyq& a, const polyq& b);
polyq operator*(const rational& s, polyq p);
polyq operator*(polyq p, const rational& s);

// Long division in Q[n]: a = q*b + r with deg r < deg b.  Dividing by zero
// throws zero_denominator; divexact additionally requires r = 0.
std::pair<polyq, polyq> poly_divmod(const polyq& a, const polyq& b);
polyq poly_divexact(const polyq& a, const polyq& b);

// gcd/lcm in the factorial ring Z[n]: integer content and primitive part are
// combined, so gcd(6n+6, 4n+4) is 2n+2, not n+1.  Results are canonical with
// positive leading coefficient; gcd(0,0) = 0 and lcm with zero is zero.
polyq poly_gcd(const polyq& a, const polyq& b);
polyq poly_lcm(const polyq& a, const polyq& b);

// A quotient of polynomials kept in lowest terms with a primitive,
// positive-leading denominator (so a polynomial always shows den = 1).
class poly_quot {
 public:
  poly_quot() : num_(rational(0)), den_(rational(1)) {}
  poly_quot(const polyq& p) : num_(p), den_(rational(1)) {}  // NOLINT
  poly_quot(polyq num, polyq den);

  const polyq& num() const { return num_; }
  const polyq& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.is_constant(); }

  // Throws zero_denominator at a pole.
  rational eval(const integer& n) const;
  bool defined_at(const integer& n) const { return den_.eval(n) != 0; }

  poly_quot compose_affine(const rational& alpha, const rational& beta) const;

  poly_quot operator-() const;
  poly_quot& operator+=(const poly_quot& rhs);
  poly_quot& operator-=(const poly_quot& rhs);
  poly_quot& operator*=(const poly_quot& rhs);
  poly_quot& operator/=(const poly_quot& rhs);

  bool operator==(const poly_quot& rhs) const {
    return num_ == rhs.num_ && den_ == rhs.den_;
  }
  bool operator!=(const poly_quot& rhs) const { return !(*this == rhs); }

  std::string str() const;

 private:
  void reduce();
  polyq num_, den_;
};

poly_quot operator+(poly_quot a, const poly_quot& b);
poly_quot operator-(poly_quot a, const poly_quot& b);
poly_quot operator*(poly_quot a, const poly_quot& b);
poly_quot operator/(poly_quot a, const poly_quot& b);

}  // namespace gcflab
