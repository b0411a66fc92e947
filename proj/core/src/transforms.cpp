#include "gcflab/transforms.hpp"

#include <optional>

namespace gcflab {

cf_spec negate(const cf_spec& spec) {
  term_rule r = spec.rule;
  for (term_pair& t : r.head) t.b = -t.b;
  for (slot_pair& s : r.slots) s.b = -s.b;
  return {-spec.b0, std::move(r), spec.name};
}

cf_spec sign_flip(const cf_spec& spec) {
  term_rule r;
  r.head.reserve(spec.rule.head.size());
  for (std::size_t i = 0; i < spec.rule.head.size(); ++i) {
    const term_pair& t = spec.rule.head[i];
    const bool odd = (i + 1) % 2 == 1;  // global index i+1
    r.head.push_back({-t.a, odd ? -t.b : t.b});
  }
  const auto& slots = spec.rule.slots;
  const long p = spec.rule.period();
  if (p > 0 && p % 2 == 0) {
    // Even period: each slot sees positions of a single parity, namely that
    // of s+1 (since n = s+1 mod p and p is even), so the rewrite is local.
    for (long s = 0; s < p; ++s) {
      poly_quot b = slots[static_cast<std::size_t>(s)].b;
      if (s % 2 == 0) b = -b;
      r.slots.push_back({-slots[static_cast<std::size_t>(s)].a, std::move(b)});
    }
  } else if (p > 0) {
    // Odd period: positions of one slot alternate parity across blocks, so
    // the period doubles.  New slot s' covers n = s'+1 mod 2p, whose old
    // block index is m = 2M-1 (s' < p) or m = 2M (s' >= p) in terms of the
    // new block index M, and whose parity is that of s'+1.
    for (long sp = 0; sp < 2 * p; ++sp) {
      const slot_pair& src = slots[static_cast<std::size_t>(sp % p)];
      const rational beta = sp < p ? rational(-1) : rational(0);
      poly_quot a = -(src.a.compose_affine(2, beta));
      poly_quot b = src.b.compose_affine(2, beta);
      if (sp % 2 == 0) b = -b;
      r.slots.push_back({std::move(a), std::move(b)});
    }
  }
  return {spec.b0, std::move(r), spec.name};
}

cf_spec equivalence_scale(const cf_spec& spec, const std::vector<rational>& scalars,
                          long depth) {
  for (std::size_t i = 0; i < scalars.size(); ++i)
    if (scalars[i] == 0) throw zero_scalar(static_cast<long>(i) + 1);
  std::vector<term_pair> out;
  out.reserve(static_cast<std::size_t>(depth));
  rational c_prev(1);
  for (long n = 1; n <= depth; ++n) {
    const term_pair t = spec.term(n);
    const rational c = n <= static_cast<long>(scalars.size())
                           ? scalars[static_cast<std::size_t>(n - 1)]
                           : rational(1);
    out.push_back({c * c_prev * t.a, c * t.b});
    c_prev = c;
  }
  return {spec.b0, term_rule::explicit_terms(std::move(out)), spec.name};
}

rational least_positive_scalar(const rational& x, const rational& y) {
  if (x == 0 && y == 0) return rational(1);
  const integer L = lcm(x.get_den(), y.get_den());
  const integer xL = x.get_num() * (L / x.get_den());
  const integer yL = y.get_num() * (L / y.get_den());
  return rat_make(L, gcd(xL, yL));
}

namespace {

// F written as N/D with N, D integer-coefficient and fully coprime (content
// included): D is v * den(F) where content(num(F)) = u/v in lowest terms.
polyq integer_denominator(const poly_quot& f) {
  if (f.num().is_zero()) return polyq(rational(1));
  return rational(f.num().content().get_den()) * f.den();
}

// One step of the left-to-right scalar recursion, carried out over rational
// functions: the least-positive rule c = lcm/gcd, with lcm/gcd taken in Z[n].
poly_quot clear_step(const slot_pair& slot, const poly_quot& prev_scalar_shifted) {
  const poly_quot& X = slot.b;
  const poly_quot Y = prev_scalar_shifted * slot.a;
  const polyq L = poly_lcm(integer_denominator(X), integer_denominator(Y));
  const polyq XL = (X * poly_quot(L)).num();
  const polyq YL = (Y * poly_quot(L)).num();
  return poly_quot(L, poly_gcd(XL, YL));
}

// sqrt(p*q) when p/q is a positive constant whose square root is rational.
std::optional<poly_quot> geometric_mean(const poly_quot& p, const poly_quot& q) {
  if (q.is_zero()) return std::nullopt;
  const poly_quot ratio = p / q;
  if (!ratio.is_polynomial() || ratio.num().degree() > 0) return std::nullopt;
  const rational rho = ratio.num().coeff(0);
  if (rho <= 0) return std::nullopt;
  const integer& rn = rho.get_num();
  const integer& rd = rho.get_den();
  if (mpz_perfect_square_p(rn.get_mpz_t()) == 0 ||
      mpz_perfect_square_p(rd.get_mpz_t()) == 0)
    return std::nullopt;
  const rational root = rat_make(sqrt(rn), sqrt(rd));
  return q * poly_quot(polyq(root));
}

// Fixed point of clear_step for a single-slot rule: the scalar family s(n)
// with s(n) = clear_step given s(n-1), solved by iteration from s = 1.  The
// iteration either settles, or lands on a period-2 orbit whose geometric
// mean is the actual solution (the orbit members differ by a constant square
// factor), or is abandoned.
std::optional<poly_quot> solve_scalar_family(const slot_pair& slot) {
  std::vector<poly_quot> history{poly_quot(polyq(rational(1)))};
  try {
    for (int k = 0; k < 12; ++k) {
      poly_quot next = clear_step(slot, history.back().compose_affine(1, -1));
      if (next == history.back()) return next;
      if (history.size() >= 2 && next == history[history.size() - 2]) {
        std::optional<poly_quot> geo = geometric_mean(next, history.back());
        if (geo && clear_step(slot, geo->compose_affine(1, -1)) == *geo) return geo;
        return std::nullopt;
      }
      history.push_back(std::move(next));
    }
  } catch (const zero_denominator&) {
    // degenerate slot (e.g. both parts identically zero)
  } catch (const std::domain_error&) {
  }
  return std::nullopt;
}

cf_spec clear_numeric(const cf_spec& spec, long depth) {
  std::vector<term_pair> out;
  out.reserve(static_cast<std::size_t>(depth));
  rational c_prev(1);
  for (long n = 1; n <= depth; ++n) {
    const term_pair t = spec.term(n);
    const rational c = least_positive_scalar(t.b, c_prev * t.a);
    out.push_back({c * c_prev * t.a, c * t.b});
    c_prev = c;
  }
  return {spec.b0, term_rule::explicit_terms(std::move(out)), spec.name};
}

}  // namespace

cf_spec clear_denominators(const cf_spec& spec, long depth) {
  const long head_len = spec.rule.head_length();
  if (spec.rule.period() == 1 && depth > head_len) {
    const std::optional<poly_quot> family = solve_scalar_family(spec.rule.slots[0]);
    if (family) {
      std::vector<term_pair> out;
      out.reserve(static_cast<std::size_t>(depth));
      rational c_prev(1);
      bool ok = true;
      for (long n = 1; n <= depth && ok; ++n) {
        const term_pair t = spec.term(n);
        rational c;
        if (n <= head_len) {
          c = least_positive_scalar(t.b, c_prev * t.a);
        } else if (family->defined_at(n)) {
          c = family->eval(n);
        } else {
          ok = false;
          break;
        }
        const rational a2 = c * c_prev * t.a;
        const rational b2 = c * t.b;
        // every scalar must be positive and every output term an integer,
        // including across the head/tail boundary
        if (c <= 0 || a2.get_den() != 1 || b2.get_den() != 1) {
          ok = false;
          break;
        }
        out.push_back({a2, b2});
        c_prev = c;
      }
      if (ok) return {spec.b0, term_rule::explicit_terms(std::move(out)), spec.name};
    }
  }
  return clear_numeric(spec, depth);
}

}  // namespace gcflab
