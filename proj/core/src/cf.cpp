#include "gcflab/cf.hpp"

#include <chrono>

namespace gcflab {

term_rule term_rule::explicit_terms(std::vector<term_pair> terms) {
  term_rule r;
  r.head = std::move(terms);
  return r;
}

term_rule term_rule::closed_form(poly_quot a, poly_quot b) {
  term_rule r;
  r.slots.push_back({std::move(a), std::move(b)});
  return r;
}

term_rule term_rule::interleaved(std::vector<slot_pair> s) {
  if (s.empty()) throw std::invalid_argument("interleaved rule needs at least one slot");
  term_rule r;
  r.slots = std::move(s);
  return r;
}

term_rule term_rule::with_prefix(std::vector<term_pair> prefix, term_rule tail) {
  if (!tail.head.empty())
    throw std::invalid_argument("prefix must be given once, not nested");
  term_rule r;
  r.head = std::move(prefix);
  r.slots = std::move(tail.slots);
  return r;
}

term_pair term_rule::at(long n) const {
  if (n < 1) throw index_out_of_rule(n);
  if (n <= head_length()) return head[static_cast<std::size_t>(n - 1)];
  if (slots.empty()) throw index_out_of_rule(n);
  const long p = period();
  const std::size_t slot = static_cast<std::size_t>((n - 1) % p);
  const integer m((n + p - 1) / p);  // ceil(n/p); equals n when p = 1
  return {slots[slot].a.eval(m), slots[slot].b.eval(m)};
}

cf_state init_state(const rational& b0) {
  cf_state s;
  s.n = 0;
  s.A_prev = 1;
  s.A_curr = b0;
  s.B_prev = 0;
  s.B_curr = 1;
  s.a_product = 1;
  return s;
}

void step(cf_state& s, const rational& a, const rational& b) {
  rational A_next = b * s.A_curr + a * s.A_prev;
  rational B_next = b * s.B_curr + a * s.B_prev;
  s.A_prev = std::move(s.A_curr);
  s.A_curr = std::move(A_next);
  s.B_prev = std::move(s.B_curr);
  s.B_curr = std::move(B_next);
  s.a_product *= a;
  ++s.n;
}

rational convergent(const cf_state& s) {
  if (s.B_curr == 0) throw zero_denominator_convergent(s.n);
  return s.A_curr / s.B_curr;
}

rational determinant(const cf_state& s) {
  return s.A_curr * s.B_prev - s.A_prev * s.B_curr;
}

namespace {

eval_report evaluate_exact(const cf_spec& spec, long depth) {
  eval_report rep;
  rep.depth = depth;
  rep.kind = backend::exact;

  cf_state s = init_state(spec.b0);
  rational last = spec.b0;  // x_0 is always defined (B_0 = 1)
  std::optional<rational> before_last;
  long last_n = 0;
  for (long n = 1; n <= depth; ++n) {
    const term_pair t = spec.term(n);
    step(s, t);
    if (s.B_curr != 0) {
      before_last = std::move(last);
      last = s.A_curr / s.B_curr;
      last_n = n;
    }
  }
  rep.last_defined = last_n;
  if (before_last) rep.error_estimate = abs(last - *before_last);
  rep.value = std::move(last);
  return rep;
}

eval_report evaluate_approx(const cf_spec& spec, long depth, int precision) {
  eval_report rep;
  rep.depth = depth;
  rep.kind = backend::approx;
  rep.precision = precision;

  approx_real A_prev(1L, precision), A(spec.b0, precision);
  approx_real B_prev(0L, precision), B(1L, precision);
  approx_real last(spec.b0, precision);
  std::optional<approx_real> before_last;
  long last_n = 0;
  const long bound = precision / 2;

  for (long n = 1; n <= depth; ++n) {
    const term_pair t = spec.term(n);
    const approx_real a(t.a, precision), b(t.b, precision);
    approx_real A_next = b * A + a * A_prev;
    approx_real B_next = b * B + a * B_prev;
    A_prev = std::move(A);
    A = std::move(A_next);
    B_prev = std::move(B);
    B = std::move(B_next);
    if (!B.is_zero()) {
      const long e = B.exponent();
      if (e > bound || e < -bound) {
        // Dividing the whole window by 2^e leaves every ratio untouched.
        A_prev.mul_2exp(-e);
        A.mul_2exp(-e);
        B_prev.mul_2exp(-e);
        B.mul_2exp(-e);
        ++rep.renormalizations;
      }
      before_last = std::move(last);
      last = A / B;
      last_n = n;
    }
  }
  rep.last_defined = last_n;
  if (before_last) rep.approx_error = (last - *before_last).abs();
  rep.approx = std::move(last);
  return rep;
}

}  // namespace

eval_report evaluate(const cf_spec& spec, long depth, backend kind, int precision) {
  if (depth < 1) throw std::invalid_argument("evaluation depth must be >= 1");
  const auto t0 = std::chrono::steady_clock::now();
  eval_report rep = kind == backend::exact ? evaluate_exact(spec, depth)
                                           : evaluate_approx(spec, depth, precision);
  rep.wall_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
          .count();
  return rep;
}

rational eval_exact(const cf_spec& spec, long depth) {
  cf_state s = init_state(spec.b0);
  for (long n = 1; n <= depth; ++n) step(s, spec.term(n));
  return convergent(s);
}

std::vector<convergent_row> convergent_table(const cf_spec& spec, long depth) {
  std::vector<convergent_row> rows;
  rows.reserve(static_cast<std::size_t>(depth) + 1);
  cf_state s = init_state(spec.b0);
  convergent_row r0;
  r0.n = 0;
  r0.A = s.A_curr;
  r0.B = s.B_curr;
  r0.defined = true;
  r0.x = spec.b0;
  rows.push_back(std::move(r0));
  for (long n = 1; n <= depth; ++n) {
    const term_pair t = spec.term(n);
    step(s, t);
    convergent_row r;
    r.n = n;
    r.a = t.a;
    r.b = t.b;
    r.A = s.A_curr;
    r.B = s.B_curr;
    r.defined = s.B_curr != 0;
    if (r.defined) r.x = s.A_curr / s.B_curr;
    rows.push_back(std::move(r));
  }
  return rows;
}

}  // namespace gcflab
