#include "gcflab/catalog.hpp"

#include <algorithm>
#include <mutex>
#include <stdexcept>

#include "gcflab/transforms.hpp"

namespace gcflab {

namespace {

cf_spec renamed(cf_spec spec, const char* name) {
  spec.name = name;
  return spec;
}

// e/2 = 1 + 1/2 + 3/3 + 4/4 + 5/5 + ...
cf_spec e_half_spec() {
  return {rational(1),
          term_rule::with_prefix({{1, 2}}, term_rule::closed_form(polyq{1, 1},
                                                                  polyq{1, 1})),
          "e_half"};
}

// e - 2 = 1 + -1/1 + 2/1 + -1/1 + 3/1 + -1/1 + 4/1 + ...
cf_spec e_minus_2_spec() {
  return {rational(1),
          term_rule::interleaved({{poly_quot(polyq(rational(-1))), poly_quot(polyq(rational(1)))},
                                  {poly_quot(polyq{1, 1}), poly_quot(polyq(rational(1)))}}),
          "e_minus_2"};
}

// e = 3 + -1/4 + -2/5 + -3/6 + ...
cf_spec lu_wei_e_spec() {
  return {rational(3),
          term_rule::closed_form(poly_quot(polyq{0, -1}), poly_quot(polyq{3, 1})),
          "lu_wei_e"};
}

// -(pi+2)/2 = -3 + (-2.1)/(-3.2) + (-3.3)/(-3.3) + (-4.5)/(-3.4) + ...
// a_n = -(n+1)(2n-1), b_n = -3(n+1)
cf_spec pi_form1_spec() {
  return {rational(-3),
          term_rule::closed_form(poly_quot(polyq{1, -1, -2}), poly_quot(polyq{-3, -3})),
          "pi_plus_2_half_form1"};
}

// The published second form, verbatim: a_2 appears with a positive sign,
// which the sign identities cannot produce from form 1.
cf_spec pi_form2_printed_spec() {
  return {rational(3),
          term_rule::with_prefix({{-2, 6}, {9, 9}},
                                 term_rule::closed_form(poly_quot(polyq{1, -1, -2}),
                                                        poly_quot(polyq{3, 3}))),
          "pi_plus_2_half_form2_printed"};
}

// pi/4 = 0 + 1/1 + 1/2 + 9/2 + 25/2 + ... with a_n = (2n-3)^2 after the head
cf_spec brouncker_spec() {
  return {rational(0),
          term_rule::with_prefix({{1, 1}}, term_rule::closed_form(polyq{9, -12, 4},
                                                                  polyq{2})),
          "brouncker_pi_4"};
}

// (pi-3)/4 = 0 + 1/24 + 36/6 + 25/6 + 49/6 + ... with a_n = (2n-1)^2 after
// the head
cf_spec lange_spec() {
  return {rational(0),
          term_rule::with_prefix({{1, 24}, {36, 6}},
                                 term_rule::closed_form(polyq{1, -4, 4}, polyq{6})),
          "lange_pi_minus_3_4"};
}

// pi/3 with head (-6,-5), (-75, b2) and, from n = 3 on,
// a_n = (2n-1)(2n-5)(6n-11)^2(6n-7)^2 and b_n = 2(36n^2 - 72n + 31).
// The generating identity forces b2 = 62; the published head shows 63.
cf_spec pi_thirds_spec(bool printed) {
  const polyq a = polyq{-1, 2} * polyq{-5, 2} * polyq{-11, 6} * polyq{-11, 6} *
                  polyq{-7, 6} * polyq{-7, 6};
  const polyq b{62, -144, 72};
  return {rational(0),
          term_rule::with_prefix({{-6, -5}, {-75, printed ? 63 : 62}},
                                 term_rule::closed_form(a, b)),
          printed ? "pi_thirds_printed" : "pi_thirds"};
}

const rational half = rat_make(1, 2);

std::vector<catalog_entry> build_entries() {
  std::vector<catalog_entry> out;

  out.push_back({"e_half",
                 e_half_spec(),
                 {constant_base::e, half, 0},
                 entry_status::theorem,
                 true,
                 {"the source's proof line says a_n = n+1 for every n >= 1, "
                  "contradicting its own display where a_1 = 1; the display wins"}});

  out.push_back({"e_minus_2",
                 e_minus_2_spec(),
                 {constant_base::e, 1, -2},
                 entry_status::theorem,
                 true,
                 {"the published closed forms for the odd-index convergents lag the "
                  "actual sequences by one step; the oracle shifts their argument up "
                  "by one, which matches the recurrence exactly"}});

  out.push_back({"lu_wei_e",
                 lu_wei_e_spec(),
                 {constant_base::e, 1, 0},
                 entry_status::theorem,
                 false,
                 {}});

  out.push_back({"minus_e",
                 renamed(negate(lu_wei_e_spec()), "minus_e"),
                 {constant_base::e, -1, 0},
                 entry_status::theorem,
                 false,
                 {}});

  out.push_back({"minus_e_half",
                 renamed(negate(e_half_spec()), "minus_e_half"),
                 {constant_base::e, -half, 0},
                 entry_status::theorem,
                 false,
                 {"published with a_1 = 2, which evaluates to 1 - e; reaching -e/2 "
                  "requires a_1 = 1, the negation image of e_half used here"}});

  out.push_back({"two_minus_e",
                 renamed(negate(e_minus_2_spec()), "two_minus_e"),
                 {constant_base::e, -1, 2},
                 entry_status::theorem,
                 false,
                 {}});

  out.push_back({"e_minus_2_alt",
                 renamed(sign_flip(e_minus_2_spec()), "e_minus_2_alt"),
                 {constant_base::e, 1, -2},
                 entry_status::theorem,
                 false,
                 {}});

  out.push_back({"pi_plus_2_half_form1",
                 pi_form1_spec(),
                 {constant_base::pi, -half, -1},
                 entry_status::conjecture,
                 false,
                 {}});

  out.push_back({"pi_plus_2_half_form2",
                 renamed(negate(pi_form1_spec()), "pi_plus_2_half_form2"),
                 {constant_base::pi, half, 1},
                 entry_status::conjecture,
                 false,
                 {"published with a_2 = +9; negating form 1 gives a_2 = -9, used "
                  "here (the verbatim variant is pi_plus_2_half_form2_printed)"}});

  out.push_back({"pi_plus_2_half_form2_printed",
                 pi_form2_printed_spec(),
                 {constant_base::pi, half, 1},
                 entry_status::conjecture,
                 false,
                 {"verbatim from the source, a_2 = +9 included; evaluates near "
                  "2.7269 rather than (pi+2)/2 = 2.5708"}});

  out.push_back({"pi_plus_2_half_form3",
                 renamed(sign_flip(pi_form1_spec()), "pi_plus_2_half_form3"),
                 {constant_base::pi, -half, -1},
                 entry_status::conjecture,
                 false,
                 {}});

  out.push_back({"pi_plus_2_half_form4",
                 renamed(negate(sign_flip(pi_form1_spec())), "pi_plus_2_half_form4"),
                 {constant_base::pi, half, 1},
                 entry_status::conjecture,
                 false,
                 {"the published display carries form 2's a_2 sign through the "
                  "flip, showing a_2 = -9 where these terms have +9; the verbatim "
                  "variant is pi_plus_2_half_form4_printed"}});

  out.push_back({"pi_plus_2_half_form4_printed",
                 renamed(sign_flip(pi_form2_printed_spec()),
                         "pi_plus_2_half_form4_printed"),
                 {constant_base::pi, half, 1},
                 entry_status::conjecture,
                 false,
                 {"verbatim from the source (the sign-flip image of the verbatim "
                  "second form); same value near 2.7269, not (pi+2)/2"}});

  out.push_back({"brouncker_pi_4",
                 brouncker_spec(),
                 {constant_base::pi, rat_make(1, 4), 0},
                 entry_status::classical,
                 false,
                 {}});

  out.push_back({"lange_pi_minus_3_4",
                 lange_spec(),
                 {constant_base::pi, rat_make(1, 4), rat_make(-3, 4)},
                 entry_status::classical,
                 false,
                 {}});

  out.push_back({"pi_thirds",
                 pi_thirds_spec(false),
                 {constant_base::pi, rat_make(1, 3), 0},
                 entry_status::theorem,
                 false,
                 {"published head shows b_2 = 63; the fold of the generating series "
                  "forces 62 (the verbatim variant is pi_thirds_printed)",
                  "the published derivation also starts its generator at a_1 = 6/5 "
                  "where the folding rule gives 12/5, and drops a factor 4 from its "
                  "intermediate a_n; both corrected here"}});

  out.push_back({"pi_thirds_printed",
                 pi_thirds_spec(true),
                 {constant_base::pi, rat_make(1, 3), 0},
                 entry_status::conjecture,
                 false,
                 {"verbatim head with b_2 = 63, which breaks the partial-sum "
                  "identity; kept to make the misprint demonstrable"}});

  return out;
}

}  // namespace

std::string status_name(entry_status s) {
  switch (s) {
    case entry_status::theorem:
      return "theorem";
    case entry_status::conjecture:
      return "conjecture";
    case entry_status::classical:
      return "classical";
  }
  return "unknown";
}

std::string constant_expr::str() const {
  const std::string b = base == constant_base::e ? "e" : "pi";
  const auto scaled = [&](const rational& s) {
    const rational a = abs(s);
    if (a == 1) return b;
    if (a.get_num() == 1) return b + "/" + a.get_den().get_str();
    return "(" + rational_to_string(a) + ")" + b;
  };
  if (scale == 0) return rational_to_string(offset);
  std::string out;
  if (offset != 0 && sgn(scale) < 0) {
    // "2 - e" reads better than "-e + 2"
    out = rational_to_string(offset) + " - " + scaled(scale);
  } else {
    out = (sgn(scale) < 0 ? "-" : "") + scaled(scale);
    if (offset > 0) out += " + " + rational_to_string(offset);
    if (offset < 0) out += " - " + rational_to_string(rational(-offset));
  }
  return out;
}

const std::vector<catalog_entry>& catalog_entries() {
  static const std::vector<catalog_entry> entries = build_entries();
  return entries;
}

const catalog_entry& catalog_get(const std::string& name) {
  for (const catalog_entry& entry : catalog_entries())
    if (entry.name == name) return entry;
  throw unknown_entry(name);
}

integer subfactorial(long n) {
  if (n < 0) throw std::invalid_argument("subfactorial needs n >= 0");
  integer d = 1;  // D(0)
  for (long k = 1; k <= n; ++k) {
    d *= k;
    if (k % 2 == 0)
      d += 1;
    else
      d -= 1;
  }
  return d;
}

namespace {

integer factorial(long n) {
  integer f;
  mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
  return f;
}

}  // namespace

std::pair<rational, rational> oracle_convergent(const std::string& name, long n) {
  const catalog_entry& entry = catalog_get(name);
  if (!entry.has_oracle) throw no_oracle(name);
  if (n < 1) throw std::invalid_argument("oracle convergents start at n = 1");
  if (name == "e_half")
    return {rational(factorial(n + 2)) / 2, rational(subfactorial(n + 2))};
  // e_minus_2: interleave two closed families
  if (n % 2 == 1) {
    const long j = (n + 1) / 2;
    const integer d = subfactorial(j + 1);
    const integer num = factorial(j + 1) - 2 * d;
    return {rational(num), rational(d)};
  }
  const long m = n / 2;
  const integer d = subfactorial(m + 1) + subfactorial(m + 2);
  const integer num = factorial(m + 1) + factorial(m + 2) - 2 * d;
  return {rational(num), rational(d)};
}

namespace {

struct rat_bracket {
  rational lo, hi;  // lo <= x <= hi
};

rational pow10_inv(int digits) {
  integer p;
  mpz_ui_pow_ui(p.get_mpz_t(), 10, static_cast<unsigned long>(digits));
  return rat_make(1, p);
}

// sum 1/k! with the remainder after N terms bounded by 2/(N+1)!
rat_bracket e_bracket(const rational& tol) {
  rational sum = 1, term = 1;
  long k = 0;
  for (;;) {
    ++k;
    term /= k;
    sum += term;
    const rational rem = 2 * term / (k + 1);
    if (rem < tol) return {sum, sum + rem};
  }
}

// alternating partial sums straddle the limit, so two consecutive ones
// bracket it
rat_bracket arctan_bracket(const rational& x, const rational& tol) {
  const rational xx = x * x;
  rational power = x;
  rational prev = 0, curr = x;
  long j = 0;
  for (;;) {
    ++j;
    power *= xx;
    const rational t = power / (2 * j + 1);
    prev = curr;
    if (j % 2 == 1)
      curr -= t;
    else
      curr += t;
    if (t < tol) break;
  }
  return {std::min(prev, curr), std::max(prev, curr)};
}

// 16 arctan(1/5) - 4 arctan(1/239)
rat_bracket pi_bracket(const rational& tol) {
  const rational part = tol / 32;
  const rat_bracket a5 = arctan_bracket(rat_make(1, 5), part);
  const rat_bracket a239 = arctan_bracket(rat_make(1, 239), part);
  return {16 * a5.lo - 4 * a239.hi, 16 * a5.hi - 4 * a239.lo};
}

// widest tolerance achieved so far per base, guarded for concurrent verify
// fan-out
std::mutex bracket_mutex;

rat_bracket base_bracket(constant_base base, int tol_digits) {
  struct cached {
    int tol = -1;
    rat_bracket br;
  };
  static cached cache[2];
  std::lock_guard<std::mutex> lock(bracket_mutex);
  cached& c = cache[base == constant_base::pi ? 1 : 0];
  if (c.tol < tol_digits) {
    const rational tol = pow10_inv(tol_digits);
    c.br = base == constant_base::e ? e_bracket(tol) : pi_bracket(tol);
    c.tol = tol_digits;
  }
  return c.br;
}

}  // namespace

decimal_string target_decimal(const constant_expr& expr, int digits) {
  if (digits < 1) throw std::invalid_argument("reference decimals need digits >= 1");
  // fifth of the request as guard digits, and keep narrowing until both
  // bracket ends truncate to the same digit string
  int tol = digits + digits / 5 + 4;
  for (int attempt = 0; attempt < 64; ++attempt) {
    const rat_bracket base = base_bracket(expr.base, tol);
    rational lo = expr.scale * base.lo + expr.offset;
    rational hi = expr.scale * base.hi + expr.offset;
    if (lo > hi) std::swap(lo, hi);
    const decimal_string dlo = rat_to_decimal(lo, digits);
    const decimal_string dhi = rat_to_decimal(hi, digits);
    if (dlo.str() == dhi.str()) return dlo;
    tol += 8 + tol / 4;
  }
  throw std::runtime_error("reference bracket failed to settle; is the target rational?");
}

decimal_string reference_constant(constant_base base, int digits) {
  return target_decimal({base, 1, 0}, digits);
}

verify_report verify_entry(const std::string& name, long depth, backend kind,
                           int digit_threshold, int precision) {
  const catalog_entry& entry = catalog_get(name);
  const eval_report ev = evaluate(entry.spec, depth, kind, precision);

  verify_report rep;
  rep.name = entry.name;
  rep.status = entry.status;
  rep.depth = depth;
  rep.kind = kind;
  rep.precision = kind == backend::approx ? precision : 0;
  rep.threshold = digit_threshold;
  rep.errata = entry.errata;

  int ref_digits = std::max(digit_threshold + 8, 12);
  for (;;) {
    const decimal_string ref = target_decimal(entry.target, ref_digits);
    try {
      rep.digits_matched = kind == backend::exact ? matched_digits(*ev.value, ref)
                                                  : matched_digits(*ev.approx, ref);
      break;
    } catch (const insufficient_reference_digits&) {
      // the value sits closer to the target than the reference resolves;
      // only exact equality could recurse forever, and matched_digits
      // already short-circuits that case
      ref_digits *= 2;
      if (ref_digits > 1 << 20) throw;
    }
  }
  rep.passed = rep.digits_matched >= digit_threshold;

  const int shown = std::max(rep.digits_matched + 2, 8);
  rep.value = kind == backend::exact ? rat_to_decimal(*ev.value, shown).str()
                                     : ev.approx->to_decimal(shown).str();
  return rep;
}

}  // namespace gcflab
