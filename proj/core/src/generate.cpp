#include "gcflab/generate.hpp"

#include <stdexcept>

namespace gcflab {

rational signed_poly_quotient::magnitude(long k) const {
  const integer kk(k);
  const rational bottom = den.eval(kk);
  if (bottom == 0) throw zero_denominator("series denominator vanishes at k = " +
                                          std::to_string(k));
  return num.eval(kk) / bottom;
}

series_spec series_spec::from_terms(std::vector<rational> c) {
  series_spec s;
  s.kind = series_kind::explicit_terms;
  s.terms = std::move(c);
  return s;
}

series_spec series_spec::from_quotient(signed_poly_quotient q) {
  if (q.den.is_zero()) throw zero_denominator("series denominator polynomial is zero");
  if (q.num.is_zero()) throw zero_series_term(1);
  series_spec s;
  s.kind = series_kind::quotient;
  s.parts.push_back(std::move(q));
  return s;
}

series_spec series_spec::from_sum(std::vector<signed_poly_quotient> summands) {
  if (summands.empty())
    throw std::invalid_argument("a series sum needs at least one summand");
  for (const signed_poly_quotient& q : summands) {
    if (q.den.is_zero())
      throw zero_denominator("series denominator polynomial is zero");
    if (q.alternating != summands.front().alternating)
      throw std::invalid_argument(
          "series summands must all alternate or all not alternate");
  }
  series_spec s;
  s.kind = series_kind::sum;
  s.parts = std::move(summands);
  if (s.magnitude_function().is_zero()) throw zero_series_term(1);
  return s;
}

bool series_spec::alternating() const {
  return !parts.empty() && parts.front().alternating;
}

rational series_spec::term(long k) const {
  if (k < 1) throw std::invalid_argument("series index must be >= 1");
  rational c;
  if (kind == series_kind::explicit_terms) {
    if (k > length()) throw index_out_of_rule(k);
    c = terms[static_cast<std::size_t>(k - 1)];
  } else {
    for (const signed_poly_quotient& q : parts) c += q.magnitude(k);
    if (alternating() && k % 2 == 0) c = -c;
  }
  if (c == 0) throw zero_series_term(k);
  return c;
}

poly_quot series_spec::magnitude_function() const {
  poly_quot total;
  for (const signed_poly_quotient& q : parts) total += poly_quot(q.num, q.den);
  return total;
}

rational partial_sum(const series_spec& series, long n) {
  if (n < 1) throw std::invalid_argument("partial sum needs n >= 1");
  rational sum;
  for (long k = 1; k <= n; ++k) sum += series.term(k);
  return sum;
}

cf_spec series_to_cf(const series_spec& series) {
  if (series.finite()) {
    std::vector<term_pair> out;
    out.reserve(series.terms.size());
    rational prev;
    for (long k = 1; k <= series.length(); ++k) {
      const rational c = series.term(k);
      if (k == 1)
        out.push_back({2 * c, rational(2)});
      else
        out.push_back({rational(-4 * c / prev), rational(2 * (c + prev) / prev)});
      prev = c;
    }
    return {rational(0), term_rule::explicit_terms(std::move(out)), ""};
  }
  // Closed form: c_n / c_{n-1} = s * Q(n)/Q(n-1) with Q the shared unsigned
  // part and s = -1 exactly when the series alternates, so the n >= 2 terms
  // are rational functions of n.
  const poly_quot Q = series.magnitude_function();
  const poly_quot R = Q / Q.compose_affine(1, -1);
  const rational s = series.alternating() ? rational(-1) : rational(1);
  const poly_quot a = poly_quot(polyq(rational(-4 * s))) * R;
  const poly_quot b =
      poly_quot(polyq(rational(2))) + poly_quot(polyq(rational(2 * s))) * R;
  const rational c1 = series.term(1);
  return {rational(0),
          term_rule::with_prefix({{2 * c1, rational(2)}}, term_rule::closed_form(a, b)),
          ""};
}

namespace {

void check_initial_conditions(const sequence_pair& seqs) {
  if (seqs.A.size() != seqs.B.size())
    throw std::invalid_argument("sequence lists A and B differ in length");
  if (seqs.A.size() < 2)
    throw std::invalid_argument("sequences need at least indices -1 and 0");
  if (seqs.A_at(-1) != 1 || seqs.B_at(-1) != 0 || seqs.B_at(0) != 1)
    throw bad_initial_conditions(
        "sequences must start from A_{-1} = 1, B_{-1} = 0, B_0 = 1");
}

}  // namespace

cf_spec sequences_to_cf(const sequence_pair& seqs) {
  check_initial_conditions(seqs);
  std::vector<term_pair> out;
  out.reserve(static_cast<std::size_t>(seqs.max_index()));
  for (long n = 1; n <= seqs.max_index(); ++n) {
    const rational det =
        seqs.A_at(n - 1) * seqs.B_at(n - 2) - seqs.A_at(n - 2) * seqs.B_at(n - 1);
    if (det == 0) throw singular_step(n);
    const rational b =
        rational(seqs.A_at(n) * seqs.B_at(n - 2) - seqs.A_at(n - 2) * seqs.B_at(n)) /
        det;
    const rational a =
        rational(seqs.A_at(n - 1) * seqs.B_at(n) - seqs.A_at(n) * seqs.B_at(n - 1)) /
        det;
    out.push_back({a, b});
  }
  // The step determinant at max_index + 1 only needs entries that were
  // supplied, so the nonsingularity condition is validated there too even
  // though no term can be produced for it.
  const long next = seqs.max_index() + 1;
  if (next >= 2 && seqs.A_at(next - 1) * seqs.B_at(next - 2) -
                           seqs.A_at(next - 2) * seqs.B_at(next - 1) ==
                       0)
    throw singular_step(next);
  return {seqs.A_at(0), term_rule::explicit_terms(std::move(out)), ""};
}

std::pair<rational, rational> rewrite_ratio_form(const sequence_pair& seqs, long n) {
  check_initial_conditions(seqs);
  if (n < 1) throw std::invalid_argument("ratio form needs n >= 1");
  if (n > seqs.max_index())
    throw std::out_of_range("index " + std::to_string(n) +
                            " is beyond the supplied sequences");
  for (long k = n - 2; k <= n; ++k)
    if (seqs.B_at(k) == 0) throw zero_b(k);
  const rational x_n = seqs.A_at(n) / seqs.B_at(n);
  const rational x_1 = seqs.A_at(n - 1) / seqs.B_at(n - 1);
  const rational x_2 = seqs.A_at(n - 2) / seqs.B_at(n - 2);
  const rational gap = x_1 - x_2;
  if (gap == 0) throw singular_step(n);
  const rational b = rational((x_n - x_2) / gap) * seqs.B_at(n) / seqs.B_at(n - 1);
  const rational a = rational((x_1 - x_n) / gap) * seqs.B_at(n) / seqs.B_at(n - 2);
  return {a, b};
}

}  // namespace gcflab
