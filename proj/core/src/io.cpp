#include "gcflab/io.hpp"

#include <cstdint>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace gcflab {

namespace {

using json = nlohmann::ordered_json;

[[noreturn]] void fail(const std::string& what) { throw parse_error(what); }

const json& field(const json& obj, const char* key) {
  if (!obj.is_object() || !obj.contains(key))
    fail(std::string("missing field \"") + key + "\"");
  return obj.at(key);
}

rational rat_from(const json& j, const char* what) {
  // integers are exact, so accept them as written; anything with a decimal
  // point must come through the string form instead
  if (j.is_number_unsigned())
    return rational(static_cast<unsigned long>(j.get<std::uint64_t>()));
  if (j.is_number_integer()) return rational(static_cast<long>(j.get<std::int64_t>()));
  if (!j.is_string())
    fail(std::string(what) + " must be a \"p/q\" string or an integer");
  return rational_from_string(j.get<std::string>());
}

json poly_to(const polyq& p) {
  json out = json::array();
  for (const rational& c : p.coeffs()) out.push_back(rational_to_string(c));
  return out;
}

polyq poly_from(const json& j, const char* what) {
  if (!j.is_array()) fail(std::string(what) + " must be a coefficient list");
  std::vector<rational> coeffs;
  coeffs.reserve(j.size());
  for (const json& c : j) coeffs.push_back(rat_from(c, what));
  return polyq(std::move(coeffs));
}

json quot_to(const poly_quot& q) {
  if (q.is_polynomial()) return poly_to(q.num());
  return json{{"num", poly_to(q.num())}, {"den", poly_to(q.den())}};
}

// a coefficient list, or {"num": [...], "den": [...]}
poly_quot quot_from(const json& j, const char* what) {
  if (j.is_array()) return poly_quot(poly_from(j, what));
  if (j.is_object())
    return poly_quot(poly_from(field(j, "num"), what),
                     poly_from(field(j, "den"), what));
  fail(std::string(what) + " must be a coefficient list or a num/den object");
}

json term_to(const term_pair& t) {
  return json{{"a", rational_to_string(t.a)}, {"b", rational_to_string(t.b)}};
}

term_pair term_from(const json& j) {
  return {rat_from(field(j, "a"), "term a"), rat_from(field(j, "b"), "term b")};
}

json slot_to(const slot_pair& s) {
  return json{{"a", quot_to(s.a)}, {"b", quot_to(s.b)}};
}

slot_pair slot_from(const json& j) {
  return {quot_from(field(j, "a"), "slot a"), quot_from(field(j, "b"), "slot b")};
}

json terms_to(const std::vector<term_pair>& terms) {
  json out = json::array();
  for (const term_pair& t : terms) out.push_back(term_to(t));
  return out;
}

std::vector<term_pair> terms_from(const json& j, const char* what) {
  if (!j.is_array()) fail(std::string(what) + " must be a list of terms");
  std::vector<term_pair> out;
  out.reserve(j.size());
  for (const json& t : j) out.push_back(term_from(t));
  return out;
}

// tail portion only: the rule without its explicit head
json slots_to(const term_rule& rule) {
  if (rule.period() == 1) {
    const slot_pair& s = rule.slots.front();
    if (s.a.is_polynomial() && s.b.is_polynomial())
      return json{{"kind", "polynomial"},
                  {"a", poly_to(s.a.num())},
                  {"b", poly_to(s.b.num())}};
    return json{{"kind", "rational"}, {"a", quot_to(s.a)}, {"b", quot_to(s.b)}};
  }
  json rules = json::array();
  for (const slot_pair& s : rule.slots) rules.push_back(slot_to(s));
  return json{{"kind", "interleaved"},
              {"period", rule.period()},
              {"rules", std::move(rules)}};
}

json rule_to(const term_rule& rule) {
  if (rule.finite()) return json{{"kind", "explicit"}, {"terms", terms_to(rule.head)}};
  if (rule.head.empty()) return slots_to(rule);
  return json{{"kind", "hybrid"},
              {"prefix", terms_to(rule.head)},
              {"tail", slots_to(rule)}};
}

term_rule rule_from(const json& j);

term_rule tail_from(const json& j) {
  const term_rule tail = rule_from(j);
  if (tail.finite()) fail("hybrid tail must be a closed-form rule");
  if (!tail.head.empty()) fail("hybrid tail cannot itself carry a prefix");
  return tail;
}

term_rule rule_from(const json& j) {
  const json& kind = field(j, "kind");
  if (!kind.is_string()) fail("rule kind must be a string");
  const std::string k = kind.get<std::string>();
  if (k == "explicit")
    return term_rule::explicit_terms(terms_from(field(j, "terms"), "terms"));
  if (k == "polynomial" || k == "rational")
    return term_rule::closed_form(quot_from(field(j, "a"), "rule a"),
                                  quot_from(field(j, "b"), "rule b"));
  if (k == "interleaved") {
    const json& rules = field(j, "rules");
    if (!rules.is_array() || rules.empty())
      fail("interleaved rule needs a nonempty \"rules\" list");
    std::vector<slot_pair> slots;
    slots.reserve(rules.size());
    for (const json& s : rules) slots.push_back(slot_from(s));
    if (j.contains("period") &&
        j.at("period") != json(static_cast<long>(slots.size())))
      fail("interleaved period does not match the number of rules");
    return term_rule::interleaved(std::move(slots));
  }
  if (k == "hybrid")
    return term_rule::with_prefix(terms_from(field(j, "prefix"), "prefix"),
                                  tail_from(field(j, "tail")));
  fail("unknown rule kind \"" + k + "\"");
}

json quotient_part_to(const signed_poly_quotient& q) {
  json out{{"num", poly_to(q.num)}, {"den", poly_to(q.den)}};
  out["alternating"] = q.alternating;
  return out;
}

signed_poly_quotient quotient_part_from(const json& j) {
  signed_poly_quotient q;
  q.num = poly_from(field(j, "num"), "series num");
  q.den = j.contains("den") ? poly_from(j.at("den"), "series den") : polyq(rational(1));
  if (j.contains("alternating")) {
    if (!j.at("alternating").is_boolean()) fail("\"alternating\" must be a boolean");
    q.alternating = j.at("alternating").get<bool>();
  }
  return q;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

json parse(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    fail(std::string("invalid JSON: ") + e.what());
  }
}

}  // namespace

std::string spec_to_json(const cf_spec& spec) {
  json out;
  if (!spec.name.empty()) out["name"] = spec.name;
  out["b0"] = rational_to_string(spec.b0);
  out["rule"] = rule_to(spec.rule);
  return dump(out);
}

cf_spec spec_from_json(const std::string& text) {
  const json j = parse(text);
  cf_spec spec;
  if (j.contains("name")) {
    if (!j.at("name").is_string()) fail("spec name must be a string");
    spec.name = j.at("name").get<std::string>();
  }
  spec.b0 = rat_from(field(j, "b0"), "b0");
  spec.rule = rule_from(field(j, "rule"));
  return spec;
}

std::string series_to_json(const series_spec& series) {
  json out;
  switch (series.kind) {
    case series_kind::explicit_terms: {
      out["kind"] = "explicit";
      json terms = json::array();
      for (const rational& c : series.terms) terms.push_back(rational_to_string(c));
      out["terms"] = std::move(terms);
      break;
    }
    case series_kind::quotient: {
      const signed_poly_quotient& q = series.parts.front();
      out["kind"] = "quotient";
      out["num"] = poly_to(q.num);
      out["den"] = poly_to(q.den);
      out["alternating"] = q.alternating;
      break;
    }
    case series_kind::sum: {
      out["kind"] = "sum";
      json parts = json::array();
      for (const signed_poly_quotient& q : series.parts)
        parts.push_back(quotient_part_to(q));
      out["summands"] = std::move(parts);
      break;
    }
  }
  return dump(out);
}

series_spec series_from_json(const std::string& text) {
  const json j = parse(text);
  const json& kind = field(j, "kind");
  if (!kind.is_string()) fail("series kind must be a string");
  const std::string k = kind.get<std::string>();
  if (k == "explicit") {
    const json& terms = field(j, "terms");
    if (!terms.is_array()) fail("\"terms\" must be a list");
    std::vector<rational> c;
    c.reserve(terms.size());
    for (const json& t : terms) c.push_back(rat_from(t, "series term"));
    return series_spec::from_terms(std::move(c));
  }
  if (k == "quotient") return series_spec::from_quotient(quotient_part_from(j));
  if (k == "sum") {
    const json& summands = field(j, "summands");
    if (!summands.is_array()) fail("\"summands\" must be a list");
    std::vector<signed_poly_quotient> parts;
    parts.reserve(summands.size());
    for (const json& q : summands) parts.push_back(quotient_part_from(q));
    return series_spec::from_sum(std::move(parts));
  }
  fail("unknown series kind \"" + k + "\"");
}

std::string sequences_to_json(const sequence_pair& seqs) {
  json a = json::array(), b = json::array();
  for (const rational& v : seqs.A) a.push_back(rational_to_string(v));
  for (const rational& v : seqs.B) b.push_back(rational_to_string(v));
  return dump(json{{"A", std::move(a)}, {"B", std::move(b)}});
}

sequence_pair sequences_from_json(const std::string& text) {
  const json j = parse(text);
  sequence_pair seqs;
  for (auto [key, dest] : {std::pair<const char*, std::vector<rational>*>{"A", &seqs.A},
                           {"B", &seqs.B}}) {
    const json& list = field(j, key);
    if (!list.is_array())
      fail(std::string("\"") + key + "\" must be a list of rationals (from index -1)");
    dest->reserve(list.size());
    for (const json& v : list) dest->push_back(rat_from(v, key));
  }
  return seqs;
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path + " for reading");
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw std::runtime_error("error while reading " + path);
  return buf.str();
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  out << text;
  out.flush();
  if (!out) throw std::runtime_error("error while writing " + path);
}

}  // namespace gcflab
