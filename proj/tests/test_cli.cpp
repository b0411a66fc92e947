// Scripted sessions against the command-line front end, run in process so
// exit codes and both streams can be asserted exactly.

#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "doctest.h"
#include "gcflab/catalog.hpp"
#include "gcflab/io.hpp"
#include "gcflab/transforms.hpp"
#include "json.hpp"

using namespace gcflab;
using njson = nlohmann::json;

namespace {

struct session {
  int code = -1;
  std::string out, err;
};

session run_cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  session s;
  s.code = cli::run(args, out, err);
  s.out = out.str();
  s.err = err.str();
  return s;
}

session run_with_stdin(const std::vector<std::string>& args, const std::string& input) {
  std::istringstream in(input);
  std::streambuf* old = std::cin.rdbuf(in.rdbuf());
  const session s = run_cli(args);
  std::cin.rdbuf(old);
  return s;
}

std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

bool contains(const std::string& haystack, const std::string& needle) {
  return haystack.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("usage errors exit 2 and name the problem") {
  CHECK(run_cli({}).code == 2);
  CHECK(run_cli({"frobnicate"}).code == 2);
  CHECK(run_cli({"catalog"}).code == 2);  // needs a list/show subcommand
  {
    const session s = run_cli({"eval", "--name", "e_half"});
    CHECK(s.code == 2);
    CHECK(contains(s.err, "--depth"));
  }
  {
    const session s = run_cli({"eval", "--name", "e_half", "--depth", "0"});
    CHECK(s.code == 2);
    CHECK(contains(s.err, "--depth"));
  }
  {
    const session s = run_cli({"eval", "--depth", "3"});
    CHECK(s.code == 2);
    CHECK(contains(s.err, "--name"));
  }
  CHECK(run_cli({"eval", "--name", "e_half", "--in", "x.json", "--depth", "3"}).code == 2);
  CHECK(run_cli({"eval", "--in", "no_such_file.json", "--depth", "2"}).code == 2);
  CHECK(run_cli({"verify"}).code == 2);
  CHECK(run_cli({"verify", "e_half", "--all"}).code == 2);
  CHECK(run_cli({"verify", "no_such_entry"}).code == 2);
  CHECK(run_cli({"transform", "--name", "e_half", "--op", "warp"}).code == 2);
  {
    const session s = run_cli({"transform", "--name", "e_half", "--op", "scale"});
    CHECK(s.code == 2);
    CHECK(contains(s.err, "--scalars"));
  }

  const session help = run_cli({"--help"});
  CHECK(help.code == 0);
  CHECK(contains(help.out, "convergents"));
  CHECK(run_cli({"eval", "--help"}).code == 0);
}

TEST_CASE("eval") {
  {
    const session s = run_cli({"eval", "--name", "e_half", "--depth", "20", "--json"});
    REQUIRE(s.code == 0);
    const njson j = njson::parse(s.out);
    CHECK(j.at("name") == "e_half");
    CHECK(j.at("depth") == 20);
    CHECK(j.at("backend") == "exact");
    CHECK(j.at("exact") ==
          rational_to_string(eval_exact(catalog_get("e_half").spec, 20)));
    CHECK(j.at("value").get<std::string>().substr(0, 19) == "1.35914091422952261");
  }
  {
    const session s = run_cli({"eval", "--name", "pi_thirds", "--depth", "2000",
                               "--backend", "approx", "--digits", "8", "--json"});
    REQUIRE(s.code == 0);
    const njson j = njson::parse(s.out);
    CHECK(j.at("backend") == "approx");
    CHECK(j.at("precision") == 256);
    CHECK_FALSE(j.contains("exact"));
    CHECK(j.at("value").get<std::string>().substr(0, 5) == "1.047");
  }
  {
    const session s = run_cli({"eval", "--name", "lu_wei_e", "--depth", "12"});
    REQUIRE(s.code == 0);
    CHECK(contains(s.out, "name"));
    CHECK(contains(s.out, "exact"));
    CHECK(contains(s.out, "2.718"));
  }
}

TEST_CASE("eval reports skipped depths") {
  const std::string path = "cli_test_zero_b.json";
  write_text_file(
      path, R"({"b0": "5", "rule": {"kind": "explicit", "terms": [{"a": "1", "b": "0"}]}})");
  const session s = run_cli({"eval", "--in", path, "--depth", "1", "--json"});
  REQUIRE(s.code == 0);
  const njson j = njson::parse(s.out);
  CHECK(j.at("last_defined") == 0);
  CHECK(j.at("exact") == "5");
}

TEST_CASE("convergents") {
  {
    const session s = run_cli({"convergents", "--name", "e_half", "--depth", "4"});
    REQUIRE(s.code == 0);
    const std::vector<std::string> rows = lines_of(s.out);
    REQUIRE(rows.size() == 6);  // header + n = 0..4
    CHECK(contains(rows.back(), "360  265  1.3584905660"));
  }
  {
    const session s =
        run_cli({"convergents", "--name", "e_half", "--depth", "4", "--json"});
    REQUIRE(s.code == 0);
    const std::vector<std::string> rows = lines_of(s.out);
    REQUIRE(rows.size() == 5);
    const njson first = njson::parse(rows.front());
    CHECK(first.at("n") == 0);
    CHECK_FALSE(first.contains("a"));
    CHECK(first.at("A") == "1");
    const njson last = njson::parse(rows.back());
    CHECK(last.at("n") == 4);
    CHECK(last.at("a") == "5");
    CHECK(last.at("b") == "5");
    CHECK(last.at("A") == "360");
    CHECK(last.at("B") == "265");
    CHECK(last.at("value") == "1.3584905660");
  }
  {
    // a zero denominator renders as null / "-"
    const std::string path = "cli_test_zero_b.json";
    write_text_file(
        path,
        R"({"b0": "0", "rule": {"kind": "explicit", "terms": [{"a": "1", "b": "0"}]}})");
    const session s = run_cli({"convergents", "--in", path, "--depth", "1", "--json"});
    REQUIRE(s.code == 0);
    const njson row = njson::parse(lines_of(s.out).back());
    CHECK(row.at("value").is_null());
  }
}

TEST_CASE("catalog subcommands") {
  {
    const session s = run_cli({"catalog", "list"});
    REQUIRE(s.code == 0);
    CHECK(lines_of(s.out).size() == 1 + catalog_entries().size());
    CHECK(contains(s.out, "e_half"));
    CHECK(contains(s.out, "pi_thirds_printed"));
  }
  {
    const session s = run_cli({"catalog", "list", "--json"});
    REQUIRE(s.code == 0);
    const std::vector<std::string> rows = lines_of(s.out);
    REQUIRE(rows.size() == catalog_entries().size());
    const njson first = njson::parse(rows.front());
    CHECK(first.at("name") == "e_half");
    CHECK(first.at("status") == "theorem");
    CHECK(first.at("oracle") == true);
    CHECK(first.at("errata").is_array());
  }
  CHECK(run_cli({"catalog", "show", "nope"}).code == 2);

  // serialization fidelity: every emitted spec re-parses to the same spec
  for (const catalog_entry& entry : catalog_entries()) {
    const session s = run_cli({"catalog", "show", entry.name});
    REQUIRE(s.code == 0);
    const cf_spec back = spec_from_json(s.out);
    CHECK(back.name == entry.spec.name);
    CHECK(back.b0 == entry.spec.b0);
    CHECK(back.rule == entry.spec.rule);
  }
}

TEST_CASE("transform") {
  {
    const session s = run_cli({"transform", "--name", "e_half", "--op", "negate"});
    REQUIRE(s.code == 0);
    const cf_spec got = spec_from_json(s.out);
    const cf_spec want = negate(catalog_get("e_half").spec);
    CHECK(got.b0 == want.b0);
    CHECK(got.rule == want.rule);
    // and that is exactly the catalog's own -e/2 entry
    CHECK(got.rule == catalog_get("minus_e_half").spec.rule);
  }
  {
    // pinned head scaling: (2,2),(4/3,4/3) with c = 1/2, 3/2 -> (1,1),(1,2)
    const std::string path = "cli_test_generator.json";
    write_text_file(path, R"({"b0": "0", "rule": {"kind": "explicit",
      "terms": [{"a": "2", "b": "2"}, {"a": "4/3", "b": "4/3"}]}})");
    const session s = run_cli(
        {"transform", "--in", path, "--op", "scale", "--scalars", "1/2,3/2"});
    REQUIRE(s.code == 0);
    const cf_spec got = spec_from_json(s.out);
    CHECK(got.term(1) == term_pair{1, 1});
    CHECK(got.term(2) == term_pair{1, 2});
  }
  {
    // clear through stdin: the folded Leibniz series becomes the classical
    // square-numerator expansion
    const session folded =
        run_with_stdin({"from-series", "--in", "-"},
                       R"({"kind": "quotient", "num": [1], "den": [-1, 2],
                           "alternating": true})");
    REQUIRE(folded.code == 0);
    const session cleared = run_with_stdin(
        {"transform", "--in", "-", "--op", "clear", "--depth", "6"}, folded.out);
    REQUIRE(cleared.code == 0);
    const cf_spec got = spec_from_json(cleared.out);
    CHECK(got.term(1) == term_pair{1, 1});
    CHECK(got.term(2) == term_pair{1, 2});
    CHECK(got.term(3) == term_pair{9, 2});
    CHECK(got.term(6) == term_pair{81, 2});
  }
}

TEST_CASE("from-series and from-sequences") {
  const std::string series_text =
      R"({"kind": "quotient", "num": [1], "den": [-1, 2], "alternating": true})";
  {
    const std::string path = "cli_test_series.json";
    write_text_file(path, series_text);
    const session s = run_cli({"from-series", "--in", path, "--label", "leib"});
    REQUIRE(s.code == 0);
    const cf_spec got = spec_from_json(s.out);
    CHECK(got.name == "leib");
    const cf_spec want = series_to_cf(series_from_json(series_text));
    CHECK(got.b0 == want.b0);
    CHECK(got.rule == want.rule);
  }
  {
    const session s = run_with_stdin(
        {"from-series", "--in", "-", "--clear", "--terms", "4"}, series_text);
    REQUIRE(s.code == 0);
    const cf_spec got = spec_from_json(s.out);
    CHECK(got.term(4) == term_pair{25, 2});
  }
  {
    const session s =
        run_with_stdin({"from-sequences", "--in", "-"}, R"({"A": [1, 1, 3, 12],
                        "B": [0, 1, 2, 9]})");
    REQUIRE(s.code == 0);
    const cf_spec got = spec_from_json(s.out);
    CHECK(got.b0 == 1);
    CHECK(got.term(1) == term_pair{1, 2});
    CHECK(got.term(2) == term_pair{3, 3});
  }
  {
    const session s = run_with_stdin({"from-sequences", "--in", "-"},
                                     R"({"A": [1, 0, 0], "B": [0, 1, 1]})");
    CHECK(s.code == 2);
    CHECK_FALSE(s.err.empty());
  }
}

TEST_CASE("verify exit codes") {
  {
    const session s = run_cli({"verify", "e_half", "--depth", "20", "--digits", "15"});
    CHECK(s.code == 0);
    CHECK(contains(s.out, "pass"));
  }
  {
    const session s = run_cli(
        {"verify", "pi_plus_2_half_form2_printed", "--depth", "50", "--digits", "4"});
    CHECK(s.code == 1);
    CHECK(contains(s.out, "FAIL"));
  }
  {
    const session s = run_cli({"verify", "--all", "--depth", "120", "--json"});
    CHECK(s.code == 0);  // only conjecture entries fail at these settings
    const std::vector<std::string> rows = lines_of(s.out);
    REQUIRE(rows.size() == catalog_entries().size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
      const njson j = njson::parse(rows[i]);
      CHECK(j.at("name") == catalog_entries()[i].name);  // catalog order
      const std::string name = j.at("name");
      const bool printed_pi_form = name == "pi_plus_2_half_form2_printed" ||
                                   name == "pi_plus_2_half_form4_printed";
      CHECK(j.at("passed") == !printed_pi_form);
      if (printed_pi_form) CHECK(j.at("status") == "conjecture");
    }
  }
}
