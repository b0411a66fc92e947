#include "cli.hpp"

#include <algorithm>
#include <future>
#include <iomanip>
#include <iostream>
#include <map>
#include <sstream>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "gcflab/catalog.hpp"
#include "gcflab/generate.hpp"
#include "gcflab/io.hpp"
#include "gcflab/transforms.hpp"

namespace gcflab::cli {

namespace {

using njson = nlohmann::ordered_json;

// ----- output plumbing -------------------------------------------------

struct table {
  std::vector<std::string> header;
  std::vector<bool> right;  // per-column: right-align?
  std::vector<std::vector<std::string>> rows;

  void print(std::ostream& out) const {
    std::vector<std::size_t> width(header.size());
    for (std::size_t c = 0; c < header.size(); ++c) width[c] = header[c].size();
    for (const auto& row : rows)
      for (std::size_t c = 0; c < row.size(); ++c)
        width[c] = std::max(width[c], row[c].size());
    const auto line = [&](const std::vector<std::string>& cells) {
      for (std::size_t c = 0; c < cells.size(); ++c) {
        if (c) out << "  ";
        const bool last = c + 1 == cells.size();
        const std::string pad(width[c] - cells[c].size(), ' ');
        if (right.size() > c && right[c])
          out << pad << cells[c];
        else if (last)
          out << cells[c];  // no trailing spaces
        else
          out << cells[c] << pad;
      }
      out << '\n';
    };
    line(header);
    for (const auto& row : rows) line(row);
  }
};

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    return buf.str();
  }
  return read_text_file(path);
}

void emit_text(const std::string& out_path, const std::string& text,
               std::ostream& out) {
  if (out_path.empty())
    out << text;
  else
    write_text_file(out_path, text);
}

const char* backend_name(backend kind) {
  return kind == backend::exact ? "exact" : "approx";
}

// ----- per-subcommand option bags --------------------------------------

struct spec_source {
  std::string name;  // catalog entry
  std::string path;  // spec JSON file, "-" for stdin
};

// returns nonnegative exit code on a bad source, -1 when fine
int check_source(const spec_source& src, const char* cmd, std::ostream& err) {
  if (src.name.empty() && src.path.empty()) {
    err << "gcf " << cmd << ": one of --name or --in is required\n";
    return 2;
  }
  return -1;
}

cf_spec load_spec(const spec_source& src) {
  if (!src.name.empty()) return catalog_get(src.name).spec;
  return spec_from_json(read_input(src.path));
}

std::string display_name(const spec_source& src, const cf_spec& spec) {
  if (!src.name.empty()) return src.name;
  if (!spec.name.empty()) return spec.name;
  return "(unnamed)";
}

struct eval_opts {
  spec_source src;
  long depth = 1;
  backend kind = backend::exact;
  int precision = approx_real::default_precision;
  int digits = 30;
  bool json = false;
};

struct conv_opts {
  spec_source src;
  long depth = 1;
  int digits = 10;
  bool json = false;
};

struct fold_opts {
  std::string in_path;
  std::string out_path;
  std::string name;  // optional label for the result
  long terms = 0;    // from-series: truncate to this many explicit terms
  bool clear = false;  // from-series: clear denominators after folding
};

enum class op_kind { negate, signflip, clear, scale };

struct transform_opts {
  spec_source src;
  op_kind op = op_kind::negate;
  long depth = 0;  // 0: pick a default per op
  std::vector<std::string> scalars;
  std::string out_path;
};

struct verify_opts {
  std::string name;
  bool all = false;
  long depth = 300;
  int threshold = 2;
  backend kind = backend::exact;
  int precision = approx_real::default_precision;
  bool json = false;
};

// ----- runners ----------------------------------------------------------

int run_eval(const eval_opts& o, std::ostream& out, std::ostream& err) {
  if (const int rc = check_source(o.src, "eval", err); rc >= 0) return rc;
  const cf_spec spec = load_spec(o.src);
  const eval_report ev = evaluate(spec, o.depth, o.kind, o.precision);
  const std::string label = display_name(o.src, spec);

  std::string exact, value;
  if (o.kind == backend::exact) {
    exact = rational_to_string(*ev.value);
    value = rat_to_decimal(*ev.value, o.digits).str();
  } else {
    value = ev.approx->to_decimal(o.digits).str();
  }

  if (o.json) {
    njson j{{"name", label}, {"depth", ev.depth}, {"backend", backend_name(o.kind)}};
    if (o.kind == backend::approx) j["precision"] = ev.precision;
    if (ev.last_defined != ev.depth) j["last_defined"] = ev.last_defined;
    if (!exact.empty()) j["exact"] = exact;
    j["value"] = value;
    out << j.dump() << '\n';
    return 0;
  }
  const auto kv = [&](const char* key, const auto& val) {
    out << std::left << std::setw(14) << key << val << '\n';
  };
  kv("name", label);
  kv("depth", ev.depth);
  if (ev.last_defined != ev.depth) kv("last_defined", ev.last_defined);
  kv("backend", backend_name(o.kind));
  if (o.kind == backend::approx) kv("precision", ev.precision);
  if (!exact.empty()) kv("exact", exact);
  kv("value", value);
  return 0;
}

int run_convergents(const conv_opts& o, std::ostream& out, std::ostream& err) {
  if (const int rc = check_source(o.src, "convergents", err); rc >= 0) return rc;
  const cf_spec spec = load_spec(o.src);
  const std::vector<convergent_row> rows = convergent_table(spec, o.depth);

  if (o.json) {
    for (const convergent_row& r : rows) {
      njson j{{"n", r.n}};
      if (r.n > 0) {
        j["a"] = rational_to_string(r.a);
        j["b"] = rational_to_string(r.b);
      }
      j["A"] = rational_to_string(r.A);
      j["B"] = rational_to_string(r.B);
      if (r.defined)
        j["value"] = rat_to_decimal(r.x, o.digits).str();
      else
        j["value"] = nullptr;
      out << j.dump() << '\n';
    }
    return 0;
  }

  table t;
  t.header = {"n", "a", "b", "A", "B", "value"};
  t.right = {true, true, true, true, true, false};
  for (const convergent_row& r : rows) {
    t.rows.push_back({std::to_string(r.n),
                      r.n > 0 ? rational_to_string(r.a) : "-",
                      r.n > 0 ? rational_to_string(r.b) : "-",
                      rational_to_string(r.A), rational_to_string(r.B),
                      r.defined ? rat_to_decimal(r.x, o.digits).str() : "-"});
  }
  t.print(out);
  return 0;
}

int run_from_series(const fold_opts& o, std::ostream& out) {
  const series_spec series = series_from_json(read_input(o.in_path));
  cf_spec spec = series_to_cf(series);
  if (o.clear) {
    spec = clear_denominators(spec, o.terms > 0 ? o.terms : 30);
  } else if (o.terms > 0) {
    std::vector<term_pair> cut;
    cut.reserve(static_cast<std::size_t>(o.terms));
    for (long n = 1; n <= o.terms; ++n) cut.push_back(spec.term(n));
    spec.rule = term_rule::explicit_terms(std::move(cut));
  }
  if (!o.name.empty()) spec.name = o.name;
  emit_text(o.out_path, spec_to_json(spec), out);
  return 0;
}

int run_from_sequences(const fold_opts& o, std::ostream& out) {
  const sequence_pair seqs = sequences_from_json(read_input(o.in_path));
  cf_spec spec = sequences_to_cf(seqs);
  if (!o.name.empty()) spec.name = o.name;
  emit_text(o.out_path, spec_to_json(spec), out);
  return 0;
}

int run_transform(const transform_opts& o, std::ostream& out, std::ostream& err) {
  if (const int rc = check_source(o.src, "transform", err); rc >= 0) return rc;
  const cf_spec spec = load_spec(o.src);

  cf_spec result;
  switch (o.op) {
    case op_kind::negate:
      result = negate(spec);
      break;
    case op_kind::signflip:
      result = sign_flip(spec);
      break;
    case op_kind::clear:
      result = clear_denominators(spec, o.depth > 0 ? o.depth : 30);
      break;
    case op_kind::scale: {
      if (o.scalars.empty()) {
        err << "gcf transform: --op scale needs --scalars\n";
        return 2;
      }
      std::vector<rational> cs;
      cs.reserve(o.scalars.size());
      for (const std::string& s : o.scalars) cs.push_back(rational_from_string(s));
      const long depth = o.depth > 0 ? o.depth : static_cast<long>(cs.size());
      result = equivalence_scale(spec, cs, depth);
      break;
    }
  }
  emit_text(o.out_path, spec_to_json(result), out);
  return 0;
}

int run_verify(const verify_opts& o, std::ostream& out, std::ostream& err) {
  if (o.all == !o.name.empty()) {
    err << "gcf verify: name a catalog entry or pass --all\n";
    return 2;
  }

  std::vector<verify_report> reports;
  if (o.all) {
    // fan out, then emit in catalog order so output stays deterministic
    std::vector<std::future<verify_report>> pending;
    for (const catalog_entry& entry : catalog_entries())
      pending.push_back(std::async(std::launch::async, [&o, name = entry.name] {
        return verify_entry(name, o.depth, o.kind, o.threshold, o.precision);
      }));
    reports.reserve(pending.size());
    for (auto& f : pending) reports.push_back(f.get());
  } else {
    reports.push_back(verify_entry(o.name, o.depth, o.kind, o.threshold, o.precision));
  }

  if (o.json) {
    for (const verify_report& r : reports) {
      njson j{{"name", r.name},
              {"status", status_name(r.status)},
              {"target", catalog_get(r.name).target.str()},
              {"depth", r.depth},
              {"backend", backend_name(r.kind)}};
      if (r.kind == backend::approx) j["precision"] = r.precision;
      j["digits_matched"] = r.digits_matched;
      j["threshold"] = r.threshold;
      j["passed"] = r.passed;
      j["value"] = r.value;
      j["errata"] = r.errata;
      out << j.dump() << '\n';
    }
  } else {
    table t;
    t.header = {"name", "status", "target", "digits", "need", "result", "value"};
    t.right = {false, false, false, true, true, false, false};
    for (const verify_report& r : reports) {
      // keep the table readable; --json carries the full rendering
      std::string shown = r.value;
      if (shown.size() > 40) shown = shown.substr(0, 37) + "...";
      t.rows.push_back({r.name, status_name(r.status), catalog_get(r.name).target.str(),
                        std::to_string(r.digits_matched), std::to_string(r.threshold),
                        r.passed ? "pass" : "FAIL", shown});
    }
    t.print(out);
    for (const verify_report& r : reports)
      for (const std::string& note : r.errata)
        out << "note (" << r.name << "): " << note << '\n';
  }

  if (o.all) {
    for (const verify_report& r : reports)
      if (r.status != entry_status::conjecture && !r.passed) return 1;
    return 0;
  }
  return reports.front().passed ? 0 : 1;
}

int run_catalog_list(bool json, std::ostream& out) {
  if (json) {
    for (const catalog_entry& e : catalog_entries()) {
      njson j{{"name", e.name},
              {"status", status_name(e.status)},
              {"target", e.target.str()},
              {"oracle", e.has_oracle},
              {"errata", e.errata}};
      out << j.dump() << '\n';
    }
    return 0;
  }
  table t;
  t.header = {"name", "status", "target", "oracle", "b0", "leading terms"};
  t.right = {false, false, false, false, true, false};
  for (const catalog_entry& e : catalog_entries()) {
    const term_pair t1 = e.spec.term(1), t2 = e.spec.term(2);
    const auto pair_str = [](const term_pair& p) {
      return "(" + rational_to_string(p.a) + "," + rational_to_string(p.b) + ")";
    };
    t.rows.push_back({e.name, status_name(e.status), e.target.str(),
                      e.has_oracle ? "yes" : "no", rational_to_string(e.spec.b0),
                      pair_str(t1) + " " + pair_str(t2) + " ..."});
  }
  t.print(out);
  return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"exact workbench for generalized continued fractions", "gcf"};
  app.require_subcommand(1);

  const std::map<std::string, backend> backends{{"exact", backend::exact},
                                                {"approx", backend::approx}};
  const std::map<std::string, op_kind> ops{{"negate", op_kind::negate},
                                           {"signflip", op_kind::signflip},
                                           {"clear", op_kind::clear},
                                           {"scale", op_kind::scale}};

  const auto add_source = [](CLI::App* cmd, spec_source& src) {
    auto* name = cmd->add_option("--name", src.name, "catalog entry name");
    auto* in =
        cmd->add_option("--in", src.path, "spec JSON file ('-' reads stdin)");
    name->excludes(in);
    in->excludes(name);
  };

  eval_opts eo;
  CLI::App* eval_cmd =
      app.add_subcommand("eval", "evaluate a spec's convergent at a depth");
  add_source(eval_cmd, eo.src);
  eval_cmd->add_option("--depth", eo.depth, "number of terms (>= 1)")
      ->required()
      ->check(CLI::PositiveNumber);
  eval_cmd->add_option("--backend", eo.kind, "exact|approx")
      ->transform(CLI::CheckedTransformer(backends, CLI::ignore_case));
  eval_cmd->add_option("--precision", eo.precision, "approx precision in bits")
      ->check(CLI::Range(8, 1 << 20));
  eval_cmd->add_option("--digits", eo.digits, "decimal digits shown")
      ->check(CLI::PositiveNumber);
  eval_cmd->add_flag("--json", eo.json, "emit one JSON object");

  conv_opts co;
  CLI::App* conv_cmd =
      app.add_subcommand("convergents", "print the convergent table");
  add_source(conv_cmd, co.src);
  conv_cmd->add_option("--depth", co.depth, "number of terms (>= 1)")
      ->required()
      ->check(CLI::PositiveNumber);
  conv_cmd->add_option("--digits", co.digits, "decimal digits shown")
      ->check(CLI::PositiveNumber);
  conv_cmd->add_flag("--json", co.json, "one JSON object per row");

  fold_opts so;
  CLI::App* series_cmd = app.add_subcommand(
      "from-series", "fold a series into a matching-partial-sum spec");
  series_cmd->add_option("--in", so.in_path, "series JSON file ('-' reads stdin)")
      ->required();
  series_cmd->add_option("--terms", so.terms, "truncate to this many explicit terms")
      ->check(CLI::PositiveNumber);
  series_cmd->add_flag("--clear", so.clear,
                       "clear denominators after folding (depth from --terms, else 30)");
  series_cmd->add_option("--out", so.out_path, "write the spec here (default stdout)");
  series_cmd->add_option("--label", so.name, "name for the resulting spec");

  fold_opts qo;
  CLI::App* seqs_cmd = app.add_subcommand(
      "from-sequences", "recover terms from numerator/denominator sequences");
  seqs_cmd->add_option("--in", qo.in_path, "sequences JSON file ('-' reads stdin)")
      ->required();
  seqs_cmd->add_option("--out", qo.out_path, "write the spec here (default stdout)");
  seqs_cmd->add_option("--label", qo.name, "name for the resulting spec");

  transform_opts to;
  CLI::App* tf_cmd = app.add_subcommand("transform", "rewrite a spec");
  add_source(tf_cmd, to.src);
  tf_cmd->add_option("--op", to.op, "negate|signflip|clear|scale")
      ->required()
      ->transform(CLI::CheckedTransformer(ops, CLI::ignore_case));
  tf_cmd->add_option("--depth", to.depth,
                     "terms to emit (clear/scale; default 30 / scalar count)")
      ->check(CLI::PositiveNumber);
  tf_cmd->add_option("--scalars", to.scalars,
                     "comma-separated p/q equivalence scalars (scale)")
      ->delimiter(',');
  tf_cmd->add_option("--out", to.out_path, "write the spec here (default stdout)");

  verify_opts vo;
  CLI::App* verify_cmd =
      app.add_subcommand("verify", "check entries against their constants");
  verify_cmd->add_option("name", vo.name, "catalog entry to verify");
  verify_cmd->add_flag("--all", vo.all, "verify every entry");
  verify_cmd->add_option("--depth", vo.depth, "evaluation depth")
      ->check(CLI::PositiveNumber);
  verify_cmd->add_option("--digits", vo.threshold, "matched-digit threshold")
      ->check(CLI::PositiveNumber);
  verify_cmd->add_option("--backend", vo.kind, "exact|approx")
      ->transform(CLI::CheckedTransformer(backends, CLI::ignore_case));
  verify_cmd->add_option("--precision", vo.precision, "approx precision in bits")
      ->check(CLI::Range(8, 1 << 20));
  verify_cmd->add_flag("--json", vo.json, "one JSON object per report");

  bool catalog_json = false;
  std::string show_name;
  CLI::App* cat_cmd = app.add_subcommand("catalog", "inspect the built-in entries");
  cat_cmd->require_subcommand(1);
  CLI::App* cat_list = cat_cmd->add_subcommand("list", "one line per entry");
  cat_list->add_flag("--json", catalog_json, "one JSON object per entry");
  CLI::App* cat_show =
      cat_cmd->add_subcommand("show", "print an entry's spec as JSON");
  cat_show->add_option("name", show_name, "entry name")->required();

  std::vector<const char*> argv;
  argv.reserve(args.size() + 1);
  argv.push_back("gcf");
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*eval_cmd) return run_eval(eo, out, err);
    if (*conv_cmd) return run_convergents(co, out, err);
    if (*series_cmd) return run_from_series(so, out);
    if (*seqs_cmd) return run_from_sequences(qo, out);
    if (*tf_cmd) return run_transform(to, out, err);
    if (*verify_cmd) return run_verify(vo, out, err);
    if (*cat_list) return run_catalog_list(catalog_json, out);
    if (*cat_show) {
      out << spec_to_json(catalog_get(show_name).spec);
      return 0;
    }
  } catch (const std::exception& e) {
    err << "gcf: " << e.what() << '\n';
    return 2;
  }
  return 2;  // unreachable with require_subcommand(1)
}

}  // namespace gcflab::cli
