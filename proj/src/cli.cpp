#include "jackleaf/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <ostream>

#include "jackleaf/binomial.hpp"
#include "jackleaf/json_io.hpp"
#include "jackleaf/stemleaf.hpp"
#include "jackleaf/verify.hpp"

namespace jackleaf {

namespace {

// Critical hooks only ever take the form g + l*r with nonnegative integers,
// so --y accepts exactly that: "0", "2", "r", "3*r", "1+r", "2+3*r".
MultiPoly parse_hook(const std::string& text) {
  long g = 0, l = 0;
  std::string t;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) t += ch;
  std::size_t pos = 0;
  bool any = false;
  while (pos < t.size()) {
    if (any) {
      if (t[pos] != '+') fail(Errc::ParseError, "expected '+' in '" + text + "'");
      ++pos;
    }
    std::size_t start = pos;
    while (pos < t.size() && std::isdigit(static_cast<unsigned char>(t[pos])))
      ++pos;
    long value = 1;
    if (pos > start) value = std::stol(t.substr(start, pos - start));
    bool has_r = false;
    if (pos < t.size() && (t[pos] == '*' || t[pos] == 'r')) {
      if (t[pos] == '*') ++pos;
      if (pos >= t.size() || t[pos] != 'r')
        fail(Errc::ParseError, "expected 'r' in '" + text + "'");
      ++pos;
      has_r = true;
    } else if (pos == start) {
      fail(Errc::ParseError, "bad hook term in '" + text + "'");
    }
    (has_r ? l : g) += value;
    any = true;
  }
  if (!any) fail(Errc::ParseError, "empty hook expression");
  return MultiPoly::linear(Rat(g), Rat(l), Var::r);
}

Rat parse_eval_point(const std::string& text) {
  auto eq = text.find('=');
  std::string lhs = eq == std::string::npos ? "" : text.substr(0, eq);
  if (lhs != "r") fail(Errc::ParseError, "--eval expects r=<rational>");
  return Rat::parse(text.substr(eq + 1));
}

void emit_ratfun(const RatFun& f, const std::string& format,
                 const std::optional<Rat>& at, std::ostream& out) {
  if (at) {
    Rat v = f.eval(*at);
    out << (format == "ascii" ? v.str() : Json(v.str()).dump()) << "\n";
    return;
  }
  if (format == "ascii")
    out << f.str() << "\n";
  else
    out << to_json(f).dump(2) << "\n";
}

Json report_json(const SuiteReport& rep) {
  Json j;
  j["suite"] = rep.suite;
  j["checks"] = Json::array();
  for (const auto& c : rep.checks) {
    Json jc;
    jc["identity"] = c.identity;
    jc["params"] = c.params;
    jc["pass"] = c.pass;
    if (!c.pass) jc["residual"] = c.residual;
    j["checks"].push_back(std::move(jc));
  }
  j["failures"] = rep.failures();
  return j;
}

void print_report_ascii(const SuiteReport& rep, std::ostream& out) {
  out << "suite: " << rep.suite << "\n";
  for (const auto& c : rep.checks) {
    out << (c.pass ? "PASS " : "FAIL ") << c.identity << "  " << c.params;
    if (!c.pass) out << "  residual: " << c.residual;
    out << "\n";
  }
  out << rep.checks.size() << " checks, " << rep.failures() << " failures\n";
}

std::string csv_quote(const std::string& s) {
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += "\"\"";
    out += ch;
  }
  out += "\"";
  return out;
}

struct VerifyOptions {
  std::string suite;
  int u_max = 6, d_max = 6, m_max = 6;
  int n_max = -1;  // per-suite default when negative
  std::string format = "ascii";
  std::string report_path;
};

SuiteReport run_suite(const VerifyOptions& opt) {
  const SuiteCaps caps{opt.u_max, opt.d_max, opt.m_max};
  auto n_or = [&](int dflt) { return opt.n_max >= 0 ? opt.n_max : dflt; };
  const std::string& s = opt.suite;
  if (s == "fixtures") return verify_reference_fixtures();
  if (s == "oracle-triangle")
    return verify_oracle_triangle(n_or(5), std::max(n_or(5), 1));
  if (s == "main-theorem")
    return verify_main_theorem(std::min(opt.u_max, 8), std::min(opt.d_max, 8));
  if (s == "skew-invariance") return verify_skew_invariance(6, n_or(8));
  if (s == "identities") return verify_identity_suites(caps);
  if (s == "oracle-stability") return verify_oracle_stability(n_or(4));
  if (s == "eigenfunctions") return verify_eigenfunctions(n_or(4), n_or(4));
  if (s == "recurrences") return verify_recurrences(n_or(6));
  if (s == "positivity") return verify_positivity(n_or(6));
  if (s == "oracle") {
    SuiteReport rep;
    rep.suite = "oracle";
    for (SuiteReport sub :
         {verify_eigenfunctions(n_or(4), n_or(4)),
          verify_oracle_stability(n_or(4)),
          verify_oracle_triangle(n_or(4), std::max(n_or(4), 1))})
      for (auto& c : sub.checks) rep.checks.push_back(std::move(c));
    return rep;
  }
  return identity_suite(s, caps);  // UnknownSuite for anything else
}

int cmd_verify(const VerifyOptions& opt, std::ostream& out) {
  SuiteReport rep = run_suite(opt);
  if (opt.format == "json")
    out << report_json(rep).dump(2) << "\n";
  else
    print_report_ascii(rep, out);
  if (!opt.report_path.empty()) {
    std::ofstream f(opt.report_path);
    if (!f) fail(Errc::IoError, "cannot write " + opt.report_path);
    f << report_json(rep).dump(2) << "\n";
  }
  return rep.all_pass() ? 0 : 1;
}

struct TableOptions {
  int n_max = 4;
  std::string shape = "all";
  std::string format = "csv";
  std::string output;
};

int cmd_table(const TableOptions& opt, std::ostream& out) {
  if (opt.n_max < 0 || opt.n_max > 10)
    fail(Errc::ScaleLimit, "table capped at --n-max 10");
  ShapeFilter filter = ShapeFilter::all;
  if (opt.shape == "two-row") filter = ShapeFilter::two_row;
  else if (opt.shape == "gap") filter = ShapeFilter::gap;
  else if (opt.shape == "overlap") filter = ShapeFilter::overlap;
  else if (opt.shape != "all")
    fail(Errc::ParseError, "unknown shape filter '" + opt.shape + "'");

  auto rows = leaf_table(opt.n_max, filter);
  std::ostringstream body;
  if (opt.format == "csv") {
    body << "lambda,mu,u,d,m,y,stem,leaf,leaf_is_polynomial,"
            "leaf_coefficients_nonnegative\n";
    for (const auto& row : rows) {
      body << csv_quote(row.lam.str()) << "," << csv_quote(row.mu.str())
           << ",";
      if (row.two_row)
        body << row.u << "," << row.d << "," << row.m << ","
             << csv_quote(row.y.str());
      else
        body << ",,,";
      body << "," << csv_quote(row.stem.str()) << ","
           << csv_quote(row.leaf.str()) << ","
           << (row.leaf_polynomial ? "true" : "false") << ","
           << (row.leaf_nonneg_integer ? "true" : "false") << "\n";
    }
  } else {
    Json j = Json::array();
    for (const auto& row : rows) {
      Json jr;
      jr["lambda"] = row.lam.str();
      jr["mu"] = row.mu.str();
      if (row.two_row) {
        jr["u"] = row.u;
        jr["d"] = row.d;
        jr["m"] = row.m;
        jr["y"] = to_json(row.y);
      }
      jr["stem"] = to_json(row.stem);
      jr["leaf"] = to_json(row.leaf);
      jr["leaf_is_polynomial"] = row.leaf_polynomial;
      jr["leaf_coefficients_nonnegative"] = row.leaf_nonneg_integer;
      j.push_back(std::move(jr));
    }
    body << j.dump(2) << "\n";
  }
  if (opt.output.empty()) {
    out << body.str();
  } else {
    std::ofstream f(opt.output);
    if (!f) fail(Errc::IoError, "cannot write " + opt.output);
    f << body.str();
  }
  return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Jack binomial coefficients, stem-leaf factorization, and "
               "two-row closed forms over exact rationals"};
  app.require_subcommand(1);

  std::string lam_text, mu_text, format = "json", eval_text;

  auto add_pair_opts = [&](CLI::App* cmd, bool mu_required) {
    cmd->add_option("--lambda", lam_text, "outer partition, e.g. 7,3,3,1")
        ->required();
    auto* mu_opt =
        cmd->add_option("--mu", mu_text, "inner partition; empty for ()");
    if (mu_required) mu_opt->required();
    cmd->add_option("--format", format, "json or ascii")
        ->check(CLI::IsMember({"json", "ascii"}));
  };

  auto* binomial_cmd =
      app.add_subcommand("binomial", "Jack binomial coefficient b^lambda_mu");
  add_pair_opts(binomial_cmd, false);
  binomial_cmd->add_option("--eval", eval_text, "evaluate at r=<rational>");

  auto* stem_cmd = app.add_subcommand("stem", "stem K^lambda_mu");
  add_pair_opts(stem_cmd, false);
  stem_cmd->add_option("--eval", eval_text, "evaluate at r=<rational>");

  auto* leaf_cmd = app.add_subcommand("leaf", "leaf L^lambda_mu");
  add_pair_opts(leaf_cmd, false);
  leaf_cmd->add_option("--eval", eval_text, "evaluate at r=<rational>");

  auto* dec_cmd = app.add_subcommand(
      "decompose", "label the boxes of lambda relative to mu");
  add_pair_opts(dec_cmd, false);

  auto* closed_cmd = app.add_subcommand(
      "closed-form", "two-row leaf polynomial L(u,d;m,y)");
  int u = 0, d = 0, m = 0;
  std::string y_text;
  bool y_symbolic = false;
  closed_cmd->add_option("--u", u, "boxes in the upper skew row")->required();
  closed_cmd->add_option("--d", d, "boxes in the lower skew row")->required();
  closed_cmd->add_option("--m", m, "overlapping columns");
  auto* y_opt = closed_cmd->add_option(
      "--y", y_text, "critical hook as g+l*r, nonnegative integers");
  closed_cmd->add_flag("--y-symbolic", y_symbolic, "keep y as a variable")
      ->excludes(y_opt);
  closed_cmd->add_option("--format", format, "json or ascii")
      ->check(CLI::IsMember({"json", "ascii"}));

  auto* verify_cmd =
      app.add_subcommand("verify", "run a verification suite");
  VerifyOptions vopt;
  std::vector<std::string> suite_ids = identity_suite_names();
  for (const char* extra :
       {"identities", "fixtures", "oracle", "oracle-triangle",
        "oracle-stability", "eigenfunctions", "main-theorem",
        "skew-invariance", "recurrences", "positivity"})
    suite_ids.push_back(extra);
  verify_cmd->add_option("--suite", vopt.suite, "suite id")
      ->required()
      ->check(CLI::IsMember(suite_ids));
  verify_cmd->add_option("--u-max", vopt.u_max, "cap on u");
  verify_cmd->add_option("--d-max", vopt.d_max, "cap on d");
  verify_cmd->add_option("--m-max", vopt.m_max, "cap on m");
  verify_cmd->add_option("--n-max", vopt.n_max, "cap on |lambda| or M");
  verify_cmd->add_option("--format", vopt.format, "ascii or json")
      ->check(CLI::IsMember({"json", "ascii"}));
  verify_cmd->add_option("--report", vopt.report_path,
                         "also write the JSON report here");

  auto* table_cmd = app.add_subcommand(
      "table", "stem/leaf table over all pairs up to a size cap");
  TableOptions topt;
  table_cmd->add_option("--n-max", topt.n_max, "cap on |lambda|")->required();
  table_cmd->add_option("--shape", topt.shape,
                        "all, two-row, gap, or overlap");
  table_cmd->add_option("--format", topt.format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}));
  table_cmd->add_option("--output", topt.output, "write to a file");

  std::vector<const char*> argv;
  argv.push_back("jackleaf");
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    std::optional<Rat> at;
    if (!eval_text.empty()) at = parse_eval_point(eval_text);

    if (*binomial_cmd) {
      BinomialContext ctx;
      emit_ratfun(ctx.binomial(Partition::parse(lam_text),
                               Partition::parse(mu_text)),
                  format, at, out);
    } else if (*stem_cmd) {
      emit_ratfun(
          stem(Partition::parse(lam_text), Partition::parse(mu_text)),
          format, at, out);
    } else if (*leaf_cmd) {
      BinomialContext ctx;
      emit_ratfun(leaf(Partition::parse(lam_text), Partition::parse(mu_text),
                       ctx),
                  format, at, out);
    } else if (*dec_cmd) {
      Partition lam = Partition::parse(lam_text);
      Partition mu = Partition::parse(mu_text);
      std::string rendered = render_decomposition(lam, mu);
      if (format == "ascii") {
        out << rendered << "\n";
      } else {
        Json j;
        j["rows"] = Json::array();
        std::size_t start = 0;
        while (start <= rendered.size() && !rendered.empty()) {
          auto end = rendered.find('\n', start);
          j["rows"].push_back(rendered.substr(
              start, end == std::string::npos ? std::string::npos
                                              : end - start));
          if (end == std::string::npos) break;
          start = end + 1;
        }
        CriticalData cd = critical_data(lam, mu);
        if (cd.xstar)
          j["critical_box"] = Json::array({cd.xstar->row, cd.xstar->col});
        else
          j["critical_box"] = nullptr;
        j["critical_hook"] = to_json(cd.y);
        out << j.dump(2) << "\n";
      }
    } else if (*closed_cmd) {
      MultiPoly y = y_symbolic ? MultiPoly::variable(Var::y)
                               : (y_text.empty() ? MultiPoly(0)
                                                 : parse_hook(y_text));
      MultiPoly result = closed_leaf(u, d, m, y);
      if (format == "ascii")
        out << result.str() << "\n";
      else
        out << to_json(result).dump(2) << "\n";
    } else if (*verify_cmd) {
      return cmd_verify(vopt, out);
    } else if (*table_cmd) {
      return cmd_table(topt, out);
    }
    return 0;
  } catch (const Error& e) {
    err << e.what() << "\n";
    return e.code() == Errc::UnknownSuite ? 2 : 1;
  }
}

}  // namespace jackleaf
