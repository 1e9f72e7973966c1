#include "fibconv/cli.hpp"

#include "fibconv/catalog.hpp"
#include "fibconv/closed_form.hpp"
#include "fibconv/convolution.hpp"
#include "fibconv/gf_compile.hpp"
#include "fibconv/pattern_search.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <ostream>

namespace fibconv {

namespace {

using nlohmann::json;

struct Options {
  std::string manifest;
  std::string format;  // empty: the command default
  // seq
  std::string name;
  long from = 0, to = 20;
  // conv / solve
  std::vector<std::string> factors;
  long n = 30;
  // verify / gfcheck
  std::string id;
  bool all = false, symbolic = false;
  long max_n = 200;
  // table
  int max_sum = 9, max_m = 1 << 20, max_p = 1 << 20;
  long oracle_n = 100;
  // search
  SearchOptions search;
  long max_l = -1;
};

void print_error(std::ostream& err, const std::string& kind, const std::string& detail) {
  err << json{{"error", kind}, {"detail", detail}}.dump() << "\n";
}

std::string join(const std::vector<BigInt>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ' ';
    s += v[i].get_str();
  }
  return s;
}

json strings(const std::vector<BigInt>& v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(x.get_str());
  return a;
}

Catalog load(const Options& o) {
  return load_manifest(o.manifest.empty() ? default_manifest_path() : o.manifest);
}

bool matches(const std::string& want, const std::string& id, const std::string& family) {
  return want == id || want == family;
}

int cmd_seq(const Options& o, std::ostream& out) {
  SequenceHandle h(lookup_sequence(o.name));
  std::vector<BigInt> v;
  for (long k = o.from; k <= o.to; ++k) v.push_back(h.term(k));
  if (o.format == "json")
    out << json{{"name", h.name()}, {"from", o.from}, {"terms", strings(v)}}.dump() << "\n";
  else
    out << join(v) << "\n";
  return 0;
}

int cmd_conv(const Options& o, std::ostream& out) {
  std::vector<SequenceHandle> hs;
  for (const auto& f : o.factors) hs.emplace_back(lookup_sequence(f));
  if (o.n < 0) throw InvalidParameter("--n must be nonnegative");
  const auto v = conv_multi_prefix(hs, o.n + 1);
  if (o.format == "json")
    out << json{{"factors", o.factors}, {"values", strings(v)}}.dump() << "\n";
  else
    out << join(v) << "\n";
  return 0;
}

int cmd_verify(const Options& o, std::ostream& out) {
  if (o.all == !o.id.empty()) throw InvalidParameter("verify needs exactly one of --id or --all");
  const Catalog cat = load(o);
  std::vector<VerifyReport> reports;
  if (o.all) {
    reports = verify_all(cat, o.max_n, o.symbolic);
  } else {
    Evaluator ev;
    for (const auto& i : cat.identities)
      if (matches(o.id, i.id, i.family))
        reports.push_back(o.symbolic ? verify_symbolic(i, o.max_n, &ev) : verify_numeric(i, o.max_n, &ev));
    for (const auto& eq : cat.functional_equations)
      if (matches(o.id, eq.id, eq.family)) reports.push_back(verify(eq));
    if (reports.empty()) throw InvalidParameter("no catalog entry '" + o.id + "'");
  }
  std::size_t bad = 0;
  for (const auto& r : reports) {
    if (!r.as_expected()) ++bad;
    if (o.format == "json") {
      out << to_json(r).dump() << "\n";
      continue;
    }
    out << (r.as_expected() ? (r.expect_failure ? "xfail " : "ok    ") : "FAIL  ") << r.id;
    if (r.first_failure)
      out << "  n=" << r.first_failure->n << " lhs=" << to_string(r.first_failure->lhs)
          << " rhs=" << to_string(r.first_failure->rhs);
    out << "\n";
  }
  if (o.format == "json")
    out << json{{"checks", reports.size()}, {"failed", bad}}.dump() << "\n";
  else if (bad == 0)
    out << "identities: all pass (" << reports.size() << " checks)\n";
  else
    out << "identities: " << bad << " of " << reports.size() << " fail\n";
  return bad == 0 ? 0 : 1;
}

int cmd_solve(const Options& o, std::ostream& out) {
  std::vector<RecurrenceSpec> specs;
  for (const auto& f : o.factors) specs.push_back(lookup_sequence(f));
  const ClosedForm cf = specs.size() == 2 ? solve_conv2(specs[0], specs[1]) : solve_conv_multi(specs);
  if (o.format == "text") {
    out << to_text(cf) << "\n";
  } else if (o.format == "latex") {
    out << to_latex(cf) << "\n";
  } else {
    out << to_json(cf, check(cf)).dump(2) << "\n";
  }
  return 0;
}

int cmd_table(const Options& o, std::ostream& out) {
  const auto cells = table(TableOptions{o.max_sum, o.max_m, o.max_p, o.oracle_n});
  bool all_ok = true;
  for (const auto& c : cells) {
    all_ok = all_ok && c.ok();
    if (o.format == "json") {
      out << to_json(c).dump() << "\n";
    } else {
      out << "m=" << c.m << " p=" << c.p << "  [" << (c.reference.empty() ? "-" : c.reference) << "] "
          << c.method << "  " << (c.ok() ? "verified" : "FAILED") << "  " << to_text(c.closed_form) << "\n";
    }
  }
  return all_ok ? 0 : 1;
}

int cmd_search(const Options& o, std::ostream& out) {
  SearchOptions s = o.search;
  if (o.max_l >= 0) s.l_max = o.max_l;
  for (const auto& sol : search(s)) {
    if (o.format == "text") {
      out << "K={";
      for (std::size_t i = 0; i < sol.K.size(); ++i) out << (i ? "," : "") << sol.K[i];
      out << "} p=" << sol.p << " N=" << to_string(sol.N) << " l=" << sol.l << "\n";
    } else {
      out << to_json(sol).dump() << "\n";
    }
  }
  return 0;
}

int cmd_gfcheck(const Options& o, std::ostream& out) {
  const Catalog cat = load(o);
  bool found = false, all_equal = true;
  auto report = [&](const std::string& id, const RatFun& l, const RatFun& r) {
    found = true;
    const bool eq = equals(l, r);
    all_equal = all_equal && eq;
    if (o.format == "json") {
      out << json{{"id", id}, {"lhs", to_string(l)}, {"rhs", to_string(r)}, {"equal", eq}}.dump() << "\n";
    } else {
      out << id << "\n  lhs: " << to_string(l) << "\n  rhs: " << to_string(r) << "\n  "
          << (eq ? "equal" : "NOT equal") << "\n";
    }
  };
  for (const auto& eq : cat.functional_equations)
    if (matches(o.id, eq.id, eq.family)) report(eq.id, eq.lhs, eq.rhs);
  for (const auto& i : cat.identities) {
    if (!matches(o.id, i.id, i.family)) continue;
    const auto l = gf_of_expr(i.lhs), r = gf_of_expr(i.rhs);
    if (!l || !r) throw InvalidParameter(i.id + " has no generating-function form");
    report(i.id, *l, *r);
  }
  if (!found) throw InvalidParameter("no catalog entry '" + o.id + "'");
  return all_equal ? 0 : 1;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Exact convolution identities for Fibonacci m-step numbers", "fibconv"};
  app.require_subcommand(1);
  app.add_option("--manifest", o.manifest, "Identity manifest (JSON)");

  auto formats = [&](CLI::App* sub, std::vector<std::string> allowed) {
    sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember(allowed));
  };

  auto* seq = app.add_subcommand("seq", "Print sequence terms");
  seq->add_option("--name", o.name, "Sequence name")->required();
  seq->add_option("--from", o.from, "First index");
  seq->add_option("--to", o.to, "Last index");

  auto* conv = app.add_subcommand("conv", "Oracle convolution values for 0..n");
  conv->add_option("--factors", o.factors, "Comma-separated sequence names")->required()->delimiter(',');
  conv->add_option("--n", o.n, "Last index");

  auto* ver = app.add_subcommand("verify", "Verify catalog identities");
  ver->add_option("--id", o.id, "Entry or instance id");
  ver->add_flag("--all", o.all, "Verify the whole catalog");
  ver->add_option("--max-n", o.max_n, "Largest n checked");
  ver->add_flag("--symbolic", o.symbolic, "Also prove via generating functions");

  auto* solve = app.add_subcommand("solve", "Closed form of a convolution");
  solve->add_option("--factors", o.factors, "Comma-separated sequence names")->required()->delimiter(',');

  auto* tab = app.add_subcommand("table", "Solve the (m, p) grid of F^(m) * F^(m+p)");
  tab->add_option("--max", o.max_sum, "Largest m + p");
  tab->add_option("--max-m", o.max_m, "Largest m");
  tab->add_option("--max-p", o.max_p, "Largest p");
  tab->add_option("--oracle-n", o.oracle_n, "Oracle check range");

  auto* srch = app.add_subcommand("search", "Search window-sum identities");
  srch->add_option("--m", o.search.m, "Order of the m-step sequence");
  srch->add_option("--max-p", o.search.p_max, "Largest window length");
  srch->add_option("--max-k", o.search.k_card_max, "Largest |K|");
  srch->add_option("--max-span", o.search.k_span_max, "Largest element of K");
  srch->add_option("--max-l", o.max_l, "Largest right-hand shift");

  auto* gfc = app.add_subcommand("gfcheck", "Compare canonical generating functions");
  gfc->add_option("--id", o.id, "Entry or instance id")->required();

  formats(seq, {"text", "json"});
  formats(conv, {"text", "json"});
  formats(ver, {"text", "json"});
  formats(solve, {"json", "text", "latex"});
  formats(tab, {"text", "json"});
  formats(srch, {"json", "text"});
  formats(gfc, {"text", "json"});

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    print_error(err, "UsageError", e.what());
    return 2;
  }

  try {
    if (seq->parsed()) return cmd_seq(o, out);
    if (conv->parsed()) return cmd_conv(o, out);
    if (ver->parsed()) return cmd_verify(o, out);
    if (solve->parsed()) return cmd_solve(o, out);
    if (tab->parsed()) return cmd_table(o, out);
    if (srch->parsed()) return cmd_search(o, out);
    if (gfc->parsed()) return cmd_gfcheck(o, out);
  } catch (const Error& e) {
    print_error(err, e.kind(), e.what());
    return 2;
  }
  return 2;
}

}  // namespace fibconv
