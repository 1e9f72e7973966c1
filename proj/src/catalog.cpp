#include "fibconv/catalog.hpp"

#include "fibconv/error.hpp"
#include "fibconv/expr_json.hpp"
#include "fibconv/gf_compile.hpp"

#include <fstream>

#ifndef FIBCONV_DEFAULT_MANIFEST
#define FIBCONV_DEFAULT_MANIFEST "data/identities.json"
#endif

namespace fibconv {

using nlohmann::json;

const Identity* Catalog::find_identity(const std::string& id) const {
  for (const auto& i : identities)
    if (i.id == id) return &i;
  return nullptr;
}

const GfIdentity* Catalog::find_functional_equation(const std::string& id) const {
  for (const auto& i : functional_equations)
    if (i.id == id) return &i;
  return nullptr;
}

std::string default_manifest_path() { return FIBCONV_DEFAULT_MANIFEST; }

namespace {

// Cartesian product of the parameter ranges, filtered by every "where"
// condition, in lexicographic order of the (sorted) parameter names.
std::vector<ParamEnv> instantiations(const json& entry) {
  std::vector<ParamEnv> out{ParamEnv{}};
  if (auto it = entry.find("params"); it != entry.end()) {
    if (!it->is_object()) throw ManifestError("params must be an object in " + entry.value("id", "?"));
    for (const auto& [name, range] : it->items()) {
      std::vector<long> values;
      if (range.is_array() && range.size() == 2 && range[0].is_number_integer()) {
        for (long v = range[0].get<long>(); v <= range[1].get<long>(); ++v) values.push_back(v);
      } else if (range.is_object() && range.contains("values")) {
        for (const auto& v : range["values"]) values.push_back(v.get<long>());
      } else {
        throw ManifestError("bad range for parameter " + name);
      }
      std::vector<ParamEnv> next;
      for (const auto& env : out)
        for (long v : values) {
          ParamEnv e = env;
          e[name] = v;
          next.push_back(std::move(e));
        }
      out = std::move(next);
    }
  }
  if (auto it = entry.find("where"); it != entry.end()) {
    std::vector<ParamEnv> kept;
    for (const auto& env : out) {
      bool ok = true;
      for (const auto& cond : *it) ok = ok && eval_condition(cond.get<std::string>(), env);
      if (ok) kept.push_back(env);
    }
    out = std::move(kept);
  }
  return out;
}

std::string instance_id(const std::string& family, const ParamEnv& env) {
  if (env.empty()) return family;
  std::string s = family + "[";
  bool first = true;
  for (const auto& [k, v] : env) {
    if (!first) s += ",";
    first = false;
    s += k + "=" + std::to_string(v);
  }
  return s + "]";
}

}  // namespace

Catalog parse_manifest(const json& doc) {
  const json& entries = doc.is_object() ? doc.at("identities") : doc;
  if (!entries.is_array()) throw ManifestError("manifest must be an array of entries");
  Catalog cat;
  for (const auto& entry : entries) {
    if (!entry.contains("id") || !entry.contains("lhs") || !entry.contains("rhs"))
      throw ManifestError("manifest entry needs id, lhs and rhs: " + entry.dump());
    const std::string family = entry["id"].get<std::string>();
    const std::string kind = entry.value("kind", "sequence");
    const std::string quote = entry.value("latex", "");
    const bool expect_fail = entry.value("expect", "pass") == "fail";
    for (const auto& env : instantiations(entry)) {
      const std::string id = instance_id(family, env);
      try {
        if (kind == "gf") {
          cat.functional_equations.push_back(GfIdentity{
              id, family, gf_expr_from_json(entry["lhs"], env), gf_expr_from_json(entry["rhs"], env),
              env, quote, expect_fail});
        } else if (kind == "sequence") {
          std::optional<long> n0;
          const json& jn0 = entry.contains("n0") ? entry["n0"] : json(0);
          if (!(jn0.is_string() && jn0.get<std::string>() == "auto")) n0 = json_int(jn0, env);
          cat.identities.push_back(Identity{id, family, seq_expr_from_json(entry["lhs"], env),
                                            seq_expr_from_json(entry["rhs"], env), n0, env, quote,
                                            expect_fail});
        } else {
          throw ManifestError("unknown kind '" + kind + "'");
        }
      } catch (const ManifestError&) {
        throw;
      } catch (const Error& e) {
        throw ManifestError(id + ": " + e.what());
      }
    }
  }
  return cat;
}

Catalog load_manifest(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ManifestError("cannot open manifest '" + path + "'");
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    throw ManifestError("manifest '" + path + "': " + e.what());
  }
  return parse_manifest(doc);
}

std::optional<long> discover_n0(const Identity& id, long n_max, Evaluator& ev, long limit) {
  long last_bad = -1;
  for (long n = 0; n <= n_max; ++n)
    if (ev(id.lhs, n) != ev(id.rhs, n)) last_bad = n;
  if (last_bad + 1 > limit) return std::nullopt;
  return last_bad + 1;
}

VerifyReport verify_numeric(const Identity& id, long n_max, Evaluator* ev) {
  Evaluator local;
  Evaluator& e = ev ? *ev : local;
  VerifyReport r{id.id, "numeric", false, id.expect_failure, 0, std::nullopt};
  if (id.n0) {
    r.n0 = *id.n0;
  } else if (auto d = discover_n0(id, n_max, e)) {
    r.n0 = *d;
  } else {
    // Report the first failure past the discovery limit.
    r.n0 = kMaxDiscoveredN0;
  }
  for (long n = r.n0; n <= n_max; ++n) {
    Rational a = e(id.lhs, n), b = e(id.rhs, n);
    if (a != b) {
      r.first_failure = Failure{n, a, b};
      return r;
    }
  }
  r.pass = true;
  return r;
}

VerifyReport verify_symbolic(const Identity& id, long n_max, Evaluator* ev) {
  VerifyReport r = verify_numeric(id, n_max, ev);
  if (!r.pass) return r;
  const auto l = gf_of_expr(id.lhs);
  const auto h = gf_of_expr(id.rhs);
  if (!l || !h) return r;
  r.mode = "symbolic";
  const RatFun diff = *l - *h;
  r.pass = diff.is_polynomial() && diff.num().degree() < r.n0;
  return r;
}

VerifyReport verify(const GfIdentity& eq) {
  VerifyReport r{eq.id, "symbolic", eq.lhs == eq.rhs, eq.expect_failure, 0, std::nullopt};
  return r;
}

std::vector<VerifyReport> verify_all(const Catalog& catalog, long n_max, bool symbolic) {
  std::vector<VerifyReport> out;
  Evaluator ev;
  for (const auto& id : catalog.identities)
    out.push_back(symbolic ? verify_symbolic(id, n_max, &ev) : verify_numeric(id, n_max, &ev));
  for (const auto& eq : catalog.functional_equations) out.push_back(verify(eq));
  std::stable_sort(out.begin(), out.end(),
                   [](const VerifyReport& a, const VerifyReport& b) { return a.id < b.id; });
  return out;
}

json to_json(const VerifyReport& r) {
  json j{{"id", r.id}, {"mode", r.mode}, {"pass", r.pass}};
  if (r.mode == "numeric" || r.n0 != 0) j["n0"] = r.n0;
  if (r.expect_failure) j["expected"] = "fail";
  if (r.first_failure)
    j["first_failure"] = {{"n", r.first_failure->n},
                          {"lhs", to_string(r.first_failure->lhs)},
                          {"rhs", to_string(r.first_failure->rhs)}};
  return j;
}

}  // namespace fibconv
