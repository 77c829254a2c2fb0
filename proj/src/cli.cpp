#include <shapelemma/cli.hpp>
#include <shapelemma/errors.hpp>
#include <shapelemma/fuzz.hpp>
#include <shapelemma/groebner.hpp>
#include <shapelemma/parser.hpp>
#include <shapelemma/poisson.hpp>
#include <shapelemma/resultant.hpp>
#include <shapelemma/shape.hpp>
#include <shapelemma/subresultant.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <bit>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

namespace shapelemma {

namespace {

using json = nlohmann::ordered_json;

// A usage problem detected after argument parsing.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_input(const RunConfig& cfg)
{
  if (!cfg.system.empty() && !cfg.path.empty())
    throw UsageError("give either a file or --system, not both");
  if (!cfg.system.empty())
    return cfg.system;
  if (cfg.path.empty())
    throw UsageError("no input system");
  std::stringstream ss;
  if (cfg.path == "-") {
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(cfg.path);
  if (!in)
    throw UsageError("cannot read " + cfg.path);
  ss << in.rdbuf();
  return ss.str();
}

std::vector<std::string> split_list(const std::string& text)
{
  std::vector<std::string> out;
  std::string cur;
  for (char ch : text) {
    if (ch == ',') {
      out.push_back(cur);
      cur.clear();
    } else if (ch != ' ') {
      cur += ch;
    }
  }
  if (!cur.empty() || !out.empty())
    out.push_back(cur);
  return out;
}

std::size_t slot_of(const std::string& name, std::size_t nvars)
{
  for (std::size_t k = 1; k < nvars; ++k)
    if (var_name(k) == name)
      return k;
  throw UsageError("unknown variable " + name);
}

json strings(const std::vector<MPoly>& ps)
{
  json out = json::array();
  for (const auto& p : ps)
    out.push_back(p.to_string());
  return out;
}

json point_json(const std::vector<Rational>& pt, std::size_t first)
{
  json out = json::object();
  for (std::size_t k = first; k < pt.size(); ++k)
    out[var_name(k)] = to_string(pt[k]);
  return out;
}

json condition_list(const std::vector<Condition>& cs)
{
  json out = json::array();
  for (const auto& c : cs)
    out.push_back({{"name", c.name}, {"value", c.value}, {"evidence", c.evidence}});
  return out;
}

int cmd_resultant(const PolySystem& s, json& doc)
{
  const HiddenVarResultant r = hidden_variable_resultant(s);
  doc["R"] = r.poly.to_string();
  doc["factored"] = factored_string(r.poly);
  doc["degree"] = r.poly.degree();
  doc["degree_bound"] = r.degree_bound;
  doc["method"] = r.method;
  json factors = json::array();
  if (!r.poly.is_zero())
    for (const auto& f : split_factors(r.poly))
      factors.push_back({{"factor", f.q.to_string()}, {"exponent", f.exponent}});
  doc["factors"] = factors;
  return kExitOk;
}

int cmd_subresultants(const PolySystem& s, json& doc)
{
  const SubresultantData d = first_subresultant_polys(s);
  doc["rho"] = d.rho;
  json sv = json::object();
  for (std::size_t i = 0; i < d.s.size(); ++i)
    sv["s" + std::to_string(i)] = d.s[i].to_string();
  doc["s"] = sv;
  json pv = json::object();
  for (std::size_t i = 0; i < d.p.size(); ++i)
    pv["p" + std::to_string(i + 1)] = d.p[i].to_string();
  doc["p"] = pv;
  doc["sign_flipped"] = d.flipped;
  doc["perturbed"] = d.perturbed;
  json all = json::object();
  for (std::size_t j = 0; j < d.monomials.size(); ++j)
    all[d.monomials[j].to_string()] = d.s_alpha[j].to_string();
  doc["s_alpha"] = all;
  return kExitOk;
}

std::optional<std::size_t> dim_or_none(const Ideal& I) { return I.dimension(); }

int cmd_groebner(const PolySystem& s, const RunConfig& cfg, json& doc)
{
  const Ideal I = Ideal::affine(s.nvars(), s.polys);
  if (cfg.order != "lex" && cfg.order != "grevlex")
    throw UsageError("order must be lex or grevlex");
  doc["order"] = cfg.order;
  doc["basis"] = strings(cfg.order == "lex" ? I.lex_basis() : I.grevlex_basis());
  const auto dim = dim_or_none(I);
  if (dim)
    doc["quotient_dimension"] = *dim;
  else
    doc["quotient_dimension"] = "infinite";
  return kExitOk;
}

int cmd_eliminate(const PolySystem& s, const RunConfig& cfg, json& doc)
{
  const Ideal I = Ideal::affine(s.nvars(), s.polys);
  std::uint32_t keep = 0;
  json names = json::array();
  if (cfg.keep.empty()) {
    keep = 1u << s.hidden();
  } else {
    for (const auto& name : split_list(cfg.keep))
      keep |= 1u << slot_of(name, s.nvars());
  }
  for (std::size_t k = 1; k < s.nvars(); ++k)
    if ((keep >> k) & 1u)
      names.push_back(var_name(k));
  doc["keep"] = names;
  doc["generators"] = strings(elimination_ideal(I, keep).generators());
  if (std::popcount(keep) == 1) {
    const auto slot = static_cast<std::size_t>(std::countr_zero(keep));
    doc["eliminant"] = univariate_eliminant(I, slot).with_var(var_name(slot)).to_string();
  }
  return kExitOk;
}

int cmd_shape(const PolySystem& s, json& doc)
{
  const Ideal I = Ideal::affine(s.nvars(), s.polys);
  const auto b = has_shape_lemma(I);
  doc["shape"] = b.has_value();
  if (b) {
    doc["r"] = b->r.to_string();
    json g = json::object();
    for (std::size_t k = 0; k < b->vars.size(); ++k)
      g[var_name(b->vars[k])] = b->g[k].to_string();
    doc["g"] = g;
  }
  doc["projection_injective"] = projection_injective(I);
  doc["lex_basis"] = strings(I.lex_basis());
  return kExitOk;
}

int cmd_infinity(const PolySystem& s, json& doc)
{
  const InfinityReport rep = solutions_at_infinity(s);
  doc["exists"] = rep.exists;
  doc["finite"] = rep.finite;
  json w = json::array();
  for (std::size_t k : rep.saturation_witnesses)
    w.push_back(var_name(k));
  doc["saturation_witnesses"] = w;
  json charts = json::array();
  for (const auto& c : rep.charts) {
    json pts = json::array();
    for (const auto& p : c.points)
      pts.push_back(point_json(p, 0));
    charts.push_back({{"chart", var_name(c.pivot) + "=1"}, {"empty", c.empty}, {"finite", c.finite}, {"points", pts}});
  }
  doc["charts"] = charts;
  return kExitOk;
}

int cmd_multiplicity(const PolySystem& s, const RunConfig& cfg, json& doc)
{
  const auto charts = chart_decomposition(s);
  if (!cfg.point.empty()) {
    const auto parts = split_list(cfg.point);
    if (parts.size() != s.n())
      throw UsageError("--point needs " + std::to_string(s.n()) + " coordinates");
    std::vector<Rational> pt{Rational(1)};
    for (const auto& p : parts)
      pt.push_back(parse_rational(p));
    doc["point"] = point_json(pt, 1);
    doc["multiplicity"] = multiplicity_at_point(charts[0], pt);
    return kExitOk;
  }
  json out = json::array();
  for (const auto& c : charts) {
    json entry{{"chart", c.name()}, {"finite", c.finite}, {"has_length", c.has_length}};
    if (c.has_length) {
      entry["length"] = c.length();
      json pts = json::array();
      for (const auto& p : chart_points(c))
        pts.push_back({{"point", point_json(p, 0)}, {"multiplicity", multiplicity_at_point(c, p)}});
      entry["rational_points"] = pts;
    }
    out.push_back(entry);
  }
  doc["charts"] = out;
  return kExitOk;
}

int cmd_fiber(const PolySystem& s, const RunConfig& cfg, json& doc)
{
  const Rational lambda = parse_rational(cfg.lambda);
  doc["lambda"] = to_string(lambda);
  doc["fiber_degree"] = fiber_degree(Ideal::affine(s.nvars(), s.polys), lambda);
  return kExitOk;
}

int cmd_poisson(const PolySystem& s, json& doc)
{
  const PoissonReport rep = verify_poisson(s);
  doc["finite"] = rep.finite;
  doc["R"] = rep.R.to_string();
  doc["c"] = to_string(rep.c);
  json charts = json::object();
  for (std::size_t k = 0; k < rep.charts.size() && k < rep.chart_lengths.size(); ++k)
    charts[rep.charts[k]] = rep.chart_lengths[k];
  doc["chart_lengths"] = charts;
  json factors = json::array();
  for (const auto& f : rep.factors) {
    json lengths = json::object();
    for (std::size_t k = 0; k < f.lengths.size(); ++k)
      lengths[rep.charts[k]] = f.lengths[k];
    factors.push_back({{"factor", f.q.to_string()},
                       {"exponent", f.exponent},
                       {"irreducible", f.irreducible},
                       {"lengths", lengths},
                       {"accounted", f.accounted},
                       {"matches", f.matches}});
  }
  doc["factors"] = factors;
  doc["pass"] = rep.finite && rep.pass;
  if (!rep.finite)
    return kExitHypothesis;
  return rep.pass ? kExitOk : kExitViolation;
}

int cmd_theorem(const PolySystem& s, const RunConfig& cfg, json& doc)
{
  TheoremReport rep;
  if (cfg.theorem == "1.1")
    rep = check_theorem_elim(s);
  else if (cfg.theorem == "1.3")
    rep = check_theorem_slm2(s);
  else if (cfg.theorem == "1.4")
    rep = check_theorem_rshape(s);
  else if (cfg.theorem == "5.6")
    rep = check_prop_n2(s);
  else
    throw UsageError("theorem must be one of 1.1, 1.3, 1.4, 5.6");
  doc["theorem"] = rep.theorem;
  doc["verdict"] = verdict_name(rep.verdict);
  doc["message"] = rep.message;
  if (!rep.failed_hypothesis.empty())
    doc["failed_hypothesis"] = rep.failed_hypothesis;
  json flags = json::object();
  for (const auto* list : {&rep.hypotheses, &rep.conditions, &rep.details})
    for (const auto& c : *list)
      flags[c.name] = c.value;
  doc["flags"] = flags;
  for (const auto* list : {&rep.hypotheses, &rep.conditions, &rep.details})
    for (const auto& c : *list)
      if (c.name == "gcd_R_s0_one")
        doc["gcd_R_s0"] = c.evidence;
  doc["hypotheses"] = condition_list(rep.hypotheses);
  doc["conditions"] = condition_list(rep.conditions);
  doc["details"] = condition_list(rep.details);
  switch (rep.verdict) {
  case Verdict::Consistent:
    return kExitOk;
  case Verdict::HypothesisFailed:
    return kExitHypothesis;
  case Verdict::Violation:
    break;
  }
  return kExitViolation;
}

int cmd_fuzz(const RunConfig& cfg, json& doc)
{
  FuzzOptions opts;
  opts.seed = cfg.seed;
  opts.count = cfg.count;
  const FuzzReport rep = run_fuzz(opts);
  doc["seed"] = rep.seed;
  doc["generated"] = rep.generated;
  doc["checked"] = rep.checked;
  doc["skipped"] = rep.skipped;
  json checks = json::array();
  for (const auto& c : rep.checks) {
    json entry{{"name", c.name}, {"runs", c.runs}, {"failures", c.failures}};
    if (cfg.verbosity > 0)
      entry["seconds"] = c.seconds;
    checks.push_back(entry);
  }
  doc["checks"] = checks;
  doc["failures"] = rep.failures;
  doc["ok"] = rep.ok();
  return rep.ok() ? kExitOk : kExitViolation;
}

std::string scalar_text(const json& v)
{
  if (v.is_string())
    return v.get<std::string>();
  return v.dump();
}

bool all_scalars(const json& v)
{
  for (const auto& x : v)
    if (x.is_structured())
      return false;
  return true;
}

void render(const json& obj, std::ostream& out, const std::string& pad);

void render_value(const std::string& key, const json& v, std::ostream& out, const std::string& pad)
{
  if (v.is_object()) {
    if (v.empty()) {
      out << pad << key << ": {}\n";
      return;
    }
    out << pad << key << ":\n";
    render(v, out, pad + "  ");
  } else if (v.is_array()) {
    if (all_scalars(v)) {
      out << pad << key << ": [";
      for (std::size_t i = 0; i < v.size(); ++i)
        out << (i ? ", " : "") << scalar_text(v[i]);
      out << "]\n";
      return;
    }
    out << pad << key << ":\n";
    for (const auto& x : v) {
      out << pad << "  -\n";
      render(x, out, pad + "    ");
    }
  } else {
    out << pad << key << ": " << scalar_text(v) << "\n";
  }
}

void render(const json& obj, std::ostream& out, const std::string& pad)
{
  for (const auto& [k, v] : obj.items())
    render_value(k, v, out, pad);
}

int exit_for(const Error& e) { return e.kind() == ErrorKind::ParseError ? kExitParse : kExitLibrary; }

}  // namespace

int run_command(const RunConfig& cfg, std::ostream& out, std::ostream& err)
{
  json doc = json::object();
  doc["command"] = cfg.command == "theorem" ? "theorem " + cfg.theorem : cfg.command;
  int code = kExitOk;
  auto fail = [&](int c, const std::string& kind, const std::string& message) {
    if (cfg.json)
      out << json{{"command", doc["command"]}, {"error", kind}, {"message", message}}.dump(2) << "\n";
    else
      err << "error: " << message << "\n";
    return c;
  };
  try {
    if (cfg.command == "fuzz") {
      code = cmd_fuzz(cfg, doc);
    } else {
      const PolySystem s = parse_system(read_input(cfg));
      if (cfg.command == "resultant")
        code = cmd_resultant(s, doc);
      else if (cfg.command == "subresultants")
        code = cmd_subresultants(s, doc);
      else if (cfg.command == "groebner")
        code = cmd_groebner(s, cfg, doc);
      else if (cfg.command == "eliminate")
        code = cmd_eliminate(s, cfg, doc);
      else if (cfg.command == "shape")
        code = cmd_shape(s, doc);
      else if (cfg.command == "infinity")
        code = cmd_infinity(s, doc);
      else if (cfg.command == "multiplicity")
        code = cmd_multiplicity(s, cfg, doc);
      else if (cfg.command == "fiber")
        code = cmd_fiber(s, cfg, doc);
      else if (cfg.command == "poisson")
        code = cmd_poisson(s, doc);
      else if (cfg.command == "theorem")
        code = cmd_theorem(s, cfg, doc);
      else
        throw UsageError("unknown command " + cfg.command);
    }
  } catch (const UsageError& e) {
    return fail(kExitUsage, "UsageError", e.what());
  } catch (const Error& e) {
    return fail(exit_for(e), error_kind_name(e.kind()), e.what());
  }
  if (cfg.json)
    out << doc.dump(2) << "\n";
  else
    render(doc, out, "");
  return code;
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
  CLI::App app{"Hidden-variable resultants, scalar subresultants and Shape Lemma checks", "shapelemma"};
  app.require_subcommand(1);
  app.fallthrough();
  RunConfig cfg;
  std::string format = "text";
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--seed", cfg.seed, "Random seed for fuzz");
  app.add_option("--system", cfg.system, "Inline system text instead of a file");
  app.add_flag("-v,--verbose", cfg.verbosity, "More output");

  struct Spec {
    const char* name;
    const char* help;
  };
  const Spec specs[] = {
      {"resultant", "Hidden-variable resultant R(xn) with its factorization"},
      {"subresultants", "Scalar subresultants s_0..s_{n-1} and p_1..p_{n-1}"},
      {"groebner", "Reduced Groebner basis"},
      {"eliminate", "Elimination ideal"},
      {"shape", "Shape Lemma basis, if any"},
      {"infinity", "Solutions at infinity"},
      {"multiplicity", "Local multiplicities at rational points"},
      {"fiber", "Number of points over xn = lambda, with multiplicity"},
      {"poisson", "Exponents of R against local lengths"},
      {"theorem", "Run a theorem verifier"},
      {"fuzz", "Randomized property suite"},
  };
  for (const auto& spec : specs) {
    CLI::App* sub = app.add_subcommand(spec.name, spec.help);
    sub->callback([&cfg, name = std::string(spec.name)] { cfg.command = name; });
    if (std::string(spec.name) == "theorem")
      sub->add_option("which", cfg.theorem, "1.1, 1.3, 1.4 or 5.6")
          ->required()
          ->check(CLI::IsMember({"1.1", "1.3", "1.4", "5.6"}));
    if (std::string(spec.name) == "fuzz") {
      sub->add_option("--count", cfg.count, "Zero-dimensional systems to check");
      continue;
    }
    sub->add_option("file", cfg.path, "System file, or - for stdin");
    if (std::string(spec.name) == "groebner")
      sub->add_option("--order", cfg.order, "lex or grevlex")->check(CLI::IsMember({"lex", "grevlex"}));
    if (std::string(spec.name) == "eliminate")
      sub->add_option("--keep", cfg.keep, "Variables to keep, comma separated (default xn)");
    if (std::string(spec.name) == "multiplicity")
      sub->add_option("--point", cfg.point, "Affine point x1,..,xn");
    if (std::string(spec.name) == "fiber")
      sub->add_option("--lambda", cfg.lambda, "Value of xn (default 0)");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }
  cfg.json = format == "json";
  return run_command(cfg, out, err);
}

}  // namespace shapelemma
