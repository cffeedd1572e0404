#include "icat/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <random>
#include <sstream>

#include "icat/diagram_io.hpp"
#include "icat/endalg.hpp"
#include "icat/goodness.hpp"
#include "icat/gram.hpp"
#include "icat/presets.hpp"

namespace icat {

namespace {

using Json = nlohmann::ordered_json;

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  std::string command;
  std::string preset = "sym";
  int r = 2;
  std::string lambdas = "2";
  std::string alpha;
  std::string alpha_file;
  std::string frobenius_model = "dual_eps2";
  std::string method;
  int cutoff = -1;
  std::string pq = "1,1";
  std::string pq_list = "1,1";
  std::string t = "generic";
  int p = 1;
  int n_max = 24;
  int random_count = 16;
  int r_max = 8;
  std::uint64_t seed = 1;
  std::string diagram;
  std::string points;
  int bound = -1;
  std::string format = "json";
  std::string output;
  std::string list_target;
  std::string config_path;  // expanded before parsing
};

Json echo(const RunConfig& c) {
  return Json{{"command", c.command},   {"preset", c.preset},   {"r", c.r},
              {"lambdas", c.lambdas},   {"alpha", c.alpha},     {"alpha_file", c.alpha_file},
              {"frobenius_model", c.frobenius_model},           {"method", c.method},
              {"cutoff", c.cutoff},     {"pq", c.pq},           {"pq_list", c.pq_list},
              {"t", c.t},               {"p", c.p},             {"N", c.n_max},
              {"random_count", c.random_count},                 {"r_max", c.r_max},
              {"seed", c.seed},         {"diagram", c.diagram}, {"points", c.points},
              {"bound", c.bound},       {"format", c.format}};
}

std::string flatten(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (!v.is_array()) return v.dump();
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    const bool nested = v[i].is_array();
    out += (i ? (nested ? ";" : ",") : "") + flatten(v[i]);
  }
  return out;
}

bool given(const std::vector<std::string>& args, const std::string& flag) {
  for (const auto& a : args)
    if (a == flag || a.rfind(flag + "=", 0) == 0) return true;
  return false;
}

// A JSON config file is an object keyed by long option names; arrays become
// comma lists and nested arrays ';'-separated comma lists. Its fields are
// appended as options unless the command line already gives them.
std::vector<std::string> expand_config(std::vector<std::string> args) {
  std::string path;
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (args[i] == "--config" && i + 1 < args.size()) {
      path = args[i + 1];
      args.erase(args.begin() + static_cast<long>(i), args.begin() + static_cast<long>(i) + 2);
      break;
    }
    if (args[i].rfind("--config=", 0) == 0) {
      path = args[i].substr(9);
      args.erase(args.begin() + static_cast<long>(i));
      break;
    }
  }
  if (path.empty()) return args;
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read config file '" + path + "'");
  Json j;
  try {
    j = Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw ConfigError(std::string("config file is not valid JSON: ") + e.what());
  }
  if (!j.is_object()) throw ConfigError("config file must hold a JSON object");
  for (const auto& [key, value] : j.items()) {
    if (key == "command") {
      if (!value.is_string()) throw ConfigError("config field 'command' must be a string");
      if (args.empty() || args.front().rfind("-", 0) == 0) args.insert(args.begin(), value.get<std::string>());
      if (args.front() != value.get<std::string>())
        throw ConfigError("config file is for command '" + flatten(value) + "'");
      continue;
    }
    const std::string flag = "--" + key;
    if (given(args, flag)) continue;
    args.push_back(flag);
    args.push_back(flatten(value));
  }
  return args;
}

// ------------------------------------------------------------------ parsing

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : s) {
    if (ch == sep) {
      out.push_back(cur);
      cur.clear();
    } else if (!std::isspace(static_cast<unsigned char>(ch))) {
      cur += ch;
    }
  }
  if (!cur.empty() || !out.empty()) out.push_back(cur);
  return out;
}

std::vector<Rational> parse_rationals(const std::string& s, const std::string& what) {
  std::vector<Rational> out;
  for (const auto& tok : split(s, ',')) {
    if (tok.empty()) continue;
    try {
      out.push_back(parse_rational(tok));
    } catch (const std::exception&) {
      throw ConfigError(what + ": '" + tok + "' is not a rational number");
    }
  }
  return out;
}

std::pair<int, int> parse_pq(const std::string& s) {
  const auto parts = split(s, ',');
  if (parts.size() != 2) throw ConfigError("arity '" + s + "' must be p,q");
  try {
    const int p = std::stoi(parts[0]);
    const int q = std::stoi(parts[1]);
    if (p < 0 || q < 0) throw ConfigError("arity '" + s + "' must be nonnegative");
    return {p, q};
  } catch (const std::logic_error&) {
    throw ConfigError("arity '" + s + "' must be p,q");
  }
}

std::vector<std::pair<int, int>> parse_pq_list(const std::string& s) {
  std::vector<std::pair<int, int>> out;
  for (const auto& item : split(s, ';'))
    if (!item.empty()) out.push_back(parse_pq(item));
  if (out.empty()) throw ConfigError("empty arity list");
  return out;
}

std::vector<Rational> read_alpha_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read alpha file '" + path + "'");
  std::string line;
  std::string all;
  while (std::getline(in, line)) {
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    for (char& ch : line)
      if (std::isspace(static_cast<unsigned char>(ch))) ch = ',';
    all += line + ",";
  }
  return parse_rationals(all, "alpha file");
}

std::vector<Rational> alpha_values(const RunConfig& c) {
  if (!c.alpha.empty() && !c.alpha_file.empty()) throw ConfigError("give --alpha or --alpha-file, not both");
  if (!c.alpha_file.empty()) return read_alpha_file(c.alpha_file);
  return parse_rationals(c.alpha, "--alpha");
}

PresetBundle bundle_for(const RunConfig& c) {
  PresetOptions o;
  o.r = c.r;
  o.lambdas = parse_rationals(c.lambdas, "--lambdas");
  o.frobenius_model = c.frobenius_model;
  if (!c.alpha.empty() || !c.alpha_file.empty()) o.alpha = AlphaSequence::from_list(alpha_values(c));
  try {
    return preset(c.preset, o);
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }
}

std::string method_of(const RunConfig& c, const PresetBundle& b) { return c.method.empty() ? b.method : c.method; }
int cutoff_of(const RunConfig& c, const PresetBundle& b) { return c.cutoff >= 0 ? c.cutoff : b.cutoff; }

/// Empty for "generic"; otherwise one value per parameter.
std::vector<Rational> point_of(const RunConfig& c, const PresetBundle& b) {
  if (c.t == "generic") return {};
  std::vector<Rational> pt = parse_rationals(c.t, "--t");
  if (pt.size() != b.params.size())
    throw ConfigError("--t needs " + std::to_string(b.params.size()) + " value(s) for preset " + b.name);
  return pt;
}

/// Three seeded points of height >= 1000 per parameter.
std::vector<std::vector<Rational>> probe_points(std::size_t nparams, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> num(1000, 1000000);
  std::uniform_int_distribution<long> den(1, 1000);
  std::vector<std::vector<Rational>> out;
  while (out.size() < 3) {
    std::vector<Rational> pt;
    while (pt.size() < nparams) {
      const Rational x = Rational(num(rng)) / den(rng);
      if (height(x) >= 1000) pt.push_back(x);
    }
    out.push_back(std::move(pt));
  }
  return out;
}

// ------------------------------------------------------------------ output

Json strings(const std::vector<Rational>& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(to_string(x));
  return a;
}

Json literals(const std::vector<Diagram>& v) {
  Json a = Json::array();
  for (const auto& d : v) a.push_back(format_diagram(d));
  return a;
}

Json signature_json(const Signature& s) {
  Json a = Json::array();
  for (const auto& g : s.generators()) a.push_back(g.name + ":(" + std::to_string(g.outputs) + "," + std::to_string(g.inputs) + ")");
  return a;
}

Json header(const RunConfig& c) {
  return Json{{"tool", kToolVersion}, {"command", c.command}, {"config", echo(c)}};
}

Json table(std::vector<std::string> columns) { return Json{{"columns", std::move(columns)}, {"rows", Json::array()}}; }

std::string csv_cell(const Json& v) {
  std::string s = v.is_string() ? v.get<std::string>() : v.dump();
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char ch : s) q += ch == '"' ? std::string("\"\"") : std::string(1, ch);
  return q + "\"";
}

void emit(const RunConfig& c, const Json& report, std::ostream& out) {
  std::ostringstream os;
  if (c.format == "csv") {
    const Json& t = report.at("table");
    const auto& cols = t.at("columns");
    for (std::size_t i = 0; i < cols.size(); ++i) os << (i ? "," : "") << csv_cell(cols[i]);
    os << "\n";
    for (const auto& row : t.at("rows")) {
      for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << csv_cell(row[i]);
      os << "\n";
    }
  } else {
    os << report.dump(2) << "\n";
  }
  if (c.output.empty()) {
    out << os.str();
    return;
  }
  std::ofstream f(c.output, std::ios::binary);
  if (!f) throw ConfigError("cannot write '" + c.output + "'");
  f << os.str();
}

// ----------------------------------------------------------------- commands

int cmd_gram(const RunConfig& c, Json& rep) {
  const PresetBundle b = bundle_for(c);
  const auto [p, q] = parse_pq(c.pq);
  const std::string method = method_of(c, b);
  const int cutoff = cutoff_of(c, b);
  const std::vector<Rational> point = point_of(c, b);
  const SpanningSet s = enumerate_by_name(method, b.sig, p, q, cutoff);
  const SpanningSet dual = enumerate_by_name(method, b.sig, q, p, cutoff);
  rep["preset"] = b.name;
  rep["signature"] = signature_json(*b.sig);
  rep["method"] = method;
  rep["cutoff"] = cutoff;
  rep["p"] = p;
  rep["q"] = q;
  rep["params"] = b.params;
  rep["point"] = strings(point);
  rep["basis"] = literals(s.diagrams);
  rep["dual_basis"] = literals(dual.diagrams);
  int status = 0;
  Json t = table({"row", "col", "entry"});
  const bool probe_only = point.empty() && b.params.size() > 1;
  if (!probe_only) {
    const GramReport g = gram_report(s, dual, b.character, point);
    Json entries = Json::array();
    for (std::size_t i = 0; i < g.entries.size(); ++i) {
      Json row = Json::array();
      for (std::size_t j = 0; j < g.entries[i].size(); ++j) {
        const std::string e = g.entries[i][j].to_string(b.params);
        row.push_back(e);
        t["rows"].push_back(Json::array({i, j, e}));
      }
      entries.push_back(std::move(row));
    }
    rep["entries"] = std::move(entries);
    rep["generic_rank"] = g.rank();
    Json ex = Json::array();
    for (const auto& e : g.analysis.exceptional) ex.push_back(Json{{"value", to_string(e.value)}, {"rank", e.rank}});
    rep["exceptional"] = std::move(ex);
    rep["pivot_minor"] = g.analysis.pivot_minor.to_string(b.params.empty() ? "t" : b.params.front());
    rep["nonrational_locus"] = g.analysis.nonrational_locus;
    Json rad = Json::array();
    for (const auto& coords : g.radical_coords) {
      Json r = Json::array();
      for (const auto& x : coords) r.push_back(x.to_string(b.params));
      rad.push_back(std::move(r));
    }
    rep["radical_basis"] = std::move(rad);
  } else {
    const Matrix<Poly> entries = gram_entries(s.diagrams, dual.diagrams, b.character);
    Json ej = Json::array();
    for (std::size_t i = 0; i < entries.size(); ++i) {
      Json row = Json::array();
      for (std::size_t j = 0; j < entries[i].size(); ++j) {
        const std::string e = entries[i][j].to_string(b.params);
        row.push_back(e);
        t["rows"].push_back(Json::array({i, j, e}));
      }
      ej.push_back(std::move(row));
    }
    rep["entries"] = std::move(ej);
  }
  if (point.empty() && !b.params.empty()) {
    const Matrix<Poly> entries = gram_entries(s.diagrams, dual.diagrams, b.character);
    Json probe = Json::array();
    std::vector<std::size_t> ranks;
    for (const auto& pt : probe_points(b.params.size(), c.seed)) {
      ranks.push_back(rank_at(entries, pt));
      probe.push_back(Json{{"point", strings(pt)}, {"rank", ranks.back()}});
    }
    const bool agree = std::equal(ranks.begin() + 1, ranks.end(), ranks.begin());
    rep["generic_probe"] = Json{{"seed", c.seed}, {"points", std::move(probe)}, {"agree", agree}};
    if (probe_only) {
      rep["generic_rank"] = ranks.front();
      if (!agree) status = 3;
    } else if (ranks.front() != rep["generic_rank"].get<std::size_t>() || !agree) {
      status = 3;
    }
  }
  rep["provenance"] = Json{{"entries", b.character.provenance() + " on " + method + " spanning sets"},
                           {"rank", probe_only ? "three-point random specialization"
                                               : "exact evaluation with interpolated pivot minor"}};
  rep["table"] = std::move(t);
  return status;
}

int cmd_homdims(const RunConfig& c, Json& rep) {
  const PresetBundle b = bundle_for(c);
  const std::string method = method_of(c, b);
  const int cutoff = cutoff_of(c, b);
  const std::vector<Rational> point = point_of(c, b);
  if (point.empty() && b.params.size() > 1) throw ConfigError("homdims needs --t values for preset " + b.name);
  rep["preset"] = b.name;
  rep["method"] = method;
  rep["cutoff"] = cutoff;
  rep["point"] = strings(point);
  Json dims = Json::array();
  Json t = table({"p", "q", "dimension", "saturated", "history"});
  bool saturated = true;
  for (const auto& [p, q] : parse_pq_list(c.pq_list)) {
    const HomDim h = hom_dim(p, q, b.character, method, cutoff, point);
    std::string hist;
    Json hj = Json::array();
    for (const auto& [k, r] : h.history) {
      hj.push_back(Json::array({k, r}));
      hist += (hist.empty() ? "" : " ") + std::to_string(k) + ":" + std::to_string(r);
    }
    dims.push_back(Json{{"p", p}, {"q", q}, {"dimension", h.dimension}, {"saturated", h.saturated}, {"history", hj}});
    t["rows"].push_back(Json::array({p, q, h.dimension, h.saturated, hist}));
    saturated &= h.saturated;
  }
  rep["hom_dims"] = std::move(dims);
  rep["provenance"] = Json{{"dimension", "Gram rank of " + method + " spanning sets under " + b.character.provenance()}};
  rep["table"] = std::move(t);
  return saturated ? 0 : 3;
}

Json fit_json(const RationalSeriesFit& f) {
  return Json{{"terms", f.coefficients.size()},
              {"rational", f.rational},
              {"P", f.rational ? f.p.to_string("X") : ""},
              {"Q", f.rational ? f.q.to_string("X") : ""},
              {"recurrence", strings(f.recurrence)},
              {"deg_P_le_deg_Q", f.deg_p_le_deg_q},
              {"Q_squarefree", f.q_squarefree},
              {"Q0_nonzero", f.q0_nonzero},
              {"good", f.good},
              {"loyal", f.loyal},
              {"loyal_strict", f.loyal_strict},
              {"hankel_size", f.hankel_size},
              {"hankel_rank", f.hankel_rank}};
}

int cmd_goodness(const RunConfig& c, Json& rep) {
  const PresetBundle b = bundle_for(c);
  GoodnessConfig g;
  g.pq_list = parse_pq_list(c.pq_list);
  g.method = method_of(c, b);
  g.cutoff = cutoff_of(c, b);
  g.n_max = c.n_max;
  g.random_count = c.random_count;
  g.seed = c.seed;
  g.point = point_of(c, b);
  if (g.point.empty() && !b.params.empty()) throw ConfigError("goodness needs --t values for preset " + b.name);
  GoodnessReport r;
  try {
    r = check_goodness(b.character, g);
  } catch (const std::out_of_range& e) {
    throw ConfigError(std::string("surface values too short for this cutoff and N: ") + e.what());
  }
  rep["preset"] = b.name;
  rep["method"] = g.method;
  rep["cutoff"] = g.cutoff;
  rep["point"] = strings(g.point);
  Json sat = Json::array();
  for (const auto& e : r.saturation) {
    Json hj = Json::array();
    for (const auto& [k, rk] : e.dim.history) hj.push_back(Json::array({k, rk}));
    sat.push_back(Json{{"p", e.p}, {"q", e.q}, {"dimension", e.dim.dimension}, {"saturated", e.dim.saturated},
                       {"history", hj}});
  }
  rep["saturation"] = std::move(sat);
  Json fits = Json::array();
  Json t = table({"endomorphism", "p", "via_quotient", "terms", "rational", "P", "Q", "good", "verdict"});
  for (const auto& e : r.fits) {
    Json f = fit_json(e.fit);
    fits.push_back(Json{{"endomorphism", e.label}, {"p", e.p}, {"via_quotient", e.via_quotient},
                        {"series", strings(e.series)}, {"fit", f}, {"verdict", to_string(e.verdict)}});
    t["rows"].push_back(Json::array({e.label, e.p, e.via_quotient, e.series.size(), e.fit.rational, f["P"], f["Q"],
                                     e.fit.good, to_string(e.verdict)}));
  }
  rep["fits"] = std::move(fits);
  rep["notes"] = r.notes;
  rep["verdict"] = to_string(r.verdict);
  rep["witness"] = r.witness;
  rep["seed"] = r.seed;
  rep["provenance"] = Json{{"saturation", "hom_dim over cutoffs 0.." + std::to_string(g.cutoff)},
                           {"series", "diagram powers for spanning endomorphisms, quotient algebra for random ones"},
                           {"scope", "evidence for rank saturation and rational trace series only"}};
  rep["table"] = std::move(t);
  return exit_code(r.verdict);
}

int cmd_chareval(const RunConfig& c, Json& rep) {
  const PresetBundle b = bundle_for(c);
  if (c.diagram.empty()) throw ConfigError("chareval needs --diagram");
  Diagram d = [&] {
    try {
      return parse_diagram(b.sig, c.diagram);
    } catch (const std::invalid_argument& e) {
      throw ConfigError(std::string("bad diagram literal: ") + e.what());
    }
  }();
  if (!d.is_closed()) throw ConfigError("chareval needs a closed diagram");
  const std::vector<Rational> point = point_of(c, b);
  const std::string value =
      point.empty() ? b.character.evaluate(d).to_string(b.params) : to_string(b.character.evaluate_at(d, point));
  rep["preset"] = b.name;
  rep["diagram"] = format_diagram(d);
  rep["components"] = connected_components(d).size();
  rep["point"] = strings(point);
  rep["value"] = value;
  rep["provenance"] = Json{{"value", b.character.provenance()}};
  Json t = table({"diagram", "value"});
  t["rows"].push_back(Json::array({rep["diagram"], value}));
  rep["table"] = std::move(t);
  return 0;
}

int cmd_simples(const RunConfig& c, Json& rep) {
  const PresetBundle b = bundle_for(c);
  const std::string method = method_of(c, b);
  const int cutoff = cutoff_of(c, b);
  const std::vector<Rational> point = point_of(c, b);
  rep["preset"] = b.name;
  rep["method"] = method;
  rep["cutoff"] = cutoff;
  rep["p"] = c.p;
  Json t = table({"point", "dimension", "semisimple", "simple_count"});
  int status = 0;
  if (point.empty() && b.params.size() == 1) {
    const GenericProbe g = probe_generic(c.p, b.character, method, cutoff, c.seed);
    Json pts = Json::array();
    for (std::size_t i = 0; i < g.points.size(); ++i) {
      pts.push_back(Json{{"point", to_string(g.points[i])}, {"dimension", g.dims[i]},
                         {"semisimple", static_cast<bool>(g.semisimple[i])}, {"simple_count", g.simple_counts[i]}});
      t["rows"].push_back(Json::array({to_string(g.points[i]), g.dims[i], static_cast<bool>(g.semisimple[i]),
                                       g.simple_counts[i]}));
    }
    rep["generic_probe"] = Json{{"seed", c.seed}, {"points", std::move(pts)}, {"agree", g.agree}};
    if (!g.agree) status = 3;
  } else {
    if (point.empty() && b.params.size() > 1) throw ConfigError("simples needs --t values for preset " + b.name);
    const QuotientAlgebra a = quotient_algebra(c.p, b.character, method, cutoff, point);
    const SemisimplicityVerdict v = is_semisimple(a.algebra);
    rep["point"] = strings(point);
    rep["basis"] = [&] {
      Json j = Json::array();
      for (std::size_t i = 0; i < a.dim(); ++i) j.push_back(format_diagram(a.basis(i)));
      return j;
    }();
    rep["dimension"] = a.dim();
    rep["semisimple"] = v.semisimple;
    rep["trace_form_determinant"] = to_string(v.determinant);
    rep["center_dimension"] = center_dimension(a.algebra);
    if (v.semisimple) rep["simple_count"] = center_dimension(a.algebra);
    rep["warnings"] = a.warnings;
    if (!c.diagram.empty()) {
      const Diagram d = parse_diagram(b.sig, c.diagram);
      if (d.outputs() != c.p || d.inputs() != c.p) throw ConfigError("--diagram must have arity (p,p)");
      const NilpotentVerdict nv = nilpotent_trace_check(LinCombo(d), a, c.r_max);
      rep["nilpotent_check"] = Json{{"endomorphism", format_diagram(d)}, {"r_max", c.r_max},
                                    {"outcome", to_string(nv.outcome)}, {"r", nv.r}, {"trace", to_string(nv.trace)}};
      if (nv.outcome == NilpotentVerdict::Outcome::fail) status = 2;
      if (nv.outcome == NilpotentVerdict::Outcome::inconclusive && status == 0) status = 3;
    }
    std::string pt;
    for (std::size_t i = 0; i < point.size(); ++i) pt += (i ? " " : "") + to_string(point[i]);
    t["rows"].push_back(Json::array({pt, a.dim(), v.semisimple, v.semisimple ? center_dimension(a.algebra) : 0}));
    if (!a.warnings.empty()) status = 3;
  }
  rep["provenance"] = Json{{"algebra", "quotient of the " + method + " span by the trace-pairing radical"},
                           {"simple_count", "center dimension of the semisimple quotient"}};
  rep["table"] = std::move(t);
  return status;
}

int cmd_loyal(const RunConfig& c, Json& rep) {
  const std::vector<Rational> alpha = alpha_values(c);
  if (alpha.size() < 4) throw ConfigError("loyal needs at least 4 surface values");
  const LoyalVerdict v = check_loyal(alpha);
  const std::string verdict = v.loyal ? "loyal" : (v.fit.rational || v.fit.hankel_full_rank()) ? "not loyal" : "inconclusive";
  rep["alpha"] = strings(alpha);
  rep["fit"] = fit_json(v.fit);
  rep["verdict"] = verdict;
  rep["provenance"] = Json{{"rule", "span of 1, X and 1/(1 - lambda X)"}};
  Json t = table({"terms", "rational", "P", "Q", "verdict"});
  t["rows"].push_back(Json::array({alpha.size(), v.fit.rational, rep["fit"]["P"], rep["fit"]["Q"], verdict}));
  rep["table"] = std::move(t);
  return v.loyal ? 0 : verdict == "inconclusive" ? 3 : 2;
}

int cmd_interpolate(const RunConfig& c, Json& rep) {
  const PresetBundle b = bundle_for(c);
  if (b.params.size() != 1) throw ConfigError("interpolate needs a one-parameter preset");
  if (c.diagram.empty()) throw ConfigError("interpolate needs --diagram");
  const std::vector<Rational> pts = parse_rationals(c.points, "--points");
  std::vector<std::pair<Rational, Model>> models;
  for (const auto& x : pts) {
    auto m = b.model_at({x});
    if (!m) throw ConfigError("no model of preset " + b.name + " at " + to_string(x));
    models.emplace_back(x, *m);
  }
  const Diagram d = parse_diagram(b.sig, c.diagram);
  if (!d.is_closed()) throw ConfigError("interpolate needs a closed diagram");
  const DegreeBound bound = c.bound >= 0 ? DegreeBound([k = c.bound](const Diagram&) { return k; }) : DegreeBound{};
  const Character chi = interpolate_family(models, bound);
  const std::string interp = chi.evaluate(d).to_string(b.params);
  const std::string closed = b.character.evaluate(d).to_string(b.params);
  rep["preset"] = b.name;
  rep["points"] = strings(pts);
  rep["diagram"] = format_diagram(d);
  rep["interpolated"] = interp;
  rep["closed_form"] = closed;
  rep["agree"] = interp == closed;
  rep["provenance"] = Json{{"interpolated", chi.provenance()}, {"closed_form", b.character.provenance()}};
  Json t = table({"diagram", "interpolated", "closed_form", "agree"});
  t["rows"].push_back(Json::array({rep["diagram"], interp, closed, interp == closed}));
  rep["table"] = std::move(t);
  return interp == closed ? 0 : 2;
}

int cmd_enumerate(const RunConfig& c, Json& rep) {
  const PresetBundle b = bundle_for(c);
  const auto [p, q] = parse_pq(c.pq);
  const std::string method = method_of(c, b);
  const int cutoff = cutoff_of(c, b);
  const SpanningSet s = enumerate_by_name(method, b.sig, p, q, cutoff);
  rep["preset"] = b.name;
  rep["method"] = method;
  rep["cutoff"] = cutoff;
  rep["p"] = p;
  rep["q"] = q;
  rep["count"] = s.diagrams.size();
  rep["diagrams"] = literals(s.diagrams);
  rep["stats"] = Json{{"candidates", s.stats.candidates}, {"duplicates", s.stats.duplicates},
                      {"closed_parts", s.stats.closed_parts}};
  Json t = table({"index", "diagram"});
  for (std::size_t i = 0; i < s.diagrams.size(); ++i) t["rows"].push_back(Json::array({i, format_diagram(s.diagrams[i])}));
  rep["table"] = std::move(t);
  return 0;
}

int cmd_presets(const RunConfig& c, Json& rep) {
  if (c.list_target != "list") throw ConfigError("usage: presets list");
  Json all = Json::array();
  Json t = table({"name", "signature", "params", "method", "special_collection"});
  for (const auto& name : preset_names()) {
    const PresetBundle b = preset(name);
    Json dims = Json::array();
    for (const auto& e : b.expected_dims) dims.push_back(Json{{"p", e.p}, {"q", e.q}, {"dimension", e.dim}});
    Json exc = Json::array();
    for (const auto& e : b.expected_exceptional)
      exc.push_back(Json{{"p", e.p}, {"q", e.q}, {"value", to_string(e.value)}, {"rank", e.rank}});
    Json sample = Json::array();
    for (const auto& pt : b.special_sample) sample.push_back(strings(pt));
    std::string sig;
    for (const auto& g : signature_json(*b.sig)) sig += (sig.empty() ? "" : " ") + g.get<std::string>();
    std::string params;
    for (const auto& x : b.params) params += (params.empty() ? "" : " ") + x;
    all.push_back(Json{{"name", b.name}, {"signature", signature_json(*b.sig)}, {"params", b.params},
                       {"method", b.method}, {"cutoff", b.cutoff}, {"special_collection", b.special_description},
                       {"special_sample", std::move(sample)}, {"expected_hom_dims", std::move(dims)},
                       {"expected_exceptional", std::move(exc)}, {"character", b.character.provenance()}});
    t["rows"].push_back(Json::array({b.name, sig, params, b.method, b.special_description}));
  }
  rep["presets"] = std::move(all);
  rep["table"] = std::move(t);
  return 0;
}

// ------------------------------------------------------------------ options

void add_preset_options(CLI::App* sub, RunConfig& c) {
  sub->add_option("--preset", c.preset, "gl, endo, orth, symp, sym, frobenius, wreath or dvr")->capture_default_str();
  sub->add_option("--r", c.r, "dvr length r (1..3)")->capture_default_str();
  sub->add_option("--lambdas", c.lambdas, "endo eigenvalues, comma separated")->capture_default_str();
  sub->add_option("--alpha", c.alpha, "frobenius surface values alpha_0, alpha_1, ...");
  sub->add_option("--alpha-file", c.alpha_file, "file of surface values (whitespace or commas, # comments)");
  sub->add_option("--frobenius-model", c.frobenius_model, "line:<lambda>, dual_eps1 or dual_eps2")
      ->capture_default_str();
  sub->add_option("--method", c.method, "enumerator override");
  sub->add_option("--cutoff", c.cutoff, "box or genus cutoff (default from the preset)")
      ->check(CLI::Range(-1, 64));
  sub->add_option("--t", c.t, "'generic' or one value per parameter, comma separated")->capture_default_str();
}

void add_output_options(CLI::App* sub, RunConfig& c) {
  sub->add_option("--format", c.format, "json or csv")->check(CLI::IsMember({"json", "csv"}))->capture_default_str();
  sub->add_option("--output", c.output, "report path (default: standard output)");
  sub->add_option("--seed", c.seed, "seed for random probes and samples")->capture_default_str();
  sub->add_option("--config", c.config_path, "JSON config file; command-line flags override its fields");
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig c;
  CLI::App app{"Exact computations in interpolation categories of invariants", "icat"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kToolVersion);

  auto* gram = app.add_subcommand("gram", "Gram matrix, generic rank, exceptional values and radical");
  add_preset_options(gram, c);
  gram->add_option("--pq", c.pq, "arity p,q")->capture_default_str();
  add_output_options(gram, c);

  auto* homdims = app.add_subcommand("homdims", "hom-space dimensions with saturation history");
  add_preset_options(homdims, c);
  homdims->add_option("--pq-list", c.pq_list, "arities p,q separated by ';'")->capture_default_str();
  add_output_options(homdims, c);

  auto* goodness = app.add_subcommand("goodness", "goodness evidence: saturation and trace series");
  add_preset_options(goodness, c);
  goodness->add_option("--pq-list", c.pq_list, "arities p,q separated by ';'")->capture_default_str();
  goodness->add_option("--N", c.n_max, "trace series run over T^0..T^N")->check(CLI::Range(3, 200))->capture_default_str();
  goodness->add_option("--random-count", c.random_count, "random endomorphisms per arity")
      ->check(CLI::Range(0, 1000))
      ->capture_default_str();
  add_output_options(goodness, c);

  auto* chareval = app.add_subcommand("chareval", "character value of a closed diagram literal");
  add_preset_options(chareval, c);
  chareval->add_option("--diagram", c.diagram, "closed diagram literal");
  add_output_options(chareval, c);

  auto* simples = app.add_subcommand("simples", "semisimplicity and block count of End(W^p) modulo the radical");
  add_preset_options(simples, c);
  simples->add_option("--p", c.p, "endomorphism arity")->check(CLI::Range(0, 8))->capture_default_str();
  simples->add_option("--diagram", c.diagram, "endomorphism literal for the nilpotent trace check");
  simples->add_option("--r-max", c.r_max, "nilpotency search bound")->check(CLI::Range(1, 64))->capture_default_str();
  add_output_options(simples, c);

  auto* loyal = app.add_subcommand("loyal", "loyalty of the surface generating function");
  loyal->add_option("--alpha", c.alpha, "surface values alpha_0, alpha_1, ...");
  loyal->add_option("--alpha-file", c.alpha_file, "file of surface values");
  add_output_options(loyal, c);

  auto* interpolate = app.add_subcommand("interpolate", "interpolate a model family at points and evaluate");
  add_preset_options(interpolate, c);
  interpolate->add_option("--points", c.points, "interpolation points, comma separated")->required();
  interpolate->add_option("--diagram", c.diagram, "closed connected diagram literal");
  interpolate->add_option("--bound", c.bound, "degree bound override")->check(CLI::Range(-1, 64));
  add_output_options(interpolate, c);

  auto* enumerate = app.add_subcommand("enumerate", "list a spanning set");
  add_preset_options(enumerate, c);
  enumerate->add_option("--pq", c.pq, "arity p,q")->capture_default_str();
  add_output_options(enumerate, c);

  auto* presets = app.add_subcommand("presets", "bundled example families");
  presets->add_option("action", c.list_target, "list")->required();
  add_output_options(presets, c);

  std::vector<std::string> expanded;
  try {
    expanded = expand_config(args);
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  std::vector<std::string> rev(expanded.rbegin(), expanded.rend());
  try {
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 1;
  }
  c.command = app.get_subcommands().front()->get_name();

  Json rep = header(c);
  int status = 0;
  try {
    if (c.command == "gram") status = cmd_gram(c, rep);
    else if (c.command == "homdims") status = cmd_homdims(c, rep);
    else if (c.command == "goodness") status = cmd_goodness(c, rep);
    else if (c.command == "chareval") status = cmd_chareval(c, rep);
    else if (c.command == "simples") status = cmd_simples(c, rep);
    else if (c.command == "loyal") status = cmd_loyal(c, rep);
    else if (c.command == "interpolate") status = cmd_interpolate(c, rep);
    else if (c.command == "enumerate") status = cmd_enumerate(c, rep);
    else if (c.command == "presets") status = cmd_presets(c, rep);
    emit(c, rep, out);
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const BudgetExceeded& e) {
    err << "inconclusive: " << e.what() << "\n";
    return 3;
  } catch (const CharacterError& e) {
    err << "fail: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return status;
}

}  // namespace icat
