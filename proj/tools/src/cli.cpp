#include "umbrella_cli/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iterator>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "umbrella/errors.hpp"
#include "umbrella/multiplicity.hpp"
#include "umbrella/projective.hpp"
#include "umbrella/slopes.hpp"
#include "umbrella/toric.hpp"

namespace umbrella::cli {

namespace {

using Json = nlohmann::ordered_json;

struct Options {
  std::string a_path;
  std::string a_text;
  std::string l_text;
  std::string v0_text;
  std::string vinf_text;
  std::string out_path;
  std::string format = "json";
  std::string tie = "grevlex";
  std::size_t nmax = 0;
  std::size_t spot_checks = 2;
  bool allow_sublattice = false;
};

Json integer_json(const Integer& v) {
  if (v.fits_slong_p()) return v.get_si();
  return v.get_str();
}

Json rationals_json(const std::vector<Rational>& v) {
  Json arr = Json::array();
  for (const auto& x : v) arr.push_back(to_string(x));
  return arr;
}

Json set_json(const IndexSet& s) {
  Json arr = Json::array();
  for (auto j : s) arr.push_back(j + 1);
  return arr;
}

Json sets_json(const std::vector<IndexSet>& sets) {
  Json arr = Json::array();
  for (const auto& s : sets) arr.push_back(set_json(s));
  return arr;
}

// Read once, so pipes and process substitution work.
void load_input(Options& o) {
  std::ifstream in(o.a_path, std::ios::binary);
  if (!in) throw ValidationError("bad-input-file", "cannot open " + o.a_path);
  o.a_text.assign(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

IntMatrix read_matrix(const Options& o) {
  Json doc;
  try {
    doc = Json::parse(o.a_text);
  } catch (const Json::exception& e) {
    throw ValidationError("bad-input-file", std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("A") || !doc["A"].is_array() || doc["A"].empty())
    throw ValidationError("bad-input-file", "expected an object with a nonempty \"A\" array");
  std::vector<ZVector> rows;
  for (const auto& row : doc["A"]) {
    if (!row.is_array()) throw ValidationError("bad-dimensions", "every row of A must be an array");
    ZVector r;
    for (const auto& x : row) {
      if (x.is_number_integer()) r.emplace_back(std::to_string(x.get<long long>()));
      else if (x.is_string()) {
        try {
          r.emplace_back(x.get<std::string>());
        } catch (const std::invalid_argument&) {
          throw ValidationError("bad-input-file", "matrix entries must be integers");
        }
      } else {
        throw ValidationError("bad-input-file", "matrix entries must be integers");
      }
    }
    if (!rows.empty() && r.size() != rows.front().size())
      throw ValidationError("bad-dimensions", "rows of A differ in length");
    rows.push_back(std::move(r));
  }
  return IntMatrix::from_rows(rows);
}

// L, V_0 and V_inf may also come from the input file; flags take precedence.
void apply_file_defaults(Options& o) {
  const Json doc = Json::parse(o.a_text, nullptr, false);
  if (!doc.is_object()) return;
  auto join = [](const Json& arr, bool strings) {
    std::string s;
    for (const auto& x : arr) {
      if (!s.empty()) s += ",";
      if (x.is_string()) s += x.get<std::string>();
      else if (x.is_number_integer()) s += std::to_string(x.get<long long>());
      else throw ValidationError(strings ? "bad-rational" : "bad-index", "unexpected entry " + x.dump());
    }
    return s;
  };
  if (o.l_text.empty() && doc.contains("L") && doc["L"].is_array()) o.l_text = join(doc["L"], true);
  if (o.v0_text.empty() && doc.contains("V_0") && doc["V_0"].is_array()) o.v0_text = join(doc["V_0"], false);
  if (o.vinf_text.empty() && doc.contains("V_inf") && doc["V_inf"].is_array())
    o.vinf_text = join(doc["V_inf"], false);
}

IndexSet parse_indices(const std::string& text, std::size_t n) {
  IndexSet out;
  if (text.empty()) return out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t pos = 0;
    long v = 0;
    try {
      v = std::stol(item, &pos);
    } catch (const std::exception&) {
      throw ValidationError("bad-index", "cannot parse index \"" + item + "\"");
    }
    if (pos != item.size()) throw ValidationError("bad-index", "cannot parse index \"" + item + "\"");
    if (v < 1 || static_cast<std::size_t>(v) > n)
      throw ValidationError("index-out-of-range", "index " + item + " outside 1.." + std::to_string(n));
    out.push_back(static_cast<std::size_t>(v - 1));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

WeightVector require_weights(const Options& o, std::size_t n) {
  if (o.l_text.empty()) throw ValidationError("weight-required", "this command needs --L");
  WeightVector l = parse_weights(o.l_text);
  if (l.size() != n)
    throw ValidationError("weight-length", "--L has " + std::to_string(l.size()) + " entries, A has " +
                                               std::to_string(n) + " columns");
  return l;
}

Json input_echo(const IntMatrix& m, const Options& o, bool with_l) {
  Json echo;
  Json rows = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(integer_json(m(r, c)));
    rows.push_back(row);
  }
  echo["A"] = rows;
  if (with_l) {
    Json l = Json::array();
    const WeightVector weights = parse_weights(o.l_text);
    for (const auto& x : weights.values()) l.push_back(to_string(x));
    echo["L"] = l;
  }
  return echo;
}

Json header(const char* command, Json echo) {
  Json doc;
  doc["command"] = command;
  doc["version"] = kVersion;
  doc["input"] = std::move(echo);
  return doc;
}

Json faces_json(const Umbrella& umb) {
  Json arr = Json::array();
  for (const auto& f : umb.faces()) {
    Json face;
    face["members"] = set_json(f.members);
    if (f.dim < 0) face["dim"] = "empty";
    else face["dim"] = f.dim;
    if (!f.witness.empty()) face["witness_h"] = rationals_json(f.witness);
    arr.push_back(face);
  }
  return arr;
}

LatticePolicy policy(const Options& o, bool lattice_blind) {
  return o.allow_sublattice || lattice_blind ? LatticePolicy::kAllowSublattice : LatticePolicy::kRequireFull;
}

std::string cmd_umbrella(const Options& o) {
  const IntMatrix m = read_matrix(o);
  const ToricMatrix a(m, policy(o, false));
  const WeightVector l = require_weights(o, a.n());
  const Umbrella umb = compute_umbrella(a, l);
  Json doc = header("umbrella", input_echo(m, o, true));
  doc["faces"] = faces_json(umb);
  doc["facets"] = sets_json(umb.facet_sets());
  return doc.dump(2) + "\n";
}

Json slope_report_json(const SlopeReport& r) {
  Json doc;
  doc["candidates"] = rationals_json(r.candidates);
  doc["critical_s"] = rationals_json(r.critical_params());
  doc["slopes"] = rationals_json(r.slopes());
  Json crit = Json::array();
  for (const auto& c : r.critical) {
    Json e;
    e["s"] = to_string(c.s);
    e["slope"] = to_string(c.slope);
    e["facets_before"] = sets_json(r.intervals[c.left_interval].umbrella.facet_sets());
    e["facets_at"] = sets_json(c.at.facet_sets());
    e["facets_after"] = sets_json(r.intervals[c.left_interval + 1].umbrella.facet_sets());
    crit.push_back(e);
  }
  doc["critical"] = crit;
  return doc;
}

std::string cmd_slopes(const Options& o) {
  const IntMatrix m = read_matrix(o);
  const ToricMatrix a(m, policy(o, true));
  const IndexSet v0 = parse_indices(o.v0_text, a.n());
  const IndexSet vinf = parse_indices(o.vinf_text, a.n());
  Json echo = input_echo(m, o, false);
  echo["v0"] = set_json(v0);
  echo["vinf"] = set_json(vinf);
  Json doc = header("slopes", echo);

  SlopeOptions opts;
  opts.spot_checks = o.spot_checks;
  const InfinityReport report = slopes_at_infinity(a, v0, vinf, opts);
  const SlopeReport& r = report.umbrella_jumps;
  const Json body = slope_report_json(r);
  for (auto it = body.begin(); it != body.end(); ++it) doc[it.key()] = it.value();

  Json intervals = Json::array();
  for (const auto& iv : r.intervals) {
    Json e;
    e["s_range"] = Json::array({to_string(iv.lo), iv.hi ? Json(to_string(*iv.hi)) : Json("inf")});
    e["sample"] = to_string(iv.sample);
    e["facets"] = sets_json(iv.umbrella.facet_sets());
    e["faces"] = sets_json(iv.umbrella.face_sets());
    intervals.push_back(e);
  }
  doc["intervals"] = intervals;
  doc["at_zero"] = sets_json(r.at_zero.face_sets());
  doc["conjectural"] = report.conjectural;
  if (!vinf.empty()) {
    Json filtered;
    filtered["note"] = "jumps after removing faces that are pyramids with apex in vinf";
    filtered["critical_s"] = rationals_json(report.filtered.critical_params());
    filtered["slopes"] = rationals_json(report.filtered_slopes());
    doc["pyramid_filtered"] = filtered;
  }
  return doc.dump(2) + "\n";
}

std::string cmd_cycle(const Options& o) {
  const IntMatrix m = read_matrix(o);
  const ToricMatrix a(m, policy(o, false));
  const WeightVector l = require_weights(o, a.n());
  const CharCycle cycle = char_cycle(a, l);
  const Umbrella umb = compute_umbrella(a, l, {.witnesses = false});

  if (o.format == "csv") {
    std::ostringstream csv;
    csv << "tau,dim,mu\n";
    for (const auto& f : umb.faces())
      csv << '"' << format_index_set(f.members) << "\"," << f.dim_label() << ',' << cycle.mu.at(f.members) << '\n';
    csv << "degree,," << cycle.degree() << '\n';
    return csv.str();
  }
  Json doc = header("cycle", input_echo(m, o, true));
  Json entries = Json::array();
  for (const auto& f : umb.faces()) {
    Json e;
    e["tau"] = set_json(f.members);
    if (f.dim < 0) e["dim"] = "empty";
    else e["dim"] = f.dim;
    e["mu"] = integer_json(cycle.mu.at(f.members));
    entries.push_back(e);
  }
  doc["cycle"] = entries;
  Json facets = Json::array();
  for (const auto& [tau, v] : cycle.nu) facets.push_back(Json{{"tau", set_json(tau)}, {"nu", integer_json(v)}});
  doc["facets"] = facets;
  doc["degree"] = integer_json(cycle.degree());
  doc["generic_beta"] = true;
  return doc.dump(2) + "\n";
}

std::string cmd_gb(const Options& o, bool& budget_hit) {
  const IntMatrix m = read_matrix(o);
  const ToricMatrix a(m, policy(o, true));
  const WeightVector l = require_weights(o, a.n());
  TermOrder::TieBreak tie = TermOrder::TieBreak::kGrevlex;
  if (o.tie == "lex") tie = TermOrder::TieBreak::kLex;
  else if (o.tie != "grevlex") throw ValidationError("bad-tie-break", "--tie must be grevlex or lex");

  const auto gens = toric_ideal(a);
  const MarkedGroebnerBasis gb = initial_ideal(gens, l, tie);
  const Umbrella umb = compute_umbrella(a, l, {.witnesses = false});
  const VerificationReport rep = verify_components(gb, umb, a, o.nmax);

  Json echo = input_echo(m, o, true);
  echo["tie_break"] = o.tie;
  Json doc = header("gb", echo);
  Json toric = Json::array();
  for (const auto& b : gens) toric.push_back(format_monomial(b.plus) + " - " + format_monomial(b.minus));
  doc["toric_generators"] = toric;
  Json marked = Json::array();
  for (const auto& e : gb.elements) {
    Json x;
    x["lead"] = format_monomial(e.poly.lead);
    x["tail"] = e.poly.tail ? Json(format_monomial(*e.poly.tail)) : Json(nullptr);
    x["leading_form"] = format_poly(e.leading_form);
    marked.push_back(x);
  }
  doc["marked_basis"] = marked;
  doc["facets"] = sets_json(umb.facet_sets());

  Json ver;
  Json facet_checks = Json::array();
  for (const auto& c : rep.facet_checks) {
    Json x{{"facet", set_json(c.facet)}, {"passed", c.passed}};
    if (!c.detail.empty()) x["detail"] = c.detail;
    facet_checks.push_back(x);
  }
  ver["facet_checks"] = facet_checks;
  Json radical = Json::array();
  for (const auto& c : rep.radical_checks) {
    Json x{{"S", set_json(c.s)},
           {"predicted_nilpotent", c.predicted_nilpotent},
           {"observed_nilpotent", c.observed_nilpotent},
           {"passed", c.passed}};
    if (c.budget_exceeded) x["budget_exceeded"] = true;
    radical.push_back(x);
  }
  ver["radical_checks"] = radical;
  ver["passed"] = rep.passed();
  doc["verification"] = ver;
  budget_hit = rep.budget_exceeded();
  return doc.dump(2) + "\n";
}

std::string cmd_plot(const Options& o) {
  const IntMatrix m = read_matrix(o);
  const ToricMatrix a(m, policy(o, false));
  const WeightVector l = require_weights(o, a.n());
  if (a.d() != 2) throw ValidationError("plot-needs-d2", "plot is only available for d = 2");
  return render_svg(a, l, compute_umbrella(a, l, {.witnesses = false}));
}

void emit(const std::string& text, const Options& o, std::ostream& out) {
  if (o.out_path.empty()) {
    out << text;
    return;
  }
  std::ofstream f(o.out_path, std::ios::binary);
  if (!f) throw ValidationError("bad-output-file", "cannot write " + o.out_path);
  f << text;
}

int fail(std::ostream& err, int code, const std::string& kind, const std::string& reason, const std::string& msg) {
  Json e;
  e["error"] = kind;
  e["reason"] = reason;
  e["message"] = msg;
  err << e.dump() << "\n";
  return code;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Umbrellas, slopes and characteristic cycles of A-hypergeometric systems", "umbrella"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--A", o.a_path, "JSON file with {\"A\": [[...], ...]}")->required();
    sub->add_option("--out", o.out_path, "write the report here instead of stdout");
    sub->add_flag("--allow-sublattice", o.allow_sublattice, "accept matrices whose columns do not generate Z^d");
  };
  CLI::App* umb = app.add_subcommand("umbrella", "faces of the (A,L)-umbrella");
  add_common(umb);
  umb->add_option("--L", o.l_text, "weights, e.g. 1,1,1,2 or 1/2,-1,0");

  CLI::App* slopes = app.add_subcommand("slopes", "slopes along a coordinate subvariety");
  add_common(slopes);
  slopes->add_option("--v0", o.v0_text, "1-based indices of variables vanishing on Y");
  slopes->add_option("--vinf", o.vinf_text, "1-based indices of variables at infinity");
  slopes->add_option("--samples", o.spot_checks, "interior constancy checks per interval");

  CLI::App* cycle = app.add_subcommand("cycle", "generic L-characteristic cycle");
  add_common(cycle);
  cycle->add_option("--L", o.l_text, "weights");
  cycle->add_option("--format", o.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));

  CLI::App* gb = app.add_subcommand("gb", "marked Gröbner basis of the L-initial toric ideal");
  add_common(gb);
  gb->add_option("--L", o.l_text, "weights");
  gb->add_option("--tie", o.tie, "tie-break order: grevlex or lex");
  gb->add_option("--nmax", o.nmax, "power-test budget (default 20 n or UMBRELLA_NMAX)");

  CLI::App* plot = app.add_subcommand("plot", "SVG picture of a d = 2 umbrella");
  add_common(plot);
  plot->add_option("--L", o.l_text, "weights");

  try {
    // "umbrella --A f --L ..." without a subcommand means the umbrella command.
    std::vector<std::string> full = args;
    if (!full.empty() && full[0].rfind("--", 0) == 0 && full[0] != "--version" && full[0] != "--help")
      full.insert(full.begin(), "umbrella");
    std::vector<std::string> reversed(full.rbegin(), full.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForVersion&) {
    out << kVersion << "\n";
    return kOk;
  } catch (const CLI::ParseError& e) {
    return fail(err, kValidation, "validation", "bad-arguments", e.what());
  }

  try {
    load_input(o);
    apply_file_defaults(o);
    std::string text;
    bool budget_hit = false;
    if (umb->parsed()) text = cmd_umbrella(o);
    else if (slopes->parsed()) text = cmd_slopes(o);
    else if (cycle->parsed()) text = cmd_cycle(o);
    else if (gb->parsed()) text = cmd_gb(o, budget_hit);
    else text = cmd_plot(o);
    emit(text, o, out);
    // The report is still written; the exit code says it is undecided.
    if (budget_hit)
      return fail(err, kBudget, "budget", to_string(ErrorKind::kBudgetExceeded),
                  "a radical power test ran out of budget; raise --nmax or UMBRELLA_NMAX");
    return kOk;
  } catch (const ValidationError& e) {
    return fail(err, kValidation, "validation", e.reason(), e.what());
  } catch (const Error& e) {
    const int code = e.kind() == ErrorKind::kBudgetExceeded ? kBudget : kInternal;
    return fail(err, code, code == kBudget ? "budget" : "internal", to_string(e.kind()), e.what());
  } catch (const std::exception& e) {
    return fail(err, kInternal, "internal", "unexpected", e.what());
  }
}

}  // namespace umbrella::cli
