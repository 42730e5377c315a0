// Copyright 2026 The rsplfr Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "rsplfr/cli.h"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "rsplfr/config.h"
#include "rsplfr/error.h"
#include "rsplfr/netsim.h"
#include "rsplfr/oracle.h"
#include "rsplfr/pda.h"
#include "rsplfr/scheme.h"
#include "rsplfr/tradeoff.h"

namespace rsplfr {
namespace {

namespace fs = std::filesystem;
using nlohmann::json;

struct UsageFailure {
  std::string message;
};

struct Source {
  std::string config;
  std::string preset;
  std::optional<std::uint64_t> seed;
  std::string variant;
  bool skip_validation = false;
};

struct Output {
  bool json = false;
  std::string out_dir;
};

void AddSource(CLI::App* app, Source& s) {
  app->add_option("--config", s.config, "JSON config file");
  app->add_option("--preset", s.preset, "built-in configuration (toy, micro-lsp, micro-lp, micro-fp, micro-l)");
  app->add_option("--seed", s.seed, "override the run seed");
  app->add_option("--variant", s.variant, "override the variant (LSP, LP, FP, L)");
  app->add_flag("--skip-validation", s.skip_validation,
                "trust a custom generator without checking its minors");
}

void AddOutput(CLI::App* app, Output& o) {
  app->add_flag("--json", o.json, "machine-readable output");
  app->add_option("--out", o.out_dir, "directory for output files");
}

MdsValidation ValidationOf(const Source& s) {
  return s.skip_validation ? MdsValidation::kSkip : MdsValidation::kExhaustive;
}

SchemeConfig Adjust(SchemeConfig config, const Source& s) {
  if (s.seed) config = config.WithSeed(*s.seed);
  if (!s.variant.empty()) config = config.WithVariant(ParseVariant(s.variant));
  return config;
}

RunSpec LoadSpec(const Source& s) {
  if (s.config.empty() == s.preset.empty()) throw UsageFailure{"give exactly one of --config or --preset"};
  RunSpec spec = s.config.empty() ? RunPreset(s.preset) : LoadRunConfig(s.config, ValidationOf(s));
  spec.config = Adjust(spec.config, s);
  if (spec.demands) {
    for (const auto& d : *spec.demands) ValidateDemand(spec.config, d);
  }
  return spec;
}

Scenario LoadScenarioFrom(const Source& s) {
  if (s.config.empty() == s.preset.empty()) throw UsageFailure{"give exactly one of --config or --preset"};
  if (!s.config.empty()) {
    Scenario sc = LoadScenario(s.config, ValidationOf(s));
    if (s.seed || !s.variant.empty()) {
      RunSpec spec{Adjust(sc.config, s), sc.demands};
      Scenario adjusted = MakeScenario(spec);
      adjusted.availability = sc.availability;
      adjusted.wiretap = sc.wiretap;
      adjusted.colluding_users = sc.colluding_users;
      adjusted.colluding_servers = sc.colluding_servers;
      return adjusted;
    }
    return sc;
  }
  return MakeScenario(LoadSpec(s));
}

void WriteFile(const fs::path& path, const std::string& text) {
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  std::ofstream f(path);
  if (!f) throw UsageFailure{"cannot write " + path.string()};
  f << text;
}

std::string VectorText(const std::vector<Symbol>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + ")";
}

std::string SetText(const std::vector<std::size_t>& v) {
  std::string s = "{";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i] + 1);
  return s + "}";
}

std::string Describe(const SchemeConfig& c) {
  std::ostringstream s;
  s << "(N,K,L,H)=(" << c.N() << ',' << c.K() << ',' << c.L() << ',' << c.H() << ") "
    << c.field().Name() << " variant=" << VariantName(c.variant()) << " F=" << c.F()
    << " Z=" << c.pda().Z() << " S=" << c.S() << " B=" << c.B() << " seed=" << c.seed();
  return s.str();
}

json PdaJson(const Pda& pda) {
  json rows = json::array();
  for (const auto& row : pda.entries()) {
    json r = json::array();
    for (Cell c : row) {
      if (c.is_star()) {
        r.push_back("*");
      } else {
        r.push_back(c.symbol());
      }
    }
    rows.push_back(r);
  }
  return {{"K", pda.K()}, {"F", pda.F()}, {"Z", pda.Z()}, {"S", pda.S()}, {"entries", rows}};
}

std::string ReadAll(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageFailure{"cannot open " + path};
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

// ---- pda ----------------------------------------------------------------

int PdaBuild(int K, int t, const Output& o, std::ostream& out) {
  const Pda pda = Pda::Man(K, t);
  const std::string text = o.json ? PdaJson(pda).dump(2) + "\n" : FormatPdaText(pda);
  if (!o.out_dir.empty()) {
    WriteFile(fs::path(o.out_dir) / ("man_" + std::to_string(K) + "_" + std::to_string(t) +
                                     (o.json ? ".json" : ".pda")),
              text);
  }
  out << text;
  return kExitOk;
}

int PdaValidate(const std::string& file, const Output& o, std::ostream& out) {
  const std::string text = ReadAll(file);
  try {
    const Pda pda = ParsePdaText(text);
    const auto p = pda.parameters();
    if (o.json) {
      out << json{{"valid", true}, {"K", p.K}, {"F", p.F}, {"Z", p.Z}, {"S", p.S}}.dump() << "\n";
    } else {
      out << "valid (K,F,Z,S)=(" << p.K << ',' << p.F << ',' << p.Z << ',' << p.S << ")\n";
    }
    return kExitOk;
  } catch (const PdaViolation& v) {
    if (o.json) {
      out << json{{"valid", false}, {"error", ErrorCodeName(v.code())}, {"message", v.what()}}.dump()
          << "\n";
    } else {
      out << "invalid: " << v.what() << "\n";
    }
    return kExitVerdict;
  }
}

int PdaPrint(const std::string& file, const Output& o, std::ostream& out) {
  const Pda pda = ParsePdaText(ReadAll(file));
  if (o.json) {
    out << PdaJson(pda).dump(2) << "\n";
    return kExitOk;
  }
  out << "K=" << pda.K() << " F=" << pda.F() << " Z=" << pda.Z() << " S=" << pda.S() << "\n";
  int width = 1;
  for (int s = pda.S(); s >= 10; s /= 10) ++width;
  for (const auto& row : pda.entries()) {
    for (std::size_t k = 0; k < row.size(); ++k) {
      out << (k ? " " : "") << std::setw(width)
          << (row[k].is_star() ? std::string("*") : std::to_string(row[k].symbol()));
    }
    out << "\n";
  }
  return kExitOk;
}

// ---- run / sim ------------------------------------------------------------

int ReportTranscript(const SchemeConfig& config, const Transcript& tr, const Output& o,
                     std::ostream& out, bool show_adversary, const Scenario* scenario) {
  const json j = TranscriptToJson(config, tr);
  if (!o.out_dir.empty()) WriteFile(fs::path(o.out_dir) / "transcript.json", j.dump(2) + "\n");
  bool all_ok = true;
  for (const auto& outcome : tr.outcomes) all_ok = all_ok && outcome.correct;
  if (o.json) {
    out << j.dump(2) << "\n";
    return all_ok ? kExitOk : kExitVerdict;
  }
  const MeasuredTradeoff& m = tr.measured;
  out << Describe(config) << "\n";
  out << "M_measured=" << ToString(m.M_measured) << " M_payload=" << ToString(m.M_payload)
      << " R_measured=" << ToString(m.R_measured) << " R_payload=" << ToString(m.R_payload) << "\n";
  out << "blocks per server=" << (tr.run.signals.empty() ? 0 : tr.run.signals.front().blocks.size())
      << " uplink symbols=" << tr.uplink_symbols << " downlink symbols=" << tr.downlink_symbols
      << "\n";
  for (const auto& outcome : tr.outcomes) {
    out << "user " << outcome.user + 1 << " demand " << VectorText(tr.run.demands[outcome.user])
        << " servers " << SetText(outcome.servers) << ": "
        << (outcome.correct ? "decoded" : "FAILED " + outcome.error) << "\n";
  }
  if (show_adversary && scenario) {
    if (scenario->wiretap) {
      out << "wiretapper view: "
          << ExtractAdversaryView(tr, AdversaryKind::kWiretapper).symbols.size() << " symbols\n";
    }
    if (scenario->colluding_servers) {
      out << "colluding-servers view: "
          << ExtractAdversaryView(tr, AdversaryKind::kColludingServers).symbols.size()
          << " symbols\n";
    }
    if (!scenario->colluding_users.empty()) {
      out << "colluding-users " << SetText(scenario->colluding_users) << " view: "
          << ExtractAdversaryView(tr, AdversaryKind::kColludingUsers, scenario->colluding_users)
                 .symbols.size()
          << " symbols\n";
    }
  }
  return all_ok ? kExitOk : kExitVerdict;
}

int Run(const Source& s, const Output& o, std::ostream& out) {
  const Scenario sc = MakeScenario(LoadSpec(s));
  return ReportTranscript(sc.config, Simulate(sc), o, out, false, nullptr);
}

int Sim(const Source& s, const Output& o, std::ostream& out) {
  const Scenario sc = LoadScenarioFrom(s);
  return ReportTranscript(sc.config, Simulate(sc), o, out, true, &sc);
}

// ---- verify ---------------------------------------------------------------

struct VerdictLine {
  std::string condition;
  bool holds = false;
  bool expected = false;
  std::string detail;
  json report;
};

std::string DeviationText(const Rational& r) { return ToString(r); }

VerdictLine Correctness(const SchemeConfig& c, const OracleOptions& opt) {
  const CorrectnessReport r = CheckCorrectness(c, opt);
  std::ostringstream d;
  d << ToString(Rational(r.successes)) << "/" << ToString(Rational(r.assignments))
    << " assignments over " << r.demand_tuples << " demand tuples"
    << (r.exhaustive ? " (exhaustive)" : " (sampled, coverage " + ToDecimal(Rational(r.assignments, r.total), 6) + ")");
  return {"correctness", r.holds(), ExpectedToHold(Condition::kCorrectness, c.variant()), d.str(),
          ToJson(r)};
}

VerdictLine Security(const SchemeConfig& c, const OracleOptions& opt) {
  const IndependenceReport plain = CheckSecurity(c, opt);
  const IndependenceReport joint = CheckSecurityJoint(c, opt);
  std::ostringstream d;
  d << "deviation " << DeviationText(plain.max_deviation) << ", with demands "
    << DeviationText(joint.max_deviation) << ", " << plain.world_count << " worlds";
  return {"security", plain.holds() && joint.holds(),
          ExpectedToHold(Condition::kSecurity, c.variant()), d.str(),
          json::array({ToJson(plain), ToJson(joint)})};
}

VerdictLine UserPrivacy(const SchemeConfig& c, const OracleOptions& opt) {
  const auto reports = CheckUserPrivacy(c, opt);
  Rational worst = 0;
  bool holds = true;
  json all = json::array();
  std::uint64_t worlds = 0;
  for (const auto& r : reports) {
    worst = std::max(worst, r.max_deviation);
    holds = holds && r.holds();
    worlds = r.world_count;
    all.push_back(ToJson(r));
  }
  std::ostringstream d;
  d << "max deviation " << DeviationText(worst) << " over " << reports.size()
    << " colluding sets, " << worlds << " worlds";
  return {"user-privacy", holds, ExpectedToHold(Condition::kUserPrivacy, c.variant()), d.str(), all};
}

VerdictLine ServerPrivacy(const SchemeConfig& c, const OracleOptions& opt) {
  const IndependenceReport r = CheckServerPrivacy(c, opt);
  std::ostringstream d;
  d << "deviation " << DeviationText(r.max_deviation) << ", " << r.world_count << " worlds";
  return {"server-privacy", r.holds(), ExpectedToHold(Condition::kServerPrivacy, c.variant()),
          d.str(), ToJson(r)};
}

int Verify(const std::string& what, const Source& s, const Output& o, unsigned threads,
           std::ostream& out) {
  const RunSpec spec = LoadSpec(s);
  OracleOptions opt;
  opt.threads = threads;
  opt.seed = spec.config.seed();
  std::vector<VerdictLine> lines;
  if (what == "correctness" || what == "all") lines.push_back(Correctness(spec.config, opt));
  if (what == "security" || what == "all") lines.push_back(Security(spec.config, opt));
  if (what == "user-privacy" || what == "all") lines.push_back(UserPrivacy(spec.config, opt));
  if (what == "server-privacy" || what == "all") lines.push_back(ServerPrivacy(spec.config, opt));

  bool as_expected = true;
  json reports = json::array();
  for (const auto& l : lines) {
    as_expected = as_expected && l.holds == l.expected;
    reports.push_back({{"condition", l.condition},
                       {"verdict", l.holds ? "holds" : "fails"},
                       {"expected", l.expected ? "holds" : "fails"},
                       {"reports", l.report}});
  }
  const std::string text =
      json{{"variant", VariantName(spec.config.variant())}, {"results", reports}}.dump(2) + "\n";
  if (!o.out_dir.empty()) WriteFile(fs::path(o.out_dir) / ("verify_" + what + ".json"), text);
  if (o.json) {
    out << text;
  } else {
    out << Describe(spec.config) << "\n";
    for (const auto& l : lines) {
      out << std::left << std::setw(15) << l.condition << (l.holds ? "holds" : "fails")
          << (l.holds == l.expected ? "" : "  (UNEXPECTED)") << "  " << l.detail << "\n";
    }
  }
  return as_expected ? kExitOk : kExitVerdict;
}

// ---- tradeoff -------------------------------------------------------------

struct TradeoffArgs {
  std::string preset;
  std::size_t N = 0, K = 0, L = 0, H = 0;
  std::string variant = "all";
  int samples = 0;
};

void AddTradeoffArgs(CLI::App* app, TradeoffArgs& a) {
  app->add_option("--preset", a.preset, "fig2a, fig2b or fig2c");
  app->add_option("--N", a.N, "files");
  app->add_option("--K", a.K, "users");
  app->add_option("--L", a.L, "MDS dimension");
  app->add_option("--H", a.H, "servers");
  app->add_option("--variant", a.variant, "LSP, LP, FP, L or all");
}

TradeoffParameters ParamsOf(const TradeoffArgs& a) {
  if (!a.preset.empty()) {
    auto p = TradeoffPreset(a.preset);
    if (!p) throw UsageFailure{"unknown tradeoff preset '" + a.preset + "' (expected fig2a, fig2b or fig2c)"};
    return *p;
  }
  if (a.N < 2 || a.K == 0 || a.L == 0 || a.H < a.L) {
    throw UsageFailure{"give --preset or --N >= 2, --K >= 1 and 1 <= --L <= --H"};
  }
  return {a.N, a.K, a.L, a.H};
}

std::vector<Variant> VariantsOf(const std::string& v) {
  if (v == "all") return {Variant::kLSP, Variant::kLP, Variant::kFP, Variant::kL};
  return {ParseVariant(v)};
}

json PointJson(const TradeoffPoint& p) {
  json j = {{"variant", VariantName(p.variant)}, {"M", ToString(p.M)}, {"R", ToString(p.R)}};
  j["t"] = p.t ? json(*p.t) : json(nullptr);
  j["subpacketization"] = p.subpacketization ? json(ToString(Rational(*p.subpacketization))) : json(nullptr);
  return j;
}

std::string ParamsText(const TradeoffParameters& p) {
  return "(N,K,L,H)=(" + std::to_string(p.N) + "," + std::to_string(p.K) + "," +
         std::to_string(p.L) + "," + std::to_string(p.H) + ")";
}

int TradeoffPoints(const TradeoffArgs& a, const Output& o, std::ostream& out) {
  const TradeoffParameters p = ParamsOf(a);
  json all = json::array();
  std::ostringstream text;
  text << ParamsText(p) << " regime " << RegimeTag(EnvelopeRegime(p.N, p.K)) << "\n";
  for (Variant v : VariantsOf(a.variant)) {
    for (const auto& pt : CornerPoints(v, p)) {
      all.push_back(PointJson(pt));
      text << std::left << std::setw(4) << VariantName(v) << " t=" << std::setw(3)
           << (pt.t ? std::to_string(*pt.t) : std::string("-")) << " M=" << std::setw(12)
           << ToString(pt.M) << " R=" << ToString(pt.R) << "\n";
    }
  }
  const std::string body = o.json ? all.dump(2) + "\n" : text.str();
  if (!o.out_dir.empty()) WriteFile(fs::path(o.out_dir) / (o.json ? "points.json" : "points.txt"), body);
  out << body;
  return kExitOk;
}

std::string CsvFor(const TradeoffParameters& p, const std::vector<Variant>& variants, int samples) {
  std::string csv;
  for (Variant v : variants) {
    std::string part = CurveCsv(TradeoffCurve(v, p), v, samples);
    if (!csv.empty()) part = part.substr(part.find('\n') + 1);  // one header
    csv += part;
  }
  return csv;
}

int TradeoffCurveCmd(const TradeoffArgs& a, const Output& o, std::ostream& out) {
  const TradeoffParameters p = ParamsOf(a);
  const auto variants = VariantsOf(a.variant);
  if (!o.out_dir.empty()) {
    for (Variant v : variants) {
      WriteFile(fs::path(o.out_dir) / ("curve_" + std::string(VariantName(v)) + ".csv"),
                CurveCsv(TradeoffCurve(v, p), v, a.samples));
    }
  }
  out << CsvFor(p, variants, a.samples);
  return kExitOk;
}

int TradeoffFig2(const TradeoffArgs& a, const Output& o, std::ostream& out) {
  const fs::path dir = o.out_dir.empty() ? fs::path("fig2") : fs::path(o.out_dir);
  const auto variants = VariantsOf(a.variant);
  const char* names[] = {"fig2a", "fig2b", "fig2c"};
  const auto sets = Fig2ParameterSets();
  for (std::size_t i = 0; i < sets.size(); ++i) {
    const fs::path file = dir / (std::string(names[i]) + ".csv");
    WriteFile(file, CsvFor(sets[i], variants, a.samples));
    out << file.string() << " " << ParamsText(sets[i]) << " regime "
        << RegimeTag(EnvelopeRegime(sets[i].N, sets[i].K)) << "\n";
  }
  return kExitOk;
}

}  // namespace

int RunCli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Robust, secure and private linear function retrieval over coded caches", "rsplfr"};
  app.require_subcommand(1);

  Output o;
  Source src;

  auto* pda = app.add_subcommand("pda", "placement delivery arrays");
  pda->require_subcommand(1);
  int K = 0, t = 0;
  std::string pda_file;
  auto* pda_build = pda->add_subcommand("build", "print the MAN array for K users and parameter t");
  pda_build->add_option("--K", K, "users")->required();
  pda_build->add_option("--t", t, "0 <= t <= K")->required();
  AddOutput(pda_build, o);
  auto* pda_validate = pda->add_subcommand("validate", "check an array file");
  pda_validate->add_option("file", pda_file, "array text file")->required();
  AddOutput(pda_validate, o);
  auto* pda_print = pda->add_subcommand("print", "show an array file");
  pda_print->add_option("file", pda_file, "array text file")->required();
  AddOutput(pda_print, o);

  auto* run = app.add_subcommand("run", "run the protocol once and decode every user");
  AddSource(run, src);
  AddOutput(run, o);

  std::string condition;
  unsigned threads = 1;
  auto* verify = app.add_subcommand("verify", "exhaustive checks of correctness, security and privacy");
  verify->add_option("condition", condition, "correctness, security, user-privacy, server-privacy or all")
      ->required()
      ->check(CLI::IsMember({"correctness", "security", "user-privacy", "server-privacy", "all"}));
  verify->add_option("--threads", threads, "enumeration threads")->check(CLI::Range(1u, 256u));
  AddSource(verify, src);
  AddOutput(verify, o);

  TradeoffArgs ta;
  auto* tradeoff = app.add_subcommand("tradeoff", "memory-load tradeoff points and curves");
  tradeoff->require_subcommand(1);
  auto* points = tradeoff->add_subcommand("points", "corner points of each variant");
  AddTradeoffArgs(points, ta);
  AddOutput(points, o);
  auto* curve = tradeoff->add_subcommand("curve", "lower convex envelopes as CSV");
  AddTradeoffArgs(curve, ta);
  curve->add_option("--samples", ta.samples, "extra interpolated rows per variant");
  AddOutput(curve, o);
  auto* fig2 = tradeoff->add_subcommand("fig2", "CSV curves for the three comparison parameter sets");
  fig2->add_option("--variant", ta.variant, "LSP, LP, FP, L or all");
  fig2->add_option("--samples", ta.samples, "extra interpolated rows per variant");
  AddOutput(fig2, o);

  auto* sim = app.add_subcommand("sim", "message-level simulation with per-user server availability");
  AddSource(sim, src);
  AddOutput(sim, o);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, err, err);
    return kExitUsage;
  }

  try {
    if (pda_build->parsed()) return PdaBuild(K, t, o, out);
    if (pda_validate->parsed()) return PdaValidate(pda_file, o, out);
    if (pda_print->parsed()) return PdaPrint(pda_file, o, out);
    if (run->parsed()) return Run(src, o, out);
    if (verify->parsed()) return Verify(condition, src, o, threads, out);
    if (points->parsed()) return TradeoffPoints(ta, o, out);
    if (curve->parsed()) return TradeoffCurveCmd(ta, o, out);
    if (fig2->parsed()) return TradeoffFig2(ta, o, out);
    if (sim->parsed()) return Sim(src, o, out);
  } catch (const UsageFailure& e) {
    err << "error: " << e.message << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const fs::filesystem_error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  err << app.help();
  return kExitUsage;
}

}  // namespace rsplfr
