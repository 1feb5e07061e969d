#include "critlab/cli.hpp"

#include <chrono>
#include <cstdlib>
#include <ctime>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <set>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "critlab/claims.hpp"
#include "critlab/errors.hpp"
#include "critlab/graph6.hpp"
#include "critlab/parallel.hpp"
#include "critlab/report.hpp"

namespace critlab {

using nlohmann::json;

namespace {

constexpr const char* kVersion = "0.1.0";

/// Unreadable files and bad option values: exit 2.
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

struct InputRecord {
  GraphId id;
  Graph graph;
};

std::vector<InputRecord> load_inputs(const std::vector<std::string>& paths) {
  std::vector<InputRecord> out;
  for (const std::string& path : paths) {
    std::ifstream file;
    std::istream* in = &std::cin;
    if (path != "-") {
      file.open(path);
      if (!file) throw InputError("cannot open " + path);
      in = &file;
    }
    for (const Graph6Record& rec : read_graph6_records(*in)) {
      try {
        out.push_back({{out.size(), rec.line, rec.text}, parse_graph6(rec.text)});
      } catch (const ParseError& e) {
        throw ParseError(path + ":" + std::to_string(rec.line) + ": " + e.what(), e.offset(), rec.line);
      }
    }
  }
  return out;
}

ParamOptions param_options(const RunConfig& c) {
  ParamOptions o;
  if (!c.omega_override.empty()) {
    if (c.omega_override == "cbrt") o.omega_cbrt = true;
    else o.omega_value = parse_rational(c.omega_override);
  }
  if (!c.epsilon.empty()) o.epsilon = parse_rational(c.epsilon);
  if (!c.lambda.empty()) o.lambda = parse_rational(c.lambda);
  return o;
}

std::vector<int> parse_vertex_list(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = trim(item);
    if (item.empty()) continue;
    try {
      std::size_t used = 0;
      const int v = std::stoi(item, &used);
      if (used != item.size()) throw std::invalid_argument(item);
      out.push_back(v);
    } catch (const std::exception&) {
      throw InputError("bad vertex '" + item + "' in --x");
    }
  }
  return out;
}

std::string utc_now() {
  const std::time_t t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&t, &tm);
  std::ostringstream os;
  os << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ");
  return os.str();
}

/// Per-graph work runs in parallel a chunk at a time; lines are written in
/// input order by this thread only.
template <class F>
void stream_records(const std::vector<InputRecord>& recs, int jobs, std::ostream& sink, F per_record) {
  constexpr std::size_t kChunk = 256;
  for (std::size_t start = 0; start < recs.size(); start += kChunk) {
    const std::size_t count = std::min(kChunk, recs.size() - start);
    const auto lines = parallel_map(count, [&](std::size_t i) { return per_record(recs[start + i]); }, jobs);
    for (const std::string& line : lines) sink << line << '\n';
  }
}

std::string csv_join(const std::vector<int>& v, char sep) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? std::string(1, sep) : "") + std::to_string(v[i]);
  return out;
}

AuditSettings audit_settings(const RunConfig& c) {
  const Params p = make_params(c.d, BigInt(1), param_options(c));
  AuditSettings s;
  s.epsilon = p.epsilon;
  s.lambda = p.lambda;
  s.context.assume_hypotheses = c.assume_hypotheses;
  return s;
}

void require_format(const RunConfig& c, std::initializer_list<const char*> allowed) {
  for (const char* f : allowed)
    if (c.format == f) return;
  throw InputError("--format " + c.format + " is not available for " + c.command);
}

// ---- subcommands -------------------------------------------------------------

int cmd_chi(const RunConfig& c, std::ostream& out) {
  require_format(c, {"json", "csv"});
  const auto recs = load_inputs(c.inputs);
  if (c.format == "csv") out << "index,graph6,n,m,delta,class,chromatic_index,budget_spent\n";
  stream_records(recs, c.jobs, out, [&](const InputRecord& r) {
    const json j = chi_report(r.id, r.graph, c.budget);
    if (c.format == "json") return j.dump();
    std::ostringstream os;
    os << r.id.index << ',' << r.id.graph6 << ',' << j["n"] << ',' << j["m"] << ',' << j["delta"] << ','
       << j["class"].get<std::string>() << ',' << (j["chromatic_index"].is_null() ? "" : j["chromatic_index"].dump())
       << ',' << j["budget_spent"];
    return os.str();
  });
  return kExitOk;
}

int cmd_mis(const RunConfig& c, std::ostream& out) {
  require_format(c, {"json", "csv"});
  const auto recs = load_inputs(c.inputs);
  if (c.format == "csv") out << "index,graph6,n,alpha,witness\n";
  stream_records(recs, c.jobs, out, [&](const InputRecord& r) {
    if (c.format == "json") return mis_report(r.id, r.graph).dump();
    const IndependentSetResult m = max_independent_set(r.graph);
    return std::to_string(r.id.index) + "," + r.id.graph6 + "," + std::to_string(r.graph.order()) + "," +
           std::to_string(m.alpha) + "," + csv_join(m.witness, ' ');
  });
  return kExitOk;
}

int cmd_critical(const RunConfig& c, std::ostream& out) {
  require_format(c, {"json", "csv"});
  GraphReportOptions o;
  o.budget = c.budget;
  o.d = c.d;
  o.param_options = param_options(c);
  o.audit = audit_settings(c);
  const auto recs = load_inputs(c.inputs);
  if (c.format == "csv") out << "index,graph6,n,m,delta,class,critical,alpha,val\n";
  stream_records(recs, c.jobs, out, [&](const InputRecord& r) {
    const json j = graph_report(r.id, r.graph, o);
    if (c.format == "json") return j.dump();
    std::ostringstream os;
    os << r.id.index << ',' << r.id.graph6 << ',' << j["n"] << ',' << j["m"] << ',' << j["degree_profile"]["max"] << ','
       << j["class"]["verdict"].get<std::string>() << ',' << j["critical"]["verdict"].get<std::string>() << ','
       << j["alpha"]["value"] << ',' << j["val"]["status"].get<std::string>();
    return os.str();
  });
  return kExitOk;
}

int cmd_audit_lemmas(const RunConfig& c, std::ostream& out) {
  require_format(c, {"json"});
  const AuditSettings base = audit_settings(c);
  const auto recs = load_inputs(c.inputs);
  stream_records(recs, c.jobs, out, [&](const InputRecord& r) {
    const CriticalityResult crit = is_delta_critical(r.graph, c.budget);
    AuditSettings s = base;
    s.context.critical = crit.verdict;
    json j = {{"id", to_json(r.id)}, {"n", r.graph.order()}, {"critical", to_string(crit.verdict)}};
    j["val"] = to_json(audit_val(r.graph, s.context));
    j["lemma_audits"] = r.graph.size() ? lemma_audits(r.graph, s, c.budget, true) : json{{"skipped", "no edges"}};
    return j.dump();
  });
  return kExitOk;
}

int cmd_discharge(const RunConfig& c, std::ostream& out, std::ostream& err) {
  require_format(c, {"json", "csv"});
  const ParamOptions opts = param_options(c);
  const auto recs = load_inputs(c.inputs);
  std::optional<std::vector<int>> given;
  if (!c.x.empty()) given = parse_vertex_list(c.x);
  for (const InputRecord& r : recs) {
    const Graph& g = r.graph;
    if (g.order() == 0 || g.size() == 0) throw DomainError("record " + std::to_string(r.id.index) + " has no edges");
    if (g.min_degree() < c.d && !c.force) {
      throw DomainError("record " + std::to_string(r.id.index) + ": minimum degree " + std::to_string(g.min_degree()) +
                        " is below d=" + std::to_string(c.d) + " (use --force)");
    }
    const Params p = make_params(c.d, BigInt(g.max_degree()), opts);
    const std::vector<int> X = given ? *given : max_independent_set(g).witness;
    const ChargeLedger L = run_discharging(g, X, p);
    // The counting argument needs an edge inside Y.
    if (L.y_independent) err << "note: record " << r.id.index << ": Y = V - X is independent\n";
    if (c.format == "json") {
      json j = {{"id", to_json(r.id)}, {"X", X}, {"params", params_json(p)}, {"ledger", to_json(L, true)}};
      out << j.dump() << '\n';
      continue;
    }
    out << "# record " << r.id.index << " " << r.id.graph6 << " X=" << csv_join(X, ' ') << '\n';
    write_ledger_csv(out, L);
    out << "# totals M0=" << L.total_M0.to_string() << " M0*=" << L.total_M0s.to_string()
        << " step0_conserved=" << (L.step0_conserved ? "yes" : "no") << '\n';
    out << "# totals M1=" << L.total_M1.to_string() << " M1*=" << L.total_M1s.to_string()
        << " M2*=" << L.total_M2s.to_string() << " steps12_conserved=" << (L.steps12_conserved ? "yes" : "no") << '\n';
    out << "# M0*(x)=M1(x) on X: " << (L.x_identity ? "yes" : "no") << "; M0*(y)>=M1(y) on Y: " << (L.y_floor ? "yes" : "no")
        << '\n';
    out << "# M2*(v)>=M2(v): " << csv_join(L.satisfied, ' ') << '\n';
    out << "# M2*(v)<M2(v): " << csv_join(L.unsatisfied, ' ') << '\n';
  }
  return kExitOk;
}

int cmd_verify_claims(const RunConfig& c, std::ostream& out, std::ostream& err) {
  require_format(c, {"json", "csv"});
  Params p = make_params(c.d, BigInt(1), param_options(c));
  BigInt delta;
  if (c.delta == "D0") {
    delta = p.d0_ceiling;
  } else {
    delta = parse_bigint(c.delta);
    if (delta < 1) throw DomainError("--delta must be positive");
  }
  p = with_delta(p, delta);
  GridSpec spec;
  spec.points = c.grid;
  spec.precision_cap = c.precision_cap;
  spec.jobs = c.jobs;
  spec.serial = c.serial;
  const std::vector<ClaimVerdict> verdicts = verify_claims(p, spec);
  if (c.format == "csv") out << "claim,status,lo,hi,precision_bits,note\n";
  for (const ClaimVerdict& v : verdicts) {
    if (c.format == "json") {
      out << to_json(v, p).dump() << '\n';
    } else {
      std::string note = v.note;
      for (char& ch : note)
        if (ch == '"') ch = '\'';
      out << v.claim << ',' << to_string(v.status) << ',' << v.interval.lo_string() << ',' << v.interval.hi_string() << ','
          << v.precision_bits << ",\"" << note << "\"\n";
    }
    if (v.status == ClaimStatus::Indeterminate) err << "warning: " << v.claim << " is Indeterminate: " << v.note << '\n';
  }
  return any_refuted(verdicts) ? kExitRefuted : kExitOk;
}

// ---- option wiring -----------------------------------------------------------

const std::set<std::string> kBoolKeys = {"force", "assume-hypotheses", "serial"};

void add_inputs(CLI::App* sub, RunConfig& c) {
  sub->add_option("inputs", c.inputs, "graph6 files ('-' for stdin)")->required();
}
void add_common(CLI::App* sub, RunConfig& c) {
  sub->add_option("--jobs", c.jobs, "worker threads (default: CRITLAB_JOBS or all cores)")->check(CLI::NonNegativeNumber);
  sub->add_option("--report", c.report, "output path (default: stdout)");
  sub->add_option("--format", c.format, "json or csv");
}
void add_budget(CLI::App* sub, RunConfig& c) {
  sub->add_option("--budget", c.budget, "search budget in decision nodes")->check(CLI::PositiveNumber);
}
void add_params(CLI::App* sub, RunConfig& c) {
  sub->add_option("--d", c.d, "minimum-degree parameter d");
  sub->add_option("--omega-override", c.omega_override, "rational omega, or 'cbrt' for cbrt((d-1)d)");
  sub->add_option("--epsilon", c.epsilon, "override epsilon (rational)");
  sub->add_option("--lambda", c.lambda, "override lambda (rational)");
}

/// Moves --config out of the argument list and splices its key=value pairs in
/// right after the subcommand, so flags given on the command line win.
std::vector<std::string> splice_config(std::vector<std::string> args, const CLI::App& app) {
  std::string path;
  for (std::size_t i = 1; i < args.size(); ++i) {
    if (args[i] == "--config") {
      if (i + 1 >= args.size()) throw InputError("--config needs a path");
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

  std::size_t at = 0;
  const CLI::App* sub = nullptr;
  for (std::size_t i = 1; i < args.size() && !sub; ++i) {
    for (const CLI::App* s : app.get_subcommands([](const CLI::App*) { return true; })) {
      if (s->get_name() == args[i]) {
        sub = s;
        at = i + 1;
        break;
      }
    }
  }
  if (!sub) throw InputError("--config needs a subcommand");

  std::vector<std::string> spliced;
  for (const auto& [key, value] : read_config_file(path)) {
    if (key == "input") {
      spliced.push_back(value);
      continue;
    }
    if (!sub->get_option_no_throw("--" + key)) {
      throw InputError(path + ": unknown key '" + key + "' for " + sub->get_name());
    }
    if (kBoolKeys.count(key)) {
      if (value == "true" || value == "1" || value == "yes") spliced.push_back("--" + key);
      else if (value != "false" && value != "0" && value != "no") throw InputError(path + ": '" + key + "' needs true/false");
      continue;
    }
    spliced.push_back("--" + key);
    spliced.push_back(value);
  }
  args.insert(args.begin() + static_cast<long>(at), spliced.begin(), spliced.end());
  return args;
}

}  // namespace

std::vector<std::pair<std::string, std::string>> read_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open config " + path);
  std::vector<std::pair<std::string, std::string>> out;
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    const std::string t = trim(line);
    if (t.empty() || t[0] == '#') continue;
    const auto eq = t.find('=');
    if (eq == std::string::npos || trim(t.substr(0, eq)).empty()) {
      throw ParseError(path + ":" + std::to_string(number) + ": expected key=value", 0, number);
    }
    out.emplace_back(trim(t.substr(0, eq)), trim(t.substr(eq + 1)));
  }
  return out;
}

int run_cli(const std::vector<std::string>& raw_args, std::ostream& out, std::ostream& err) {
  RunConfig c;
  CLI::App app{"Edge-coloring, independence and discharging checks for Delta-critical graphs", "critlab"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);
  app.add_option("--config", "key=value file; command-line flags take precedence");
  app.option_defaults()->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);

  CLI::App* chi = app.add_subcommand("chi", "chromatic index and class");
  CLI::App* critical = app.add_subcommand("critical", "full per-graph analysis");
  CLI::App* mis = app.add_subcommand("mis", "maximum independent set and bounds");
  CLI::App* audit = app.add_subcommand("audit-lemmas", "per-edge palette lemma audits");
  CLI::App* discharge = app.add_subcommand("discharge", "charge ledger over an independent set");
  CLI::App* verify = app.add_subcommand("verify-claims", "certify the discharging inequalities");
  for (CLI::App* s : {chi, critical, mis, audit, discharge, verify}) {
    s->option_defaults()->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
  }

  for (CLI::App* s : {chi, critical, mis, audit, discharge}) add_inputs(s, c);
  for (CLI::App* s : {chi, critical, mis, audit, discharge, verify}) add_common(s, c);
  for (CLI::App* s : {chi, critical, audit}) add_budget(s, c);
  for (CLI::App* s : {critical, audit, discharge, verify}) add_params(s, c);
  for (CLI::App* s : {critical, audit}) s->add_flag("--assume-hypotheses", c.assume_hypotheses, "run lemma scans without the criticality gate");
  discharge->add_option("--x", c.x, "independent set X as comma-separated vertices (default: a maximum one)");
  discharge->add_flag("--force", c.force, "allow minimum degree below d");
  verify->add_option("--delta", c.delta, "Delta as an integer, or D0 for ceil(D0)");
  verify->add_option("--grid", c.grid, "interior grid points for the Claim-1 check")->check(CLI::PositiveNumber);
  verify->add_option("--precision-cap", c.precision_cap, "largest interval precision in bits")
      ->check(CLI::Range(2L, 1L << 20));
  verify->add_flag("--serial", c.serial, "use the serial reference kernels");

  std::string started;
  std::vector<std::string> args;
  try {
    args = splice_config(raw_args, app);
    std::vector<const char*> argv;
    for (const std::string& a : args) argv.push_back(a.c_str());
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInput;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInput;
  }

  for (CLI::App* s : app.get_subcommands()) c.command = s->get_name();
  if (c.jobs == 0) {
    if (const char* env = std::getenv("CRITLAB_JOBS")) {
      try {
        c.jobs = std::max(0, std::stoi(env));
      } catch (const std::exception&) {
        err << "error: CRITLAB_JOBS must be an integer\n";
        return kExitInput;
      }
    }
  }

  started = utc_now();
  std::ofstream file;
  std::ostream* sink = &out;
  if (!c.report.empty()) {
    file.open(c.report);
    if (!file) {
      err << "error: cannot write " << c.report << '\n';
      return kExitInput;
    }
    sink = &file;
  }

  int code = kExitOk;
  try {
    if (c.command == "chi") code = cmd_chi(c, *sink);
    else if (c.command == "mis") code = cmd_mis(c, *sink);
    else if (c.command == "critical") code = cmd_critical(c, *sink);
    else if (c.command == "audit-lemmas") code = cmd_audit_lemmas(c, *sink);
    else if (c.command == "discharge") code = cmd_discharge(c, *sink, err);
    else code = cmd_verify_claims(c, *sink, err);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const UnsupportedParameter& e) {
    err << "error: " << e.what() << '\n';
    return kExitParameter;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kExitParameter;
  }
  sink->flush();

  if (!c.report.empty()) {
    json meta = {{"tool", "critlab"},
                 {"version", kVersion},
                 {"command", c.command},
                 {"args", std::vector<std::string>(args.begin() + 1, args.end())},
                 {"jobs", resolve_jobs(c.jobs)},
                 {"started", started},
                 {"finished", utc_now()},
                 {"exit_code", code}};
    std::ofstream(c.report + ".meta.json") << meta.dump(2) << '\n';
  }
  return code;
}

}  // namespace critlab
