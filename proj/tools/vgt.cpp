// vgt: command-line front end for the fiber counting, trace, congruence,
// and determinant-sieve engine.
//
// Subcommands: count, trace, verify (tables | congruence), sieve, sweep.
// Exit codes: 0 success, 1 computation failure (bad prime, mismatch,
// survivors), 2 flag or parameter errors.

#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "vgt/arith.hpp"
#include "vgt/errors.hpp"
#include "vgt/report_io.hpp"

namespace {

struct RunConfig {
  uint64_t prime_bound = 200;
  uint64_t oracle_bound = 20000;
  int threads = 1;
  std::string format = "text";
};

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

void load_config_file(const std::string& path, RunConfig& cfg) {
  std::ifstream in(path);
  if (!in) throw vgt::BadParameter("cannot open config file " + path);
  std::string line;
  while (std::getline(in, line)) {
    std::string t = trim(line);
    if (t.empty() || t[0] == '#') continue;
    auto eq = t.find('=');
    if (eq == std::string::npos) throw vgt::BadParameter("config line without '=': " + t);
    std::string key = trim(t.substr(0, eq));
    std::string value = trim(t.substr(eq + 1));
    try {
      if (key == "prime_bound") {
        cfg.prime_bound = std::stoull(value);
      } else if (key == "oracle_bound") {
        cfg.oracle_bound = std::stoull(value);
      } else if (key == "threads") {
        cfg.threads = std::stoi(value);
      } else if (key == "format") {
        cfg.format = value;
      } else {
        throw vgt::BadParameter("unknown config key '" + key + "'");
      }
    } catch (const std::logic_error&) {
      throw vgt::BadParameter("bad config value for '" + key + "': " + value);
    }
  }
  if (cfg.threads < 1) throw vgt::BadParameter("threads must be at least 1");
  if (cfg.prime_bound < 3) throw vgt::BadParameter("prime_bound must be at least 3");
}

vgt::Rational parse_param(const std::string& text) {
  try {
    return vgt::Rational::parse(text);
  } catch (const vgt::BadDenominator& e) {
    throw vgt::BadParameter(e.what());
  }
}

vgt::Field make_field(uint64_t p, int r) {
  vgt::PrimeModulus pm(p);
  return r == 1 ? vgt::Field::prime(pm) : vgt::Field::quadratic(pm);
}

bool is_json(const std::string& format) {
  if (format == "json") return true;
  if (format == "text" || format == "csv") return false;
  throw vgt::BadParameter("unknown format '" + format + "'");
}

std::string fiber_text_row(const vgt::Field& f, const vgt::Fq& a, const vgt::FiberCount& c) {
  std::ostringstream os;
  os << "t=" << vgt::format_point(c.t) << " class=" << vgt::fiber_class_name(c.cls)
     << " N=" << c.n << " smooth=" << (c.smooth ? "yes" : "no");
  if (!c.t.is_infinity() && !f.is_zero(c.t.value())) {
    os << " disc=" << f.str(vgt::discriminant(f, a, c.t.value()));
  } else {
    os << " disc=-";
  }
  return os.str();
}

int cmd_count(const RunConfig& cfg, const std::string& a_str, uint64_t p, int r,
              const std::string& t_str, bool naive, const std::string& format) {
  vgt::SurfaceParam param{parse_param(a_str)};
  vgt::Field f = make_field(p, r);
  vgt::Fq a = vgt::reduce_param(param, f);

  std::vector<vgt::ProjPoint> points;
  if (t_str == "all") {
    for (uint64_t i = 0; i < f.q(); ++i) points.push_back(vgt::ProjPoint::finite(f.from_index(i)));
    points.push_back(vgt::ProjPoint::infinity());
  } else if (t_str == "inf") {
    points.push_back(vgt::ProjPoint::infinity());
  } else {
    int64_t v = 0;
    try {
      size_t used = 0;
      v = std::stoll(t_str, &used);
      if (used != t_str.size()) throw std::invalid_argument(t_str);
    } catch (const std::logic_error&) {
      throw vgt::BadParameter("--t expects an integer, 'inf', or 'all'");
    }
    points.push_back(vgt::ProjPoint::finite(f.from_int(v)));
  }

  vgt::QuadCharTable chi(f);
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& t : points) {
    vgt::FiberCount c = naive ? vgt::fiber_count_naive(f, a, t, cfg.oracle_bound)
                              : vgt::fiber_count_charsum(f, a, t, &chi);
    if (is_json(format)) {
      nlohmann::json j = vgt::to_json(c);
      if (!t.is_infinity() && !f.is_zero(t.value())) {
        j["discriminant"] = f.str(vgt::discriminant(f, a, t.value()));
      } else {
        j["discriminant"] = nullptr;
      }
      rows.push_back(std::move(j));
    } else {
      std::cout << fiber_text_row(f, a, c) << "\n";
    }
  }
  if (is_json(format)) {
    nlohmann::json out{{"param_a", param.a().str()}, {"p", p}, {"r", r}, {"q", f.q()},
                       {"fibers", rows}};
    std::cout << out.dump(2) << "\n";
  }
  return 0;
}

int cmd_trace(const RunConfig& cfg, const std::string& a_str, uint64_t p, int r,
              bool breakdown, const std::string& format) {
  vgt::SurfaceParam param{parse_param(a_str)};
  vgt::Field f = make_field(p, r);
  vgt::TraceOptions opt;
  opt.threads = cfg.threads;
  vgt::TraceReport rep = vgt::frobenius_trace(param, f, opt);
  if (is_json(format)) {
    std::cout << vgt::to_json(rep).dump(2) << "\n";
    return 0;
  }
  std::cout << "param a=" << rep.param_a.str() << " p=" << rep.p << " r=" << rep.r
            << " q=" << rep.q << "\n";
  std::cout << "T = " << rep.trace << "\n";
  std::cout << "T mod 8 = " << ((rep.trace % 8) + 8) % 8 << "\n";
  std::cout << "symbols two_1plus_a=" << rep.symbols.two_one_plus_a
            << " two_1minus_a=" << rep.symbols.two_one_minus_a
            << " chi_two=" << rep.symbols.chi_two
            << " chi_minus_one=" << rep.symbols.chi_minus_one << "\n";
  if (breakdown) {
    for (const auto& row : rep.breakdown) {
      std::cout << "  t=" << vgt::format_point(row.t) << " class=" << vgt::fiber_class_name(row.cls)
                << " m=" << row.multiplicity << " N=" << row.fiber_count
                << " contrib=" << row.contribution << "\n";
    }
  }
  return 0;
}

int cmd_verify_tables(const RunConfig& cfg, const std::string& a_str, uint64_t p_max,
                      const std::string& format) {
  vgt::SurfaceParam param{parse_param(a_str)};
  vgt::TraceOptions opt;
  opt.threads = cfg.threads;
  bool all_ok = true;
  nlohmann::json rows = nlohmann::json::array();
  for (uint64_t p = 3; p <= p_max; p = vgt::next_prime(p)) {
    if (!param.good_prime(p)) continue;
    for (int r : {1, 2}) {
      vgt::Field f = make_field(p, r);
      for (auto which : {vgt::SpecialFiber::Zero, vgt::SpecialFiber::Node}) {
        vgt::TableCheck check = vgt::special_contribution(param, f, which, opt);
        all_ok = all_ok && check.matches;
        if (is_json(format)) {
          rows.push_back(vgt::to_json(check));
          continue;
        }
        std::cout << "p=" << p << " r=" << r << " "
                  << (which == vgt::SpecialFiber::Zero ? "zero" : "node") << ": conditions=[";
        for (size_t i = 0; i < check.conditions.size(); ++i) {
          std::cout << (i ? "," : "") << check.conditions[i];
        }
        std::cout << "] expected=" << check.expected << " computed=" << check.computed
                  << (check.matches ? " ok" : " MISMATCH");
        if (check.known_erratum) {
          std::cout << " (known-erratum: reference table prints " << check.reference_value << ")";
        }
        std::cout << "\n";
      }
    }
  }
  if (is_json(format)) {
    std::cout << nlohmann::json{{"param_a", param.a().str()}, {"checks", rows},
                                {"all_ok", all_ok}}
                     .dump(2)
              << "\n";
  } else {
    std::cout << (all_ok ? "all table checks passed" : "TABLE CHECKS FAILED") << "\n";
  }
  return all_ok ? 0 : 1;
}

int cmd_verify_congruence(const RunConfig& cfg, const std::string& a_str, uint64_t p_max,
                          const std::string& format) {
  vgt::SurfaceParam param{parse_param(a_str)};
  vgt::TraceOptions opt;
  opt.threads = cfg.threads;
  bool any_failed = false;
  nlohmann::json rows = nlohmann::json::array();
  for (uint64_t p = 3; p <= p_max; p = vgt::next_prime(p)) {
    if (!param.good_prime(p)) continue;
    vgt::CongruenceResult res = vgt::verify_trace_congruence(param, vgt::PrimeModulus(p), opt);
    any_failed = any_failed || res.status == vgt::CongruenceStatus::Failed;
    if (is_json(format)) {
      rows.push_back(vgt::to_json(res));
      continue;
    }
    std::cout << "p=" << p << " q=" << res.q << " status="
              << (res.status == vgt::CongruenceStatus::Verified ? "verified"
                  : res.status == vgt::CongruenceStatus::ConditionsNotMet ? "conditions_not_met"
                                                                          : "FAILED");
    if (res.trace) std::cout << " T=" << *res.trace;
    if (!res.detail.empty()) std::cout << " detail=" << res.detail;
    std::cout << "\n";
  }
  if (is_json(format)) {
    std::cout << nlohmann::json{{"param_a", param.a().str()}, {"checks", rows},
                                {"all_ok", !any_failed}}
                     .dump(2)
              << "\n";
  }
  return any_failed ? 1 : 0;
}

int cmd_sieve(const std::string& a_str, uint64_t p_max,
              const std::string& cert_path, const std::string& format) {
  vgt::SurfaceParam param{parse_param(a_str)};
  vgt::HypothesisReport hyp = vgt::check_hypotheses(param);
  if (!hyp.theorem_hypotheses) {
    std::cerr << "warning: sieve success is not guaranteed for a = " << param.a().str() << ":";
    if (!hyp.mod5_ok) std::cerr << " a is not 2 or 3 mod 5;";
    if (!hyp.two_one_plus_nonsquare) {
      std::cerr << " 2(1+a) = " << param.two_times_one_plus_a().str() << " is a square;";
    }
    if (!hyp.two_one_minus_nonsquare) {
      std::cerr << " 2(1-a) = " << param.two_times_one_minus_a().str() << " is a square;";
    }
    std::cerr << " attempting elimination anyway\n";
  }
  vgt::SieveReport report = vgt::verify_trivial_determinant(param, p_max);
  if (!cert_path.empty()) {
    std::ofstream out(cert_path);
    if (!out) throw vgt::Error("cannot write certificate file " + cert_path);
    out << vgt::to_json(report).dump(2) << "\n";
  }
  if (is_json(format)) {
    std::cout << vgt::to_json(report).dump(2) << "\n";
  } else {
    std::cout << "a=" << report.param_a.str() << " prime_bound=" << report.prime_bound
              << " candidates=" << report.candidates.size() << "\n";
    for (const auto& c : report.certificates) {
      std::cout << "D=" << c.discriminant << " eliminated by p=" << c.witness_p << " rule="
                << (c.rule == vgt::EliminationRule::A ? "A" : "B");
      if (c.trace_p) std::cout << " trace_p=" << *c.trace_p;
      if (c.trace_p2) std::cout << " trace_p2=" << *c.trace_p2;
      std::cout << "\n";
    }
    if (report.all_eliminated) {
      std::cout << "all candidate classes eliminated; determinant is trivial\n";
    } else {
      std::cout << "survivors:";
      for (auto d : report.survivors) std::cout << " " << d;
      std::cout << "\nnot verified within prime bound " << report.prime_bound << "\n";
    }
  }
  return report.all_eliminated ? 0 : 1;
}

int cmd_replay(const std::string& path, const std::string& format) {
  std::ifstream in(path);
  if (!in) throw vgt::Error("cannot open certificate file " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw vgt::Error(std::string("cannot parse certificate file: ") + e.what());
  }
  auto certs = vgt::certificates_from_json(j);
  bool all_ok = true;
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& c : certs) {
    vgt::ReplayResult res = vgt::replay_certificate(c);
    all_ok = all_ok && res.ok;
    if (is_json(format)) {
      nlohmann::json row = vgt::to_json(c);
      row["replay_ok"] = res.ok;
      row["replay_detail"] = res.detail;
      rows.push_back(std::move(row));
      continue;
    }
    std::cout << "certificate D=" << c.discriminant << " p=" << c.witness_p << " rule="
              << (c.rule == vgt::EliminationRule::A ? "A" : "B") << ": "
              << (res.ok ? "ok" : "REJECTED " + res.detail) << "\n";
  }
  if (is_json(format)) {
    std::cout << nlohmann::json{{"certificates", rows}, {"all_ok", all_ok}}.dump(2) << "\n";
  } else {
    std::cout << (all_ok ? "all certificates replayed" : "REPLAY FAILED") << "\n";
  }
  return all_ok ? 0 : 1;
}

int cmd_sweep(const RunConfig& cfg, const std::string& a_list, uint64_t p_max,
              const std::string& out_path) {
  std::vector<vgt::SurfaceParam> params;
  std::stringstream ss(a_list);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::string t = trim(item);
    if (t.empty()) continue;
    params.emplace_back(parse_param(t));
  }
  if (params.empty()) throw vgt::BadParameter("--a-list is empty");

  std::ostringstream csv;
  csv << vgt::sweep_csv_header() << "\n";
  bool row_errors = false;
  vgt::ProfileCache profiles;
  for (const auto& param : params) {
    for (uint64_t p = 3; p <= p_max; p = vgt::next_prime(p)) {
      if (!param.good_prime(p)) continue;
      for (int r : {1, 2}) {
        try {
          vgt::Field f = make_field(p, r);
          auto prof = profiles.get(f);
          vgt::TraceOptions opt;
          opt.threads = cfg.threads;
          opt.with_breakdown = false;
          opt.profile = prof.get();
          csv << vgt::sweep_csv_row(vgt::frobenius_trace(param, f, opt)) << "\n";
        } catch (const vgt::Error& e) {
          row_errors = true;
          std::cerr << "row error a=" << param.a().str() << " p=" << p << " r=" << r << ": "
                    << e.what() << "\n";
        }
      }
    }
  }
  if (out_path.empty()) {
    std::cout << csv.str();
  } else {
    std::ofstream out(out_path);
    if (!out) throw vgt::Error("cannot write " + out_path);
    out << csv.str();
  }
  return row_errors ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  RunConfig cfg;
  try {
    // The config file seeds defaults, VGT_THREADS overrides it, and
    // explicit flags override both.
    for (int i = 1; i < argc; ++i) {
      std::string arg = argv[i];
      if (arg == "--config" && i + 1 < argc) {
        load_config_file(argv[i + 1], cfg);
      } else if (arg.rfind("--config=", 0) == 0) {
        load_config_file(arg.substr(9), cfg);
      }
    }
    if (const char* env = std::getenv("VGT_THREADS")) {
      try {
        cfg.threads = std::stoi(env);
      } catch (const std::logic_error&) {
        throw vgt::BadParameter("VGT_THREADS must be an integer");
      }
      if (cfg.threads < 1) throw vgt::BadParameter("VGT_THREADS must be at least 1");
    }
  } catch (const vgt::BadParameter& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }

  CLI::App app{"finite-field fiber counts, Frobenius traces, congruence checks, "
               "and determinant elimination certificates for a family of elliptic surfaces"};
  app.require_subcommand(1);
  std::string config_path;
  app.add_option("--config", config_path, "flat key=value config file");

  std::string a_str, t_str = "all", format = cfg.format, a_list, out_path, cert_path,
              replay_path;
  uint64_t p = 0, p_max = cfg.prime_bound;
  int r = 1;
  bool naive = false, breakdown = false;
  int threads = cfg.threads;

  auto add_format = [&](CLI::App* cmd) {
    cmd->add_option("--format", format, "output format: text or json");
    cmd->add_option("--config", config_path, "flat key=value config file");
  };
  auto add_threads = [&](CLI::App* cmd) {
    cmd->add_option("--threads", threads, "worker threads for fiber counting");
  };

  CLI::App* count = app.add_subcommand("count", "count points on fibers");
  count->add_option("--a", a_str, "surface parameter, n or n/d")->required();
  count->add_option("--p", p, "characteristic")->required();
  count->add_option("--r", r, "field degree")->check(CLI::IsMember({1, 2}));
  count->add_option("--t", t_str, "fiber: an integer, 'inf', or 'all'");
  count->add_flag("--naive", naive, "use the brute-force counter");
  add_format(count);

  CLI::App* trace = app.add_subcommand("trace", "compute the Frobenius trace");
  trace->add_option("--a", a_str, "surface parameter, n or n/d")->required();
  trace->add_option("--p", p, "characteristic")->required();
  trace->add_option("--r", r, "field degree")->check(CLI::IsMember({1, 2}));
  trace->add_flag("--breakdown", breakdown, "list per-fiber contributions");
  add_format(trace);
  add_threads(trace);

  CLI::App* verify = app.add_subcommand("verify", "check closed forms against the engine");
  verify->require_subcommand(1);
  CLI::App* tables = verify->add_subcommand("tables", "special-fiber contribution tables");
  tables->add_option("--a", a_str, "surface parameter")->required();
  tables->add_option("--p-max", p_max, "largest prime to check");
  add_format(tables);
  CLI::App* congruence =
      verify->add_subcommand("congruence", "mod-8 trace congruence over quadratic fields");
  congruence->add_option("--a", a_str, "surface parameter")->required();
  congruence->add_option("--p-max", p_max, "largest prime to check");
  add_format(congruence);
  add_threads(congruence);

  CLI::App* sieve = app.add_subcommand("sieve", "eliminate determinant candidates");
  sieve->add_option("--a", a_str, "surface parameter");
  sieve->add_option("--p-max", p_max, "witness prime bound");
  sieve->add_option("--certificates", cert_path, "write the sieve report JSON here");
  sieve->add_option("--replay", replay_path, "replay certificates from a JSON file");
  add_format(sieve);

  CLI::App* sweep = app.add_subcommand("sweep", "batch trace CSV over parameters and primes");
  sweep->add_option("--a-list", a_list, "comma-separated parameters")->required();
  sweep->add_option("--p-max", p_max, "largest prime to sweep");
  sweep->add_option("--out", out_path, "CSV output path (stdout when absent)");
  sweep->add_option("--config", config_path, "flat key=value config file");
  add_threads(sweep);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  cfg.threads = threads;
  cfg.format = format;

  try {
    if (count->parsed()) return cmd_count(cfg, a_str, p, r, t_str, naive, format);
    if (trace->parsed()) return cmd_trace(cfg, a_str, p, r, breakdown, format);
    if (verify->parsed()) {
      if (tables->parsed()) return cmd_verify_tables(cfg, a_str, p_max, format);
      return cmd_verify_congruence(cfg, a_str, p_max, format);
    }
    if (sieve->parsed()) {
      if (!replay_path.empty()) return cmd_replay(replay_path, format);
      if (a_str.empty()) throw vgt::BadParameter("sieve needs --a or --replay");
      return cmd_sieve(a_str, p_max, cert_path, format);
    }
    if (sweep->parsed()) return cmd_sweep(cfg, a_list, p_max, out_path);
  } catch (const vgt::BadParameter& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const vgt::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
