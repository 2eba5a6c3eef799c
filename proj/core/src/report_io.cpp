#include "vgt/report_io.hpp"

#include "vgt/errors.hpp"

namespace vgt {

using nlohmann::json;

std::string format_point(const ProjPoint& t) {
  if (t.is_infinity()) return "inf";
  const Fq& v = t.value();
  if (v.c1 == 0) return std::to_string(v.c0);
  std::string w = v.c1 == 1 ? "w" : std::to_string(v.c1) + "*w";
  if (v.c0 == 0) return w;
  return std::to_string(v.c0) + "+" + w;
}

json to_json(const FiberCount& c) {
  return json{{"t", format_point(c.t)},
              {"class", fiber_class_name(c.cls)},
              {"fiber_count", c.n},
              {"smooth", c.smooth}};
}

json to_json(const TraceReport& r) {
  json rows = json::array();
  for (const auto& row : r.breakdown) {
    rows.push_back(json{{"t", format_point(row.t)},
                        {"class", fiber_class_name(row.cls)},
                        {"multiplicity", row.multiplicity},
                        {"fiber_count", row.fiber_count},
                        {"contribution", row.contribution}});
  }
  return json{{"param_a", r.param_a.str()},
              {"p", r.p},
              {"r", r.r},
              {"q", r.q},
              {"trace", r.trace},
              {"trace_mod_8", ((r.trace % 8) + 8) % 8},
              {"symbols",
               json{{"two_1plus_a", r.symbols.two_one_plus_a},
                    {"two_1minus_a", r.symbols.two_one_minus_a},
                    {"chi_two", r.symbols.chi_two},
                    {"chi_minus_one", r.symbols.chi_minus_one}}},
              {"breakdown", rows}};
}

json to_json(const TableCheck& c) {
  return json{{"table", c.table == SpecialFiber::Zero ? "zero" : "node"},
              {"param_a", c.param_a.str()},
              {"p", c.p},
              {"r", c.r},
              {"q", c.q},
              {"conditions", c.conditions},
              {"expected", c.expected},
              {"reference_value", c.reference_value},
              {"known_erratum", c.known_erratum},
              {"computed", c.computed},
              {"matches", c.matches}};
}

json to_json(const CongruenceResult& r) {
  const char* status = r.status == CongruenceStatus::Verified ? "verified"
                       : r.status == CongruenceStatus::ConditionsNotMet
                           ? "conditions_not_met"
                           : "failed";
  json j{{"param_a", r.param_a.str()},
         {"p", r.p},
         {"q", r.q},
         {"status", status},
         {"symbols", json{{"two_1plus_a", r.sym_plus}, {"two_1minus_a", r.sym_minus}}},
         {"detail", r.detail}};
  j["trace"] = r.trace ? json(*r.trace) : json(nullptr);
  return j;
}

json to_json(const EliminationCertificate& c) {
  json j{{"param_a", c.param_a.str()},
         {"discriminant_D", c.discriminant},
         {"witness_p", c.witness_p},
         {"rule", c.rule == EliminationRule::A ? "A" : "B"},
         {"legendre_D_p", c.legendre_d_p},
         {"symbols",
          json{{"two_1plus_a", c.sym_two_one_plus_a}, {"two_1minus_a", c.sym_two_one_minus_a}}},
         {"q", c.q},
         {"checked", true}};
  j["trace_p"] = c.trace_p ? json(*c.trace_p) : json(nullptr);
  j["trace_p2"] = c.trace_p2 ? json(*c.trace_p2) : json(nullptr);
  return j;
}

json to_json(const SieveReport& r) {
  json certs = json::array();
  for (const auto& c : r.certificates) certs.push_back(to_json(c));
  return json{{"param_a", r.param_a.str()},
              {"prime_bound", r.prime_bound},
              {"candidates", r.candidates},
              {"certificates", certs},
              {"survivors", r.survivors},
              {"all_eliminated", r.all_eliminated},
              {"assumptions", r.assumptions}};
}

namespace {

const json& need(const json& j, const char* key) {
  auto it = j.find(key);
  if (it == j.end()) throw Error(std::string("certificate is missing key '") + key + "'");
  return *it;
}

}  // namespace

EliminationCertificate certificate_from_json(const json& j) {
  if (!j.is_object()) throw Error("certificate is not a JSON object");
  EliminationCertificate c;
  try {
    c.param_a = Rational::parse(need(j, "param_a").get<std::string>());
    c.discriminant = need(j, "discriminant_D").get<int64_t>();
    c.witness_p = need(j, "witness_p").get<uint64_t>();
    std::string rule = need(j, "rule").get<std::string>();
    if (rule == "A") {
      c.rule = EliminationRule::A;
    } else if (rule == "B") {
      c.rule = EliminationRule::B;
    } else {
      throw Error("certificate rule must be \"A\" or \"B\"");
    }
    c.legendre_d_p = need(j, "legendre_D_p").get<int>();
    const json& sym = need(j, "symbols");
    c.sym_two_one_plus_a = need(sym, "two_1plus_a").get<int>();
    c.sym_two_one_minus_a = need(sym, "two_1minus_a").get<int>();
    const json& tp = need(j, "trace_p");
    if (!tp.is_null()) c.trace_p = tp.get<int64_t>();
    const json& tp2 = need(j, "trace_p2");
    if (!tp2.is_null()) c.trace_p2 = tp2.get<int64_t>();
    c.q = need(j, "q").get<uint64_t>();
    if (need(j, "checked").get<bool>() != true) throw Error("certificate is not marked checked");
  } catch (const json::exception& e) {
    throw Error(std::string("malformed certificate: ") + e.what());
  }
  return c;
}

std::vector<EliminationCertificate> certificates_from_json(const json& j) {
  const json* arr = nullptr;
  if (j.is_array()) {
    arr = &j;
  } else if (j.is_object() && j.contains("certificates")) {
    arr = &j["certificates"];
  } else {
    throw Error("expected a certificate array or a sieve report");
  }
  std::vector<EliminationCertificate> out;
  for (const auto& item : *arr) out.push_back(certificate_from_json(item));
  return out;
}

std::string sweep_csv_header() { return "a,p,r,q,T,T_mod_8,symbols,bound_ok"; }

namespace {

char symbol_char(int s) { return s > 0 ? '+' : s < 0 ? '-' : '0'; }

}  // namespace

std::string sweep_csv_row(const TraceReport& r) {
  auto q = static_cast<int64_t>(r.q);
  bool bound_ok = r.trace <= 3 * q && r.trace >= -3 * q;
  std::string sym{symbol_char(r.symbols.two_one_plus_a),
                  symbol_char(r.symbols.two_one_minus_a)};
  return r.param_a.str() + "," + std::to_string(r.p) + "," + std::to_string(r.r) + "," +
         std::to_string(r.q) + "," + std::to_string(r.trace) + "," +
         std::to_string(((r.trace % 8) + 8) % 8) + "," + sym + "," + (bound_ok ? "1" : "0");
}

}  // namespace vgt
