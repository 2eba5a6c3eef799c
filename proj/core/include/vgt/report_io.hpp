#pragma once

#include <nlohmann/json.hpp>
#include <string>
#include <vector>

#include "vgt/counting.hpp"
#include "vgt/detsieve.hpp"
#include "vgt/trace.hpp"

namespace vgt {

// JSON and CSV renderings of engine reports.  Keys are snake_case and
// nlohmann objects keep keys sorted, so identical reports serialize to
// identical bytes; the round-trip functions are what certificate replay
// feeds on.

std::string format_point(const ProjPoint& t);

nlohmann::json to_json(const FiberCount& c);
nlohmann::json to_json(const TraceReport& r);
nlohmann::json to_json(const TableCheck& c);
nlohmann::json to_json(const CongruenceResult& r);
nlohmann::json to_json(const EliminationCertificate& c);
nlohmann::json to_json(const SieveReport& r);

// Strict parse of one certificate; throws Error on anything malformed.
EliminationCertificate certificate_from_json(const nlohmann::json& j);
// Accepts either a bare array of certificates or a full sieve report.
std::vector<EliminationCertificate> certificates_from_json(const nlohmann::json& j);

// Batch sweep CSV: a,p,r,q,T,T_mod_8,symbols,bound_ok.  The symbols
// column packs the two Legendre symbols at p as '+'/'-' characters.
std::string sweep_csv_header();
std::string sweep_csv_row(const TraceReport& r);

}  // namespace vgt
