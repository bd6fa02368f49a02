#pragma once

#include <string>

#include <json.hpp>

#include "dtn/construction.hpp"
#include "dtn/search.hpp"
#include "dtn/verify.hpp"

// Serialization of library results into the documented JSON envelope and CSV
// rows. Everything here is deterministic: ordered_json keeps insertion order,
// and every mpz_class value becomes a decimal string (index/root/product
// values overflow doubles within a few steps).
namespace dtn {

inline constexpr const char* kSchemaVersion = "1.0";

using ojson = nlohmann::ordered_json;

// {"schema_version", "command", "params", "results", "diagnostics"}.
ojson envelope(const std::string& command, ojson params, ojson results,
               ojson diagnostics = ojson::object());

// {"tag": "constructed", "k": 3} / {"tag": "family"} / {"tag": "sporadic"}.
ojson provenance_json(const Provenance& p);

// {"tag": "constructed", "n": "1", "m": "1", "k": 0} or {"tag": "sporadic"};
// the construction run that reproduces the triple starts at n = smallest index.
ojson classification_json(const TripleRecord& rec, const mpz_class& m);

// {"k", "indices", "certificates": {"ab", "ac", "bc"}, "provenance"}; each
// certificate is {"value", "root"}.
ojson triple_json(const TripleRecord& rec);

// Results payload for verify: verdict plus one record per pair, each carrying
// the exact product-plus-n value and, when square, its root.
ojson verify_results_json(const VerifyReport& rep);

// Results payload for closed-form: per-sequence agreement arrays with their
// starting k, plus the two identity arrays and the conjunction.
ojson closed_form_results_json(const ClosedFormAgreement& agr);

// Results payload for search. with_classification controls whether triples
// carry their classification; with_timing adds wall_seconds to diagnostics
// (off by default: timing varies run to run, and search output is promised
// byte-identical across thread counts).
ojson search_results_json(const SearchReport& rep, bool with_classification);
ojson search_diagnostics_json(const SearchReport& rep, bool with_timing);

// CSV. Headers are fixed; cells holding big integers are plain decimal.
std::string generate_csv_header();
std::string generate_csv_row(const TripleRecord& rec);
std::string search_csv_header();
std::string search_csv_row(const TripleRecord& rec, bool with_classification);

} // namespace dtn
