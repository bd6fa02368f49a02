#include <doctest.h>

#include "dtn/output.hpp"

using namespace dtn;

TEST_CASE("envelope carries the fixed schema fields in order") {
    const ojson rec = envelope("verify", ojson{{"n", "1"}}, ojson{{"verdict", true}});
    CHECK(rec["schema_version"] == kSchemaVersion);
    CHECK(rec["command"] == "verify");
    CHECK(rec["params"]["n"] == "1");
    CHECK(rec["results"]["verdict"] == true);
    CHECK(rec["diagnostics"].is_object());

    const std::string s = rec.dump();
    CHECK(s.rfind("{\"schema_version\":\"1.0\",\"command\":\"verify\"", 0) == 0);
}

TEST_CASE("triples serialize with decimal-string integers") {
    const TripleRecord rec = triple_at({1, 1}, 0);
    const ojson j = triple_json(rec);
    CHECK(j["k"] == 0);
    CHECK(j["indices"] == ojson::array({"1", "5", "32"}));
    CHECK(j["certificates"]["ab"]["value"] == "16");
    CHECK(j["certificates"]["ab"]["root"] == "4");
    CHECK(j["certificates"]["bc"]["root"] == "89");
    CHECK(j["provenance"]["tag"] == "constructed");
    CHECK(j["provenance"]["k"] == 0);

    // Deep records overflow doubles; the strings must round-trip exactly.
    const TripleRecord deep = triple_at({1, 1}, 25, false);
    const ojson dj = triple_json(deep);
    const std::string root = dj["certificates"]["bc"]["root"];
    CHECK(root.size() > 19);
    CHECK(mpz_class(root) == deep.certificates[2].root);
}

TEST_CASE("verify results expose per-pair values and roots") {
    const ojson good = verify_results_json(verify_tuple({1, 15, 90}, 1));
    CHECK(good["verdict"] == true);
    CHECK(good["pairs"][0]["value"] == "121");
    CHECK(good["pairs"][0]["square"] == true);
    CHECK(good["pairs"][0]["root"] == "11");

    const ojson bad = verify_results_json(verify_tuple({2, 3, 4}, 1));
    CHECK(bad["verdict"] == false);
    CHECK(bad["pairs"][0]["value"] == "19");
    CHECK(bad["pairs"][0]["square"] == false);
    CHECK_FALSE(bad["pairs"][0].contains("root"));
}

TEST_CASE("closed-form results mirror the agreement struct") {
    const ojson j = closed_form_results_json(closed_form_agreement({1, 1}, 4));
    CHECK(j["all"] == true);
    CHECK(j["s"]["k_start"] == -1);
    CHECK(j["s"]["agree"].size() == 6);
    CHECK(j["N"]["k_start"] == 0);
    CHECK(j["N"]["agree"].size() == 7);
    CHECK(j["t"]["k_start"] == 1);
    CHECK(j["t"]["agree"].size() == 4);
    CHECK(j["identity_s"]["agree"].size() == 4);
    CHECK(j["identity_t"]["agree"].size() == 4);
}

TEST_CASE("search results and diagnostics") {
    // Up to 40 there are exactly two D(1)-triples: the sporadic {1,2,15}
    // (values 4, 121, 361) and the constructed {1,5,32}, in that order.
    const SearchReport rep = find_triples(1, 40);
    const ojson with = search_results_json(rep, true);
    REQUIRE(with["triples"].size() == 2);
    CHECK(with["triples"][0]["indices"] == ojson::array({"1", "2", "15"}));
    CHECK(with["triples"][0]["roots"]["bc"] == "19");
    CHECK(with["triples"][0]["classification"]["tag"] == "sporadic");
    CHECK(with["triples"][1]["indices"] == ojson::array({"1", "5", "32"}));
    CHECK(with["triples"][1]["roots"]["ab"] == "4");
    CHECK(with["triples"][1]["classification"]["tag"] == "constructed");
    CHECK(with["triples"][1]["classification"]["n"] == "1");
    CHECK(with["triples"][1]["classification"]["m"] == "1");
    CHECK(with["triples"][1]["classification"]["k"] == 0);

    const ojson without = search_results_json(rep, false);
    CHECK_FALSE(without["triples"][0].contains("classification"));
    CHECK_FALSE(without["triples"][1].contains("classification"));

    const ojson diag = search_diagnostics_json(rep, false);
    CHECK(diag["pairs_tested"] == 40 * 39 / 2);
    CHECK_FALSE(diag.contains("wall_seconds"));
    CHECK(search_diagnostics_json(rep, true).contains("wall_seconds"));
}

TEST_CASE("sporadic triples in JSON and CSV") {
    const SearchReport rep = find_triples(1, 90);
    const TripleRecord* spo = nullptr;
    for (const auto& t : rep.triples) {
        if (t.provenance.tag == ProvenanceTag::sporadic) {
            spo = &t;
        }
    }
    REQUIRE(spo != nullptr);
    CHECK(classification_json(*spo, rep.m) == ojson{{"tag", "sporadic"}});
    CHECK(search_csv_row(*spo, true) == "1,15,90,11,64,701,sporadic,");
}

TEST_CASE("CSV rows") {
    CHECK(generate_csv_header() == "k,a,b,c,root_ab,root_ac,root_bc");
    CHECK(generate_csv_row(triple_at({1, 1}, 0)) == "0,1,5,32,4,23,89");
    CHECK(generate_csv_row(triple_at({2, 1}, 1)) == "1,1,56,329,40,233,9308");

    CHECK(search_csv_header() == "a,b,c,root_ab,root_ac,root_bc,classification,k");
    const SearchReport rep = find_triples(1, 40);
    REQUIRE(rep.triples.size() == 2);
    CHECK(search_csv_row(rep.triples[0], true) == "1,2,15,2,11,19,sporadic,");
    CHECK(search_csv_row(rep.triples[1], true) == "1,5,32,4,23,89,constructed,0");
    CHECK(search_csv_row(rep.triples[1], false) == "1,5,32,4,23,89,,");
}
