#include "dtn/output.hpp"

namespace dtn {

namespace {

std::string str(const mpz_class& v) { return v.get_str(); }

ojson certificate_json(const SquareCertificate& c) {
    return ojson{{"value", str(c.value)}, {"root", str(c.root)}};
}

const char* tag_name(ProvenanceTag tag) {
    switch (tag) {
    case ProvenanceTag::constructed:
        return "constructed";
    case ProvenanceTag::family:
        return "family";
    case ProvenanceTag::sporadic:
        return "sporadic";
    }
    return "?";
}

} // namespace

ojson envelope(const std::string& command, ojson params, ojson results,
               ojson diagnostics) {
    ojson rec;
    rec["schema_version"] = kSchemaVersion;
    rec["command"] = command;
    rec["params"] = std::move(params);
    rec["results"] = std::move(results);
    rec["diagnostics"] = std::move(diagnostics);
    return rec;
}

ojson provenance_json(const Provenance& p) {
    ojson j;
    j["tag"] = tag_name(p.tag);
    if (p.tag == ProvenanceTag::constructed) {
        j["k"] = p.k;
    }
    return j;
}

ojson classification_json(const TripleRecord& rec, const mpz_class& m) {
    ojson j;
    if (rec.provenance.tag == ProvenanceTag::sporadic) {
        j["tag"] = "sporadic";
    } else {
        j["tag"] = "constructed";
        j["n"] = str(rec.indices[0]);
        j["m"] = str(m);
        j["k"] = rec.provenance.k;
    }
    return j;
}

ojson triple_json(const TripleRecord& rec) {
    ojson j;
    j["k"] = rec.provenance.k;
    j["indices"] =
        ojson::array({str(rec.indices[0]), str(rec.indices[1]), str(rec.indices[2])});
    j["certificates"] = ojson{{"ab", certificate_json(rec.certificates[0])},
                              {"ac", certificate_json(rec.certificates[1])},
                              {"bc", certificate_json(rec.certificates[2])}};
    j["provenance"] = provenance_json(rec.provenance);
    return j;
}

ojson verify_results_json(const VerifyReport& rep) {
    ojson pairs = ojson::array();
    for (const auto& pc : rep.pairs) {
        ojson p;
        p["x"] = str(pc.x);
        p["y"] = str(pc.y);
        p["value"] = str(pc.value);
        p["square"] = pc.root.has_value();
        if (pc.root) {
            p["root"] = str(*pc.root);
        }
        pairs.push_back(std::move(p));
    }
    ojson j;
    j["verdict"] = rep.verdict;
    j["pairs"] = std::move(pairs);
    return j;
}

namespace {

ojson agreement_json(long k_start, const std::vector<bool>& agree) {
    ojson j;
    j["k_start"] = k_start;
    j["agree"] = agree;
    return j;
}

} // namespace

ojson closed_form_results_json(const ClosedFormAgreement& agr) {
    ojson j;
    j["s"] = agreement_json(agr.s_k_start, agr.s_agree);
    j["N"] = agreement_json(agr.N_k_start, agr.N_agree);
    j["t"] = agreement_json(agr.t_k_start, agr.t_agree);
    j["identity_s"] = agreement_json(agr.id_k_start, agr.identity_s);
    j["identity_t"] = agreement_json(agr.id_k_start, agr.identity_t);
    j["all"] = agr.all;
    return j;
}

ojson search_results_json(const SearchReport& rep, bool with_classification) {
    ojson triples = ojson::array();
    for (const auto& rec : rep.triples) {
        ojson t;
        t["indices"] = ojson::array(
            {str(rec.indices[0]), str(rec.indices[1]), str(rec.indices[2])});
        t["roots"] = ojson{{"ab", str(rec.certificates[0].root)},
                           {"ac", str(rec.certificates[1].root)},
                           {"bc", str(rec.certificates[2].root)}};
        if (with_classification) {
            t["classification"] = classification_json(rec, rep.m);
        }
        triples.push_back(std::move(t));
    }
    ojson j;
    j["triples"] = std::move(triples);
    return j;
}

ojson search_diagnostics_json(const SearchReport& rep, bool with_timing) {
    ojson j;
    j["pairs_tested"] = rep.counts.pairs_tested;
    j["pairs_found"] = rep.counts.pairs_found;
    j["triangles_found"] = rep.counts.triangles_found;
    if (with_timing) {
        j["wall_seconds"] = rep.wall_seconds;
    }
    return j;
}

std::string generate_csv_header() { return "k,a,b,c,root_ab,root_ac,root_bc"; }

std::string generate_csv_row(const TripleRecord& rec) {
    return std::to_string(rec.provenance.k) + ',' + str(rec.indices[0]) + ',' +
           str(rec.indices[1]) + ',' + str(rec.indices[2]) + ',' +
           str(rec.certificates[0].root) + ',' + str(rec.certificates[1].root) +
           ',' + str(rec.certificates[2].root);
}

std::string search_csv_header() {
    return "a,b,c,root_ab,root_ac,root_bc,classification,k";
}

std::string search_csv_row(const TripleRecord& rec, bool with_classification) {
    std::string cls, k;
    if (with_classification) {
        if (rec.provenance.tag == ProvenanceTag::sporadic) {
            cls = "sporadic";
        } else {
            cls = "constructed";
            k = std::to_string(rec.provenance.k);
        }
    }
    return str(rec.indices[0]) + ',' + str(rec.indices[1]) + ',' +
           str(rec.indices[2]) + ',' + str(rec.certificates[0].root) + ',' +
           str(rec.certificates[1].root) + ',' + str(rec.certificates[2].root) +
           ',' + cls + ',' + k;
}

} // namespace dtn
