#include <algorithm>
#include <cstdint>
#include <exception>
#include <iostream>
#include <limits>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <gmpxx.h>

#include "dtn/construction.hpp"
#include "dtn/output.hpp"
#include "dtn/search.hpp"
#include "dtn/verify.hpp"

// Exit codes: 0 success / verdict true, 1 verdict false, 2 usage error,
// 3 internal invariant violation.
namespace {

constexpr int kExitFalse = 1;
constexpr int kExitUsage = 2;
constexpr int kExitInvariant = 3;

mpz_class parse_mpz(const std::string& s) {
    try {
        return mpz_class(s);
    } catch (const std::invalid_argument&) {
        throw std::invalid_argument("not a decimal integer: '" + s + "'");
    }
}

std::vector<mpz_class> parse_index_list(const std::string& s) {
    std::vector<mpz_class> out;
    std::istringstream in(s);
    std::string item;
    while (std::getline(in, item, ',')) {
        out.push_back(parse_mpz(item));
    }
    if (out.empty()) {
        throw std::invalid_argument("empty index list");
    }
    return out;
}

struct GenerateOpts {
    std::string m, n;
    unsigned long steps = 1;
    std::string format = "json";
    bool no_self_check = false;
};

int run_generate(const GenerateOpts& o) {
    const dtn::ConstructionParams p{parse_mpz(o.m), parse_mpz(o.n)};
    dtn::TripleStream stream(p, !o.no_self_check);

    const dtn::ojson params{
        {"m", p.m.get_str()}, {"n", p.n.get_str()}, {"steps", o.steps}};
    if (o.format == "csv") {
        std::cout << dtn::generate_csv_header() << '\n';
    }
    for (unsigned long k = 0; k < o.steps; ++k) {
        const dtn::TripleRecord rec = stream.next();
        if (o.format == "csv") {
            std::cout << dtn::generate_csv_row(rec) << '\n';
        } else {
            std::cout << dtn::envelope("generate", params, dtn::triple_json(rec))
                             .dump()
                      << '\n';
        }
    }
    std::cerr << "generate m=" << p.m << " n=" << p.n << ": emitted " << o.steps
              << " triple(s)\n";
    return 0;
}

struct VerifyOpts {
    std::string n;
    std::string indices;
    bool raw = false;
};

int run_verify(const VerifyOpts& o) {
    const mpz_class n_param = parse_mpz(o.n);
    std::vector<mpz_class> entries = parse_index_list(o.indices);
    std::sort(entries.begin(), entries.end());

    const dtn::VerifyReport rep = o.raw
                                      ? dtn::verify_raw_tuple(entries, n_param)
                                      : dtn::verify_tuple(entries, n_param);

    dtn::ojson inputs = dtn::ojson::array();
    for (const auto& v : entries) {
        inputs.push_back(v.get_str());
    }
    const dtn::ojson params{
        {"n", n_param.get_str()}, {"raw", o.raw}, {"inputs", std::move(inputs)}};
    std::cout << dtn::envelope("verify", params, dtn::verify_results_json(rep))
                     .dump(2)
              << '\n';
    std::cerr << "verify: " << (rep.verdict ? "true" : "false") << '\n';
    return rep.verdict ? 0 : kExitFalse;
}

struct ClosedFormOpts {
    std::string m, n;
    unsigned long k_max = 1;
};

int run_closed_form(const ClosedFormOpts& o) {
    const dtn::ConstructionParams p{parse_mpz(o.m), parse_mpz(o.n)};
    const dtn::ClosedFormAgreement agr = dtn::closed_form_agreement(p, o.k_max);

    const dtn::ojson params{
        {"m", p.m.get_str()}, {"n", p.n.get_str()}, {"k_max", o.k_max}};
    std::cout << dtn::envelope("closed-form", params,
                               dtn::closed_form_results_json(agr))
                     .dump(2)
              << '\n';
    std::cerr << "closed-form m=" << p.m << " n=" << p.n << " k_max=" << o.k_max
              << ": " << (agr.all ? "all agree" : "DISAGREEMENT") << '\n';
    // A disagreement would falsify the closed forms: internal failure, not a
    // user error.
    return agr.all ? 0 : kExitInvariant;
}

struct SearchOpts {
    std::string m;
    std::uint64_t bound = 3;
    bool classify = false;
    int jobs = 1;
    std::string format = "json";
    bool timing = false;
};

int run_search(const SearchOpts& o) {
    const mpz_class m = parse_mpz(o.m);
    const dtn::SearchReport rep = dtn::find_triples(m, o.bound, o.jobs);

    if (o.format == "csv") {
        std::cout << dtn::search_csv_header() << '\n';
        for (const auto& rec : rep.triples) {
            std::cout << dtn::search_csv_row(rec, o.classify) << '\n';
        }
    } else {
        // jobs is an execution detail, not a parameter of the result: the
        // report is promised byte-identical at any thread count. Timing is
        // opt-in for the same reason.
        const dtn::ojson params{
            {"m", m.get_str()}, {"bound", o.bound}, {"classify", o.classify}};
        std::cout << dtn::envelope("search", params,
                                   dtn::search_results_json(rep, o.classify),
                                   dtn::search_diagnostics_json(rep, o.timing))
                         .dump(2)
                  << '\n';
    }
    std::cerr << "search m=" << m << " bound=" << o.bound << ": "
              << rep.counts.pairs_found << " pair(s), "
              << rep.counts.triangles_found << " triple(s) in "
              << rep.wall_seconds << " s\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"D(m^2)-triples of triangular numbers: construction, "
                 "verification, closed forms, bounded search"};
    app.require_subcommand(1);

    GenerateOpts gen;
    CLI::App* cmd_gen =
        app.add_subcommand("generate", "Emit construction triples for k = 0..steps-1");
    cmd_gen->add_option("--m", gen.m, "D(m^2) parameter, >= 1")->required();
    cmd_gen->add_option("--n", gen.n, "starting index N_0, >= 1")->required();
    cmd_gen->add_option("--steps", gen.steps, "number of triples, >= 1")
        ->required()
        ->check(CLI::PositiveNumber);
    cmd_gen->add_option("--format", gen.format, "json (NDJSON) or csv")
        ->check(CLI::IsMember({"json", "csv"}));
    cmd_gen->add_flag("--no-self-check", gen.no_self_check,
                      "skip per-step certificate re-verification");

    VerifyOpts ver;
    CLI::App* cmd_ver =
        app.add_subcommand("verify", "Check a D(n)-tuple of triangular numbers");
    cmd_ver->add_option("--n", ver.n, "the D(n) parameter, nonzero")->required();
    cmd_ver
        ->add_option("--indices", ver.indices,
                     "comma-separated indices (or raw elements with --raw)")
        ->required();
    cmd_ver->add_flag("--raw", ver.raw, "entries are elements, not indices");

    ClosedFormOpts cf;
    CLI::App* cmd_cf = app.add_subcommand(
        "closed-form", "Compare closed forms against the recurrences");
    cmd_cf->add_option("--m", cf.m, "D(m^2) parameter, >= 1")->required();
    cmd_cf->add_option("--n", cf.n, "starting index N_0, >= 1")->required();
    cmd_cf->add_option("--k-max", cf.k_max, "check up to this k, >= 1")
        ->required()
        ->check(CLI::PositiveNumber);

    SearchOpts srch;
    CLI::App* cmd_srch = app.add_subcommand(
        "search", "Exhaustive D(m^2)-triple search up to an index bound");
    cmd_srch->add_option("--m", srch.m, "D(m^2) parameter, >= 1")->required();
    cmd_srch->add_option("--bound", srch.bound, "max index, >= 3")
        ->required()
        ->check(CLI::Range(std::uint64_t{3}, std::numeric_limits<std::uint64_t>::max()));
    cmd_srch->add_flag("--classify", srch.classify,
                       "tag each triple constructed/sporadic");
    cmd_srch->add_option("--jobs", srch.jobs, "scan threads, >= 1")
        ->check(CLI::PositiveNumber);
    cmd_srch->add_option("--format", srch.format, "json or csv")
        ->check(CLI::IsMember({"json", "csv"}));
    cmd_srch->add_flag("--timing", srch.timing,
                       "include wall_seconds in diagnostics");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        if (cmd_gen->parsed()) {
            return run_generate(gen);
        }
        if (cmd_ver->parsed()) {
            return run_verify(ver);
        }
        if (cmd_cf->parsed()) {
            return run_closed_form(cf);
        }
        return run_search(srch);
    } catch (const dtn::invariant_violation& e) {
        std::cerr << "internal invariant violation: " << e.what() << '\n';
        return kExitInvariant;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return kExitInvariant;
    }
}
