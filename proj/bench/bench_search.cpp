// Throughput comparison of the parallel pair scan against the serial
// reference, and of the pair-graph triangle enumeration against the cubic
// oracle. Results are checked for equality before any number is printed, so
// a disagreement can never hide behind a timing table.
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <cstdlib>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "dtn/search.hpp"
#include "dtn/search_reference.hpp"

namespace {

template <typename F> double seconds(F&& f) {
    const auto start = std::chrono::steady_clock::now();
    f();
    return std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                         start)
        .count();
}

} // namespace

int main(int argc, char** argv) {
    const std::uint64_t bound =
        argc > 1 ? std::strtoull(argv[1], nullptr, 10) : 600;
    const long m_arg = argc > 2 ? std::strtol(argv[2], nullptr, 10) : 1;
#ifdef _OPENMP
    int jobs = argc > 3 ? std::atoi(argv[3]) : omp_get_max_threads();
#else
    int jobs = 1;
#endif
    if (bound < 3 || m_arg < 1 || jobs < 1) {
        std::fprintf(stderr, "usage: %s [bound >= 3] [m >= 1] [jobs >= 1]\n",
                     argv[0]);
        return 2;
    }
    const mpz_class m(m_arg);

    std::printf("pair scan, m=%ld, bound=%llu\n", m_arg,
                static_cast<unsigned long long>(bound));

    std::vector<dtn::PairHit> serial_hits, parallel_hits;
    const double t_serial = seconds(
        [&] { serial_hits = dtn::reference::d_square_pairs_serial(m, bound); });
    const double t_parallel =
        seconds([&] { parallel_hits = dtn::d_square_pairs(m, bound, jobs); });
    if (parallel_hits != serial_hits) {
        std::fprintf(stderr, "MISMATCH: parallel scan differs from serial\n");
        return 1;
    }
    std::printf("  serial reference   %8.3f s   %zu pairs\n", t_serial,
                serial_hits.size());
    std::printf("  parallel (%2d jobs) %8.3f s   speedup %.2fx\n", jobs,
                t_parallel, t_serial / t_parallel);

    const std::uint64_t tri_bound = bound < 160 ? bound : 160;
    std::printf("triangle enumeration, m=%ld, bound=%llu\n", m_arg,
                static_cast<unsigned long long>(tri_bound));

    dtn::SearchReport graph;
    std::vector<std::array<std::uint64_t, 3>> naive;
    const double t_graph =
        seconds([&] { graph = dtn::find_triples(m, tri_bound, jobs); });
    const double t_naive = seconds(
        [&] { naive = dtn::reference::find_triples_naive(m, tri_bound); });
    if (graph.triples.size() != naive.size()) {
        std::fprintf(stderr, "MISMATCH: %zu graph triples vs %zu naive\n",
                     graph.triples.size(), naive.size());
        return 1;
    }
    for (std::size_t i = 0; i < naive.size(); ++i) {
        if (graph.triples[i].indices !=
            std::array<mpz_class, 3>{naive[i][0], naive[i][1], naive[i][2]}) {
            std::fprintf(stderr, "MISMATCH: triple %zu differs\n", i);
            return 1;
        }
    }
    std::printf("  naive cubic oracle %8.3f s   %zu triples\n", t_naive,
                naive.size());
    std::printf("  pair graph         %8.3f s   speedup %.2fx\n", t_graph,
                t_naive / t_graph);
    return 0;
}
