#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "natrep/tree.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

using namespace natrep;

TEST_CASE("parallel level enumeration matches the serial reference") {
    for (unsigned h = 1; h <= 12; ++h) {
        auto par = level(h);
        auto ser = level_serial(h);
        REQUIRE(par.size() == ser.size());
        CHECK(par == ser);
    }
}

TEST_CASE("parallel enumeration is deterministic across runs") {
    auto a = level(11);
    auto b = level(11);
    CHECK(a == b);
}

TEST_CASE("interning is safe under concurrent construction") {
    auto seqs = level_serial(8);
    std::vector<HFSet> sets(seqs.size());
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 8)
#endif
    for (long i = 0; i < static_cast<long>(seqs.size()); ++i)
        sets[i] = lower(route_word(seqs[i]));
    // Same sets built serially must intern to the same nodes.
    for (size_t i = 0; i < seqs.size(); ++i)
        CHECK(sets[i] == lower(route_word(seqs[i])));
}

#ifdef _OPENMP
TEST_CASE("runs with multiple threads when available") {
    CHECK(omp_get_max_threads() >= 1);
}
#endif
