#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "natrep/hfset.hpp"

#include <random>

using namespace natrep;

TEST_CASE("builders and table encodings") {
    CHECK(HFSet::from_elements({}) == HFSet::empty());
    CHECK(HFSet::from_elements({HFSet::empty()}) == zermelo(1));
    CHECK(HFSet::from_elements({zermelo(0), zermelo(1)}) == two_v());
    CHECK(diamond() == kuratowski(zermelo(1), zermelo(0)));
    CHECK(integer_set(3) == kuratowski(zermelo(4), zermelo(3)));
    CHECK(integer_set(-1) == HFSet::from_elements({diamond()}));
    CHECK(integer_set(0) == diamond());
    CHECK(zermelo(0).str() == "{}");
    CHECK(zermelo(2).str() == "{{{}}}");
    CHECK(two_v().str() == "{{},{{}}}");
}

TEST_CASE("substitution examples") {
    CHECK(substitute(zermelo(2), zermelo(3)) == zermelo(5));
    CHECK(substitute(diamond(), zermelo(3)) == kuratowski(zermelo(4), zermelo(3)));
    CHECK(substitute(two_v(), HFSet::empty()) == two_v());
    CHECK(substitute(HFSet::empty(), two_v()) == two_v());
}

namespace {

// All sets of rank <= r: the power set tower over {}.
std::vector<HFSet> rank_pool(int r) {
    std::vector<HFSet> pool{HFSet::empty()};
    for (int step = 0; step < r; ++step) {
        std::vector<HFSet> next;
        size_t n = pool.size();
        for (size_t mask = 0; mask < (size_t(1) << n); ++mask) {
            std::vector<HFSet> elems;
            for (size_t b = 0; b < n; ++b)
                if (mask & (size_t(1) << b))
                    elems.push_back(pool[b]);
            next.push_back(HFSet::from_elements(std::move(elems)));
        }
        pool = std::move(next);
    }
    return pool;
}

} // namespace

TEST_CASE("substitution monoid laws") {
    auto pool3 = rank_pool(3);
    REQUIRE(pool3.size() == 16);
    for (HFSet a : pool3)
        for (HFSet b : pool3)
            for (HFSet c : pool3)
                CHECK(substitute(a, substitute(b, c)) == substitute(substitute(a, b), c));

    auto pool4 = rank_pool(4);
    REQUIRE(pool4.size() == 65536);
    for (HFSet x : pool4) {
        CHECK(substitute(x, HFSet::empty()) == x);
        CHECK(substitute(HFSet::empty(), x) == x);
    }
    std::mt19937 rng(3);
    std::uniform_int_distribution<size_t> pick(0, pool4.size() - 1);
    for (int t = 0; t < 200; ++t) {
        HFSet a = pool4[pick(rng)], b = pool4[pick(rng)], c = pool4[pick(rng)];
        CHECK(substitute(a, substitute(b, c)) == substitute(substitute(a, b), c));
    }
}

TEST_CASE("addition law on numerals") {
    for (unsigned n = 0; n <= 50; ++n)
        for (unsigned m = 0; m <= 50; m += 7) {
            CHECK(substitute(zermelo(n), zermelo(m)) == zermelo(n + m));
            CHECK(substitute(zermelo(n), zermelo(m)) == substitute(zermelo(m), zermelo(n)));
        }
}

TEST_CASE("substitution is not commutative in general") {
    auto pool = rank_pool(3);
    std::mt19937 rng(5);
    std::uniform_int_distribution<size_t> pick(0, pool.size() - 1);
    bool found = false;
    for (int t = 0; t < 1000 && !found; ++t) {
        HFSet a = pool[pick(rng)], b = pool[pick(rng)];
        found = substitute(a, b) != substitute(b, a);
    }
    CHECK(found);
}

TEST_CASE("canonical interning") {
    CHECK(zermelo(10).id() == zermelo(10).id());
    HFSet a = HFSet::from_elements({zermelo(2), zermelo(1)});
    HFSet b = HFSet::from_elements({zermelo(1), zermelo(2), zermelo(1)});
    CHECK(a == b);
}

TEST_CASE("constituents") {
    CHECK(is_constituent(zermelo(1), two_v()));
    CHECK_FALSE(is_constituent(integer_set(1), integer_set(3)));
    CHECK(is_constituent(two_v(), two_v()));
    CHECK(is_constituent(diamond(), integer_set(-2)));
    auto tc = transitive_closure(two_v());
    CHECK(tc.size() == 2); // 0 and 1
}

TEST_CASE("structure edges") {
    CHECK(structure_edges(HFSet::empty()).empty());
    auto chain = structure_edges(zermelo(2));
    REQUIRE(chain.size() == 2);
    CHECK(chain[0] == std::pair{zermelo(2), zermelo(1)});
    CHECK(chain[1] == std::pair{zermelo(1), zermelo(0)});
    auto tv = structure_edges(two_v());
    CHECK(tv.size() == 3);
    std::string dot = to_dot(two_v());
    CHECK(dot.find("digraph {") == 0);
    CHECK(dot.find("\"{{},{{}}}\" -> \"{}\";") != std::string::npos);
}

TEST_CASE("node budget guards construction") {
    size_t before = hf_node_budget();
    set_hf_node_budget(hf_interned_count());
    CHECK_THROWS_AS(zermelo(100000), resource_error);
    set_hf_node_budget(before);
    CHECK(zermelo(64) == substitute(zermelo(32), zermelo(32)));
}
