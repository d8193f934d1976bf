#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "natrep/surd.hpp"

using namespace natrep;

TEST_CASE("surd basics") {
    Surd r3 = Surd::sqrt_of(3);
    CHECK(r3.floor() == 1);
    CHECK(r3.cmp(Ratio(7, 4)) < 0);
    CHECK(r3.cmp(Ratio(26, 15)) < 0);
    CHECK(r3.cmp(Ratio(5, 3)) > 0);
    Surd phi = Surd::golden_ratio();
    CHECK(phi.floor() == 1);
    CHECK(phi.cmp(Ratio(89, 55)) < 0);
    CHECK(phi.cmp(Ratio(144, 89)) > 0);
    Surd r8 = Surd::sqrt_of(8); // normalizes to 2 sqrt(2)
    CHECK(r8.d() == 2);
    CHECK(r8.q() == 2);
    Surd r9 = Surd::sqrt_of(9);
    CHECK(r9.is_rational());
    CHECK(r9.as_ratio() == Ratio(3));
    CHECK_THROWS_AS(nat_digits(r9, 3), domain_error);
    CHECK_THROWS_AS(Surd(1, 1, 0, 2), domain_error);
}

TEST_CASE("digit streams") {
    Surd r3 = Surd::sqrt_of(3);
    CHECK(nat_digits(r3, 4) == std::vector<Int>{2, 2, 2, 2});
    CHECK(cf_digits(r3, 5) == std::vector<Int>{1, 1, 2, 1, 2});
    CHECK(cf_digits(r3, 1) == std::vector<Int>{1});
    Surd phi = Surd::golden_ratio();
    CHECK(nat_digits(phi, 5) == std::vector<Int>{2, 1, 1, 1, 1});
    CHECK(cf_digits(phi, 5) == std::vector<Int>{1, 1, 1, 1, 1});
    // Every prefix is a valid natural representation.
    Surd r2 = Surd::sqrt_of(2);
    auto digits = nat_digits(r2, 12);
    for (size_t k = 1; k <= digits.size(); ++k) {
        NatRep s;
        s.entries.assign(digits.begin(), digits.begin() + k);
        CHECK(is_valid(s));
    }
}

TEST_CASE("convergents and exact errors") {
    Surd r3 = Surd::sqrt_of(3);
    auto nat2 = convergent_error(r3, {Int(2), Int(2)}, Codec::Natural);
    CHECK(nat2.value == Ratio(7, 4));
    auto cf4 = convergent_error(r3, {Int(1), Int(1), Int(2), Int(1)}, Codec::Standard);
    CHECK(cf4.value == Ratio(7, 4));
    CHECK(nat2.error.cmp(cf4.error) == 0);
    CHECK(nat2.error.sign() > 0);

    // decode of a prefix approximates within 1/den^2.
    Surd r2 = Surd::sqrt_of(2);
    auto digits = nat_digits(r2, 3);
    NatRep prefix;
    prefix.entries = digits;
    Ratio v = decode(prefix);
    Surd err = (r2 - v).abs();
    Ratio bound(1, v.den() * v.den());
    CHECK(err.cmp(bound) < 0);
}

TEST_CASE("error decreases monotonically") {
    for (Surd x : {Surd::sqrt_of(2), Surd::sqrt_of(3), Surd::golden_ratio()}) {
        auto digits = nat_digits(x, 30);
        auto cfs = cf_digits(x, 30);
        for (size_t k = 2; k <= 30; ++k) {
            auto prev = convergent_error(x, std::vector<Int>(digits.begin(), digits.begin() + k - 1),
                                         Codec::Natural);
            auto cur = convergent_error(x, std::vector<Int>(digits.begin(), digits.begin() + k),
                                        Codec::Natural);
            CHECK(cur.error.cmp(prev.error) < 0);
            auto cprev = convergent_error(x, std::vector<Int>(cfs.begin(), cfs.begin() + k - 1),
                                          Codec::Standard);
            auto ccur = convergent_error(x, std::vector<Int>(cfs.begin(), cfs.begin() + k),
                                         Codec::Standard);
            CHECK(ccur.error.cmp(cprev.error) < 0);
        }
    }
}

TEST_CASE("natural convergents of sqrt(3) double the standard ones") {
    Surd r3 = Surd::sqrt_of(3);
    auto nat = nat_digits(r3, 10);
    auto cf = cf_digits(r3, 20);
    for (size_t k = 1; k <= 10; ++k) {
        Ratio a = convergent_error(r3, std::vector<Int>(nat.begin(), nat.begin() + k),
                                   Codec::Natural)
                      .value;
        Ratio b = convergent_error(r3, std::vector<Int>(cf.begin(), cf.begin() + 2 * k),
                                   Codec::Standard)
                      .value;
        CHECK(a == b);
    }
}
