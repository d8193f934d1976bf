#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "natrep/tree.hpp"
#include "natrep/words.hpp"

#include <functional>
#include <numeric>
#include <random>

using namespace natrep;

namespace {

Word W(const char *text) { return parse_word(text); }

std::string nf(const char *text, size_t budget = kDefaultMaxSteps) {
    return word_str(evaluate(W(text), budget));
}

} // namespace

TEST_CASE("word text grammar") {
    CHECK(word_str(W("DVD1")) == "DVD1");
    CHECK(word_str(W("( 1 D , V ) 1")) == "(1D,V)1");
    CHECK_THROWS_AS(parse_word("(1,"), domain_error);
    CHECK_THROWS_AS(parse_word("x"), domain_error);
}

TEST_CASE("concat is the free monoid") {
    Word a = W("1D"), b = W("V1");
    CHECK(concat({}, a) == a);
    CHECK(concat(a, {}) == a);
    CHECK(concat(concat(a, b), a) == concat(a, concat(b, a)));
    CHECK(concat(natural_word(3), natural_word(4)) == natural_word(7));
}

TEST_CASE("lowering to sets") {
    CHECK(lower(W("11")) == zermelo(2));
    CHECK(lower(W("D")) == diamond());
    CHECK(lower(W("1V")) == HFSet::from_elements({two_v()}));
    CHECK(lower(int_word(3)) == integer_set(3));
    CHECK(lower(int_word(-2)) == integer_set(-2));
    CHECK(lower(W("D1")) == kuratowski(zermelo(2), zermelo(1)));
    // Pair distributes its tail: (a,b)t = (at, bt).
    CHECK(lower(W("(1,D)1")) == kuratowski(lower(W("11")), lower(W("D1"))));
}

TEST_CASE("defining rewrite identities") {
    CHECK(nf("1D1") == "D");
    CHECK(nf("DD") == "");
    CHECK(nf("DVD1") == "V");
    CHECK(nf("1D") == "1D"); // negative one is already normal
    auto step = rewrite_step(W("1D1"));
    REQUIRE(step.has_value());
    CHECK(step->rule == 1);
    CHECK(step->pos == 0);
    CHECK_FALSE(rewrite_step(W("V")).has_value());
}

TEST_CASE("integer arithmetic through the rules") {
    for (long x = -12; x <= 12; ++x)
        for (long y = -12; y <= 12; ++y) {
            CHECK(evaluate(expr_add_int(int_word(x), int_word(y))) == int_word(x + y));
            CHECK(evaluate(expr_sub_int(int_word(x), int_word(y))) == int_word(x - y));
        }
    // [1^n D 1^m] reduces to the integer m-n.
    for (long n = 0; n <= 10; ++n)
        for (long m = 0; m <= 10; ++m) {
            Word w = natural_word(n);
            w.push_back(f_diamond());
            w = concat(w, natural_word(m));
            CHECK(evaluate(w) == int_word(m - n));
        }
}

TEST_CASE("evaluate is idempotent and respects prefix evaluation") {
    // The descending-form guard on D 2_V -> 2_V D 1 means continuations that
    // end in a diamond can re-enable or disable that rule, so the two-sided
    // identity is checked over words that stay out of that regime.
    std::vector<Word> samples = {
        W("1D1"),        W("DD"),
        W("DVD1"),       expr_add_int(int_word(3), int_word(-5)),
        expr_sub_int(int_word(2), int_word(7)),
        recip_word(3),   natural_word(5),
        int_word(4),     concat(natural_word(2), recip_word(1)),
    };
    for (const Word &a : samples) {
        Word na = evaluate(a);
        CHECK(evaluate(na) == na);
        for (const Word &b : samples) {
            Word nb = evaluate(b);
            if (!nb.empty() && nb.back().kind == Factor::Kind::Diamond)
                continue; // descending continuation: see the counterexample below
            Word ab = evaluate(concat(a, b));
            CHECK(evaluate(concat(evaluate(a), b)) == ab);
            CHECK(evaluate(concat(a, nb)) == ab);
        }
    }
    // A descending continuation shows why the guard restricts the identity:
    // the prefix DVD1 normalizes alone but must stay descending before 1111D.
    Word a = W("DVD1"), b = int_word(-4);
    CHECK(evaluate(concat(a, b)) != evaluate(concat(evaluate(a), b)));
}

TEST_CASE("multiplication stepping") {
    // 2 x (0,3): the natural-number product rule.
    Word w = concat(natural_word(2), Word{f_pair({}, natural_word(3))});
    Word expect = Word{f_pair({}, natural_word(3))};
    expect = concat(expect, natural_word(6));
    CHECK(evaluate(w) == expect);

    // One step of (1+...)x3 reaches 6.
    Word stepped = concat(natural_word(1), mul_start(int_word(3)));
    auto v = valuate(stepped);
    REQUIRE(v.has_value());
    CHECK(*v == Ratio(6));

    for (long n = 1; n <= 6; ++n)
        for (long m = -6; m <= 6; ++m) {
            if (m == 0)
                continue;
            Word prod = concat(natural_word(n - 1), mul_start(int_word(m)));
            auto direct = valuate(prod);
            REQUIRE(direct.has_value());
            CHECK(*direct == Ratio(n * m));
            auto closed = valuate(close_expr(prod));
            REQUIRE(closed.has_value());
            CHECK(*closed == Ratio(n * m));
        }
}

TEST_CASE("division words reach the quotient") {
    for (unsigned n = 0; n <= 6; ++n)
        for (unsigned m = 0; m <= 6; ++m) {
            auto v = valuate(evaluate(div_word(n, m)));
            REQUIRE_MESSAGE(v.has_value(), "div_word(", n, ",", m, ") has no value");
            CHECK_MESSAGE(*v == Ratio(2 + n, 2 + m), "div_word(", n, ",", m, ") = ",
                          v->str());
        }
}

TEST_CASE("valuate on canonical forms") {
    CHECK(*valuate(W("VV")) == Ratio(2, 5));
    CHECK(*valuate(int_word(-3)) == Ratio(-3));
    CHECK(*valuate(natural_word(4)) == Ratio(4));
    CHECK(*valuate(Word{}) == Ratio(0));
    CHECK(*valuate(W("D")) == Ratio(0));
    CHECK(*valuate(evaluate(route_word(NatRep{1, -1}))) == Ratio(1, 3));
    CHECK(*valuate(W("1V")) == Ratio(1, 3));
    valuate(W("V1V1V")); // odd shapes must not crash
}

TEST_CASE("trace steps preserve valuate when defined") {
    std::mt19937 rng(17);
    std::uniform_int_distribution<int> pick(0, 5);
    std::uniform_int_distribution<long> small(-4, 4);
    auto sample = [&]() -> Word {
        switch (pick(rng)) {
        case 0:
            return expr_add_int(int_word(small(rng)), int_word(small(rng)));
        case 1:
            return expr_sub_int(int_word(small(rng)), int_word(small(rng)));
        case 2:
            return concat(natural_word(std::abs(small(rng))),
                          mul_start(int_word(small(rng) == 0 ? 2 : small(rng))));
        case 3:
            return div_word(std::abs(small(rng)), std::abs(small(rng)));
        case 4:
            return route_word(encode(Ratio(small(rng) == 0 ? 1 : small(rng),
                                           std::abs(small(rng)) + 1)));
        default:
            return concat(recip_word(std::abs(small(rng))), natural_word(2));
        }
    };
    for (int t = 0; t < 300; ++t) {
        Word w = sample();
        auto before = valuate(w);
        Word cur = w;
        for (int k = 0; k < 400; ++k) {
            auto step = rewrite_step(cur);
            if (!step)
                break;
            cur = step->result;
            if (before) {
                auto after = valuate(cur);
                if (after)
                    CHECK(*after == *before);
            }
        }
    }
}

TEST_CASE("random words evaluate without surprises") {
    std::mt19937 rng(99);
    std::uniform_int_distribution<int> len(0, 7), kind(0, 3);
    std::function<Word(int)> gen = [&](int depth) {
        Word w;
        int n = len(rng);
        for (int i = 0; i < n; ++i) {
            switch (kind(rng)) {
            case 0:
                w.push_back(f_one());
                break;
            case 1:
                w.push_back(f_diamond());
                break;
            case 2:
                w.push_back(f_two_v());
                break;
            default:
                if (depth > 0)
                    w.push_back(f_pair(gen(depth - 1), gen(depth - 1)));
                else
                    w.push_back(f_one());
            }
        }
        return w;
    };
    // Nested pairs can duplicate entries under the general stepping rule, so
    // arbitrary words may grow fast; a small step budget keeps this bounded.
    for (int t = 0; t < 400; ++t) {
        Word w = gen(2);
        try {
            Word nf = evaluate(w, 300);
            CHECK(evaluate(nf, 300) == nf);
            valuate(w, 300);
        } catch (const nonterminating_error &) {
            // budget exhaustion is an acceptable outcome for arbitrary words
        }
    }
}

TEST_CASE("nonterminating budget reports a trace tail") {
    // A word whose trace is long enough to exhaust a tiny budget.
    Word w = expr_add_int(int_word(15), int_word(-15));
    try {
        evaluate_traced(w, 3, true);
        FAIL("expected nonterminating_error");
    } catch (const nonterminating_error &e) {
        CHECK(e.trace_tail.size() <= 10);
        CHECK(!e.trace_tail.empty());
    }
    CHECK(evaluate(w, kDefaultMaxSteps) == int_word(0));
}

TEST_CASE("natural and integer multiplication rules agree on values") {
    // The natural-pair and integer-pair step rules overlap when a pair of
    // naturals is recast as positive integers; their values must coincide.
    std::mt19937 rng(23);
    std::uniform_int_distribution<unsigned long> nat(0, 5);
    std::uniform_int_distribution<int> steps(1, 3);
    for (int t = 0; t < 100; ++t) {
        unsigned long n = nat(rng), m = nat(rng);
        int k = steps(rng);
        Word as_naturals =
            concat(natural_word(k), Word{f_pair(natural_word(n), natural_word(m))});
        Word as_integers = concat(
            natural_word(k),
            Word{f_pair(int_word(static_cast<long>(n)), int_word(static_cast<long>(m)))});
        auto a = valuate(as_naturals);
        auto b = valuate(as_integers);
        if (a && b)
            CHECK(*a == *b);
    }
}

TEST_CASE("open form words are not evaluation-equal to route words") {
    // The diamond placement inside the open form does not reproduce the
    // route words' normal forms; the two coincide only for integers and
    // simple reciprocals. Recorded as the resolution of the open question.
    CHECK(evaluate(rational_open_word(NatRep{-2})) == evaluate(route_word(NatRep{-2})));
    CHECK(evaluate(rational_open_word(NatRep{3})) != evaluate(route_word(NatRep{3})));
    CHECK(evaluate(rational_open_word(NatRep{1, -1, 0})) !=
          evaluate(route_word(NatRep{1, -1, 0})));
    // The open word is still well-formed and lowers to a set.
    lower(rational_open_word(NatRep{1, -1, 0}));
}
