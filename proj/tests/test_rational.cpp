#include <doctest.h>

#include "splitnet/errors.hpp"
#include "splitnet/rational.hpp"
#include "splitnet/rng.hpp"

using namespace splitnet;

TEST_CASE("rational parsing") {
    CHECK(parse_rational("7") == Rat(7));
    CHECK(parse_rational("-3") == Rat(-3));
    CHECK(parse_rational("3/4") == Rat(3, 4));
    CHECK(parse_rational("-6/8") == Rat(-3, 4));
    CHECK(parse_rational("21.5") == Rat(43, 2));
    CHECK(parse_rational("-0.25") == Rat(-1, 4));
    CHECK(parse_rational("0") == Rat(0));
    CHECK_THROWS_AS(parse_rational(""), input_error);
    CHECK_THROWS_AS(parse_rational("1/0"), input_error);
    CHECK_THROWS_AS(parse_rational("a/2"), input_error);
    CHECK_THROWS_AS(parse_rational("1.2.3"), input_error);
    CHECK_THROWS_AS(parse_rational("1/2/3"), input_error);
}

TEST_CASE("rational formatting") {
    CHECK(format_rational(Rat(7)) == "7");
    CHECK(format_rational(Rat(43, 2)) == "43/2");
    CHECK(format_rational(Rat(-3, 4)) == "-3/4");
    CHECK(format_rational(Rat(6, 8)) == "3/4");
    CHECK(format_rational(Rat(0)) == "0");
    CHECK(format_rational(parse_rational("21.5")) == "43/2");
}

TEST_CASE("seeded rng is deterministic and in range") {
    Rng a(42), b(42);
    for (int i = 0; i < 100; ++i) CHECK(a.next() == b.next());
    Rng r(7);
    for (int i = 0; i < 1000; ++i) {
        const auto v = r.uniform(13);
        CHECK(v < 13);
    }
    Rng w(9);
    for (int i = 0; i < 100; ++i) {
        const Rat q = w.positive_rational();
        CHECK(q > 0);
        CHECK(q <= 4);
    }
    std::vector<int> items{1, 2, 3, 4, 5};
    Rng s(3);
    s.shuffle(items);
    std::vector<int> sorted = items;
    std::sort(sorted.begin(), sorted.end());
    CHECK(sorted == std::vector<int>{1, 2, 3, 4, 5});
}
