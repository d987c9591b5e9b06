#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "gls/fibred_system.hpp"
#include "oracles.hpp"

using namespace gls;

namespace {

DigitSystem base10() {
    return DigitSystem(std::vector<Rational>(10, Rational(1, 10)));
}

DigitSystem gls3() {
    return DigitSystem({Rational(1, 2), Rational(1, 4), Rational(1, 4)});
}

}  // namespace

TEST_CASE("construction validates and sorts") {
    const DigitSystem ten = base10();
    CHECK(ten.digit_count() == 10);
    for (int d = 0; d < 10; ++d) CHECK(ten.measure(static_cast<Digit>(d)) == Rational(1, 10));

    // Unsorted input gets sorted by decreasing measure, permutation recorded.
    const DigitSystem sys({Rational(1, 4), Rational(1, 2), Rational(1, 4)});
    CHECK(sys.measure(0) == Rational(1, 2));
    CHECK(sys.user_position(0) == 1);
    CHECK(sys.user_position(1) == 0);
    CHECK(sys.user_position(2) == 2);
    CHECK(sys.internal_index(1) == 0);

    const DigitSystem sorted = gls3();
    CHECK(sorted.measure(0) == Rational(1, 2));
    CHECK(sorted.measure(1) == Rational(1, 4));
    CHECK(sorted.measure(2) == Rational(1, 4));
}

TEST_CASE("construction errors") {
    CHECK_THROWS_AS(DigitSystem({Rational(1, 2), Rational(1, 3)}), SumNotOne);
    CHECK_THROWS_AS(DigitSystem({Rational(1)}), TooFewDigits);
    CHECK_THROWS_AS(DigitSystem({Rational(3, 2), Rational(-1, 2)}), NonPositiveMeasure);
    CHECK_THROWS_AS(DigitSystem({Rational(1), Rational(0)}), NonPositiveMeasure);
}

TEST_CASE("cylinder measure") {
    const DigitSystem ten = base10();
    CHECK(cylinder_measure(ten, {4, 2}) == Rational(1, 100));
    CHECK(cylinder_measure(gls3(), {0, 1}) == Rational(1, 8));
    CHECK(cylinder_measure(ten, {}) == Rational(1));
    CHECK_THROWS_AS(cylinder_measure(gls3(), {7}), DigitOutOfRange);
}

TEST_CASE("log measure of count vectors") {
    const DigitSystem two({Rational(1, 2), Rational(1, 2)});
    CHECK(log_measure(two, {1, 1}) == doctest::Approx(-2.0 * std::log(2.0)).epsilon(1e-12));
    CHECK(log_measure(two, {0, 0}) == 0.0);
    CHECK(log_measure(gls3(), {1, 1, 0}) ==
          doctest::Approx(-3.0 * std::log(2.0)).epsilon(1e-12));
    CHECK_THROWS_AS(log_measure(two, {-1, 2}), NegativeCount);
}

TEST_CASE("measure is multiplicative under concatenation") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 300; ++trial) {
        const DigitSystem sys = oracle::random_system(rng, 2 + trial % 4);
        const Word u = oracle::random_word(sys, rng, 8);
        const Word v = oracle::random_word(sys, rng, 8);
        Word uv = u;
        uv.insert(uv.end(), v.begin(), v.end());
        CHECK(cylinder_measure(sys, uv) ==
              cylinder_measure(sys, u) * cylinder_measure(sys, v));
    }
}

TEST_CASE("log measure agrees with the exact product") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 300; ++trial) {
        const DigitSystem sys = oracle::random_system(rng, 2 + trial % 5);
        const Word w = oracle::random_word(sys, rng, 20);
        const double via_counts = log_measure(sys, digit_counts(sys, w));
        const double via_product = log_rational(cylinder_measure(sys, w));
        CHECK(via_counts == doctest::Approx(via_product).epsilon(1e-12));
    }
}

TEST_CASE("sorting preserves the multiset of measures") {
    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 100; ++trial) {
        std::uniform_int_distribution<int> weight(1, 12);
        const int D = 2 + trial % 5;
        std::vector<int> w(D);
        BigInt total = 0;
        for (int& v : w) {
            v = weight(rng);
            total += v;
        }
        std::vector<Rational> user;
        for (int v : w) user.emplace_back(BigInt(v), total);
        const DigitSystem sys{std::vector<Rational>(user)};
        std::vector<Rational> sorted_input = user;
        std::sort(sorted_input.begin(), sorted_input.end(), std::greater<>());
        std::vector<Rational> internal(sys.measures().begin(), sys.measures().end());
        CHECK(internal == sorted_input);
        // The recorded permutation maps back onto the user list.
        for (int d = 0; d < D; ++d)
            CHECK(sys.measure(static_cast<Digit>(d)) == user[sys.user_position(d)]);
    }
}

TEST_CASE("occurrence counting overlaps") {
    CHECK(occurrences_in({0, 0, 0, 0}, {0, 0}) == 3);
    CHECK(occurrences_in({0, 1, 0, 1, 0}, {0, 1, 0}) == 2);
    CHECK(occurrences_in({1}, {0}) == 0);
    CHECK(occurrences_in({0, 1}, {}) == 0);
}

TEST_CASE("rational parsing") {
    CHECK(parse_rational("1/10") == Rational(1, 10));
    CHECK(parse_rational("2^-13") == Rational(1, 8192));
    CHECK(parse_rational("  7 ") == Rational(7));
    CHECK(parse_rational("10^-3") == Rational(1, 1000));
    CHECK_THROWS(parse_rational("1/0"));
    CHECK_THROWS(parse_rational("x"));
    CHECK(to_string(Rational(4, 8)) == "1/2");
    CHECK(to_string(Rational(3)) == "3");
}

TEST_CASE("log of huge rationals stays accurate") {
    const BigInt monster = pow(BigInt(7), 500);
    const double logged = log_big(monster);
    CHECK(logged == doctest::Approx(500.0 * std::log(7.0)).epsilon(1e-14));
    const Rational tiny(1, monster);
    CHECK(log_rational(tiny) == doctest::Approx(-500.0 * std::log(7.0)).epsilon(1e-14));
}
