#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "gls/enumerator.hpp"
#include "gls/normality_stats.hpp"
#include "oracles.hpp"

using namespace gls;

namespace {

DigitSystem base10() { return DigitSystem(std::vector<Rational>(10, Rational(1, 10))); }
DigitSystem base2() { return DigitSystem({Rational(1, 2), Rational(1, 2)}); }
DigitSystem gls3() { return DigitSystem({Rational(1, 2), Rational(1, 4), Rational(1, 4)}); }

Word w(std::initializer_list<int> digits) {
    Word word;
    for (int d : digits) word.push_back(static_cast<Digit>(d));
    return word;
}

}  // namespace

TEST_CASE("block counts by hand") {
    const DigitSystem sys = gls3();
    const std::vector<Digit> prefix{0, 1, 2, 0, 0};
    const BlockCensus census = block_counts(sys, prefix, 2);
    CHECK(census.count(w({0, 1})) == 1);
    CHECK(census.count(w({1, 2})) == 1);
    CHECK(census.count(w({2, 0})) == 1);
    CHECK(census.count(w({0, 0})) == 1);
    CHECK(census.count(w({1, 1})) == 0);
    CHECK(census.total() == 4);

    const BlockCensus ones = block_counts(sys, std::vector<Digit>{0, 0, 0}, 1);
    CHECK(ones.count(w({0})) == 3);
    CHECK(ones.total() == 3);

    const BlockCensus empty = block_counts(sys, std::vector<Digit>{0}, 2);
    CHECK(empty.total() == 0);
}

TEST_CASE("census matches the naive window map") {
    std::mt19937_64 rng(41);
    for (int trial = 0; trial < 10; ++trial) {
        const DigitSystem sys = oracle::random_system(rng, 2 + trial % 4);
        const auto prefix = digit_prefix(sys, 3000 + 137 * trial);
        for (int k = 1; k <= 3; ++k) {
            const auto expected = oracle::naive_census(prefix, k);
            const BlockCensus census = block_counts(sys, prefix, k);
            std::uint64_t seen = 0;
            for (const auto& [word, count] : expected) {
                CHECK(census.count(word) == count);
                seen += count;
            }
            CHECK(census.total() == seen);
            CHECK(census.total() == prefix.size() - k + 1);
        }
    }
}

TEST_CASE("marginalizing one trailing digit drops at most one window") {
    std::mt19937_64 rng(43);
    const DigitSystem sys = gls3();
    const auto prefix = digit_prefix(sys, 5000);
    const BlockCensus two = block_counts(sys, prefix, 2);
    const BlockCensus three = block_counts(sys, prefix, 3);
    for (std::uint64_t packed = 0; packed < two.rows(); ++packed) {
        const Word base = two.unpack(packed);
        std::uint64_t extended = 0;
        for (int d = 0; d < sys.digit_count(); ++d) {
            Word longer = base;
            longer.push_back(static_cast<Digit>(d));
            extended += three.count(longer);
        }
        const std::uint64_t direct = two.count(base);
        CHECK(extended <= direct);
        CHECK(direct - extended <= 1);
    }
    (void)rng;
}

TEST_CASE("hot spot report on tiny prefixes") {
    const auto ten = hot_spot_report(base10(), 10, 1);
    for (const auto& row : ten.rows) CHECK(row.ratio == doctest::Approx(1.0));
    CHECK(ten.max_ratio == doctest::Approx(1.0));
    CHECK(ten.min_ratio == doctest::Approx(1.0));

    const auto three = hot_spot_report(gls3(), 6, 1);
    REQUIRE(three.rows.size() == 3);
    CHECK(three.rows[0].ratio == doctest::Approx(4.0 / 3.0));
    CHECK(three.rows[1].ratio == doctest::Approx(2.0 / 3.0));
    CHECK(three.rows[2].ratio == doctest::Approx(2.0 / 3.0));
    CHECK(three.max_ratio == doctest::Approx(4.0 / 3.0));

    // One window: the ratio is 1 / measure(first digit).
    std::mt19937_64 rng(47);
    for (int trial = 0; trial < 20; ++trial) {
        const DigitSystem sys = oracle::random_system(rng, 2 + trial % 5);
        const auto report = hot_spot_report(sys, 1, 1);
        CHECK(report.max_ratio == doctest::Approx(1.0 / to_double(sys.measure(0))));
    }
}

TEST_CASE("row budget") {
    CHECK_THROWS_AS(hot_spot_report(base10(), 100, 3, 500), BudgetExceeded);
    CHECK_THROWS_AS(convergence_table(base10(), {100}, 3, 500), BudgetExceeded);
}

TEST_CASE("reservoir mode agrees with the full table on its words") {
    const DigitSystem sys = gls3();
    const auto full = hot_spot_report(sys, 4000, 3);
    const auto sampled = hot_spot_report(sys, 4000, 3, 10, true);
    REQUIRE(sampled.rows.size() == 10);
    for (const auto& row : sampled.rows) {
        const auto match = std::find_if(full.rows.begin(), full.rows.end(),
                                        [&](const HotSpotRow& r) { return r.word == row.word; });
        REQUIRE(match != full.rows.end());
        CHECK(match->count == row.count);
    }
    // The sampled words are exactly the ten of largest measure.
    for (const auto& row : sampled.rows) CHECK(row.word.size() <= 2);
}

TEST_CASE("convergence table") {
    const auto ten = convergence_table(base10(), {10}, 1);
    REQUIRE(ten.size() == 1);
    CHECK(ten[0].max_deviation == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(ten[0].windows_at_K == 10);

    // Oracle over the explicit base-2 prefix.
    const DigitSystem sys = base2();
    const std::vector<std::uint64_t> Ns{2, 6, 14};
    const auto rows = convergence_table(sys, Ns, 1);
    const auto prefix = digit_prefix(sys, 14);
    for (std::size_t i = 0; i < Ns.size(); ++i) {
        const std::vector<Digit> cut(prefix.begin(), prefix.begin() + Ns[i]);
        const auto census = oracle::naive_census(cut, 1);
        double expected = 0.0;
        for (int d = 0; d < 2; ++d) {
            const Word word{static_cast<Digit>(d)};
            const auto it = census.find(word);
            const double freq =
                it == census.end() ? 0.0 : static_cast<double>(it->second) / Ns[i];
            expected = std::max(expected, std::abs(freq / 0.5 - 1.0));
        }
        CHECK(rows[i].max_deviation == doctest::Approx(expected).epsilon(1e-12));
        CHECK(rows[i].windows_at_K == Ns[i]);
    }

    CHECK_THROWS(convergence_table(sys, {14, 6}, 1));
}

TEST_CASE("deviation shrinks along the stream") {
    // Property version of the normality trend at small scale.
    for (const DigitSystem& sys : {base10(), gls3()}) {
        const auto rows = convergence_table(sys, {1000, 100000}, 2);
        REQUIRE(rows.size() == 2);
        CHECK(rows[1].max_deviation < rows[0].max_deviation);
    }
}
