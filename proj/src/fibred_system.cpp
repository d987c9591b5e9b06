#include "gls/fibred_system.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace gls {

DigitSystem::DigitSystem(std::vector<Rational> measures, std::vector<std::string> symbols) {
    const std::size_t n = measures.size();
    if (n < 2) throw TooFewDigits("got " + std::to_string(n));
    if (n > 256) throw std::invalid_argument("at most 256 digits are supported");
    if (!symbols.empty() && symbols.size() != n)
        throw std::invalid_argument("symbol list must match the measure list");

    Rational total = 0;
    for (std::size_t i = 0; i < n; ++i) {
        if (measures[i] <= 0)
            throw NonPositiveMeasure("measure #" + std::to_string(i) + " = " + to_string(measures[i]));
        total += measures[i];
    }
    if (total != 1) throw SumNotOne("sum = " + to_string(total));

    if (symbols.empty()) {
        symbols.resize(n);
        for (std::size_t i = 0; i < n; ++i) symbols[i] = std::to_string(i);
    }

    // Stable sort by decreasing measure: equal measures keep user order, so
    // lexicographic tie-breaks reproduce the user's digit order.
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return measures[a] > measures[b]; });

    measures_.reserve(n);
    symbols_.reserve(n);
    user_position_.reserve(n);
    log_measures_.reserve(n);
    for (std::size_t pos : order) {
        measures_.push_back(std::move(measures[pos]));
        symbols_.push_back(std::move(symbols[pos]));
        user_position_.push_back(pos);
        log_measures_.push_back(log_rational(measures_.back()));
    }
}

bool DigitSystem::single_char_symbols() const {
    return std::all_of(symbols_.begin(), symbols_.end(),
                       [](const std::string& s) { return s.size() == 1; });
}

Digit DigitSystem::internal_index(std::size_t user_pos) const {
    for (std::size_t d = 0; d < user_position_.size(); ++d)
        if (user_position_[d] == user_pos) return static_cast<Digit>(d);
    throw DigitOutOfRange("user position " + std::to_string(user_pos));
}

std::string DigitSystem::describe() const {
    std::ostringstream out;
    for (std::size_t d = 0; d < measures_.size(); ++d) {
        if (d) out << ",";
        out << to_string(measures_[d]);
    }
    return out.str();
}

DigitSystem make_system(std::vector<Rational> measures, std::vector<std::string> symbols) {
    return DigitSystem(std::move(measures), std::move(symbols));
}

MeasureKey cylinder_measure(const DigitSystem& sys, const Word& w) {
    MeasureKey product = 1;
    for (Digit d : w) {
        if (d >= sys.digit_count()) throw DigitOutOfRange(std::to_string(int(d)));
        product *= sys.measure(d);
    }
    return product;
}

double log_measure(const DigitSystem& sys, const CountVector& counts) {
    if (counts.size() != static_cast<std::size_t>(sys.digit_count()))
        throw DigitOutOfRange("count vector has length " + std::to_string(counts.size()));
    double sum = 0.0;
    for (std::size_t d = 0; d < counts.size(); ++d) {
        if (counts[d] < 0) throw NegativeCount(std::to_string(counts[d]));
        sum += static_cast<double>(counts[d]) * sys.log_measure(static_cast<Digit>(d));
    }
    return sum;
}

CountVector digit_counts(const DigitSystem& sys, const Word& w) {
    CountVector counts(sys.digit_count(), 0);
    for (Digit d : w) {
        if (d >= sys.digit_count()) throw DigitOutOfRange(std::to_string(int(d)));
        ++counts[d];
    }
    return counts;
}

std::uint64_t occurrences_in(const Word& w, const Word& pattern) {
    if (pattern.empty() || pattern.size() > w.size()) return 0;
    std::uint64_t n = 0;
    for (std::size_t i = 0; i + pattern.size() <= w.size(); ++i)
        if (std::equal(pattern.begin(), pattern.end(), w.begin() + i)) ++n;
    return n;
}

std::string format_word(const DigitSystem& sys, const Word& w) {
    std::string out;
    const bool compact = sys.single_char_symbols();
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (!compact && i) out += ' ';
        out += sys.symbol(w[i]);
    }
    return out;
}

}  // namespace gls
