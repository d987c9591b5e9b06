// Finite-digit product-measure systems (generalized Lüroth series).
//
// A DigitSystem is a finite alphabet of digits with exact positive rational
// measures summing to 1. Cylinder measures of words are exact products of
// the per-digit measures, which is what makes every ordering and threshold
// decision in the library exact.

#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "gls/errors.hpp"
#include "gls/rational.hpp"

namespace gls {

using Digit = std::uint8_t;
using Word = std::vector<Digit>;
using CountVector = std::vector<std::int64_t>;

// Exact cylinder measure of a word; totally ordered without floating point.
using MeasureKey = Rational;

class DigitSystem {
  public:
    // Validates and sorts the measures by decreasing value (stable, so digits
    // with equal measure keep their user order). Index 0 is always the digit
    // of largest measure.
    explicit DigitSystem(std::vector<Rational> measures,
                         std::vector<std::string> symbols = {});

    int digit_count() const { return static_cast<int>(measures_.size()); }
    const Rational& measure(Digit d) const { return measures_.at(d); }
    double log_measure(Digit d) const { return log_measures_.at(d); }
    std::span<const Rational> measures() const { return measures_; }
    std::span<const double> log_measures() const { return log_measures_; }

    // User-facing symbol of an internal digit index.
    const std::string& symbol(Digit d) const { return symbols_.at(d); }
    bool single_char_symbols() const;

    // Position the digit occupied in the user-supplied measure list.
    std::size_t user_position(Digit d) const { return user_position_.at(d); }

    // Internal index assigned to the digit at a user position.
    Digit internal_index(std::size_t user_pos) const;

    // "1/2,1/4,1/4" in internal (sorted) order; used in report metadata.
    std::string describe() const;

  private:
    std::vector<Rational> measures_;      // sorted, decreasing
    std::vector<double> log_measures_;    // cached log(measure)
    std::vector<std::string> symbols_;    // aligned with internal indices
    std::vector<std::size_t> user_position_;
};

DigitSystem make_system(std::vector<Rational> measures,
                        std::vector<std::string> symbols = {});

// Exact product of the measures of the word's digits; empty word -> 1.
MeasureKey cylinder_measure(const DigitSystem& sys, const Word& w);

// Sum of count[d] * log(measure d); the log of the cylinder measure of any
// word with those digit counts.
double log_measure(const DigitSystem& sys, const CountVector& counts);

// Digit counts of a word, as a length-D vector.
CountVector digit_counts(const DigitSystem& sys, const Word& w);

// Overlapping occurrences of `pattern` as a contiguous subword of `w`.
std::uint64_t occurrences_in(const Word& w, const Word& pattern);

std::string format_word(const DigitSystem& sys, const Word& w);

}  // namespace gls
