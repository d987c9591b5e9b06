// Error types raised by the library. Each condition gets its own type so
// callers (and tests) can distinguish them without string matching.

#pragma once

#include <stdexcept>
#include <string>

namespace gls {

struct SumNotOne : std::invalid_argument {
    explicit SumNotOne(const std::string& detail)
        : std::invalid_argument("digit measures must sum to 1 exactly: " + detail) {}
};

struct TooFewDigits : std::invalid_argument {
    explicit TooFewDigits(const std::string& detail)
        : std::invalid_argument("a digit system needs at least 2 digits: " + detail) {}
};

struct NonPositiveMeasure : std::invalid_argument {
    explicit NonPositiveMeasure(const std::string& detail)
        : std::invalid_argument("digit measures must be positive: " + detail) {}
};

struct DigitOutOfRange : std::out_of_range {
    explicit DigitOutOfRange(const std::string& detail)
        : std::out_of_range("digit index out of range: " + detail) {}
};

struct NegativeCount : std::invalid_argument {
    explicit NegativeCount(const std::string& detail)
        : std::invalid_argument("count vectors must be non-negative: " + detail) {}
};

struct EpsilonOutOfRange : std::invalid_argument {
    explicit EpsilonOutOfRange(const std::string& detail)
        : std::invalid_argument("threshold out of range: " + detail) {}
};

struct OffSegment : std::domain_error {
    explicit OffSegment(const std::string& detail)
        : std::domain_error("lattice tail lies off the level surface: " + detail) {}
};

struct BudgetExceeded : std::length_error {
    explicit BudgetExceeded(const std::string& detail)
        : std::length_error("report row budget exceeded: " + detail) {}
};

struct BoxOutsideDomain : std::domain_error {
    explicit BoxOutsideDomain(const std::string& detail)
        : std::domain_error("expansion box leaves the positive orthant: " + detail) {}
};

}  // namespace gls
