#include "gls/simplex_sums.hpp"

#include <algorithm>
#include <cmath>

namespace gls {
namespace simplex {

namespace {

void check_eps(const Rational& eps) {
    if (eps <= 0 || eps > 1) throw EpsilonOutOfRange(to_string(eps));
}

// Depth-first walk of T_eps. At each node `coefficient` is the exact
// multinomial of the partial count vector, maintained by the Pascal-style
// update multinomial(m + e_d) = multinomial(m) * (total+1) / (m_d + 1).
template <typename Visit>
void walk(std::span<const Rational> measures, const Rational& eps, CountVector& m,
          std::size_t digit, Rational& product, BigInt& coefficient, std::int64_t total,
          Visit&& visit) {
    if (digit == measures.size()) {
        visit(m, coefficient, total);
        return;
    }
    walk(measures, eps, m, digit + 1, product, coefficient, total, visit);
    Rational saved_product = product;
    BigInt saved_coefficient = coefficient;
    const std::int64_t saved_count = m[digit];
    while (true) {
        product *= measures[digit];
        if (product < eps) break;
        ++m[digit];
        ++total;
        coefficient = coefficient * total / (m[digit]);
        walk(measures, eps, m, digit + 1, product, coefficient, total, visit);
    }
    m[digit] = saved_count;
    product = std::move(saved_product);
    coefficient = std::move(saved_coefficient);
}

template <typename Visit>
void for_each_point(std::span<const Rational> measures, const Rational& eps, Visit&& visit) {
    check_eps(eps);
    for (const Rational& lambda : measures)
        if (lambda <= 0 || lambda >= 1)
            throw NonPositiveMeasure("lattice measures must lie in (0,1)");
    CountVector m(measures.size(), 0);
    Rational product = 1;
    BigInt coefficient = 1;
    walk(measures, eps, m, 0, product, coefficient, 0, visit);
}

double log_sum_exp(std::vector<double>& logs) {
    if (logs.empty()) return -std::numeric_limits<double>::infinity();
    const double peak = *std::max_element(logs.begin(), logs.end());
    if (!std::isfinite(peak)) return peak;
    double acc = 0.0;
    for (double v : logs) acc += std::exp(v - peak);
    return peak + std::log(acc);
}

SumResult weighted_sum(std::span<const Rational> measures, const Rational& eps,
                       bool digit_weight, Eval mode) {
    SumResult result{BigInt(0), 0.0, 0};
    std::vector<double> logs;
    const bool exact = mode == Eval::exact_and_float;
    for_each_point(measures, eps,
                   [&](const CountVector& m, const BigInt& coefficient, std::int64_t total) {
                       ++result.lattice_count;
                       if (digit_weight && total == 0) return;  // origin weighs 0
                       if (exact)
                           result.value += digit_weight ? coefficient * total : coefficient;
                       double log_term = std::lgamma(static_cast<double>(total) + 1.0);
                       for (std::int64_t c : m) log_term -= std::lgamma(static_cast<double>(c) + 1.0);
                       if (digit_weight) log_term += std::log(static_cast<double>(total));
                       logs.push_back(log_term);
                   });
    result.float_value = std::exp(log_sum_exp(logs));
    return result;
}

}  // namespace

std::vector<CountVector> lattice_points(std::span<const Rational> measures,
                                        const Rational& eps) {
    std::vector<CountVector> points;
    for_each_point(measures, eps,
                   [&](const CountVector& m, const BigInt&, std::int64_t) { points.push_back(m); });
    return points;
}

SumResult digit_sum(std::span<const Rational> measures, const Rational& eps, Eval mode) {
    return weighted_sum(measures, eps, true, mode);
}

SumResult word_sum(std::span<const Rational> measures, const Rational& eps, Eval mode) {
    return weighted_sum(measures, eps, false, mode);
}

std::vector<CountVector> lattice_points(const DigitSystem& sys, const Rational& eps) {
    return lattice_points(sys.measures(), eps);
}

SumResult digit_sum(const DigitSystem& sys, const Rational& eps, Eval mode) {
    return digit_sum(sys.measures(), eps, mode);
}

SumResult word_sum(const DigitSystem& sys, const Rational& eps, Eval mode) {
    return word_sum(sys.measures(), eps, mode);
}

SumResult occurrence_sum(const DigitSystem& sys, const Rational& eps, const Word& s,
                         Eval mode) {
    check_eps(eps);
    if (s.empty()) throw std::invalid_argument("query word must be non-empty");
    const Rational shifted = eps / cylinder_measure(sys, s);
    if (shifted > 1) return SumResult{BigInt(0), 0.0, 0};
    const SumResult digits = digit_sum(sys, shifted, mode);
    const SumResult words = word_sum(sys, shifted, mode);
    return SumResult{digits.value + words.value, digits.float_value + words.float_value,
                     words.lattice_count};
}

BigInt multinomial(const CountVector& m) {
    BigInt coefficient = 1;
    std::int64_t total = 0;
    for (std::int64_t c : m) {
        if (c < 0) throw NegativeCount(std::to_string(c));
        for (std::int64_t i = 1; i <= c; ++i) {
            ++total;
            coefficient = coefficient * total / i;
        }
    }
    return coefficient;
}

std::vector<GrowthRow> growth_scan(const DigitSystem& sys,
                                   std::span<const Rational> eps_list,
                                   const Rational& exact_floor) {
    std::vector<GrowthRow> rows;
    rows.reserve(eps_list.size());
    for (const Rational& eps : eps_list) {
        const Eval mode = eps >= exact_floor ? Eval::exact_and_float : Eval::float_only;
        const SumResult S = digit_sum(sys, eps, mode);
        const SumResult Ssharp = word_sum(sys, eps, mode);
        const double s_val = mode == Eval::exact_and_float ? S.value.convert_to<double>()
                                                           : S.float_value;
        const double sharp_val = mode == Eval::exact_and_float
                                     ? Ssharp.value.convert_to<double>()
                                     : Ssharp.float_value;
        const double log_eps = log_rational(eps);
        const double eps_d = to_double(eps);
        GrowthRow row;
        row.eps = eps;
        row.digit_sum_scaled = eps == 1 ? 0.0 : s_val * eps_d / std::abs(log_eps);
        row.word_sum_scaled = sharp_val * eps_d;
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace simplex
}  // namespace gls
