// Independent oracles used by the test suites. These deliberately avoid the
// production code paths they check: enumeration is done by exhaustive
// generation + sort or by a word-level priority queue, multinomials by
// big-integer factorials, censuses by direct window extraction.

#pragma once

#include <algorithm>
#include <map>
#include <queue>
#include <random>
#include <vector>

#include "gls/fibred_system.hpp"

namespace gls::oracle {

// All non-empty words of length <= max_len with measure >= eps, sorted by
// (measure desc, length asc, lex asc) with exact comparisons.
inline std::vector<Word> brute_force_words(const DigitSystem& sys, const Rational& eps,
                                           std::size_t max_len) {
    std::vector<Word> words;
    Word w;
    auto expand = [&](auto&& self) -> void {
        if (w.size() == max_len) return;
        for (int d = 0; d < sys.digit_count(); ++d) {
            w.push_back(static_cast<Digit>(d));
            if (cylinder_measure(sys, w) >= eps) {
                words.push_back(w);
                self(self);
            }
            w.pop_back();
        }
    };
    expand(expand);
    std::stable_sort(words.begin(), words.end(), [&](const Word& a, const Word& b) {
        const Rational ma = cylinder_measure(sys, a), mb = cylinder_measure(sys, b);
        if (ma != mb) return ma > mb;
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    });
    return words;
}

// Reference enumerator: a word-level best-first queue where a word enters
// the frontier when its one-shorter prefix is emitted.
inline std::vector<Word> reference_enumeration(const DigitSystem& sys, std::size_t n) {
    struct Entry {
        Rational measure;
        Word word;
    };
    const auto after = [](const Entry& a, const Entry& b) {
        if (a.measure != b.measure) return a.measure < b.measure;
        if (a.word.size() != b.word.size()) return a.word.size() > b.word.size();
        return a.word > b.word;
    };
    std::priority_queue<Entry, std::vector<Entry>, decltype(after)> frontier(after);
    for (int d = 0; d < sys.digit_count(); ++d)
        frontier.push({sys.measure(static_cast<Digit>(d)), Word{static_cast<Digit>(d)}});

    std::vector<Word> out;
    out.reserve(n);
    while (out.size() < n) {
        Entry top = frontier.top();
        frontier.pop();
        for (int d = 0; d < sys.digit_count(); ++d) {
            Entry child{top.measure * sys.measure(static_cast<Digit>(d)), top.word};
            child.word.push_back(static_cast<Digit>(d));
            frontier.push(std::move(child));
        }
        out.push_back(std::move(top.word));
    }
    return out;
}

inline std::map<Word, std::uint64_t> naive_census(const std::vector<Digit>& prefix,
                                                  std::size_t k) {
    std::map<Word, std::uint64_t> counts;
    if (prefix.size() < k) return counts;
    for (std::size_t i = 0; i + k <= prefix.size(); ++i)
        ++counts[Word(prefix.begin() + i, prefix.begin() + i + k)];
    return counts;
}

inline BigInt factorial(std::int64_t n) {
    BigInt f = 1;
    for (std::int64_t i = 2; i <= n; ++i) f *= i;
    return f;
}

// Multinomial via plain factorials, independent of the incremental route.
inline BigInt factorial_multinomial(const CountVector& m) {
    std::int64_t total = 0;
    for (std::int64_t c : m) total += c;
    BigInt result = factorial(total);
    for (std::int64_t c : m) result /= factorial(c);
    return result;
}

// Random stochastic vector of small rationals (weights 1..12 over their sum).
inline DigitSystem random_system(std::mt19937_64& rng, int digits) {
    std::uniform_int_distribution<int> weight(1, 12);
    while (true) {
        std::vector<int> w(digits);
        BigInt total = 0;
        for (int& v : w) {
            v = weight(rng);
            total += v;
        }
        if (total == w[0]) continue;  // degenerate single-mass vector
        std::vector<Rational> measures;
        measures.reserve(digits);
        for (int v : w) measures.emplace_back(BigInt(v), total);
        return DigitSystem(std::move(measures));
    }
}

// Random rational threshold in [2^-max_exp, 1/2).
inline Rational random_eps(std::mt19937_64& rng, int max_exp) {
    std::uniform_int_distribution<int> exponent(2, max_exp);
    const int k = exponent(rng);
    std::uniform_int_distribution<std::uint64_t> numerator(1u << 17, (1u << 18) - 1);
    return Rational(BigInt(numerator(rng)), BigInt(1) << (17 + k));
}

inline Word random_word(const DigitSystem& sys, std::mt19937_64& rng, std::size_t max_len) {
    std::uniform_int_distribution<std::size_t> len(1, max_len);
    std::uniform_int_distribution<int> digit(0, sys.digit_count() - 1);
    Word w(len(rng));
    for (Digit& d : w) d = static_cast<Digit>(digit(rng));
    return w;
}

// Entropy objective in tail coordinates with the closing first coordinate,
// for finite-difference derivatives around a given point.
inline double tail_objective(const DigitSystem& sys, double log_eps,
                             const std::vector<double>& tail) {
    const int D = sys.digit_count();
    std::vector<double> x(D);
    double tail_log = 0.0;
    for (int i = 1; i < D; ++i) {
        x[i] = tail[i - 1];
        tail_log += x[i] * sys.log_measure(static_cast<Digit>(i));
    }
    x[0] = (log_eps - tail_log) / sys.log_measure(0);
    double total = 0.0, entropy = 0.0;
    for (double v : x) {
        total += v;
        if (v > 0.0) entropy -= v * std::log(v);
    }
    return (total > 0.0 ? total * std::log(total) : 0.0) + entropy;
}

// Central finite-difference curvature matrix log(eps) * Hess at the point
// `center` (tail coordinates), row-major.
inline std::vector<double> fd_curvature(const DigitSystem& sys, double log_eps,
                                        const std::vector<double>& center, double h) {
    const int dim = sys.digit_count() - 1;
    std::vector<double> matrix(dim * dim);
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j) {
            auto t = center;
            t[i] += h; t[j] += h; const double pp = tail_objective(sys, log_eps, t);
            t = center; t[i] += h; t[j] -= h; const double pm = tail_objective(sys, log_eps, t);
            t = center; t[i] -= h; t[j] += h; const double mp = tail_objective(sys, log_eps, t);
            t = center; t[i] -= h; t[j] -= h; const double mm = tail_objective(sys, log_eps, t);
            matrix[i * dim + j] = log_eps * (pp - pm - mp + mm) / (4.0 * h * h);
        }
    return matrix;
}

// Gradient of the tail objective in closed form: differentiating
// T log T - X1 log X1 - sum x_i log x_i with T and X1 linear in the tail.
inline std::vector<double> tail_gradient(const DigitSystem& sys, double log_eps,
                                         const std::vector<double>& tail) {
    const int D = sys.digit_count();
    double x1 = log_eps / sys.log_measure(0), total = 0.0;
    for (int i = 1; i < D; ++i) {
        x1 -= tail[i - 1] * sys.log_measure(static_cast<Digit>(i)) / sys.log_measure(0);
        total += tail[i - 1];
    }
    total += x1;
    std::vector<double> grad(D - 1);
    for (int i = 1; i < D; ++i) {
        const double r = sys.log_measure(static_cast<Digit>(i)) / sys.log_measure(0);
        grad[i - 1] = (1.0 - r) * std::log(total) + r * std::log(x1) - std::log(tail[i - 1]);
    }
    return grad;
}

// High-accuracy curvature: central differences of the closed-form gradient.
inline std::vector<double> fd_curvature_from_gradient(const DigitSystem& sys, double log_eps,
                                                      const std::vector<double>& center,
                                                      double h) {
    const int dim = sys.digit_count() - 1;
    std::vector<double> matrix(dim * dim);
    for (int j = 0; j < dim; ++j) {
        auto plus = center, minus = center;
        plus[j] += h;
        minus[j] -= h;
        const auto gp = tail_gradient(sys, log_eps, plus);
        const auto gm = tail_gradient(sys, log_eps, minus);
        for (int i = 0; i < dim; ++i)
            matrix[i * dim + j] = log_eps * (gp[i] - gm[i]) / (2.0 * h);
    }
    return matrix;
}

}  // namespace gls::oracle
