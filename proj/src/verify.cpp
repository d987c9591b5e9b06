#include "gls/verify.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

#include "gls/asymptotics.hpp"
#include "gls/enumerator.hpp"
#include "gls/normality_stats.hpp"
#include "gls/simplex_sums.hpp"

namespace gls {

namespace {

using asymptotics::laplace_analysis;
using asymptotics::multinomial_entropy;

std::string fmt(double v) {
    std::ostringstream out;
    out.precision(6);
    out << v;
    return out.str();
}

Word random_word(const DigitSystem& sys, std::mt19937_64& rng, std::size_t max_len) {
    std::uniform_int_distribution<std::size_t> len(1, max_len);
    std::uniform_int_distribution<int> digit(0, sys.digit_count() - 1);
    Word w(len(rng));
    for (Digit& d : w) d = static_cast<Digit>(digit(rng));
    return w;
}

// All non-empty words of length <= max_len with measure >= eps, sorted by
// the enumeration key. Small-scale ground truth for the stream.
std::vector<Word> brute_force_words(const DigitSystem& sys, const Rational& eps,
                                    std::size_t max_len) {
    std::vector<Word> words;
    Word w;
    auto expand = [&](auto&& self, const Rational& measure) -> void {
        if (!w.empty() && measure >= eps) words.push_back(w);
        if (w.size() == max_len) return;
        for (int d = 0; d < sys.digit_count(); ++d) {
            const Rational next = measure * sys.measure(static_cast<Digit>(d));
            if (next < eps) continue;
            w.push_back(static_cast<Digit>(d));
            self(self, next);
            w.pop_back();
        }
    };
    expand(expand, Rational(1));
    std::stable_sort(words.begin(), words.end(), [&](const Word& a, const Word& b) {
        const Rational ma = cylinder_measure(sys, a), mb = cylinder_measure(sys, b);
        if (ma != mb) return ma > mb;
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    });
    return words;
}

CheckResult check_measure_multiplicativity(const DigitSystem& sys, std::mt19937_64& rng) {
    for (int trial = 0; trial < 200; ++trial) {
        Word u = random_word(sys, rng, 6), v = random_word(sys, rng, 6);
        Word uv = u;
        uv.insert(uv.end(), v.begin(), v.end());
        if (cylinder_measure(sys, uv) != cylinder_measure(sys, u) * cylinder_measure(sys, v))
            return {"measure-multiplicativity", false, format_word(sys, uv)};
    }
    return {"measure-multiplicativity", true, "200 random word pairs"};
}

CheckResult check_log_measure(const DigitSystem& sys, std::mt19937_64& rng) {
    double worst = 0.0;
    for (int trial = 0; trial < 200; ++trial) {
        const Word w = random_word(sys, rng, 12);
        const double via_counts = log_measure(sys, digit_counts(sys, w));
        const double via_product = log_rational(cylinder_measure(sys, w));
        worst = std::max(worst, std::abs(via_counts / via_product - 1.0));
    }
    return {"log-measure-consistency", worst <= 1e-12, "max rel dev " + fmt(worst)};
}

CheckResult check_enumeration(const DigitSystem& sys) {
    // Threshold chosen so the brute-force word pool stays small.
    std::size_t max_len = 1;
    double pool = sys.digit_count();
    while (pool * sys.digit_count() < 2e5 && max_len < 14) {
        pool *= sys.digit_count();
        ++max_len;
    }
    Rational eps = 1;
    for (std::size_t i = 0; i < max_len; ++i) eps *= sys.measure(0);
    const std::vector<Word> expected = brute_force_words(sys, eps, max_len);

    WordStream stream(sys);
    Rational previous = 1;
    for (std::size_t i = 0; i < expected.size(); ++i) {
        const Rational measure = stream.peek_measure();
        if (measure < eps)
            return {"enumeration-completeness", false,
                    "stream ran out after " + std::to_string(i) + " words"};
        if (measure > previous)
            return {"enumeration-completeness", false, "measures not non-increasing"};
        previous = measure;
        if (stream.next() != expected[i])
            return {"enumeration-completeness", false, "order mismatch at word " + std::to_string(i)};
    }
    if (stream.peek_measure() >= eps)
        return {"enumeration-completeness", false, "stream has extra words above threshold"};
    return {"enumeration-completeness", true,
            std::to_string(expected.size()) + " words vs brute force"};
}

CheckResult check_determinism(const DigitSystem& sys) {
    const auto a = enumerate_prefix(sys, 2000);
    const auto b = enumerate_prefix(sys, 2000);
    return {"enumeration-determinism", a == b, "2000 words, two runs"};
}

CheckResult check_census(const DigitSystem& sys) {
    const std::uint64_t N = 4096;
    const std::vector<Digit> prefix = digit_prefix(sys, N);
    for (int k = 1; k <= 3; ++k) {
        const BlockCensus census = block_counts(sys, prefix, k);
        if (census.total() != N - static_cast<std::uint64_t>(k) + 1)
            return {"census-consistency", false, "k=" + std::to_string(k)};
    }
    return {"census-consistency", true, "window totals for k=1..3 at N=4096"};
}

CheckResult check_simplex_identity(const DigitSystem& sys, std::mt19937_64& rng) {
    std::vector<Rational> eps_list{Rational(1, 64), Rational(3, 128), Rational(1, 1024)};
    std::vector<Word> queries;
    for (int i = 0; i < 3; ++i) queries.push_back(random_word(sys, rng, 3));
    const auto rows = threshold_scan(sys, eps_list, queries);
    for (const auto& row : rows) {
        const auto S = simplex::digit_sum(sys, row.eps);
        const auto Ssharp = simplex::word_sum(sys, row.eps);
        if (BigInt(row.digit_total) != S.value || BigInt(row.word_total) != Ssharp.value - 1)
            return {"simplex-identity", false, "totals at eps=" + to_string(row.eps)};
        for (std::size_t q = 0; q < queries.size(); ++q) {
            const auto occ = simplex::occurrence_sum(sys, row.eps, queries[q]);
            if (BigInt(row.occurrences[q]) != occ.value)
                return {"simplex-identity", false,
                        "occurrences of " + format_word(sys, queries[q]) + " at eps=" +
                            to_string(row.eps)};
        }
    }
    return {"simplex-identity", true, "3 thresholds x (totals + 3 query words)"};
}

CheckResult check_dual_path(const DigitSystem& sys) {
    double worst = 0.0;
    for (int k = 2; k <= 20; k += 3) {
        const Rational eps(1, BigInt(1) << k);
        for (const auto& sum : {simplex::digit_sum(sys, eps), simplex::word_sum(sys, eps)}) {
            if (sum.value == 0) continue;
            const double rel =
                std::abs(sum.float_value / sum.value.convert_to<double>() - 1.0);
            worst = std::max(worst, rel);
        }
    }
    return {"dual-evaluation", worst <= 1e-9, "max rel dev " + fmt(worst)};
}

CheckResult check_maximizer(const DigitSystem& sys, std::mt19937_64& rng) {
    std::uniform_real_distribution<double> pick(3.0, 30.0);
    const int D = sys.digit_count();
    for (int trial = 0; trial < 10; ++trial) {
        const double log_eps = -pick(rng);
        const auto analysis = laplace_analysis(sys, log_eps);
        if (std::abs(analysis.value_at_max / (-log_eps) - 1.0) > 1e-9)
            return {"maximizer-identity", false, "objective mismatch at log eps " + fmt(log_eps)};

        // Directional first derivatives parallel to the surface vanish.
        std::uniform_real_distribution<double> dir(-1.0, 1.0);
        double g_norm2 = 0.0;
        std::vector<double> g(D);
        for (int i = 0; i < D; ++i) {
            g[i] = sys.log_measure(static_cast<Digit>(i));
            g_norm2 += g[i] * g[i];
        }
        for (int k = 0; k < 50; ++k) {
            std::vector<double> a(D);
            double dot = 0.0, norm = 0.0;
            for (int i = 0; i < D; ++i) {
                a[i] = dir(rng);
                dot += a[i] * g[i];
            }
            for (int i = 0; i < D; ++i) {
                a[i] -= dot / g_norm2 * g[i];
                norm += a[i] * a[i];
            }
            norm = std::sqrt(norm);
            if (norm < 1e-9) continue;
            const double h = 1e-4;
            std::vector<double> plus(D), minus(D);
            for (int i = 0; i < D; ++i) {
                plus[i] = analysis.maximizer[i] + h * a[i] / norm;
                minus[i] = analysis.maximizer[i] - h * a[i] / norm;
            }
            const double derivative =
                (multinomial_entropy(plus) - multinomial_entropy(minus)) / (2.0 * h);
            if (std::abs(derivative) > 1e-7)
                return {"maximizer-identity", false, "first derivative " + fmt(derivative)};
        }
    }
    return {"maximizer-identity", true, "10 thresholds x 50 directions"};
}

CheckResult check_curvature(const DigitSystem& sys) {
    const auto coarse = laplace_analysis(sys, Rational(1, 4096));
    const auto fine = laplace_analysis(sys, Rational(1, BigInt(1) << 24));
    const int dim = coarse.dim;

    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j) {
            const double a = coarse.curvature[i * dim + j];
            if (std::abs(a - coarse.curvature[j * dim + i]) > 1e-12 * (1.0 + std::abs(a)))
                return {"curvature", false, "not symmetric"};
            if (std::abs(a - fine.curvature[i * dim + j]) > 1e-6)
                return {"curvature", false, "threshold-dependent entry"};
        }
    for (double l : coarse.eigenvalues)
        if (!(l > 0.0)) return {"curvature", false, "non-positive eigenvalue " + fmt(l)};

    // Central finite differences of the objective, tail coordinates.
    const double h = 1e-3 * coarse.scale;
    const int D = sys.digit_count();
    auto objective = [&](const std::vector<double>& tail) {
        std::vector<double> x(D);
        double tail_log = 0.0;
        for (int i = 1; i < D; ++i) {
            x[i] = tail[i - 1];
            tail_log += x[i] * sys.log_measure(static_cast<Digit>(i));
        }
        x[0] = (coarse.log_eps - tail_log) / sys.log_measure(0);
        return multinomial_entropy(x);
    };
    std::vector<double> base(coarse.maximizer.begin() + 1, coarse.maximizer.end());
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j) {
            auto t = base;
            t[i] += h; t[j] += h; const double pp = objective(t);
            t = base; t[i] += h; t[j] -= h; const double pm = objective(t);
            t = base; t[i] -= h; t[j] += h; const double mp = objective(t);
            t = base; t[i] -= h; t[j] -= h; const double mm = objective(t);
            const double fd = (pp - pm - mp + mm) / (4.0 * h * h);
            const double closed = coarse.curvature[i * dim + j] / coarse.log_eps;
            if (std::abs(fd - closed) > 1e-5 * std::max(1.0, std::abs(closed)))
                return {"curvature", false,
                        "finite differences disagree: " + fmt(fd) + " vs " + fmt(closed)};
        }
    return {"curvature", true, "symmetric, positive spectrum, matches finite differences"};
}

CheckResult check_concavity(const DigitSystem& sys) {
    const auto report = asymptotics::concavity_check(sys, Rational(1, 256), 2000);
    return {"tangent-concavity", report.max_value < 0.0,
            "max sampled second derivative " + fmt(report.max_value)};
}

CheckResult check_gaussian() {
    const auto at4 = asymptotics::gaussian_sum_check(1e4, 1.0);
    const auto at6 = asymptotics::gaussian_sum_check(1e6, 1.0);
    const bool ok = at4.rel_error < 1e-2 && at6.rel_error < 1e-3;
    return {"gaussian-sum", ok, "rel errors " + fmt(at4.rel_error) + ", " + fmt(at6.rel_error)};
}

CheckResult check_surface_growth(const DigitSystem& sys) {
    std::vector<Rational> eps_list;
    for (int n = 8; n <= 30; n += 2) eps_list.emplace_back(1, BigInt(1) << n);
    const auto rows = asymptotics::surface_growth_scan(sys, eps_list);
    double lo = rows.front().digit_sum_scaled, hi = lo;
    double lo_sharp = rows.front().word_sum_scaled, hi_sharp = lo_sharp;
    for (const auto& row : rows) {
        lo = std::min(lo, row.digit_sum_scaled);
        hi = std::max(hi, row.digit_sum_scaled);
        lo_sharp = std::min(lo_sharp, row.word_sum_scaled);
        hi_sharp = std::max(hi_sharp, row.word_sum_scaled);
    }
    const bool ok = lo > 0.0 && lo_sharp > 0.0 && hi / lo <= 8.0 && hi_sharp / lo_sharp <= 8.0;
    return {"surface-growth-band", ok,
            "digit " + fmt(lo) + ".." + fmt(hi) + ", word " + fmt(lo_sharp) + ".." + fmt(hi_sharp)};
}

CheckResult check_sandwich(const DigitSystem& sys) {
    std::vector<Rational> eps_list;
    for (int n = 8; n <= 30; n += 2) eps_list.emplace_back(1, BigInt(1) << n);
    const auto rows = asymptotics::sandwich_scan(sys, eps_list);
    for (const auto& row : rows) {
        if (!row.valid) continue;
        for (double r : {row.digit_ratio_lower, row.digit_ratio_upper, row.word_ratio_lower,
                         row.word_ratio_upper}) {
            if (!(r >= 1.0 / 32.0 && r <= 32.0))
                return {"sandwich-band", false,
                        "ratio " + fmt(r) + " at eps=" + to_string(row.eps)};
        }
    }
    return {"sandwich-band", true, "all ratios in [1/32, 32]"};
}

}  // namespace

CheckResult cauchy_schwarz_check(std::uint64_t samples, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> size(1, 8);
    std::uniform_real_distribution<double> p_dist(-2.0, 2.0), q_dist(0.05, 3.0);
    for (std::uint64_t s = 0; s < samples; ++s) {
        const int n = size(rng);
        double p_sum = 0.0, q_sum = 0.0, rhs = 0.0;
        std::vector<double> p(n), q(n);
        for (int i = 0; i < n; ++i) {
            p[i] = p_dist(rng);
            q[i] = q_dist(rng);
            p_sum += p[i];
            q_sum += q[i];
            rhs += p[i] * p[i] / q[i];
        }
        const double lhs = p_sum * p_sum / q_sum;
        if (lhs > rhs + 1e-12 * std::max(1.0, rhs))
            return {"cauchy-schwarz", false, "violated at sample " + std::to_string(s)};

        // Equality case: p proportional to q (exact halving keeps floats exact).
        double e_lhs_num = 0.0, e_rhs = 0.0;
        for (int i = 0; i < n; ++i) {
            e_lhs_num += q[i] / 2;
            e_rhs += (q[i] / 2) * (q[i] / 2) / q[i];
        }
        const double e_lhs = e_lhs_num * e_lhs_num / q_sum;
        if (std::abs(e_lhs - e_rhs) > 1e-12 * std::max(1.0, e_rhs))
            return {"cauchy-schwarz", false, "equality case broken at sample " + std::to_string(s)};
    }
    return {"cauchy-schwarz", true, std::to_string(samples) + " draws"};
}

CheckResult gamma_ratio_check(std::uint64_t samples, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> x_dist(1.0 + 1e-3, 50.0), gap(1e-3, 100.0),
        unit(0.0, 1.0);
    for (std::uint64_t s = 0; s < samples; ++s) {
        const double x = x_dist(rng);
        const double y = x + gap(rng);
        const double delta = unit(rng) * std::min(1.0, x - 1.0) * 0.999;
        const double mid = std::lgamma(y) - std::lgamma(x);
        const double low = std::lgamma(y - delta) - std::lgamma(x - delta);
        const double high = std::lgamma(y + delta) - std::lgamma(x + delta);
        if (low > mid + 1e-9 || mid > high + 1e-9)
            return {"gamma-ratio", false, "monotone chain violated at sample " + std::to_string(s)};
        if (x + delta >= 2.0 * x || 2.0 * (x - delta) <= x)
            return {"gamma-ratio", false, "x +/- delta leaves [x/2, 2x]"};
    }
    return {"gamma-ratio", true, std::to_string(samples) + " draws, constant 1"};
}

std::vector<CheckResult> run_verification(const DigitSystem& sys, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<CheckResult> results;
    results.push_back(check_measure_multiplicativity(sys, rng));
    results.push_back(check_log_measure(sys, rng));
    results.push_back(check_enumeration(sys));
    results.push_back(check_determinism(sys));
    results.push_back(check_census(sys));
    results.push_back(check_simplex_identity(sys, rng));
    results.push_back(check_dual_path(sys));
    results.push_back(check_maximizer(sys, rng));
    results.push_back(check_curvature(sys));
    results.push_back(check_concavity(sys));
    results.push_back(cauchy_schwarz_check(2000, seed + 1));
    results.push_back(gamma_ratio_check(2000, seed + 2));
    results.push_back(check_gaussian());
    results.push_back(check_surface_growth(sys));
    results.push_back(check_sandwich(sys));
    return results;
}

bool all_passed(const std::vector<CheckResult>& results) {
    return std::all_of(results.begin(), results.end(),
                       [](const CheckResult& r) { return r.passed; });
}

}  // namespace gls
