#include "gls/asymptotics.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

#include "gls/simplex_sums.hpp"

namespace gls {
namespace asymptotics {

namespace {

double xlogx(double x) { return x > 0.0 ? x * std::log(x) : 0.0; }

double log_sum_exp(const std::vector<double>& logs) {
    if (logs.empty()) return -std::numeric_limits<double>::infinity();
    const double peak = *std::max_element(logs.begin(), logs.end());
    if (!std::isfinite(peak)) return peak;
    double acc = 0.0;
    for (double v : logs) acc += std::exp(v - peak);
    return peak + std::log(acc);
}

// First coordinate closing the level equation, given the tail log-measure.
double close_coordinate(const DigitSystem& sys, double log_eps, double tail_log_measure) {
    const double M = (log_eps - tail_log_measure) / sys.log_measure(0);
    // Exact membership is decided by the caller; absorb float fuzz at 0.
    return M < 0.0 && M > -1e-9 * (1.0 + std::abs(log_eps)) ? 0.0 : M;
}

// Enumerates tail count vectors (indices 1..D-1) with exact membership
// prod measure_i^{tail_i} >= eps, lexicographic order, and hands each to
// the visitor together with its M.
template <typename Visit>
void for_each_surface_point(const DigitSystem& sys, const Rational& eps, Visit&& visit) {
    if (eps <= 0 || eps > 1) throw EpsilonOutOfRange(to_string(eps));
    const double log_eps = log_rational(eps);
    const int D = sys.digit_count();
    CountVector tail(D - 1, 0);
    double tail_log = 0.0;

    auto recurse = [&](auto&& self, int i, const Rational& product) -> void {
        if (i == D - 1) {
            visit(tail, close_coordinate(sys, log_eps, tail_log));
            return;
        }
        Rational p = product;
        while (true) {
            self(self, i + 1, p);
            p *= sys.measure(static_cast<Digit>(i + 1));
            if (p < eps) break;
            ++tail[i];
            tail_log += sys.log_measure(static_cast<Digit>(i + 1));
        }
        tail_log -= static_cast<double>(tail[i]) * sys.log_measure(static_cast<Digit>(i + 1));
        tail[i] = 0;
    };
    recurse(recurse, 0, Rational(1));
}

}  // namespace

double log_factorial(double x) {
    if (x < 0.0) throw std::domain_error("log_factorial: negative argument");
    return std::lgamma(x + 1.0);
}

double level_first_coordinate(const DigitSystem& sys, const Rational& eps,
                              const CountVector& tail) {
    if (eps <= 0 || eps > 1) throw EpsilonOutOfRange(to_string(eps));
    if (tail.size() != static_cast<std::size_t>(sys.digit_count()) - 1)
        throw std::invalid_argument("tail must have D-1 entries");
    Rational product = 1;
    double tail_log = 0.0;
    for (std::size_t i = 0; i < tail.size(); ++i) {
        if (tail[i] < 0) throw NegativeCount(std::to_string(tail[i]));
        const Digit d = static_cast<Digit>(i + 1);
        for (std::int64_t c = 0; c < tail[i]; ++c) product *= sys.measure(d);
        tail_log += static_cast<double>(tail[i]) * sys.log_measure(d);
    }
    if (product < eps)
        throw OffSegment("tail measure " + to_string(product) + " < " + to_string(eps));
    return close_coordinate(sys, log_rational(eps), tail_log);
}

SurfaceSums surface_sums(const DigitSystem& sys, const Rational& eps) {
    std::vector<double> digit_logs, word_logs;
    std::uint64_t points = 0;
    for_each_surface_point(sys, eps, [&](const CountVector& tail, double M) {
        ++points;
        double total = M;
        double log_term = -log_factorial(M);
        for (std::int64_t c : tail) {
            total += static_cast<double>(c);
            log_term -= log_factorial(static_cast<double>(c));
        }
        log_term += log_factorial(total);
        word_logs.push_back(log_term);
        if (total > 0.0) digit_logs.push_back(log_term + std::log(total));
    });
    return SurfaceSums{std::exp(log_sum_exp(digit_logs)), std::exp(log_sum_exp(word_logs)),
                       points};
}

double multinomial_entropy(std::span<const double> x) {
    double total = 0.0, entropy = 0.0;
    for (double v : x) {
        if (v < 0.0) throw std::domain_error("multinomial_entropy: negative coordinate");
        total += v;
        entropy -= xlogx(v);
    }
    return xlogx(total) + entropy;
}

TermParts term_parts(const DigitSystem& sys, const Rational& eps, const CountVector& tail) {
    const double M = level_first_coordinate(sys, eps, tail);
    double total = M;
    double denom = M + 1.0;
    double exponent = -xlogx(M);
    double log_term = -log_factorial(M);
    for (std::int64_t c : tail) {
        const double cd = static_cast<double>(c);
        total += cd;
        denom *= cd + 1.0;
        exponent -= xlogx(cd);
        log_term -= log_factorial(cd);
    }
    exponent += xlogx(total);
    log_term += log_factorial(total) + (total > 0.0 ? std::log(total) : 0.0);
    const double prefactor = std::pow(total + 1.0, 1.5) / std::sqrt(denom);
    return TermParts{exponent, prefactor, log_term};
}

LaplaceAnalysis laplace_analysis(const DigitSystem& sys, const Rational& eps) {
    if (eps <= 0 || eps >= 1) throw EpsilonOutOfRange(to_string(eps));
    return laplace_analysis(sys, log_rational(eps));
}

LaplaceAnalysis laplace_analysis(const DigitSystem& sys, double log_eps) {
    if (!(log_eps < 0)) throw EpsilonOutOfRange("log eps must be negative");
    const int D = sys.digit_count();
    LaplaceAnalysis out;
    out.log_eps = log_eps;
    out.dim = D - 1;

    double measure_log_sum = 0.0;  // sum_i measure_i * log measure_i
    std::vector<double> lambda(D), log_lambda(D);
    for (int i = 0; i < D; ++i) {
        lambda[i] = to_double(sys.measure(static_cast<Digit>(i)));
        log_lambda[i] = sys.log_measure(static_cast<Digit>(i));
        measure_log_sum += lambda[i] * log_lambda[i];
    }
    out.scale = log_eps / measure_log_sum;
    out.maximizer.resize(D);
    for (int i = 0; i < D; ++i) out.maximizer[i] = lambda[i] * out.scale;
    out.value_at_max = multinomial_entropy(out.maximizer);

    // Tail-coordinate Hessian of the objective at the maximizer equals
    // curvature / log(eps); the curvature matrix itself has no eps in it.
    Eigen::MatrixXd A(out.dim, out.dim);
    for (int i = 1; i < D; ++i) {
        const double ri = log_lambda[i] / log_lambda[0];
        for (int j = 1; j < D; ++j) {
            const double rj = log_lambda[j] / log_lambda[0];
            double entry = (1.0 - ri) * (1.0 - rj) - ri * rj / lambda[0];
            if (i == j) entry -= 1.0 / lambda[i];
            A(i - 1, j - 1) = measure_log_sum * entry;
        }
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(A);
    out.curvature.assign(A.data(), A.data() + A.size());  // column-major == row-major (symmetric)
    out.eigenvalues.assign(solver.eigenvalues().data(),
                           solver.eigenvalues().data() + out.dim);
    out.eigenvectors.assign(solver.eigenvectors().data(),
                            solver.eigenvectors().data() + out.dim * out.dim);
    return out;
}

double tangent_second_derivative(std::span<const double> x, std::span<const double> a) {
    if (x.size() != a.size()) throw std::invalid_argument("dimension mismatch");
    double a_sum = 0.0, x_sum = 0.0, ratio_sum = 0.0, a_mag = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (x[i] <= 0.0) throw std::domain_error("point must be strictly positive");
        a_sum += a[i];
        x_sum += x[i];
        ratio_sum += a[i] * a[i] / x[i];
        a_mag = std::max(a_mag, std::abs(a[i]));
    }
    if (a_mag < 1e-12) throw std::invalid_argument("degenerate direction");
    return a_sum * a_sum / x_sum - ratio_sum;
}

ConcavityReport concavity_check(const DigitSystem& sys, const Rational& eps,
                                std::uint64_t samples, std::uint64_t seed) {
    if (eps <= 0 || eps >= 1) throw EpsilonOutOfRange(to_string(eps));
    if (samples < 1) throw std::invalid_argument("need at least one sample");
    const double log_eps = log_rational(eps);
    const int D = sys.digit_count();
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> coord(0.1, 1.1), dir(-1.0, 1.0);

    double g_norm2 = 0.0;
    std::vector<double> g(D);
    for (int i = 0; i < D; ++i) {
        g[i] = sys.log_measure(static_cast<Digit>(i));
        g_norm2 += g[i] * g[i];
    }

    ConcavityReport report;
    std::vector<double> x(D), a(D);
    while (report.samples < samples) {
        double level = 0.0;
        for (int i = 0; i < D; ++i) {
            x[i] = coord(rng);
            level += x[i] * g[i];
        }
        const double scale = log_eps / level;  // positive: both sums negative
        for (int i = 0; i < D; ++i) x[i] *= scale;

        double dot = 0.0;
        for (int i = 0; i < D; ++i) {
            a[i] = dir(rng);
            dot += a[i] * g[i];
        }
        double a_mag = 0.0;
        for (int i = 0; i < D; ++i) {
            a[i] -= dot / g_norm2 * g[i];  // now parallel to the level surface
            a_mag = std::max(a_mag, std::abs(a[i]));
        }
        if (a_mag < 1e-9) continue;

        const double value = tangent_second_derivative(x, a);
        if (report.samples == 0) {
            report.max_value = report.min_value = value;
        } else {
            report.max_value = std::max(report.max_value, value);
            report.min_value = std::min(report.min_value, value);
        }
        ++report.samples;
    }
    return report;
}

double taylor_residual(const DigitSystem& sys, const Rational& eps, std::uint64_t samples,
                       std::uint64_t seed) {
    const LaplaceAnalysis analysis = laplace_analysis(sys, eps);
    const int D = sys.digit_count();
    const int dim = analysis.dim;
    const double abs_log = std::abs(analysis.log_eps);
    const double half_width = std::pow(abs_log, 2.0 / 3.0) / std::sqrt(static_cast<double>(dim));

    // The whole box must stay in the positive orthant, including the closing
    // first coordinate at the worst corner.
    double worst_first = analysis.maximizer[0];
    for (int i = 1; i < D; ++i) {
        if (analysis.maximizer[i] - half_width <= 0.0)
            throw BoxOutsideDomain("tail coordinate " + std::to_string(i));
        worst_first -= half_width * sys.log_measure(static_cast<Digit>(i)) / sys.log_measure(0);
    }
    if (worst_first <= 0.0) throw BoxOutsideDomain("closing coordinate");

    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> offset(-half_width, half_width);

    std::vector<double> x(D), y(dim);
    double residual = 0.0;
    for (std::uint64_t s = 0; s < samples; ++s) {
        for (int i = 0; i < dim; ++i) y[i] = offset(rng);

        double tail_log = 0.0;
        for (int i = 1; i < D; ++i) {
            x[i] = analysis.maximizer[i] + y[i - 1];
            tail_log += x[i] * sys.log_measure(static_cast<Digit>(i));
        }
        x[0] = (analysis.log_eps - tail_log) / sys.log_measure(0);

        double quadratic = -analysis.log_eps;
        for (int j = 0; j < dim; ++j) {
            double t = 0.0;  // eigen coordinate j of the offset
            for (int i = 0; i < dim; ++i) t += analysis.eigenvectors[j * dim + i] * y[i];
            quadratic += analysis.eigenvalues[j] / analysis.log_eps * t * t;
        }
        residual = std::max(residual, std::abs(multinomial_entropy(x) - quadratic));
    }
    return residual;
}

GaussianCheck gaussian_sum_check(double Z, double C) {
    if (Z <= 0.0 || C <= 0.0) throw std::domain_error("Z and C must be positive");
    const double limit = std::pow(Z, 2.0 / 3.0);
    const std::int64_t K = static_cast<std::int64_t>(std::floor(limit));
    double sum = 1.0;  // k = 0
    for (std::int64_t k = 1; k <= K; ++k)
        sum += 2.0 * std::exp(-C * static_cast<double>(k) * static_cast<double>(k) / Z);
    const double reference = std::sqrt(std::numbers::pi_v<double> * Z / C);
    return GaussianCheck{sum, reference, std::abs(sum / reference - 1.0)};
}

namespace {

// Simplex sum as a double: exact path where affordable, float path below.
double simplex_value(const DigitSystem& sys, const Rational& eps, bool digits) {
    static const Rational exact_floor(1, BigInt(1) << 40);
    const auto mode = eps >= exact_floor ? simplex::Eval::exact_and_float
                                         : simplex::Eval::float_only;
    const simplex::SumResult sum =
        digits ? simplex::digit_sum(sys, eps, mode) : simplex::word_sum(sys, eps, mode);
    return mode == simplex::Eval::exact_and_float ? sum.value.convert_to<double>()
                                                  : sum.float_value;
}

}  // namespace

std::vector<SandwichRow> sandwich_scan(const DigitSystem& sys,
                                       std::span<const Rational> eps_list) {
    std::vector<SandwichRow> rows;
    rows.reserve(eps_list.size());
    for (const Rational& eps : eps_list) {
        SandwichRow row;
        row.eps = eps;
        const Rational lower_at = eps / sys.measure(0);   // larger threshold
        const Rational upper_at = eps * sys.measure(1);   // smaller threshold
        if (lower_at > 1) {
            row.note = "skipped: shifted threshold above 1";
            rows.push_back(std::move(row));
            continue;
        }
        const SurfaceSums lower = surface_sums(sys, lower_at);
        const SurfaceSums upper = surface_sums(sys, upper_at);
        if (lower.digit_sum <= 0.0 || lower.word_sum <= 0.0) {
            row.note = "skipped: degenerate surface sum at shifted threshold";
            rows.push_back(std::move(row));
            continue;
        }
        const double S = simplex_value(sys, eps, true);
        const double Ssharp = simplex_value(sys, eps, false);
        row.valid = true;
        row.digit_ratio_lower = S / lower.digit_sum;
        row.digit_ratio_upper = S / upper.digit_sum;
        row.word_ratio_lower = Ssharp / lower.word_sum;
        row.word_ratio_upper = Ssharp / upper.word_sum;
        rows.push_back(std::move(row));
    }
    return rows;
}

std::vector<SurfaceGrowthRow> surface_growth_scan(const DigitSystem& sys,
                                                  std::span<const Rational> eps_list) {
    std::vector<SurfaceGrowthRow> rows;
    rows.reserve(eps_list.size());
    for (const Rational& eps : eps_list) {
        const SurfaceSums sums = surface_sums(sys, eps);
        const double eps_d = to_double(eps);
        const double log_abs = std::abs(log_rational(eps));
        SurfaceGrowthRow row;
        row.eps = eps;
        row.digit_sum_scaled = log_abs > 0.0 ? sums.digit_sum * eps_d / log_abs : 0.0;
        row.word_sum_scaled = sums.word_sum * eps_d;
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace asymptotics
}  // namespace gls
