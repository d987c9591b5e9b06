// Sums over the level surface sum_i x_i log(measure_i) = log(eps), and the
// Laplace-method apparatus used to pin down their growth: the entropy-like
// objective, its constrained maximizer, the curvature matrix with its
// eigensystem, Taylor-expansion residuals, tangent concavity and the
// discrete Gaussian comparison sum.
//
// Surface lattice points have integer tail counts (m_2, ..., m_D) and a
// real first coordinate M chosen to close the level equation; membership
// (M >= 0) is decided exactly on the rational measures, while all term
// evaluation runs in log space via log-gamma.

#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "gls/fibred_system.hpp"

namespace gls {
namespace asymptotics {

// log Gamma(x+1), the real-argument factorial used by every surface term.
double log_factorial(double x);

// The real first coordinate M placing (M, tail) on the level surface of
// log-measure eps; throws OffSegment when the tail alone already falls
// below the threshold (M would be negative).
double level_first_coordinate(const DigitSystem& sys, const Rational& eps,
                              const CountVector& tail);

struct SurfaceSums {
    double digit_sum;   // weight (M + sum tail) per point
    double word_sum;    // weight 1 per point
    std::uint64_t point_count;
};

// Sums over every surface lattice point, max-shifted in log space, in the
// fixed lexicographic tail order.
SurfaceSums surface_sums(const DigitSystem& sys, const Rational& eps);

// Entropy-like objective (sum x) log(sum x) - sum x_i log x_i with
// 0 log 0 = 0; scale-covariant, equals log(eps^-1) at the constrained
// maximizer below.
double multinomial_entropy(std::span<const double> x);

struct TermParts {
    double exponent;    // value of the entropy objective at the point
    double prefactor;   // (total+1)^{3/2} / sqrt(prod (coord+1))
    double log_term;    // log of the actual weighted surface term
};

// Stirling-style split of one surface term into prefactor * exp(exponent);
// the ratio term / (prefactor * exp(exponent)) stays in a fixed band over
// the whole surface.
TermParts term_parts(const DigitSystem& sys, const Rational& eps, const CountVector& tail);

struct LaplaceAnalysis {
    double log_eps;
    double scale;                      // L = log(eps) / sum_i m_i log m_i
    std::vector<double> maximizer;     // p = (measure_i * L), length D
    double value_at_max;               // entropy objective at p
    int dim;                           // D - 1
    std::vector<double> curvature;     // A, row-major (dim x dim); log(eps) * Hessian
    std::vector<double> eigenvalues;   // of A, ascending, all positive
    std::vector<double> eigenvectors;  // column-major; column j pairs with eigenvalue j
};

LaplaceAnalysis laplace_analysis(const DigitSystem& sys, const Rational& eps);
LaplaceAnalysis laplace_analysis(const DigitSystem& sys, double log_eps);

// Closed-form second derivative of the entropy objective along direction a
// at point x; throws std::invalid_argument for a degenerate (zero)
// direction.
double tangent_second_derivative(std::span<const double> x, std::span<const double> a);

struct ConcavityReport {
    std::uint64_t samples = 0;
    double max_value = 0.0;  // largest sampled second derivative (negative iff concave)
    double min_value = 0.0;
};

// Random lines parallel to the level surface through random interior
// points; all sampled second directional derivatives should be negative.
ConcavityReport concavity_check(const DigitSystem& sys, const Rational& eps,
                                std::uint64_t samples, std::uint64_t seed = 20240601);

// Max |objective - quadratic model| over random points of the expansion box
// around the maximizer; throws BoxOutsideDomain when the box pokes out of
// the positive orthant.
double taylor_residual(const DigitSystem& sys, const Rational& eps, std::uint64_t samples,
                       std::uint64_t seed = 20240601);

struct GaussianCheck {
    double sum;        // sum of exp(-C k^2 / Z) over |k| <= Z^(2/3)
    double reference;  // sqrt(pi Z / C)
    double rel_error;
};

GaussianCheck gaussian_sum_check(double Z, double C);

struct SandwichRow {
    Rational eps;
    bool valid = false;
    std::string note;            // reason when skipped
    double digit_ratio_lower = 0.0;   // S(eps) / H(eps / measure_0)
    double digit_ratio_upper = 0.0;   // S(eps) / H(eps * measure_1)
    double word_ratio_lower = 0.0;    // S#(eps) / H#(eps / measure_0)
    double word_ratio_upper = 0.0;    // S#(eps) / H#(eps * measure_1)
};

// Two-sided comparison of the simplex sums against surface sums at shifted
// thresholds. Rows where a surface sum degenerates to 0 are skipped with a
// reason.
std::vector<SandwichRow> sandwich_scan(const DigitSystem& sys,
                                       std::span<const Rational> eps_list);

struct SurfaceGrowthRow {
    Rational eps;
    double digit_sum_scaled;  // H * eps / |log eps|
    double word_sum_scaled;   // H# * eps
};

std::vector<SurfaceGrowthRow> surface_growth_scan(const DigitSystem& sys,
                                                  std::span<const Rational> eps_list);

}  // namespace asymptotics
}  // namespace gls
