// Exact multinomial lattice sums over the simplex region
//   T_eps = { m >= 0 : prod_d measure(d)^m_d >= eps }.
//
// digit_sum weights each lattice point by (sum m) * multinomial(m) and
// equals the total number of digits over all words of measure >= eps;
// word_sum drops the (sum m) factor and counts the words themselves
// (including the empty word at the origin). Both carry an exact
// arbitrary-precision value and an independent log-space float
// recomputation.

#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "gls/fibred_system.hpp"

namespace gls {
namespace simplex {

struct SumResult {
    BigInt value;          // exact
    double float_value;    // log-gamma path, max-shifted summation
    std::uint64_t lattice_count;
};

enum class Eval { exact_and_float, float_only };

// All lattice points of T_eps for the given measure vector, in the fixed
// depth-first order (digit 0 outermost, counts increasing). Includes the
// origin. The measures need not sum to 1 here; any vector in (0,1)^D
// defines a valid region.
std::vector<CountVector> lattice_points(std::span<const Rational> measures,
                                        const Rational& eps);

SumResult digit_sum(std::span<const Rational> measures, const Rational& eps,
                    Eval mode = Eval::exact_and_float);
SumResult word_sum(std::span<const Rational> measures, const Rational& eps,
                   Eval mode = Eval::exact_and_float);

// DigitSystem front-ends.
std::vector<CountVector> lattice_points(const DigitSystem& sys, const Rational& eps);
SumResult digit_sum(const DigitSystem& sys, const Rational& eps,
                    Eval mode = Eval::exact_and_float);
SumResult word_sum(const DigitSystem& sys, const Rational& eps,
                   Eval mode = Eval::exact_and_float);

// Occurrence sum for a non-empty word s: digit_sum + word_sum at threshold
// eps / measure(s); zero when that threshold exceeds 1. Matches the
// enumerator's occurrence count exactly.
SumResult occurrence_sum(const DigitSystem& sys, const Rational& eps, const Word& s,
                         Eval mode = Eval::exact_and_float);

// Exact multinomial coefficient (sum m)! / prod m_d!.
BigInt multinomial(const CountVector& m);

struct GrowthRow {
    Rational eps;
    double digit_sum_scaled;  // S * eps / |log eps|
    double word_sum_scaled;   // S# * eps
};

// Reporting scan for the growth rates |log eps|/eps and 1/eps. Rows use the
// exact path when eps >= exact_floor, the float path below it.
std::vector<GrowthRow> growth_scan(const DigitSystem& sys,
                                   std::span<const Rational> eps_list,
                                   const Rational& exact_floor = Rational(1, BigInt(1) << 40));

}  // namespace simplex
}  // namespace gls
