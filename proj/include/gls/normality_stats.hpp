// Sliding-window block frequencies of a digit-stream prefix and the
// hot-spot ratios frequency / cylinder-measure used as the empirical
// normality criterion.

#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "gls/fibred_system.hpp"

namespace gls {

// Counts of every block of one fixed length k over the window positions
// 0..N-k of a prefix (so the total is N-k+1 when N >= k). Blocks are stored
// radix-packed; k is capped so that D^k fits the row budget.
class BlockCensus {
  public:
    BlockCensus(int digit_count, int block_len, std::uint64_t row_cap);

    void add(std::span<const Digit> prefix);  // counts all windows of the prefix
    void push(Digit d);                       // streaming variant
    std::uint64_t count(const Word& block) const;
    std::uint64_t count_packed(std::uint64_t packed) const { return counts_[packed]; }
    std::uint64_t total() const { return total_; }
    std::uint64_t seen() const { return seen_; }  // digits consumed so far
    int block_len() const { return block_len_; }
    std::uint64_t rows() const { return counts_.size(); }
    Word unpack(std::uint64_t packed) const;

  private:
    int digit_count_, block_len_;
    std::vector<std::uint64_t> counts_;
    std::uint64_t window_ = 0, modulus_ = 1, seen_ = 0, total_ = 0;
};

BlockCensus block_counts(const DigitSystem& sys, std::span<const Digit> prefix, int k,
                         std::uint64_t row_cap = 1u << 24);

struct HotSpotRow {
    Word word;
    std::uint64_t count;
    Rational measure;
    double ratio;  // (count / N) / measure
};

struct HotSpotReport {
    std::uint64_t N = 0;
    int K = 0;
    std::vector<HotSpotRow> rows;  // every word with 1 <= |s| <= K
    double max_ratio = 0.0;
    double min_ratio = 0.0;
};

// Ratios for every block length 1..K over the first N digits of the
// system's expansion. Throws BudgetExceeded when the full table would have
// more than row_cap rows; reservoir mode instead tracks only the row_cap
// words of largest measure.
HotSpotReport hot_spot_report(const DigitSystem& sys, std::uint64_t N, int K,
                              std::uint64_t row_cap = 1u << 24,
                              bool reservoir = false);

struct ConvergenceRow {
    std::uint64_t N;
    double max_deviation;  // max over |s| <= K of |freq/measure - 1|
    double max_ratio;      // max over |s| <= K of freq/measure
    std::uint64_t windows_at_K;  // N - K + 1 consistency figure
};

// One pass over the stream with checkpoints at each requested N (must be
// increasing).
std::vector<ConvergenceRow> convergence_table(const DigitSystem& sys,
                                              const std::vector<std::uint64_t>& Ns, int K,
                                              std::uint64_t row_cap = 1u << 24);

}  // namespace gls
