#include "gls/normality_stats.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>

#include "gls/enumerator.hpp"

namespace gls {

BlockCensus::BlockCensus(int digit_count, int block_len, std::uint64_t row_cap)
    : digit_count_(digit_count), block_len_(block_len) {
    if (block_len < 1) throw std::invalid_argument("block length must be >= 1");
    std::uint64_t rows = 1;
    for (int i = 0; i < block_len; ++i) {
        rows *= static_cast<std::uint64_t>(digit_count);
        if (rows > row_cap)
            throw BudgetExceeded("D^k = " + std::to_string(digit_count) + "^" +
                                 std::to_string(block_len));
    }
    counts_.assign(rows, 0);
    modulus_ = rows;
}

void BlockCensus::push(Digit d) {
    window_ = (window_ * digit_count_ + d) % modulus_;
    ++seen_;
    if (seen_ >= static_cast<std::uint64_t>(block_len_)) {
        ++counts_[window_];
        ++total_;
    }
}

void BlockCensus::add(std::span<const Digit> prefix) {
    for (Digit d : prefix) push(d);
}

std::uint64_t BlockCensus::count(const Word& block) const {
    if (block.size() != static_cast<std::size_t>(block_len_))
        throw std::invalid_argument("block length mismatch");
    std::uint64_t packed = 0;
    for (Digit d : block) packed = packed * digit_count_ + d;
    return counts_[packed];
}

Word BlockCensus::unpack(std::uint64_t packed) const {
    Word w(block_len_);
    for (int i = block_len_ - 1; i >= 0; --i) {
        w[i] = static_cast<Digit>(packed % digit_count_);
        packed /= digit_count_;
    }
    return w;
}

BlockCensus block_counts(const DigitSystem& sys, std::span<const Digit> prefix, int k,
                         std::uint64_t row_cap) {
    BlockCensus census(sys.digit_count(), k, row_cap);
    census.add(prefix);
    return census;
}

namespace {

std::uint64_t table_rows(int D, int K) {
    std::uint64_t rows = 0, level = 1;
    for (int k = 1; k <= K; ++k) {
        level *= static_cast<std::uint64_t>(D);
        rows += level;
        if (rows > (1ull << 40)) break;  // saturating; only compared against caps
    }
    return rows;
}

// The row_cap words of largest measure among all words of length <= K
// (ties resolved by emission order, so the pick is deterministic).
std::vector<Word> top_measure_words(const DigitSystem& sys, int K, std::uint64_t cap) {
    Rational floor = 1;  // smallest measure a word of length <= K can have
    for (int i = 0; i < K; ++i) floor *= sys.measure(static_cast<Digit>(sys.digit_count() - 1));
    std::vector<Word> picked;
    WordStream stream(sys);
    while (picked.size() < cap && stream.peek_measure() >= floor) {
        const Word& w = stream.next();
        if (w.size() <= static_cast<std::size_t>(K)) picked.push_back(w);
    }
    return picked;
}

}  // namespace

HotSpotReport hot_spot_report(const DigitSystem& sys, std::uint64_t N, int K,
                              std::uint64_t row_cap, bool reservoir) {
    if (K < 1 || N < static_cast<std::uint64_t>(K))
        throw std::invalid_argument("need N >= K >= 1");

    HotSpotReport report;
    report.N = N;
    report.K = K;

    const int D = sys.digit_count();
    if (!reservoir && table_rows(D, K) > row_cap)
        throw BudgetExceeded(std::to_string(table_rows(D, K)) + " rows > cap " +
                             std::to_string(row_cap));

    if (!reservoir) {
        std::vector<BlockCensus> censuses;
        for (int k = 1; k <= K; ++k) censuses.emplace_back(D, k, row_cap);
        DigitStream stream(sys);
        for (std::uint64_t i = 0; i < N; ++i) {
            const Digit d = stream.next();
            for (auto& census : censuses) census.push(d);
        }
        bool first = true;
        for (const auto& census : censuses) {
            for (std::uint64_t packed = 0; packed < census.rows(); ++packed) {
                HotSpotRow row;
                row.word = census.unpack(packed);
                row.count = census.count_packed(packed);
                row.measure = cylinder_measure(sys, row.word);
                row.ratio = (static_cast<double>(row.count) / static_cast<double>(N)) /
                            to_double(row.measure);
                report.max_ratio = first ? row.ratio : std::max(report.max_ratio, row.ratio);
                report.min_ratio = first ? row.ratio : std::min(report.min_ratio, row.ratio);
                first = false;
                report.rows.push_back(std::move(row));
            }
        }
        return report;
    }

    // Reservoir mode: only the row_cap words of largest measure are tracked.
    const std::vector<Word> words = top_measure_words(sys, K, row_cap);
    std::unordered_map<std::string, std::size_t> index;
    index.reserve(words.size());
    for (std::size_t i = 0; i < words.size(); ++i)
        index.emplace(std::string(words[i].begin(), words[i].end()), i);

    std::vector<std::uint64_t> counts(words.size(), 0);
    std::vector<Digit> window;
    DigitStream stream(sys);
    for (std::uint64_t i = 0; i < N; ++i) {
        window.push_back(stream.next());
        if (window.size() > static_cast<std::size_t>(K)) window.erase(window.begin());
        for (std::size_t len = 1; len <= window.size(); ++len) {
            const std::string key(window.end() - len, window.end());
            if (auto it = index.find(key); it != index.end()) ++counts[it->second];
        }
    }
    for (std::size_t i = 0; i < words.size(); ++i) {
        HotSpotRow row;
        row.word = words[i];
        row.count = counts[i];
        row.measure = cylinder_measure(sys, row.word);
        row.ratio = (static_cast<double>(row.count) / static_cast<double>(N)) /
                    to_double(row.measure);
        report.max_ratio = i == 0 ? row.ratio : std::max(report.max_ratio, row.ratio);
        report.min_ratio = i == 0 ? row.ratio : std::min(report.min_ratio, row.ratio);
        report.rows.push_back(std::move(row));
    }
    return report;
}

std::vector<ConvergenceRow> convergence_table(const DigitSystem& sys,
                                              const std::vector<std::uint64_t>& Ns, int K,
                                              std::uint64_t row_cap) {
    if (!std::is_sorted(Ns.begin(), Ns.end()))
        throw std::invalid_argument("prefix lengths must be increasing");
    if (Ns.empty()) return {};
    if (K < 1 || Ns.front() < static_cast<std::uint64_t>(K))
        throw std::invalid_argument("need N >= K >= 1");

    const int D = sys.digit_count();
    if (table_rows(D, K) > row_cap)
        throw BudgetExceeded(std::to_string(table_rows(D, K)) + " rows > cap " +
                             std::to_string(row_cap));

    std::vector<BlockCensus> censuses;
    for (int k = 1; k <= K; ++k) censuses.emplace_back(D, k, row_cap);

    std::vector<ConvergenceRow> rows;
    DigitStream stream(sys);
    std::uint64_t produced = 0;
    for (std::uint64_t checkpoint : Ns) {
        while (produced < checkpoint) {
            const Digit d = stream.next();
            for (auto& census : censuses) census.push(d);
            ++produced;
        }
        ConvergenceRow row{checkpoint, 0.0, 0.0, produced - K + 1};
        for (const auto& census : censuses) {
            for (std::uint64_t packed = 0; packed < census.rows(); ++packed) {
                const Word w = census.unpack(packed);
                const double mu = to_double(cylinder_measure(sys, w));
                const double freq = static_cast<double>(census.count_packed(packed)) /
                                    static_cast<double>(produced);
                row.max_deviation = std::max(row.max_deviation, std::abs(freq / mu - 1.0));
                row.max_ratio = std::max(row.max_ratio, freq / mu);
            }
        }
        rows.push_back(row);
    }
    return rows;
}

}  // namespace gls
