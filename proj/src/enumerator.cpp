#include "gls/enumerator.hpp"

#include <algorithm>
#include <map>

namespace gls {

namespace {

// Lexicographically smallest word with the given digit multiplicities.
Word initial_permutation(const std::vector<std::uint16_t>& counts) {
    Word w;
    for (std::size_t d = 0; d < counts.size(); ++d)
        w.insert(w.end(), counts[d], static_cast<Digit>(d));
    return w;
}

}  // namespace

WordStream::WordStream(const DigitSystem& sys) : sys_(&sys) {
    const int D = sys.digit_count();
    // Seed the frontier with the single-digit classes (children of the empty
    // word, which the enumeration never emits).
    for (int d = 0; d < D; ++d) {
        ClassRec rec;
        rec.counts.assign(D, 0);
        rec.counts[d] = 1;
        rec.measure = sys.measure(static_cast<Digit>(d));
        rec.total = 1;
        rec.expand_limit = static_cast<std::uint8_t>(d);
        classes_.push_back(std::move(rec));
        frontier_.push_back(static_cast<std::uint32_t>(classes_.size() - 1));
    }
    const auto heap_less = [this](std::uint32_t a, std::uint32_t b) {
        return classes_[a].measure < classes_[b].measure;
    };
    std::make_heap(frontier_.begin(), frontier_.end(), heap_less);
    frontier_peak_ = frontier_.size();
    produce();
}

void WordStream::push_children(std::uint32_t cls) {
    const int limit = classes_[cls].expand_limit;
    const auto heap_less = [this](std::uint32_t a, std::uint32_t b) {
        return classes_[a].measure < classes_[b].measure;
    };
    for (int d = 0; d <= limit; ++d) {
        ClassRec child;
        child.counts = classes_[cls].counts;
        ++child.counts[d];
        child.measure = classes_[cls].measure * sys_->measure(static_cast<Digit>(d));
        child.total = classes_[cls].total + 1;
        child.expand_limit = static_cast<std::uint8_t>(d);
        classes_.push_back(std::move(child));
        frontier_.push_back(static_cast<std::uint32_t>(classes_.size() - 1));
        std::push_heap(frontier_.begin(), frontier_.end(), heap_less);
    }
    frontier_peak_ = std::max(frontier_peak_, frontier_.size());
}

void WordStream::pop_batch() {
    const auto heap_less = [this](std::uint32_t a, std::uint32_t b) {
        return classes_[a].measure < classes_[b].measure;
    };
    batch_measure_ = classes_[frontier_.front()].measure;

    // Every class of this exact measure is already in the frontier: parents
    // have strictly larger measure, so they were popped in earlier batches.
    std::map<std::uint32_t, std::vector<std::uint32_t>> by_length;
    while (!frontier_.empty() && classes_[frontier_.front()].measure == batch_measure_) {
        std::pop_heap(frontier_.begin(), frontier_.end(), heap_less);
        const std::uint32_t cls = frontier_.back();
        frontier_.pop_back();
        by_length[classes_[cls].total].push_back(cls);
        push_children(cls);
    }

    groups_.assign(by_length.begin(), by_length.end());
    group_idx_ = 0;
}

void WordStream::open_group() {
    const auto& classes = groups_[group_idx_].second;
    gens_.clear();
    merge_.clear();
    gens_.reserve(classes.size());
    for (std::uint32_t cls : classes) {
        gens_.push_back(Permuter{initial_permutation(classes_[cls].counts), true});
        merge_.push_back(static_cast<std::uint32_t>(gens_.size() - 1));
    }
    const auto lex_greater = [this](std::uint32_t a, std::uint32_t b) {
        return gens_[a].word > gens_[b].word;
    };
    std::make_heap(merge_.begin(), merge_.end(), lex_greater);
    ++group_idx_;
}

void WordStream::produce() {
    const auto lex_greater = [this](std::uint32_t a, std::uint32_t b) {
        return gens_[a].word > gens_[b].word;
    };
    while (merge_.empty()) {
        if (group_idx_ < groups_.size()) {
            open_group();
        } else {
            pop_batch();
        }
    }
    std::pop_heap(merge_.begin(), merge_.end(), lex_greater);
    const std::uint32_t g = merge_.back();
    pending_ = gens_[g].word;
    pending_measure_ = batch_measure_;
    if (std::next_permutation(gens_[g].word.begin(), gens_[g].word.end())) {
        std::push_heap(merge_.begin(), merge_.end(), lex_greater);
    } else {
        merge_.pop_back();
    }
}

const Word& WordStream::next() {
    current_.swap(pending_);
    ++words_;
    digits_ += current_.size();
    produce();
    return current_;
}

std::vector<Word> enumerate_prefix(const DigitSystem& sys, std::size_t n) {
    std::vector<Word> out;
    out.reserve(n);
    WordStream stream(sys);
    for (std::size_t i = 0; i < n; ++i) out.push_back(stream.next());
    return out;
}

Digit DigitStream::next() {
    if (offset_ == current_.size()) {
        current_measure_ = words_.peek_measure();
        current_ = words_.next();
        offset_ = 0;
    }
    ++position_;
    return current_[offset_++];
}

MeasureKey DigitStream::current_word_measure() const {
    return at_word_start() ? words_.peek_measure() : current_measure_;
}

std::vector<Digit> digit_prefix(const DigitSystem& sys, std::uint64_t n) {
    std::vector<Digit> out;
    out.reserve(n);
    DigitStream stream(sys);
    for (std::uint64_t i = 0; i < n; ++i) out.push_back(stream.next());
    return out;
}

ThresholdCounts threshold_counts(const DigitSystem& sys, const Rational& eps,
                                 const Word* query) {
    if (eps <= 0 || eps > 1) throw EpsilonOutOfRange(to_string(eps));
    ThresholdCounts counts;
    if (query) counts.occurrences = 0;
    WordStream stream(sys);
    while (stream.peek_measure() >= eps) {
        const Word& w = stream.next();
        counts.digit_total += w.size();
        ++counts.word_total;
        if (query) *counts.occurrences += occurrences_in(w, *query);
    }
    return counts;
}

std::vector<ThresholdScanRow> threshold_scan(const DigitSystem& sys,
                                             std::vector<Rational> eps_list,
                                             const std::vector<Word>& queries) {
    for (const Rational& eps : eps_list)
        if (eps <= 0 || eps > 1) throw EpsilonOutOfRange(to_string(eps));

    const Rational eps_min = eps_list.empty()
                                 ? Rational(1)
                                 : *std::min_element(eps_list.begin(), eps_list.end());

    // Cumulative totals at the end of each equal-measure batch. A threshold
    // can only cut the emission sequence at a batch boundary.
    struct BatchTotals {
        Rational measure;
        std::uint64_t digits, words;
        std::vector<std::uint64_t> occurrences;
    };
    std::vector<BatchTotals> batches;
    std::uint64_t digits = 0, words = 0;
    std::vector<std::uint64_t> occ(queries.size(), 0);

    WordStream stream(sys);
    while (stream.peek_measure() >= eps_min) {
        const Rational measure = stream.peek_measure();
        while (stream.peek_measure() == measure) {
            const Word& w = stream.next();
            digits += w.size();
            ++words;
            for (std::size_t q = 0; q < queries.size(); ++q)
                occ[q] += occurrences_in(w, queries[q]);
        }
        batches.push_back(BatchTotals{measure, digits, words, occ});
    }

    std::vector<ThresholdScanRow> rows;
    rows.reserve(eps_list.size());
    for (Rational& eps : eps_list) {
        ThresholdScanRow row;
        row.occurrences.assign(queries.size(), 0);
        // Last batch whose measure still clears the threshold.
        const BatchTotals* hit = nullptr;
        for (const auto& b : batches) {
            if (b.measure >= eps) hit = &b; else break;
        }
        if (hit) {
            row.digit_total = hit->digits;
            row.word_total = hit->words;
            row.occurrences = hit->occurrences;
        }
        row.eps = std::move(eps);
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace gls
