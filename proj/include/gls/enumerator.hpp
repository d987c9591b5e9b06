// Best-first enumeration of all non-empty words ordered by
// (cylinder measure desc, length asc, lexicographic asc), the digit stream
// obtained by concatenating them, and threshold counting.
//
// Words sharing a digit-count vector share a measure, so the frontier is a
// priority queue of count-vector classes rather than of individual words:
// classes are popped in exact-measure batches and each batch's words are
// produced by lexicographically merging the multiset permutations of its
// classes. This keeps the frontier polynomial in log(1/measure) while the
// emitted order is identical to the word-level queue.

#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "gls/fibred_system.hpp"

namespace gls {

class WordStream {
  public:
    explicit WordStream(const DigitSystem& sys);

    // Word the next call to next() will return, and its exact measure.
    // Peek before consuming: next() invalidates both.
    const Word& peek_word() const { return pending_; }
    const MeasureKey& peek_measure() const { return pending_measure_; }

    // Emits the next word of the enumeration. The reference stays valid
    // until the following call. The stream never ends.
    const Word& next();

    std::uint64_t words_emitted() const { return words_; }
    std::uint64_t digits_emitted() const { return digits_; }

    // High-water mark of the class frontier (memory diagnostic).
    std::size_t frontier_peak() const { return frontier_peak_; }

  private:
    struct ClassRec {
        std::vector<std::uint16_t> counts;  // digit multiplicities
        Rational measure;
        std::uint32_t total;                // word length
        std::uint8_t expand_limit;          // children append digits 0..expand_limit
    };
    struct Permuter {
        Word word;   // current permutation (lexicographically increasing)
        bool alive;
    };

    void push_children(std::uint32_t cls);
    void pop_batch();
    void open_group();
    void produce();

    const DigitSystem* sys_;
    std::vector<ClassRec> classes_;
    std::vector<std::uint32_t> frontier_;  // binary heap, max measure on top
    std::size_t frontier_peak_ = 0;

    Rational batch_measure_;
    std::vector<std::pair<std::uint32_t, std::vector<std::uint32_t>>> groups_;  // (length, classes)
    std::size_t group_idx_ = 0;

    std::vector<Permuter> gens_;
    std::vector<std::uint32_t> merge_;  // heap over gens_, lex-least word on top

    Word current_, pending_;
    Rational pending_measure_;
    std::uint64_t words_ = 0, digits_ = 0;
};

// First n words of the enumeration.
std::vector<Word> enumerate_prefix(const DigitSystem& sys, std::size_t n);

// The digit expansion obtained by concatenating the enumerated words.
// Positions are 1-based; next() returns d_1, d_2, ...
class DigitStream {
  public:
    explicit DigitStream(const DigitSystem& sys) : words_(sys) {}

    Digit next();
    std::uint64_t position() const { return position_; }

    // True when the digit about to be produced starts a new word.
    bool at_word_start() const { return offset_ == current_.size(); }
    std::uint64_t word_index() const { return words_.words_emitted(); }

    // Exact measure of the word containing the digit about to be produced
    // (the paper-style eps(N) column).
    MeasureKey current_word_measure() const;

  private:
    WordStream words_;
    Word current_;
    MeasureKey current_measure_ = 1;
    std::size_t offset_ = 0;
    std::uint64_t position_ = 0;
};

std::vector<Digit> digit_prefix(const DigitSystem& sys, std::uint64_t n);

struct ThresholdCounts {
    std::uint64_t digit_total = 0;  // total digits over words with measure >= eps
    std::uint64_t word_total = 0;   // number of such words
    std::optional<std::uint64_t> occurrences;  // of the query word, if given
};

// Counts over the words with measure >= eps (exact comparison).
ThresholdCounts threshold_counts(const DigitSystem& sys, const Rational& eps,
                                 const Word* query = nullptr);

struct ThresholdScanRow {
    Rational eps;
    std::uint64_t digit_total = 0;
    std::uint64_t word_total = 0;
    std::vector<std::uint64_t> occurrences;  // aligned with the query list
};

// One enumeration pass down to min(eps_list), answering every threshold and
// query from cumulative per-measure-batch totals.
std::vector<ThresholdScanRow> threshold_scan(const DigitSystem& sys,
                                             std::vector<Rational> eps_list,
                                             const std::vector<Word>& queries);

}  // namespace gls
