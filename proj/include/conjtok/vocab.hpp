#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "conjtok/morpheme.hpp"
#include "conjtok/token.hpp"

namespace conjtok {

// Frequency-ranked token list truncated to a size budget, the way an NMT
// vocabulary cutoff works. size_limit includes reserved symbols (unknown
// word, sentence terminator, ...), so at most size_limit - reserved real
// entries are kept.
class Vocabulary {
public:
  struct Entry {
    std::string token;
    std::uint64_t count = 0;
  };

  // Top tokens by (count desc, token asc). Throws EmptyCorpusError when
  // counts is empty; size_limit must exceed reserved.
  static Vocabulary build(const std::map<std::string, std::uint64_t>& counts,
                          std::size_t size_limit, std::size_t reserved = 2);

  bool contains(std::string_view token) const;
  const std::vector<Entry>& entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }
  std::size_t size_limit() const { return size_limit_; }
  std::size_t reserved() const { return reserved_; }

  // File format: token<TAB>count, count-descending, UTF-8.
  void save(std::ostream& out) const;
  static Vocabulary load(std::istream& in, std::size_t size_limit = 0,
                         std::size_t reserved = 2);
  void save_file(const std::string& path) const;
  static Vocabulary load_file(const std::string& path);

private:
  std::vector<Entry> entries_;
  std::map<std::string, std::uint64_t, std::less<>> index_;
  std::size_t size_limit_ = 0;
  std::size_t reserved_ = 2;
};

// Token-frequency accumulation over token streams.
class TokenCounts {
public:
  void add(const std::vector<Token>& tokens);
  void add_words(const std::vector<std::string>& words);

  const std::map<std::string, std::uint64_t>& counts() const { return counts_; }
  std::uint64_t running_total() const { return running_total_; }
  std::size_t distinct() const { return counts_.size(); }
  std::size_t distinct_special() const { return special_types_; }

private:
  std::map<std::string, std::uint64_t> counts_;
  std::uint64_t running_total_ = 0;
  std::size_t special_types_ = 0;
};

// In-vocabulary rates of a corpus against a fixed vocabulary. Both the
// type rate (distinct tokens) and the running-token rate are reported; the
// headline coverage figures in the literature do not say which they are.
struct CoverageReport {
  Scheme scheme = Scheme::Baseline;
  std::size_t distinct_types = 0;
  std::size_t oov_types = 0;
  std::size_t special_token_count = 0;  // distinct special tokens in corpus
  double type_coverage = 1.0;
  double token_coverage = 1.0;

  void write(std::ostream& out) const;
};

CoverageReport coverage(const Vocabulary& vocab, const TokenCounts& corpus,
                        Scheme scheme = Scheme::Baseline);

// Distinct-type comparison between the baseline surface stream and an
// encoded stream of the same text. Reported in both directions (retained
// and reduced) plus a predicate-only breakdown, since the headline
// "compressed by X%" figure has more than one defensible denominator.
struct CompressionReport {
  Scheme scheme = Scheme::ConjToken;
  std::size_t baseline_types = 0;
  std::size_t encoded_types = 0;
  std::size_t encoded_special_types = 0;

  std::size_t predicate_surface_types = 0;
  std::size_t predicate_lemma_types = 0;

  double retained() const {
    return baseline_types == 0 ? 1.0 : double(encoded_types) / double(baseline_types);
  }
  double reduction() const { return 1.0 - retained(); }
  double predicate_retained() const {
    return predicate_surface_types == 0
               ? 1.0
               : double(predicate_lemma_types) / double(predicate_surface_types);
  }
  double predicate_reduction() const { return 1.0 - predicate_retained(); }

  void write(std::ostream& out) const;
};

// Computes the comparison by encoding the analyzed corpus under scheme.
// ConjFeature counts the lemma stream (its factors add no tokens).
CompressionReport compression(const std::vector<AnalyzedSentence>& corpus, Scheme scheme);

}  // namespace conjtok
