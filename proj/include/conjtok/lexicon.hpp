#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "conjtok/morpheme.hpp"

namespace conjtok {

// Conjugation types observed per lemma in an analyzed training corpus.
// Conjugation tokens omit the type, so decoding recovers it from here.
// Entries also record the POS they were observed under: a token's POS
// restricts the candidate types (the type name alone cannot separate, say,
// adjectival auxiliaries from true adjectives).
class LemmaLexicon {
public:
  struct Entry {
    std::string conj_type;
    std::string pos_coarse;
    std::uint64_t count = 0;

    bool operator==(const Entry&) const = default;
  };

  void observe(const Morpheme& m);
  void observe_sentence(const AnalyzedSentence& s);

  // Entries for a lemma sorted by count descending, ties broken
  // lexicographically by conj_type. Empty when the lemma is unknown.
  std::vector<Entry> lookup(std::string_view lemma) const;

  // As lookup, restricted to entries observed under pos_coarse.
  std::vector<Entry> lookup(std::string_view lemma, std::string_view pos_coarse) const;

  bool contains(std::string_view lemma) const;
  std::size_t size() const { return counts_.size(); }
  bool empty() const { return counts_.empty(); }

  // File format: lemma<TAB>conj_type<TAB>pos<TAB>count, UTF-8.
  void save(std::ostream& out) const;
  static LemmaLexicon load(std::istream& in);
  void save_file(const std::string& path) const;
  static LemmaLexicon load_file(const std::string& path);

private:
  // lemma -> (conj_type, pos) -> count
  std::map<std::string, std::map<std::pair<std::string, std::string>, std::uint64_t>,
           std::less<>>
      counts_;
};

}  // namespace conjtok
