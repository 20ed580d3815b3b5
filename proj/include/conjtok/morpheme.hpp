#pragma once

#include <optional>
#include <string>
#include <vector>

namespace conjtok {

// One analyzed word in MeCab/IPADic terms.
//
// conj_type and conj_form are either both present or both absent; a "*"
// placeholder in the analyzer output maps to absent. An unknown-word lemma
// ("*") is stored as the surface itself so that every morpheme stays
// decodable.
struct Morpheme {
  std::string surface;
  std::string pos_coarse;
  std::string pos_fine;
  std::optional<std::string> conj_type;
  std::optional<std::string> conj_form;
  std::string lemma;

  bool has_conjugation() const { return conj_type.has_value(); }

  bool operator==(const Morpheme&) const = default;
};

// Morphemes of one sentence in original reading order. May be empty.
struct AnalyzedSentence {
  std::vector<Morpheme> morphemes;

  bool empty() const { return morphemes.empty(); }
  std::size_t size() const { return morphemes.size(); }

  // Surfaces joined by a single space (the pre-tokenized source text).
  std::string surface_text() const;

  bool operator==(const AnalyzedSentence&) const = default;
};

// Verbs, adjectives and auxiliary verbs carry conjugation; everything the
// encoding schemes treat as a predicate.
inline constexpr const char* kPosVerb = "動詞";
inline constexpr const char* kPosAdjective = "形容詞";
inline constexpr const char* kPosAuxVerb = "助動詞";

}  // namespace conjtok
