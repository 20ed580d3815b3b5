#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "conjtok/conjugation.hpp"
#include "conjtok/lexicon.hpp"
#include "conjtok/token.hpp"

namespace conjtok {

// Tallies of the fallback rules taken while decoding. Decoding itself never
// fails; model output is arbitrary.
struct DecodeReport {
  std::uint64_t words = 0;               // words emitted
  std::uint64_t inflected = 0;           // conjugation tokens applied
  std::uint64_t lemma_fallback = 0;      // word kept as-is: lemma not in lexicon
  std::uint64_t inflect_fallback = 0;    // word kept as-is: no candidate type worked
  std::uint64_t orphan_conj_deleted = 0; // conjugation token with no word to attach to
  std::uint64_t extra_conj_deleted = 0;  // second+ conjugation token after one word
  std::uint64_t pos_deleted = 0;         // POS tokens stripped

  // Fallbacks (lemma_fallback + inflect_fallback) per conjugation form key.
  std::map<std::string, std::uint64_t> fallback_per_form;

  void merge(const DecodeReport& other);
  void write(std::ostream& out) const;  // key=value lines
};

// Restores surface words from a conjugation-token stream. A word followed
// by a conjugation token is inflected via the lexicon-recovered type; a
// bare word passes through (it already is the plain form); orphan special
// tokens are deleted.
std::vector<std::string> decode_conj_token(const std::vector<Token>& tokens,
                                           const ConjugationTable& table,
                                           const LemmaLexicon& lexicon,
                                           DecodeReport* report = nullptr);

// As decode_conj_token, with <POS> tokens stripped first. placement tells
// which side of a word its conjugation token sits on (prefix places it
// before the word).
std::vector<std::string> decode_pos_tokens(const std::vector<Token>& tokens,
                                           Placement placement,
                                           const ConjugationTable& table,
                                           const LemmaLexicon& lexicon,
                                           DecodeReport* report = nullptr);

std::vector<std::string> decode(const std::vector<Token>& tokens, Scheme scheme,
                                const ConjugationTable& table, const LemmaLexicon& lexicon,
                                DecodeReport* report = nullptr);

}  // namespace conjtok
