#pragma once

#include <functional>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "conjtok/morpheme.hpp"

namespace conjtok {

// Parses one MeCab default-format line:
//   surface<TAB>pos1,pos2,pos3,pos4,conj_type,conj_form,lemma[,reading,pron]
// "*" feature slots map to absent (conjugation) or are defaulted (lemma =
// surface). Fields past the lemma are never inspected.
//
// Throws MalformedLineError; line_number is used for error reporting only.
Morpheme parse_mecab_line(std::string_view line, std::size_t line_number = 0);

// Reads a whole analyzed corpus: morpheme lines separated by EOS lines, one
// AnalyzedSentence per EOS. Throws MalformedLineError / MissingEosError.
std::vector<AnalyzedSentence> parse_corpus(std::istream& in);

// Streaming variant: invokes sink once per sentence, in input order.
void for_each_sentence(std::istream& in,
                       const std::function<void(AnalyzedSentence&&)>& sink);

// Pre-tokenized plain format: space-separated surfaces, one sentence per
// line. Produces morphemes with unknown POS and no conjugation data, for
// baseline/BPE paths that need no morphology.
AnalyzedSentence parse_plain_line(std::string_view line);

inline constexpr const char* kEosLine = "EOS";

}  // namespace conjtok
