#pragma once

#include <string>
#include <vector>

#include "conjtok/morpheme.hpp"
#include "conjtok/token.hpp"

namespace conjtok {

// Verb, adjective or auxiliary verb with conjugation data attached.
bool is_predicate(const Morpheme& m);

// Surfaces only; the identity scheme.
std::vector<Token> encode_baseline(const AnalyzedSentence& s);

// Each predicate becomes lemma + <POS・FORM>; everything else passes
// through as its surface.
std::vector<Token> encode_conj_token(const AnalyzedSentence& s);

// Every word gets a <POS> token; predicates additionally get lemma
// substitution and a conjugation token. Ordering per placement:
//   suffix     word <conj>? <pos>
//   prefix     <pos> <conj>? word
//   circumfix  <pos> word <conj>?
std::vector<Token> encode_pos_tokens(const AnalyzedSentence& s, Placement placement);

std::vector<Token> encode(const AnalyzedSentence& s, Scheme scheme);

// Source-side factors: lemma, coarse POS, fine POS, conjugation form key
// ("*" when absent). One bundle per word position.
struct FactorBundle {
  std::string lemma;
  std::string pos_coarse;
  std::string pos_fine;
  std::string conj_form;

  bool operator==(const FactorBundle&) const = default;
};

std::vector<FactorBundle> encode_factors(const AnalyzedSentence& s);

// Factor-file line: bundles space-separated, factors joined by '|' in
// order lemma|pos|pos_fine|form. Any literal '|' inside a factor is
// replaced by '｜' to keep the line splittable.
std::string render_factor_line(const std::vector<FactorBundle>& bundles);

// Embedding dimension budget recorded in the factor-file header. The
// factors are one-hot encoded downstream; the toolkit only declares the
// sizes (lemma 492 + POS 4 + fine POS 8 + form 8 = 512).
struct FactorDims {
  int lemma = 492;
  int pos_coarse = 4;
  int pos_fine = 8;
  int conj_form = 8;
};

std::string factor_file_header(const FactorDims& dims = FactorDims{});

}  // namespace conjtok
