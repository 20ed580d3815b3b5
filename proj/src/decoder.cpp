#include "conjtok/decoder.hpp"

#include <ostream>
#include <stdexcept>

#include "conjtok/errors.hpp"

namespace conjtok {

void DecodeReport::merge(const DecodeReport& other) {
  words += other.words;
  inflected += other.inflected;
  lemma_fallback += other.lemma_fallback;
  inflect_fallback += other.inflect_fallback;
  orphan_conj_deleted += other.orphan_conj_deleted;
  extra_conj_deleted += other.extra_conj_deleted;
  pos_deleted += other.pos_deleted;
  for (const auto& [form, n] : other.fallback_per_form) fallback_per_form[form] += n;
}

void DecodeReport::write(std::ostream& out) const {
  out << "words=" << words << '\n'
      << "inflected=" << inflected << '\n'
      << "fallback.lemma_not_in_lexicon=" << lemma_fallback << '\n'
      << "fallback.inflection_failed=" << inflect_fallback << '\n'
      << "deleted.orphan_conj=" << orphan_conj_deleted << '\n'
      << "deleted.extra_conj=" << extra_conj_deleted << '\n'
      << "deleted.pos=" << pos_deleted << '\n';
  for (const auto& [form, n] : fallback_per_form)
    out << "fallback.per_form." << form << '=' << n << '\n';
}

namespace {

// Inflects word as the conjugation token demands, or returns the word
// unchanged when the lexicon or table cannot support it (the plain-form
// fallback).
std::string restore_word(const std::string& word, const Token& conj,
                         const ConjugationTable& table, const LemmaLexicon& lexicon,
                         DecodeReport& report) {
  auto candidates = lexicon.lookup(word, conj.pos);
  if (candidates.empty()) {
    ++report.lemma_fallback;
    ++report.fallback_per_form[conj.form];
    return word;
  }
  for (const auto& entry : candidates) {
    try {
      std::string surface = table.inflect(word, entry.conj_type, conj.form);
      ++report.inflected;
      return surface;
    } catch (const UnknownConjugationError&) {
    } catch (const LemmaMismatchError&) {
    }
  }
  ++report.inflect_fallback;
  ++report.fallback_per_form[conj.form];
  return word;
}

std::vector<std::string> decode_stream(const std::vector<Token>& tokens, bool conj_after_word,
                                       const ConjugationTable& table,
                                       const LemmaLexicon& lexicon, DecodeReport& report) {
  std::vector<std::string> out;

  if (conj_after_word) {
    // A conjugation token modifies the word before it. POS tokens are
    // transparent; only the first conjugation token after a word applies.
    bool open = false;  // out.back() is a word that can still take a token
    for (const auto& token : tokens) {
      switch (token.kind) {
        case Token::Kind::Word:
          out.push_back(token.text);
          ++report.words;
          open = true;
          break;
        case Token::Kind::Pos:
          ++report.pos_deleted;
          break;
        case Token::Kind::Conj:
          if (open) {
            out.back() = restore_word(out.back(), token, table, lexicon, report);
            open = false;
          } else if (out.empty()) {
            ++report.orphan_conj_deleted;
          } else {
            ++report.extra_conj_deleted;
          }
          break;
      }
    }
  } else {
    // Prefix placement: a conjugation token modifies the next word.
    const Token* pending = nullptr;
    for (const auto& token : tokens) {
      switch (token.kind) {
        case Token::Kind::Word: {
          std::string word = token.text;
          if (pending) {
            word = restore_word(word, *pending, table, lexicon, report);
            pending = nullptr;
          }
          out.push_back(std::move(word));
          ++report.words;
          break;
        }
        case Token::Kind::Pos:
          ++report.pos_deleted;
          break;
        case Token::Kind::Conj:
          if (pending)
            ++report.extra_conj_deleted;
          else
            pending = &token;
          break;
      }
    }
    if (pending) ++report.orphan_conj_deleted;
  }

  return out;
}

}  // namespace

std::vector<std::string> decode_conj_token(const std::vector<Token>& tokens,
                                           const ConjugationTable& table,
                                           const LemmaLexicon& lexicon,
                                           DecodeReport* report) {
  DecodeReport local;
  auto out = decode_stream(tokens, /*conj_after_word=*/true, table, lexicon, local);
  if (report) report->merge(local);
  return out;
}

std::vector<std::string> decode_pos_tokens(const std::vector<Token>& tokens,
                                           Placement placement, const ConjugationTable& table,
                                           const LemmaLexicon& lexicon, DecodeReport* report) {
  DecodeReport local;
  bool conj_after_word = placement != Placement::Prefix;
  auto out = decode_stream(tokens, conj_after_word, table, lexicon, local);
  if (report) report->merge(local);
  return out;
}

std::vector<std::string> decode(const std::vector<Token>& tokens, Scheme scheme,
                                const ConjugationTable& table, const LemmaLexicon& lexicon,
                                DecodeReport* report) {
  switch (scheme) {
    case Scheme::Baseline: {
      std::vector<std::string> out;
      for (const auto& token : tokens)
        if (token.is_word()) out.push_back(token.text);
      if (report) report->words += out.size();
      return out;
    }
    case Scheme::ConjToken:
      return decode_conj_token(tokens, table, lexicon, report);
    case Scheme::PosSuffix:
      return decode_pos_tokens(tokens, Placement::Suffix, table, lexicon, report);
    case Scheme::PosPrefix:
      return decode_pos_tokens(tokens, Placement::Prefix, table, lexicon, report);
    case Scheme::PosCircumfix:
      return decode_pos_tokens(tokens, Placement::Circumfix, table, lexicon, report);
    case Scheme::ConjFeature:
      throw std::invalid_argument("conj-feature is source-side only and has no decoder");
  }
  throw std::invalid_argument("unknown scheme");
}

}  // namespace conjtok
