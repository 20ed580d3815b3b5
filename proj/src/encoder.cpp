#include "conjtok/encoder.hpp"

#include <stdexcept>

namespace conjtok {

bool is_predicate(const Morpheme& m) {
  if (!m.has_conjugation()) return false;
  return m.pos_coarse == kPosVerb || m.pos_coarse == kPosAdjective ||
         m.pos_coarse == kPosAuxVerb;
}

std::vector<Token> encode_baseline(const AnalyzedSentence& s) {
  std::vector<Token> out;
  out.reserve(s.size());
  for (const auto& m : s.morphemes) out.push_back(Token::word(m.surface));
  return out;
}

std::vector<Token> encode_conj_token(const AnalyzedSentence& s) {
  std::vector<Token> out;
  out.reserve(s.size());
  for (const auto& m : s.morphemes) {
    if (is_predicate(m)) {
      out.push_back(Token::word(m.lemma));
      out.push_back(Token::conj(m.pos_coarse, *m.conj_form));
    } else {
      out.push_back(Token::word(m.surface));
    }
  }
  return out;
}

std::vector<Token> encode_pos_tokens(const AnalyzedSentence& s, Placement placement) {
  std::vector<Token> out;
  out.reserve(2 * s.size());
  for (const auto& m : s.morphemes) {
    bool predicate = is_predicate(m);
    Token word = Token::word(predicate ? m.lemma : m.surface);
    switch (placement) {
      case Placement::Suffix:
        out.push_back(std::move(word));
        if (predicate) out.push_back(Token::conj(m.pos_coarse, *m.conj_form));
        out.push_back(Token::pos_tag(m.pos_coarse));
        break;
      case Placement::Prefix:
        out.push_back(Token::pos_tag(m.pos_coarse));
        if (predicate) out.push_back(Token::conj(m.pos_coarse, *m.conj_form));
        out.push_back(std::move(word));
        break;
      case Placement::Circumfix:
        out.push_back(Token::pos_tag(m.pos_coarse));
        out.push_back(std::move(word));
        if (predicate) out.push_back(Token::conj(m.pos_coarse, *m.conj_form));
        break;
    }
  }
  return out;
}

std::vector<Token> encode(const AnalyzedSentence& s, Scheme scheme) {
  switch (scheme) {
    case Scheme::Baseline: return encode_baseline(s);
    case Scheme::ConjToken: return encode_conj_token(s);
    case Scheme::PosSuffix: return encode_pos_tokens(s, Placement::Suffix);
    case Scheme::PosPrefix: return encode_pos_tokens(s, Placement::Prefix);
    case Scheme::PosCircumfix: return encode_pos_tokens(s, Placement::Circumfix);
    case Scheme::ConjFeature:
      throw std::invalid_argument("conj-feature encodes to factors, not tokens");
  }
  throw std::invalid_argument("unknown scheme");
}

std::vector<FactorBundle> encode_factors(const AnalyzedSentence& s) {
  std::vector<FactorBundle> out;
  out.reserve(s.size());
  for (const auto& m : s.morphemes) {
    FactorBundle b;
    b.lemma = is_predicate(m) ? m.lemma : m.surface;
    b.pos_coarse = m.pos_coarse;
    b.pos_fine = m.pos_fine;
    b.conj_form = m.conj_form.value_or("*");
    out.push_back(std::move(b));
  }
  return out;
}

namespace {

void append_factor(std::string& line, const std::string& factor) {
  for (char c : factor) {
    if (c == '|')
      line += "｜";
    else
      line += c;
  }
}

}  // namespace

std::string render_factor_line(const std::vector<FactorBundle>& bundles) {
  std::string line;
  for (const auto& b : bundles) {
    if (!line.empty()) line += ' ';
    append_factor(line, b.lemma);
    line += '|';
    append_factor(line, b.pos_coarse);
    line += '|';
    append_factor(line, b.pos_fine);
    line += '|';
    append_factor(line, b.conj_form);
  }
  return line;
}

std::string factor_file_header(const FactorDims& dims) {
  return "# factors: lemma|pos|pos_fine|form one-hot-dims: " + std::to_string(dims.lemma) +
         "|" + std::to_string(dims.pos_coarse) + "|" + std::to_string(dims.pos_fine) + "|" +
         std::to_string(dims.conj_form);
}

}  // namespace conjtok
