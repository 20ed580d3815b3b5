#include "conjtok/mecab_parser.hpp"

#include <istream>

#include "conjtok/errors.hpp"
#include "conjtok/utf8.hpp"

namespace conjtok {

namespace {

constexpr std::string_view kStar = "*";

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    std::size_t pos = s.find(sep, start);
    if (pos == std::string_view::npos) {
      out.push_back(s.substr(start));
      return out;
    }
    out.push_back(s.substr(start, pos - start));
    start = pos + 1;
  }
}

}  // namespace

std::string AnalyzedSentence::surface_text() const {
  std::string out;
  for (const auto& m : morphemes) {
    if (!out.empty()) out += ' ';
    out += m.surface;
  }
  return out;
}

Morpheme parse_mecab_line(std::string_view line, std::size_t line_number) {
  if (!utf8::valid(line))
    throw MalformedLineError("invalid UTF-8 byte sequence", line_number);

  std::size_t tab = line.find('\t');
  if (tab == std::string_view::npos)
    throw MalformedLineError("no tab between surface and features", line_number);

  std::string_view surface = line.substr(0, tab);
  if (surface.empty())
    throw MalformedLineError("empty surface", line_number);

  auto features = split(line.substr(tab + 1), ',');
  if (features.size() < 7)
    throw MalformedLineError("expected at least 7 features, got " +
                                 std::to_string(features.size()),
                             line_number);

  Morpheme m;
  m.surface = std::string(surface);
  m.pos_coarse = std::string(features[0]);
  m.pos_fine = std::string(features[1]);
  if (features[4] != kStar) m.conj_type = std::string(features[4]);
  if (features[5] != kStar) m.conj_form = std::string(features[5]);
  // conj_type and conj_form come as a pair in IPADic output; a lone value
  // means corrupt data.
  if (m.conj_type.has_value() != m.conj_form.has_value())
    throw MalformedLineError("conjugation type/form present without the other",
                             line_number);
  m.lemma = features[6] == kStar ? m.surface : std::string(features[6]);
  return m;
}

void for_each_sentence(std::istream& in,
                       const std::function<void(AnalyzedSentence&&)>& sink) {
  AnalyzedSentence sentence;
  std::string line;
  std::size_t line_number = 0;
  bool open = false;
  while (std::getline(in, line)) {
    ++line_number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line == kEosLine) {
      sink(std::move(sentence));
      sentence = AnalyzedSentence{};
      open = false;
      continue;
    }
    if (line.empty()) continue;  // stray blank lines are ignored
    sentence.morphemes.push_back(parse_mecab_line(line, line_number));
    open = true;
  }
  if (open) throw MissingEosError(line_number);
}

std::vector<AnalyzedSentence> parse_corpus(std::istream& in) {
  std::vector<AnalyzedSentence> out;
  for_each_sentence(in, [&](AnalyzedSentence&& s) { out.push_back(std::move(s)); });
  return out;
}

AnalyzedSentence parse_plain_line(std::string_view line) {
  AnalyzedSentence s;
  for (std::string_view word : split(line, ' ')) {
    if (word.empty()) continue;
    Morpheme m;
    m.surface = std::string(word);
    m.pos_coarse = "未知語";
    m.pos_fine = "*";
    m.lemma = m.surface;
    s.morphemes.push_back(std::move(m));
  }
  return s;
}

}  // namespace conjtok
