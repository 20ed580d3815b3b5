#include "conjtok/lexicon.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <stdexcept>

#include "conjtok/encoder.hpp"

namespace conjtok {

void LemmaLexicon::observe(const Morpheme& m) {
  if (!is_predicate(m)) return;
  counts_[m.lemma][{*m.conj_type, m.pos_coarse}] += 1;
}

void LemmaLexicon::observe_sentence(const AnalyzedSentence& s) {
  for (const auto& m : s.morphemes) observe(m);
}

namespace {

void sort_entries(std::vector<LemmaLexicon::Entry>& entries) {
  std::sort(entries.begin(), entries.end(),
            [](const LemmaLexicon::Entry& a, const LemmaLexicon::Entry& b) {
              if (a.count != b.count) return a.count > b.count;
              if (a.conj_type != b.conj_type) return a.conj_type < b.conj_type;
              return a.pos_coarse < b.pos_coarse;
            });
}

}  // namespace

std::vector<LemmaLexicon::Entry> LemmaLexicon::lookup(std::string_view lemma) const {
  std::vector<Entry> out;
  auto it = counts_.find(lemma);
  if (it == counts_.end()) return out;
  for (const auto& [key, count] : it->second)
    out.push_back(Entry{key.first, key.second, count});
  sort_entries(out);
  return out;
}

std::vector<LemmaLexicon::Entry> LemmaLexicon::lookup(std::string_view lemma,
                                                      std::string_view pos_coarse) const {
  std::vector<Entry> out;
  auto it = counts_.find(lemma);
  if (it == counts_.end()) return out;
  for (const auto& [key, count] : it->second)
    if (key.second == pos_coarse) out.push_back(Entry{key.first, key.second, count});
  sort_entries(out);
  return out;
}

bool LemmaLexicon::contains(std::string_view lemma) const {
  return counts_.find(lemma) != counts_.end();
}

void LemmaLexicon::save(std::ostream& out) const {
  for (const auto& [lemma, cell] : counts_)
    for (const auto& [key, count] : cell)
      out << lemma << '\t' << key.first << '\t' << key.second << '\t' << count << '\n';
}

LemmaLexicon LemmaLexicon::load(std::istream& in) {
  LemmaLexicon lex;
  std::string line;
  std::size_t line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    std::size_t t1 = line.find('\t');
    std::size_t t2 = t1 == std::string::npos ? t1 : line.find('\t', t1 + 1);
    std::size_t t3 = t2 == std::string::npos ? t2 : line.find('\t', t2 + 1);
    if (t3 == std::string::npos)
      throw std::invalid_argument("lexicon line " + std::to_string(line_number) +
                                  ": expected lemma<TAB>type<TAB>pos<TAB>count");
    std::string lemma = line.substr(0, t1);
    std::string type = line.substr(t1 + 1, t2 - t1 - 1);
    std::string pos = line.substr(t2 + 1, t3 - t2 - 1);
    std::uint64_t count = 0;
    try {
      count = std::stoull(line.substr(t3 + 1));
    } catch (const std::exception&) {
      throw std::invalid_argument("lexicon line " + std::to_string(line_number) +
                                  ": bad count");
    }
    lex.counts_[lemma][{type, pos}] += count;
  }
  return lex;
}

void LemmaLexicon::save_file(const std::string& path) const {
  std::ofstream out(path);
  if (!out) throw std::invalid_argument("cannot write lexicon " + path);
  save(out);
}

LemmaLexicon LemmaLexicon::load_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open lexicon " + path);
  return load(in);
}

}  // namespace conjtok
