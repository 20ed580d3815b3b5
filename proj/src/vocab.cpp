#include "conjtok/vocab.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <stdexcept>

#include "conjtok/encoder.hpp"
#include "conjtok/errors.hpp"

namespace conjtok {

Vocabulary Vocabulary::build(const std::map<std::string, std::uint64_t>& counts,
                             std::size_t size_limit, std::size_t reserved) {
  if (counts.empty()) throw EmptyCorpusError();
  if (size_limit <= reserved)
    throw std::invalid_argument("size_limit must exceed reserved symbol count");

  std::vector<Entry> entries;
  entries.reserve(counts.size());
  for (const auto& [token, count] : counts)
    if (count > 0) entries.push_back(Entry{token, count});

  std::sort(entries.begin(), entries.end(), [](const Entry& a, const Entry& b) {
    if (a.count != b.count) return a.count > b.count;
    return a.token < b.token;
  });

  std::size_t capacity = size_limit - reserved;
  if (entries.size() > capacity) entries.resize(capacity);

  Vocabulary v;
  v.entries_ = std::move(entries);
  v.size_limit_ = size_limit;
  v.reserved_ = reserved;
  for (const auto& e : v.entries_) v.index_.emplace(e.token, e.count);
  return v;
}

bool Vocabulary::contains(std::string_view token) const {
  return index_.find(token) != index_.end();
}

void Vocabulary::save(std::ostream& out) const {
  for (const auto& e : entries_) out << e.token << '\t' << e.count << '\n';
}

Vocabulary Vocabulary::load(std::istream& in, std::size_t size_limit, std::size_t reserved) {
  Vocabulary v;
  v.reserved_ = reserved;
  std::string line;
  std::size_t line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    std::size_t tab = line.find('\t');
    if (tab == std::string::npos)
      throw std::invalid_argument("vocabulary line " + std::to_string(line_number) +
                                  ": expected token<TAB>count");
    Entry e;
    e.token = line.substr(0, tab);
    try {
      e.count = std::stoull(line.substr(tab + 1));
    } catch (const std::exception&) {
      throw std::invalid_argument("vocabulary line " + std::to_string(line_number) +
                                  ": bad count");
    }
    v.index_.emplace(e.token, e.count);
    v.entries_.push_back(std::move(e));
  }
  v.size_limit_ = size_limit == 0 ? v.entries_.size() + reserved : size_limit;
  return v;
}

void Vocabulary::save_file(const std::string& path) const {
  std::ofstream out(path);
  if (!out) throw std::invalid_argument("cannot write vocabulary " + path);
  save(out);
}

Vocabulary Vocabulary::load_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open vocabulary " + path);
  return load(in);
}

void TokenCounts::add(const std::vector<Token>& tokens) {
  for (const Token& t : tokens) {
    std::string key = render_token(t);
    auto [it, inserted] = counts_.emplace(std::move(key), 0);
    if (inserted && !t.is_word()) ++special_types_;
    ++it->second;
    ++running_total_;
  }
}

void TokenCounts::add_words(const std::vector<std::string>& words) {
  for (const auto& w : words) {
    ++counts_[w];
    ++running_total_;
  }
}

void CoverageReport::write(std::ostream& out) const {
  out << "scheme=" << scheme_name(scheme) << '\n'
      << "distinct_types=" << distinct_types << '\n'
      << "oov_types=" << oov_types << '\n'
      << "special_token_types=" << special_token_count << '\n'
      << "type_coverage=" << type_coverage << '\n'
      << "token_coverage=" << token_coverage << '\n';
}

CoverageReport coverage(const Vocabulary& vocab, const TokenCounts& corpus, Scheme scheme) {
  CoverageReport report;
  report.scheme = scheme;
  report.distinct_types = corpus.distinct();
  report.special_token_count = corpus.distinct_special();

  std::uint64_t covered_tokens = 0;
  std::size_t covered_types = 0;
  for (const auto& [token, count] : corpus.counts()) {
    if (vocab.contains(token)) {
      ++covered_types;
      covered_tokens += count;
    }
  }
  report.oov_types = report.distinct_types - covered_types;
  report.type_coverage = report.distinct_types == 0
                             ? 1.0
                             : double(covered_types) / double(report.distinct_types);
  report.token_coverage = corpus.running_total() == 0
                              ? 1.0
                              : double(covered_tokens) / double(corpus.running_total());
  return report;
}

void CompressionReport::write(std::ostream& out) const {
  out << "scheme=" << scheme_name(scheme) << '\n'
      << "baseline_types=" << baseline_types << '\n'
      << "encoded_types=" << encoded_types << '\n'
      << "encoded_special_types=" << encoded_special_types << '\n'
      << "retained=" << retained() << '\n'
      << "reduction=" << reduction() << '\n'
      << "predicate_surface_types=" << predicate_surface_types << '\n'
      << "predicate_lemma_types=" << predicate_lemma_types << '\n'
      << "predicate_retained=" << predicate_retained() << '\n'
      << "predicate_reduction=" << predicate_reduction() << '\n';
}

CompressionReport compression(const std::vector<AnalyzedSentence>& corpus, Scheme scheme) {
  CompressionReport report;
  report.scheme = scheme;

  TokenCounts baseline;
  TokenCounts encoded;
  std::map<std::string, bool> predicate_surfaces, predicate_lemmas;

  for (const auto& sentence : corpus) {
    baseline.add(encode_baseline(sentence));
    if (scheme == Scheme::ConjFeature) {
      std::vector<std::string> lemmas;
      for (const auto& bundle : encode_factors(sentence)) lemmas.push_back(bundle.lemma);
      encoded.add_words(lemmas);
    } else {
      encoded.add(encode(sentence, scheme));
    }
    for (const auto& m : sentence.morphemes) {
      if (is_predicate(m)) {
        predicate_surfaces.emplace(m.surface, true);
        predicate_lemmas.emplace(m.lemma, true);
      }
    }
  }

  report.baseline_types = baseline.distinct();
  report.encoded_types = encoded.distinct();
  report.encoded_special_types = encoded.distinct_special();
  report.predicate_surface_types = predicate_surfaces.size();
  report.predicate_lemma_types = predicate_lemmas.size();
  return report;
}

}  // namespace conjtok
