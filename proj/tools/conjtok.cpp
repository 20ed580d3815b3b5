#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <mutex>
#include <optional>
#include <sstream>

#include "conjtok/bpe.hpp"
#include "conjtok/decoder.hpp"
#include "conjtok/encoder.hpp"
#include "conjtok/errors.hpp"
#include "conjtok/lexicon.hpp"
#include "conjtok/mecab_parser.hpp"
#include "conjtok/parallel.hpp"
#include "conjtok/vocab.hpp"

namespace {

using namespace conjtok;

constexpr int kExitConfig = 1;
constexpr int kExitData = 2;
constexpr int kExitThreshold = 3;

struct ThresholdFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ConfigFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string scheme = "conj-token";
  std::string placement;
  std::string table = "data/conjugation_rules.tsv";
  std::string endings;
  std::string lexicon;
  std::string merges;
  std::size_t num_merges = 2000;
  std::size_t vocab_size = 5000;
  std::size_t reserved = 2;
  std::string tag_map;
  unsigned threads = 0;
  std::string report;
  std::string input;
  std::string output;
  std::string vocab_file;
  std::string format = "plain";
  double threshold = 1.0;
};

std::ifstream input_file;
std::ofstream output_file;

std::istream& open_input(const Options& opt) {
  if (opt.input.empty() || opt.input == "-") return std::cin;
  input_file.open(opt.input);
  if (!input_file) throw std::runtime_error("cannot open input " + opt.input);
  return input_file;
}

std::ostream& open_output(const Options& opt) {
  if (opt.output.empty() || opt.output == "-") return std::cout;
  output_file.open(opt.output);
  if (!output_file) throw std::runtime_error("cannot write output " + opt.output);
  return output_file;
}

std::string endings_path(const Options& opt) {
  if (!opt.endings.empty()) return opt.endings;
  auto slash = opt.table.find_last_of('/');
  std::string dir = slash == std::string::npos ? "" : opt.table.substr(0, slash + 1);
  return dir + "lemma_endings.tsv";
}

ConjugationTable load_table(const Options& opt) {
  return ConjugationTable::load_files(opt.table, endings_path(opt));
}

std::optional<TagMap> load_tag_map(const Options& opt) {
  if (opt.tag_map.empty()) return std::nullopt;
  return TagMap::load_file(opt.tag_map);
}

Scheme parse_scheme(const Options& opt) {
  if (opt.scheme == "pos") {
    if (opt.placement.empty())
      throw ConfigFailure("--scheme pos requires --placement");
    switch (placement_from_string(opt.placement)) {
      case Placement::Suffix: return Scheme::PosSuffix;
      case Placement::Prefix: return Scheme::PosPrefix;
      case Placement::Circumfix: return Scheme::PosCircumfix;
    }
  }
  Scheme scheme = scheme_from_string(opt.scheme);
  if (!opt.placement.empty()) {
    Placement p = placement_from_string(opt.placement);
    auto declared = scheme_placement(scheme);
    if (!declared || *declared != p)
      throw ConfigFailure("--placement contradicts --scheme " + opt.scheme);
  }
  return scheme;
}

// Reads blocks of complete analyzed sentences.
class SentenceBlockReader {
public:
  explicit SentenceBlockReader(std::istream& in) : in_(in) {}

  std::vector<AnalyzedSentence> next(std::size_t max_sentences) {
    std::vector<AnalyzedSentence> block;
    AnalyzedSentence sentence;
    std::string line;
    bool open = false;
    while (block.size() < max_sentences && std::getline(in_, line)) {
      ++line_number_;
      if (!line.empty() && line.back() == '\r') line.pop_back();
      if (line == kEosLine) {
        block.push_back(std::move(sentence));
        sentence = AnalyzedSentence{};
        open = false;
        continue;
      }
      if (line.empty()) continue;
      sentence.morphemes.push_back(parse_mecab_line(line, line_number_));
      open = true;
    }
    if (!in_ && open) throw MissingEosError(line_number_);
    return block;
  }

private:
  std::istream& in_;
  std::size_t line_number_ = 0;
};

std::vector<std::string> split_ws(const std::string& line) {
  std::vector<std::string> out;
  std::istringstream in(line);
  std::string word;
  while (in >> word) out.push_back(std::move(word));
  return out;
}

std::string join_ws(const std::vector<std::string>& words) {
  std::string out;
  for (const auto& w : words) {
    if (!out.empty()) out += ' ';
    out += w;
  }
  return out;
}

constexpr std::size_t kBlockSentences = 256;

void write_report(const Options& opt, const std::string& text) {
  if (opt.report.empty()) return;
  std::ofstream out(opt.report);
  if (!out) throw std::runtime_error("cannot write report " + opt.report);
  out << text;
}

int run_encode(const Options& opt) {
  Scheme scheme = parse_scheme(opt);
  auto tags = load_tag_map(opt);
  const TagMap* tag_map = tags ? &*tags : nullptr;
  std::istream& in = open_input(opt);
  std::ostream& out = open_output(opt);

  if (scheme == Scheme::ConjFeature) out << factor_file_header() << '\n';

  SentenceBlockReader reader(in);
  std::function<std::vector<AnalyzedSentence>()> next = [&] {
    return reader.next(kBlockSentences);
  };
  std::function<std::vector<std::string>(std::vector<AnalyzedSentence>&&)> fn =
      [&](std::vector<AnalyzedSentence>&& block) {
        std::vector<std::string> lines;
        lines.reserve(block.size());
        for (const auto& s : block) {
          if (scheme == Scheme::Baseline)
            lines.push_back(s.surface_text());
          else if (scheme == Scheme::ConjFeature)
            lines.push_back(render_factor_line(encode_factors(s)));
          else
            lines.push_back(render_token_line(encode(s, scheme), tag_map));
        }
        return lines;
      };
  std::function<void(std::vector<std::string>&&)> sink =
      [&](std::vector<std::string>&& lines) {
        for (auto& line : lines) out << line << '\n';
      };
  ordered_parallel_map<AnalyzedSentence, std::string>(next, fn, sink, opt.threads);
  return 0;
}

int run_decode(const Options& opt) {
  Scheme scheme = parse_scheme(opt);
  if (scheme == Scheme::Baseline || scheme == Scheme::ConjFeature)
    throw ConfigFailure("decode applies to token schemes only");
  auto table = load_table(opt);
  if (opt.lexicon.empty()) throw ConfigFailure("--lexicon is required for decode");
  auto lexicon = LemmaLexicon::load_file(opt.lexicon);
  auto tags = load_tag_map(opt);
  const TagMap* tag_map = tags ? &*tags : nullptr;
  std::istream& in = open_input(opt);
  std::ostream& out = open_output(opt);

  DecodeReport total;
  std::mutex report_mutex;

  std::function<std::vector<std::string>()> next = [&] {
    std::vector<std::string> block;
    std::string line;
    while (block.size() < kBlockSentences && std::getline(in, line)) {
      if (!line.empty() && line.back() == '\r') line.pop_back();
      block.push_back(std::move(line));
    }
    return block;
  };
  std::function<std::vector<std::string>(std::vector<std::string>&&)> fn =
      [&](std::vector<std::string>&& block) {
        DecodeReport local;
        std::vector<std::string> lines;
        lines.reserve(block.size());
        for (const auto& line : block) {
          auto words = decode(parse_token_line(line, tag_map), scheme, table, lexicon, &local);
          lines.push_back(join_ws(words));
        }
        std::lock_guard<std::mutex> lock(report_mutex);
        total.merge(local);
        return lines;
      };
  std::function<void(std::vector<std::string>&&)> sink =
      [&](std::vector<std::string>&& lines) {
        for (auto& line : lines) out << line << '\n';
      };
  ordered_parallel_map<std::string, std::string>(next, fn, sink, opt.threads);

  std::ostringstream report;
  total.write(report);
  write_report(opt, report.str());
  std::cerr << report.str();
  return 0;
}

int run_build_lexicon(const Options& opt) {
  std::istream& in = open_input(opt);
  std::ostream& out = open_output(opt);
  LemmaLexicon lexicon;
  SentenceBlockReader reader(in);
  while (true) {
    auto block = reader.next(kBlockSentences);
    if (block.empty()) break;
    for (const auto& s : block) lexicon.observe_sentence(s);
  }
  lexicon.save(out);
  std::cerr << "lexicon_lemmas=" << lexicon.size() << '\n';
  return 0;
}

std::map<std::string, std::uint64_t> count_input_words(const Options& opt, std::istream& in) {
  std::map<std::string, std::uint64_t> counts;
  if (opt.format == "mecab") {
    SentenceBlockReader reader(in);
    while (true) {
      auto block = reader.next(kBlockSentences);
      if (block.empty()) break;
      for (const auto& s : block)
        for (const auto& m : s.morphemes) ++counts[m.surface];
    }
  } else {
    std::string line;
    while (std::getline(in, line))
      for (auto& w : split_ws(line)) ++counts[w];
  }
  return counts;
}

int run_bpe_learn(const Options& opt) {
  std::istream& in = open_input(opt);
  auto counts = count_input_words(opt, in);
  auto table = bpe::learn(counts, opt.num_merges);
  std::ostream& out = open_output(opt);
  table.save(out);
  std::cerr << "merges_learned=" << table.size() << '\n';
  return 0;
}

int run_bpe_apply(const Options& opt) {
  if (opt.merges.empty()) throw ConfigFailure("--merges is required");
  auto table = bpe::MergeTable::load_file(opt.merges);
  std::istream& in = open_input(opt);
  std::ostream& out = open_output(opt);

  std::function<std::vector<std::string>()> next = [&] {
    std::vector<std::string> block;
    std::string line;
    while (block.size() < kBlockSentences && std::getline(in, line)) {
      if (!line.empty() && line.back() == '\r') line.pop_back();
      block.push_back(std::move(line));
    }
    return block;
  };
  std::function<std::vector<std::string>(std::vector<std::string>&&)> fn =
      [&](std::vector<std::string>&& block) {
        std::vector<std::string> lines;
        lines.reserve(block.size());
        for (const auto& line : block)
          lines.push_back(join_ws(bpe::apply_sentence(split_ws(line), table)));
        return lines;
      };
  std::function<void(std::vector<std::string>&&)> sink =
      [&](std::vector<std::string>&& lines) {
        for (auto& line : lines) out << line << '\n';
      };
  ordered_parallel_map<std::string, std::string>(next, fn, sink, opt.threads);
  return 0;
}

int run_bpe_decode(const Options& opt) {
  std::istream& in = open_input(opt);
  std::ostream& out = open_output(opt);
  std::uint64_t dangling = 0;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    out << join_ws(bpe::decode(split_ws(line), "@@", &dangling)) << '\n';
  }
  if (dangling > 0) std::cerr << "dangling_markers=" << dangling << '\n';
  return 0;
}

int run_vocab(const Options& opt) {
  std::istream& in = open_input(opt);
  auto counts = count_input_words(opt, in);
  auto vocab = Vocabulary::build(counts, opt.vocab_size, opt.reserved);
  std::ostream& out = open_output(opt);
  vocab.save(out);
  std::cerr << "vocab_entries=" << vocab.size() << '\n';
  return 0;
}

int run_coverage(const Options& opt) {
  if (opt.vocab_file.empty()) throw ConfigFailure("--vocab is required");
  auto vocab = Vocabulary::load_file(opt.vocab_file);
  std::istream& in = open_input(opt);
  TokenCounts counts;
  std::string line;
  while (std::getline(in, line)) counts.add(parse_token_line(line));
  auto report = coverage(vocab, counts, scheme_from_string(opt.scheme));
  std::ostringstream text;
  report.write(text);
  write_report(opt, text.str());
  std::cout << text.str();
  return 0;
}

int run_compare(const Options& opt) {
  std::istream& in = open_input(opt);
  std::vector<AnalyzedSentence> corpus;
  SentenceBlockReader reader(in);
  while (true) {
    auto block = reader.next(kBlockSentences);
    if (block.empty()) break;
    corpus.insert(corpus.end(), std::make_move_iterator(block.begin()),
                  std::make_move_iterator(block.end()));
  }

  std::ostringstream report;
  std::cout << "scheme            types     oov  type_cov token_cov  retained predicates\n";
  for (Scheme scheme : {Scheme::Baseline, Scheme::ConjToken, Scheme::ConjFeature,
                        Scheme::PosSuffix, Scheme::PosPrefix, Scheme::PosCircumfix}) {
    TokenCounts counts;
    for (const auto& s : corpus) {
      if (scheme == Scheme::ConjFeature) {
        std::vector<std::string> lemmas;
        for (const auto& b : encode_factors(s)) lemmas.push_back(b.lemma);
        counts.add_words(lemmas);
      } else {
        counts.add(encode(s, scheme));
      }
    }
    auto vocab = Vocabulary::build(counts.counts(), opt.vocab_size, opt.reserved);
    auto cov = coverage(vocab, counts, scheme);
    auto comp = compression(corpus, scheme);

    char buffer[160];
    std::snprintf(buffer, sizeof(buffer), "%-15s %7zu %7zu %9.4f %9.4f %9.4f %7zu/%zu\n",
                  std::string(scheme_name(scheme)).c_str(), cov.distinct_types,
                  cov.oov_types, cov.type_coverage, cov.token_coverage, comp.retained(),
                  comp.predicate_lemma_types, comp.predicate_surface_types);
    std::cout << buffer;

    report << "[" << scheme_name(scheme) << "]\n";
    cov.write(report);
    comp.write(report);
  }
  write_report(opt, report.str());
  return 0;
}

int run_roundtrip(const Options& opt) {
  auto table = load_table(opt);
  std::istream& in = open_input(opt);
  std::vector<AnalyzedSentence> corpus;
  SentenceBlockReader reader(in);
  while (true) {
    auto block = reader.next(kBlockSentences);
    if (block.empty()) break;
    corpus.insert(corpus.end(), std::make_move_iterator(block.begin()),
                  std::make_move_iterator(block.end()));
  }

  LemmaLexicon lexicon;
  if (!opt.lexicon.empty()) {
    lexicon = LemmaLexicon::load_file(opt.lexicon);
  } else {
    for (const auto& s : corpus) lexicon.observe_sentence(s);
  }

  RoundtripAudit audit;
  for (const auto& s : corpus)
    for (const auto& m : s.morphemes)
      if (is_predicate(m)) audit.add(m, table);

  std::ostringstream report;
  report << "inflect.total=" << audit.total << '\n'
         << "inflect.ok=" << audit.ok << '\n'
         << "inflect.accuracy=" << audit.accuracy() << '\n';
  for (const auto& [type, tally] : audit.per_type) {
    report << "inflect.per_type." << type << '=' << tally.ok << '/' << tally.total;
    if (tally.unknown_pair > 0) report << " unknown_pair=" << tally.unknown_pair;
    if (tally.mismatch > 0) report << " mismatch=" << tally.mismatch;
    report << '\n';
  }

  double min_rate = audit.accuracy();
  for (Scheme scheme : {Scheme::ConjToken, Scheme::PosSuffix, Scheme::PosPrefix,
                        Scheme::PosCircumfix}) {
    std::size_t ok = 0;
    for (const auto& s : corpus) {
      auto line = render_token_line(encode(s, scheme));
      auto words = decode(parse_token_line(line), scheme, table, lexicon);
      if (join_ws(words) == s.surface_text()) ++ok;
    }
    double rate = corpus.empty() ? 1.0 : double(ok) / double(corpus.size());
    min_rate = std::min(min_rate, rate);
    report << "roundtrip." << scheme_name(scheme) << '=' << ok << '/' << corpus.size()
           << " rate=" << rate << '\n';
  }

  std::cout << report.str();
  write_report(opt, report.str());
  if (min_rate < opt.threshold)
    throw ThresholdFailure("round-trip rate " + std::to_string(min_rate) +
                           " below threshold " + std::to_string(opt.threshold));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Lossless conjugation-aware tokenization toolkit for Japanese NMT corpora"};
  app.require_subcommand(1);
  app.set_config("--config", "", "Read options from an INI file");

  Options opt;
  std::string command;

  auto add_io = [&](CLI::App* sub) {
    sub->add_option("--input", opt.input, "Input path (default: stdin)");
    sub->add_option("--output", opt.output, "Output path (default: stdout)");
    sub->add_option("--threads", opt.threads,
                    "Worker threads, 0 = all processors (default)");
    sub->add_option("--report", opt.report, "Write a machine-readable report here");
  };

  auto* enc = app.add_subcommand("encode", "Analyzed corpus -> token or factor stream");
  enc->add_option("--scheme", opt.scheme,
                  "baseline|conj-token|conj-feature|pos-suffix|pos-prefix|pos-circumfix");
  enc->add_option("--placement", opt.placement, "suffix|prefix|circumfix (POS schemes)");
  enc->add_option("--tag-map", opt.tag_map, "ASCII display names for special tokens");
  add_io(enc);

  auto* dec = app.add_subcommand("decode", "Token stream -> surface text");
  dec->add_option("--scheme", opt.scheme, "Token scheme used at encode time");
  dec->add_option("--placement", opt.placement, "suffix|prefix|circumfix (POS schemes)");
  dec->add_option("--table", opt.table, "Conjugation rule TSV");
  dec->add_option("--endings", opt.endings, "Lemma-ending TSV (default: next to --table)");
  dec->add_option("--lexicon", opt.lexicon, "Lemma lexicon built by build-lexicon");
  dec->add_option("--tag-map", opt.tag_map, "Tag map used at encode time");
  add_io(dec);

  auto* lex = app.add_subcommand("build-lexicon", "Analyzed corpus -> lemma lexicon");
  add_io(lex);

  auto* learn = app.add_subcommand("bpe-learn", "Learn BPE merges from tokenized text");
  learn->add_option("--num-merges", opt.num_merges, "Merge operations to learn");
  learn->add_option("--format", opt.format, "plain|mecab input format");
  add_io(learn);

  auto* apply = app.add_subcommand("bpe-apply", "Segment tokenized text with merges");
  apply->add_option("--merges", opt.merges, "Merge file from bpe-learn");
  add_io(apply);

  auto* bdec = app.add_subcommand("bpe-decode", "Undo BPE segmentation");
  add_io(bdec);

  auto* voc = app.add_subcommand("vocab", "Build a frequency vocabulary");
  voc->add_option("--vocab-size", opt.vocab_size, "Size limit incl. reserved symbols");
  voc->add_option("--reserved", opt.reserved, "Reserved symbol count");
  voc->add_option("--format", opt.format, "plain|mecab input format");
  add_io(voc);

  auto* cov = app.add_subcommand("coverage", "Coverage of a token stream vs a vocabulary");
  cov->add_option("--vocab", opt.vocab_file, "Vocabulary file");
  cov->add_option("--scheme", opt.scheme, "Scheme label for the report");
  add_io(cov);

  auto* cmp = app.add_subcommand("compare", "Side-by-side scheme report");
  cmp->add_option("--vocab-size", opt.vocab_size, "Vocabulary size for coverage");
  cmp->add_option("--reserved", opt.reserved, "Reserved symbol count");
  add_io(cmp);

  auto* rt = app.add_subcommand("roundtrip", "Corpus-wide restoration audit");
  rt->add_option("--table", opt.table, "Conjugation rule TSV");
  rt->add_option("--endings", opt.endings, "Lemma-ending TSV (default: next to --table)");
  rt->add_option("--lexicon", opt.lexicon, "Lexicon file (default: built from the corpus)");
  rt->add_option("--threshold", opt.threshold, "Fail below this round-trip rate");
  add_io(rt);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  // Resolved configuration, for reproducibility. Diagnostics stay on stderr
  // so shell pipelines remain clean.
  for (auto* sub : app.get_subcommands()) {
    std::cerr << "# " << sub->get_name();
    for (const auto* o : sub->get_options())
      if (o->count() > 0 || !o->get_default_str().empty())
        std::cerr << ' ' << o->get_name() << '='
                  << (o->count() > 0 ? o->as<std::string>() : o->get_default_str());
    std::cerr << '\n';
  }

  try {
    if (app.got_subcommand(enc)) return run_encode(opt);
    if (app.got_subcommand(dec)) return run_decode(opt);
    if (app.got_subcommand(lex)) return run_build_lexicon(opt);
    if (app.got_subcommand(learn)) return run_bpe_learn(opt);
    if (app.got_subcommand(apply)) return run_bpe_apply(opt);
    if (app.got_subcommand(bdec)) return run_bpe_decode(opt);
    if (app.got_subcommand(voc)) return run_vocab(opt);
    if (app.got_subcommand(cov)) return run_coverage(opt);
    if (app.got_subcommand(cmp)) return run_compare(opt);
    if (app.got_subcommand(rt)) return run_roundtrip(opt);
  } catch (const ThresholdFailure& e) {
    std::cerr << "threshold failure: " << e.what() << '\n';
    return kExitThreshold;
  } catch (const ConfigFailure& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const std::exception& e) {
    std::cerr << "data error: " << e.what() << '\n';
    return kExitData;
  }
  std::cerr << "config error: no subcommand\n";
  return kExitConfig;
}
