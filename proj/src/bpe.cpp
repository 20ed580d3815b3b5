#include "conjtok/bpe.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <queue>
#include <set>
#include <unordered_map>
#include <stdexcept>

#include "conjtok/errors.hpp"
#include "conjtok/utf8.hpp"

namespace conjtok::bpe {

namespace {

constexpr std::string_view kEndOfWord = "</w>";

struct Symbol {
  std::string text;
  bool final = false;
};

std::string pair_key(std::string_view left, std::string_view right, bool right_final) {
  std::string key(left);
  key += ' ';
  key += right;
  if (right_final) key += kEndOfWord;
  return key;
}

std::vector<Symbol> split_word(std::string_view word) {
  std::vector<Symbol> symbols;
  for (auto& cp : utf8::codepoints(word)) symbols.push_back(Symbol{std::move(cp), false});
  if (!symbols.empty()) symbols.back().final = true;
  return symbols;
}

// Merges every non-overlapping occurrence left-to-right.
void merge_in_word(std::vector<Symbol>& symbols, const Merge& m) {
  std::vector<Symbol> out;
  out.reserve(symbols.size());
  std::size_t i = 0;
  while (i < symbols.size()) {
    if (i + 1 < symbols.size() && !symbols[i].final && symbols[i].text == m.left &&
        symbols[i + 1].text == m.right && symbols[i + 1].final == m.right_final) {
      out.push_back(Symbol{m.left + m.right, m.right_final});
      i += 2;
    } else {
      out.push_back(std::move(symbols[i]));
      ++i;
    }
  }
  symbols = std::move(out);
}

}  // namespace

MergeTable::MergeTable(std::vector<Merge> merges, std::string marker)
  : merges_(std::move(merges)), marker_(std::move(marker)) {
  index();
}

void MergeTable::index() {
  rank_.clear();
  for (std::size_t i = 0; i < merges_.size(); ++i) {
    const Merge& m = merges_[i];
    if (!rank_.emplace(pair_key(m.left, m.right, m.right_final), i).second)
      throw std::invalid_argument("duplicate merge pair: " +
                                  pair_key(m.left, m.right, m.right_final));
  }
}

std::size_t MergeTable::rank(std::string_view left, std::string_view right,
                             bool right_final) const {
  auto it = rank_.find(pair_key(left, right, right_final));
  return it == rank_.end() ? npos : it->second;
}

void MergeTable::save(std::ostream& out) const {
  out << "#version: 0.2\n";
  for (const Merge& m : merges_) {
    out << m.left << ' ' << m.right;
    if (m.right_final) out << kEndOfWord;
    out << '\n';
  }
}

MergeTable MergeTable::load(std::istream& in) {
  std::vector<Merge> merges;
  std::string line;
  std::size_t line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    std::size_t space = line.find(' ');
    if (space == std::string::npos || space == 0 || space + 1 == line.size())
      throw std::invalid_argument("merge file line " + std::to_string(line_number) +
                                  ": expected 'left right'");
    Merge m;
    m.left = line.substr(0, space);
    m.right = line.substr(space + 1);
    if (m.right.size() > kEndOfWord.size() &&
        m.right.compare(m.right.size() - kEndOfWord.size(), kEndOfWord.size(), kEndOfWord) ==
            0) {
      m.right.resize(m.right.size() - kEndOfWord.size());
      m.right_final = true;
    }
    merges.push_back(std::move(m));
  }
  return MergeTable(std::move(merges));
}

void MergeTable::save_file(const std::string& path) const {
  std::ofstream out(path);
  if (!out) throw std::invalid_argument("cannot write merge file " + path);
  save(out);
}

MergeTable MergeTable::load_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open merge file " + path);
  return load(in);
}

MergeTable learn(const std::map<std::string, std::uint64_t>& word_counts,
                 std::size_t num_merges) {
  struct Word {
    std::vector<Symbol> symbols;
    std::uint64_t count;
  };

  std::vector<Word> words;
  for (const auto& [text, count] : word_counts) {
    if (text.empty() || count == 0) continue;
    words.push_back(Word{split_word(escape_word(text)), count});
  }
  if (words.empty()) throw EmptyCorpusError();

  struct PairStat {
    std::int64_t count = 0;
    Merge merge;
    std::set<std::size_t> word_ids;
  };
  std::unordered_map<std::string, PairStat> pairs;

  auto add_word_pairs = [&](std::size_t word_id, std::int64_t sign) {
    const Word& w = words[word_id];
    for (std::size_t i = 0; i + 1 < w.symbols.size(); ++i) {
      const Symbol& a = w.symbols[i];
      const Symbol& b = w.symbols[i + 1];
      std::string key = pair_key(a.text, b.text, b.final);
      PairStat& stat = pairs[key];
      stat.count += sign * std::int64_t(w.count);
      if (sign > 0) {
        stat.merge = Merge{a.text, b.text, b.final};
        stat.word_ids.insert(word_id);
      }
    }
  };
  for (std::size_t id = 0; id < words.size(); ++id) add_word_pairs(id, +1);

  // Max count first, lexicographically smallest key on ties. The heap is
  // lazy: stale entries are dropped when popped.
  using HeapEntry = std::pair<std::int64_t, std::string>;
  auto heap_less = [](const HeapEntry& a, const HeapEntry& b) {
    if (a.first != b.first) return a.first < b.first;
    return a.second > b.second;
  };
  std::priority_queue<HeapEntry, std::vector<HeapEntry>, decltype(heap_less)> heap(heap_less);
  for (const auto& [key, stat] : pairs) heap.push({stat.count, key});

  std::vector<Merge> learned;
  while (learned.size() < num_merges && !heap.empty()) {
    auto [count, key] = heap.top();
    heap.pop();
    auto it = pairs.find(key);
    if (it == pairs.end() || it->second.count != count) continue;  // stale
    if (count < 2) break;

    Merge best = it->second.merge;
    std::set<std::size_t> affected = std::move(it->second.word_ids);
    learned.push_back(best);

    std::set<std::string> touched;
    for (std::size_t word_id : affected) {
      Word& w = words[word_id];
      bool contains = false;
      for (std::size_t i = 0; i + 1 < w.symbols.size(); ++i) {
        if (!w.symbols[i].final && w.symbols[i].text == best.left &&
            w.symbols[i + 1].text == best.right && w.symbols[i + 1].final == best.right_final) {
          contains = true;
          break;
        }
      }
      if (!contains) continue;  // index entry went stale after earlier merges

      for (std::size_t i = 0; i + 1 < w.symbols.size(); ++i)
        touched.insert(pair_key(w.symbols[i].text, w.symbols[i + 1].text, w.symbols[i + 1].final));
      add_word_pairs(word_id, -1);
      merge_in_word(w.symbols, best);
      add_word_pairs(word_id, +1);
      for (std::size_t i = 0; i + 1 < w.symbols.size(); ++i)
        touched.insert(pair_key(w.symbols[i].text, w.symbols[i + 1].text, w.symbols[i + 1].final));
    }

    pairs.erase(key);
    touched.erase(key);
    for (const auto& touched_key : touched) {
      auto stat = pairs.find(touched_key);
      if (stat == pairs.end()) continue;
      if (stat->second.count <= 0)
        pairs.erase(stat);
      else
        heap.push({stat->second.count, touched_key});
    }
  }

  return MergeTable(std::move(learned));
}

std::vector<std::string> apply(std::string_view word, const MergeTable& merges) {
  std::vector<Symbol> symbols = split_word(escape_word(word));

  while (symbols.size() > 1) {
    std::size_t best_rank = MergeTable::npos;
    for (std::size_t i = 0; i + 1 < symbols.size(); ++i) {
      std::size_t r =
          merges.rank(symbols[i].text, symbols[i + 1].text, symbols[i + 1].final);
      if (r < best_rank) best_rank = r;
    }
    if (best_rank == MergeTable::npos) break;
    merge_in_word(symbols, merges.merges()[best_rank]);
  }

  std::vector<std::string> out;
  out.reserve(symbols.size());
  for (std::size_t i = 0; i < symbols.size(); ++i) {
    std::string piece = symbols[i].text;
    if (i + 1 < symbols.size()) piece += merges.marker();
    out.push_back(std::move(piece));
  }
  return out;
}

std::vector<std::string> apply_sentence(const std::vector<std::string>& words,
                                        const MergeTable& merges) {
  std::vector<std::string> out;
  for (const auto& word : words) {
    auto pieces = bpe::apply(word, merges);
    out.insert(out.end(), std::make_move_iterator(pieces.begin()),
               std::make_move_iterator(pieces.end()));
  }
  return out;
}

std::vector<std::string> decode(const std::vector<std::string>& subwords,
                                std::string_view marker, std::uint64_t* dangling_markers) {
  std::vector<std::string> out;
  std::string current;
  bool open = false;
  for (std::size_t i = 0; i < subwords.size(); ++i) {
    const std::string& piece = subwords[i];
    bool continues = !marker.empty() && piece.size() >= marker.size() &&
                     piece.compare(piece.size() - marker.size(), marker.size(), marker) == 0;
    if (continues && i + 1 == subwords.size()) {
      if (dangling_markers) ++*dangling_markers;
      continues = false;  // dangling marker at sentence end: join as-is
    }
    current += continues ? piece.substr(0, piece.size() - marker.size()) : piece;
    open = true;
    if (!continues) {
      out.push_back(unescape_word(current));
      current.clear();
      open = false;
    }
  }
  if (open) out.push_back(unescape_word(current));
  return out;
}

std::string escape_word(std::string_view word) {
  std::string out;
  out.reserve(word.size());
  for (char c : word) {
    out += c;
    if (c == '@') out += '%';
  }
  return out;
}

std::string unescape_word(std::string_view word) {
  std::string out;
  out.reserve(word.size());
  for (std::size_t i = 0; i < word.size(); ++i) {
    out += word[i];
    if (word[i] == '@' && i + 1 < word.size() && word[i + 1] == '%') ++i;
  }
  return out;
}

}  // namespace conjtok::bpe
