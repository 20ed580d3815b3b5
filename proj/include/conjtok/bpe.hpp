#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace conjtok::bpe {

// One learned merge. Symbols are code-point sequences; the right side may
// carry the end-of-word flag (it is then the last symbol of a word).
struct Merge {
  std::string left;
  std::string right;
  bool right_final = false;

  bool operator==(const Merge&) const = default;
};

// Ordered merge operations plus the marker convention. Applying merges in
// order is deterministic; no pair appears twice.
class MergeTable {
public:
  MergeTable() = default;
  explicit MergeTable(std::vector<Merge> merges, std::string marker = "@@");

  const std::vector<Merge>& merges() const { return merges_; }
  const std::string& marker() const { return marker_; }
  std::size_t size() const { return merges_.size(); }

  // Rank of a pair in learning order, or npos.
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);
  std::size_t rank(std::string_view left, std::string_view right, bool right_final) const;

  // File format: `#version: 0.2` header, then one `left<SPACE>right` per
  // line, `</w>` marking a word-final right side.
  void save(std::ostream& out) const;
  static MergeTable load(std::istream& in);
  void save_file(const std::string& path) const;
  static MergeTable load_file(const std::string& path);

private:
  void index();

  std::vector<Merge> merges_;
  std::string marker_ = "@@";
  std::map<std::string, std::size_t> rank_;  // serialized pair -> rank
};

// Greedy pair learning over a word-frequency map: words split into
// code-point symbols, the most frequent adjacent pair merged and recorded,
// until num_merges merges or no pair occurs at least twice. Frequency ties
// break lexicographically on the serialized (left, right) pair.
// Throws EmptyCorpusError.
MergeTable learn(const std::map<std::string, std::uint64_t>& word_counts,
                 std::size_t num_merges);

// Segments one word: merges applied in learned priority order, non-final
// subwords suffixed with the continuation marker. Concatenating the result
// and undoing markers reproduces the word exactly.
std::vector<std::string> apply(std::string_view word, const MergeTable& merges);

// Segments a whole pre-tokenized sentence.
std::vector<std::string> apply_sentence(const std::vector<std::string>& words,
                                        const MergeTable& merges);

// Joins subwords at marker boundaries; the inverse of apply_sentence.
// A dangling continuation marker on the last subword is joined as-is and
// counted in *dangling_markers when provided.
std::vector<std::string> decode(const std::vector<std::string>& subwords,
                                std::string_view marker = "@@",
                                std::uint64_t* dangling_markers = nullptr);

// Marker-collision escaping applied to every word before segmentation and
// undone by decode: '@' becomes "@%", so the marker "@@" cannot occur
// inside an escaped word.
std::string escape_word(std::string_view word);
std::string unescape_word(std::string_view word);

}  // namespace conjtok::bpe
