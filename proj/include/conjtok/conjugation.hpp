#pragma once

#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "conjtok/morpheme.hpp"

namespace conjtok {

// One suffix rewrite: lemma minus `strip` plus `append` realizes
// (conj_type, conj_form). variant_rank 0 is the canonical surface; higher
// ranks are alternative spellings of the same cell.
struct ConjugationRule {
  std::string conj_type;
  std::string conj_form;
  std::string strip;
  std::string append;
  int variant_rank = 0;
};

inline constexpr const char* kPlainForm = "基本形";

// Immutable rule set loaded from the TSV rule file. Shareable across
// threads after construction.
class ConjugationTable {
public:
  // rules: TSV columns conj_type, conj_form, strip, append, variant_rank.
  // endings: TSV columns conj_type, lemma_ending (may be empty).
  // '#' starts a comment line in both files. All table invariants are
  // checked eagerly; throws TableError.
  static ConjugationTable load(std::istream& rules, std::istream& endings);
  static ConjugationTable load_files(const std::string& rules_path,
                                     const std::string& endings_path);

  // Canonical (rank 0) surface for (lemma, conj_type, conj_form).
  // Throws UnknownConjugationError / LemmaMismatchError.
  std::string inflect(std::string_view lemma, const std::string& conj_type,
                      const std::string& conj_form) const;

  // All surfaces for the cell, in variant_rank order; the first element
  // equals inflect(). conj_form may also name one of the six classical
  // form columns (未然形, 連用形, 終止形, 連体形, 仮定形, 命令形), in which
  // case the surfaces of every analyzer key grouped under that column are
  // returned in display order.
  std::vector<std::string> inflect_variants(std::string_view lemma,
                                            const std::string& conj_type,
                                            const std::string& conj_form) const;

  bool has_type(const std::string& conj_type) const;
  bool has_rule(const std::string& conj_type, const std::string& conj_form) const;

  // Declared lemma ending for a type ("" when unconstrained).
  const std::string& lemma_ending(const std::string& conj_type) const;

  std::vector<std::string> types() const;
  std::vector<std::string> forms_of(const std::string& conj_type) const;
  std::size_t rule_count() const { return rule_count_; }

private:
  void validate() const;

  // (conj_type, conj_form) -> rules sorted by variant_rank.
  std::map<std::pair<std::string, std::string>, std::vector<ConjugationRule>> cells_;
  std::map<std::string, std::string> lemma_endings_;
  std::size_t rule_count_ = 0;
};

// True iff re-inflecting the morpheme's lemma reproduces its surface.
// Unknown (type, form) pairs and lemma mismatches yield false.
bool check_roundtrip(const Morpheme& m, const ConjugationTable& table);

// Per-type tallies of check_roundtrip over a corpus; identifies table gaps.
struct RoundtripAudit {
  struct Tally {
    std::size_t total = 0;
    std::size_t ok = 0;
    std::size_t unknown_pair = 0;  // (type, form) not in table
    std::size_t mismatch = 0;      // inflection produced a different surface
  };

  std::map<std::string, Tally> per_type;
  std::size_t total = 0;
  std::size_t ok = 0;

  double accuracy() const { return total == 0 ? 1.0 : double(ok) / double(total); }

  void add(const Morpheme& m, const ConjugationTable& table);
};

}  // namespace conjtok
