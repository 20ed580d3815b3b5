#include "conjtok/conjugation.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <sstream>

#include "conjtok/errors.hpp"

namespace conjtok {

namespace {

bool ends_with(std::string_view s, std::string_view suffix) {
  return s.size() >= suffix.size() &&
         s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

std::vector<std::string> split_tsv(const std::string& line) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    std::size_t pos = line.find('\t', start);
    if (pos == std::string::npos) {
      out.push_back(line.substr(start));
      return out;
    }
    out.push_back(line.substr(start, pos - start));
    start = pos + 1;
  }
}

// Classical form columns -> analyzer keys. Each group leads with its base
// key so the first grouped surface equals inflect() of that key.
const std::vector<std::pair<std::string, std::vector<std::string>>> kFormColumns = {
    {"未然形", {"未然形", "未然ウ接続", "未然ヌ接続", "未然レル接続", "未然特殊"}},
    {"連用形",
     {"連用形", "連用タ接続", "連用テ接続", "連用デ接続", "連用ニ接続", "連用ゴザイ接続"}},
    {"終止形", {"基本形"}},
    {"連体形", {"基本形", "体言接続"}},
    {"仮定形", {"仮定形", "仮定縮約１", "仮定縮約２"}},
    {"命令形", {"命令ｒｏ", "命令ｙｏ", "命令ｅ", "命令ｉ"}},
};

}  // namespace

ConjugationTable ConjugationTable::load(std::istream& rules, std::istream& endings) {
  ConjugationTable table;
  std::string line;
  std::size_t line_number = 0;

  while (std::getline(endings, line)) {
    ++line_number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    auto fields = split_tsv(line);
    // A line with no tab declares an empty (unconstrained) lemma ending;
    // editors tend to strip trailing whitespace.
    if (fields.size() == 1) fields.push_back("");
    if (fields.size() != 2 || fields[0].empty())
      throw TableError(TableError::Kind::BadRuleRow,
                       "endings line " + std::to_string(line_number) +
                           ": expected 'conj_type<TAB>lemma_ending'");
    if (!table.lemma_endings_.emplace(fields[0], fields[1]).second)
      throw TableError(TableError::Kind::DuplicateRule,
                       "endings line " + std::to_string(line_number) +
                           ": duplicate conj_type " + fields[0]);
  }

  line_number = 0;
  while (std::getline(rules, line)) {
    ++line_number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    auto fields = split_tsv(line);
    if (fields.size() != 5)
      throw TableError(TableError::Kind::BadRuleRow,
                       "rules line " + std::to_string(line_number) +
                           ": expected 5 tab-separated columns, got " +
                           std::to_string(fields.size()));
    ConjugationRule rule;
    rule.conj_type = fields[0];
    rule.conj_form = fields[1];
    rule.strip = fields[2];
    rule.append = fields[3];
    if (rule.conj_type.empty() || rule.conj_form.empty())
      throw TableError(TableError::Kind::BadRuleRow,
                       "rules line " + std::to_string(line_number) +
                           ": empty conj_type or conj_form");
    try {
      std::size_t used = 0;
      rule.variant_rank = std::stoi(fields[4], &used);
      if (used != fields[4].size() || rule.variant_rank < 0) throw std::invalid_argument("");
    } catch (const std::exception&) {
      throw TableError(TableError::Kind::BadRuleRow,
                       "rules line " + std::to_string(line_number) +
                           ": variant_rank must be a non-negative integer");
    }

    auto& cell = table.cells_[{rule.conj_type, rule.conj_form}];
    for (const auto& existing : cell)
      if (existing.variant_rank == rule.variant_rank)
        throw TableError(TableError::Kind::DuplicateRule,
                         "rules line " + std::to_string(line_number) + ": duplicate (" +
                             rule.conj_type + ", " + rule.conj_form + ", rank " +
                             std::to_string(rule.variant_rank) + ")");
    cell.push_back(std::move(rule));
    ++table.rule_count_;
  }

  for (auto& [key, cell] : table.cells_)
    std::sort(cell.begin(), cell.end(),
              [](const ConjugationRule& a, const ConjugationRule& b) {
                return a.variant_rank < b.variant_rank;
              });

  table.validate();
  return table;
}

ConjugationTable ConjugationTable::load_files(const std::string& rules_path,
                                              const std::string& endings_path) {
  std::ifstream rules(rules_path);
  if (!rules)
    throw TableError(TableError::Kind::BadRuleRow, "cannot open rule file " + rules_path);
  std::ifstream endings(endings_path);
  if (!endings)
    throw TableError(TableError::Kind::BadRuleRow,
                     "cannot open lemma-ending file " + endings_path);
  return load(rules, endings);
}

void ConjugationTable::validate() const {
  std::map<std::string, bool> has_plain;
  for (const auto& [key, cell] : cells_) {
    const auto& [type, form] = key;

    auto ending_it = lemma_endings_.find(type);
    if (ending_it == lemma_endings_.end())
      throw TableError(TableError::Kind::BadRuleRow,
                       "conj_type " + type + " has no declared lemma ending");

    if (cell.front().variant_rank != 0)
      throw TableError(TableError::Kind::BadRuleRow,
                       "(" + type + ", " + form + ") has no variant_rank 0 rule");

    for (const auto& rule : cell) {
      // Every lemma of the type ends with lemma_ending, so strip must be a
      // suffix of it for the rewrite to be defined on all of them.
      if (!ends_with(ending_it->second, rule.strip))
        throw TableError(TableError::Kind::BadRuleRow,
                         "(" + type + ", " + form + "): strip '" + rule.strip +
                             "' is not a suffix of lemma ending '" + ending_it->second + "'");
      if (form == kPlainForm && rule.variant_rank == 0 && rule.strip != rule.append)
        throw TableError(TableError::Kind::MissingPlainForm,
                         "conj_type " + type + ": 基本形 rule is not the identity rewrite");
    }

    if (form == kPlainForm) has_plain[type] = true;
    else has_plain.try_emplace(type, false);
  }

  for (const auto& [type, ok] : has_plain)
    if (!ok)
      throw TableError(TableError::Kind::MissingPlainForm,
                       "conj_type " + type + " has no 基本形 identity rule");
}

std::string ConjugationTable::inflect(std::string_view lemma, const std::string& conj_type,
                                      const std::string& conj_form) const {
  auto it = cells_.find({conj_type, conj_form});
  if (it == cells_.end()) throw UnknownConjugationError(conj_type, conj_form);
  const ConjugationRule& rule = it->second.front();
  if (!ends_with(lemma, rule.strip)) throw LemmaMismatchError(std::string(lemma), rule.strip);
  std::string out(lemma.substr(0, lemma.size() - rule.strip.size()));
  out += rule.append;
  return out;
}

std::vector<std::string> ConjugationTable::inflect_variants(
    std::string_view lemma, const std::string& conj_type,
    const std::string& conj_form) const {
  // A classical column label groups several analyzer keys (and takes
  // precedence where a key shares the column's name).
  for (const auto& [column, keys] : kFormColumns) {
    if (column != conj_form) continue;
    std::vector<std::string> out;
    for (const auto& key : keys) {
      auto cell = cells_.find({conj_type, key});
      if (cell == cells_.end()) continue;
      for (const auto& rule : cell->second) {
        if (!ends_with(lemma, rule.strip))
          throw LemmaMismatchError(std::string(lemma), rule.strip);
        std::string s(lemma.substr(0, lemma.size() - rule.strip.size()));
        s += rule.append;
        if (std::find(out.begin(), out.end(), s) == out.end()) out.push_back(std::move(s));
      }
    }
    if (out.empty()) throw UnknownConjugationError(conj_type, conj_form);
    return out;
  }

  auto it = cells_.find({conj_type, conj_form});
  if (it == cells_.end()) throw UnknownConjugationError(conj_type, conj_form);
  std::vector<std::string> out;
  for (const auto& rule : it->second) {
    if (!ends_with(lemma, rule.strip))
      throw LemmaMismatchError(std::string(lemma), rule.strip);
    std::string s(lemma.substr(0, lemma.size() - rule.strip.size()));
    s += rule.append;
    out.push_back(std::move(s));
  }
  return out;
}

bool ConjugationTable::has_type(const std::string& conj_type) const {
  return lemma_endings_.count(conj_type) > 0 &&
         std::any_of(cells_.begin(), cells_.end(),
                     [&](const auto& kv) { return kv.first.first == conj_type; });
}

bool ConjugationTable::has_rule(const std::string& conj_type,
                                const std::string& conj_form) const {
  return cells_.count({conj_type, conj_form}) > 0;
}

const std::string& ConjugationTable::lemma_ending(const std::string& conj_type) const {
  static const std::string empty;
  auto it = lemma_endings_.find(conj_type);
  return it == lemma_endings_.end() ? empty : it->second;
}

std::vector<std::string> ConjugationTable::types() const {
  std::vector<std::string> out;
  for (const auto& [key, cell] : cells_)
    if (out.empty() || out.back() != key.first) out.push_back(key.first);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<std::string> ConjugationTable::forms_of(const std::string& conj_type) const {
  std::vector<std::string> out;
  for (const auto& [key, cell] : cells_)
    if (key.first == conj_type) out.push_back(key.second);
  return out;
}

bool check_roundtrip(const Morpheme& m, const ConjugationTable& table) {
  if (!m.has_conjugation()) return false;
  try {
    return table.inflect(m.lemma, *m.conj_type, *m.conj_form) == m.surface;
  } catch (const UnknownConjugationError&) {
    return false;
  } catch (const LemmaMismatchError&) {
    return false;
  }
}

void RoundtripAudit::add(const Morpheme& m, const ConjugationTable& table) {
  if (!m.has_conjugation()) return;
  Tally& tally = per_type[*m.conj_type];
  ++tally.total;
  ++total;
  try {
    if (table.inflect(m.lemma, *m.conj_type, *m.conj_form) == m.surface) {
      ++tally.ok;
      ++ok;
    } else {
      ++tally.mismatch;
    }
  } catch (const UnknownConjugationError&) {
    ++tally.unknown_pair;
  } catch (const LemmaMismatchError&) {
    ++tally.mismatch;
  }
}

}  // namespace conjtok
