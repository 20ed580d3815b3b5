#pragma once

#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace conjtok {

// Encoding schemes. Baseline passes surfaces through untouched; the rest
// add special tokens or factors.
enum class Scheme {
  Baseline,
  ConjToken,
  ConjFeature,
  PosSuffix,
  PosPrefix,
  PosCircumfix,
};

enum class Placement { Suffix, Prefix, Circumfix };

Scheme scheme_from_string(std::string_view name);
std::string_view scheme_name(Scheme scheme);
Placement placement_from_string(std::string_view name);
std::optional<Placement> scheme_placement(Scheme scheme);

// A unit in an encoded stream.
struct Token {
  enum class Kind { Word, Conj, Pos };

  Kind kind = Kind::Word;
  std::string text;  // Word: the word itself
  std::string pos;   // Conj/Pos: coarse POS tag
  std::string form;  // Conj: analyzer conjugation form key

  static Token word(std::string text) { return {Kind::Word, std::move(text), {}, {}}; }
  static Token conj(std::string pos, std::string form) {
    return {Kind::Conj, {}, std::move(pos), std::move(form)};
  }
  static Token pos_tag(std::string pos) { return {Kind::Pos, {}, std::move(pos), {}}; }

  bool is_word() const { return kind == Kind::Word; }
  bool is_conj() const { return kind == Kind::Conj; }
  bool is_pos() const { return kind == Kind::Pos; }

  bool operator==(const Token&) const = default;
};

// Optional display mapping: IPADic POS and form names -> ASCII tags, so
// streams read <verb>, <verb-plain> instead of <動詞>, <動詞・基本形>.
// File format: lines `pos<TAB>native<TAB>display` / `form<TAB>native<TAB>display`.
// Display POS names must not contain '-'; both directions must be 1:1.
class TagMap {
public:
  static TagMap load(std::istream& in);
  static TagMap load_file(const std::string& path);

  std::string display_pos(const std::string& native) const;
  std::string display_form(const std::string& native) const;
  std::optional<std::string> native_pos(const std::string& display) const;
  std::optional<std::string> native_form(const std::string& display) const;

private:
  std::map<std::string, std::string> pos_, form_;          // native -> display
  std::map<std::string, std::string> pos_rev_, form_rev_;  // display -> native
};

// Serialization of one token. Special tokens render as <POS・FORM> / <POS>
// natively, or <pos-form> / <pos> through a TagMap. Words beginning with
// '<' or '\' are escaped with a leading backslash.
std::string render_token(const Token& token, const TagMap* tag_map = nullptr);

// Inverse of render_token, total over arbitrary strings: anything that is
// not a recognizable special token is a word.
Token parse_token(std::string_view text, const TagMap* tag_map = nullptr);

std::string render_token_line(const std::vector<Token>& tokens,
                              const TagMap* tag_map = nullptr);
std::vector<Token> parse_token_line(std::string_view line,
                                    const TagMap* tag_map = nullptr);

}  // namespace conjtok
