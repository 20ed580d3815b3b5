#include "conjtok/token.hpp"

#include <fstream>
#include <istream>
#include <stdexcept>

namespace conjtok {

namespace {

constexpr std::string_view kConjSeparator = "・";
constexpr char kDisplaySeparator = '-';

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

Scheme scheme_from_string(std::string_view name) {
  if (name == "baseline") return Scheme::Baseline;
  if (name == "conj-token" || name == "conj") return Scheme::ConjToken;
  if (name == "conj-feature" || name == "factors") return Scheme::ConjFeature;
  if (name == "pos-suffix") return Scheme::PosSuffix;
  if (name == "pos-prefix") return Scheme::PosPrefix;
  if (name == "pos-circumfix") return Scheme::PosCircumfix;
  throw std::invalid_argument("unknown scheme: " + std::string(name));
}

std::string_view scheme_name(Scheme scheme) {
  switch (scheme) {
    case Scheme::Baseline: return "baseline";
    case Scheme::ConjToken: return "conj-token";
    case Scheme::ConjFeature: return "conj-feature";
    case Scheme::PosSuffix: return "pos-suffix";
    case Scheme::PosPrefix: return "pos-prefix";
    case Scheme::PosCircumfix: return "pos-circumfix";
  }
  throw std::invalid_argument("unknown scheme");
}

Placement placement_from_string(std::string_view name) {
  if (name == "suffix") return Placement::Suffix;
  if (name == "prefix") return Placement::Prefix;
  if (name == "circumfix") return Placement::Circumfix;
  throw std::invalid_argument("unknown placement: " + std::string(name));
}

std::optional<Placement> scheme_placement(Scheme scheme) {
  switch (scheme) {
    case Scheme::PosSuffix: return Placement::Suffix;
    case Scheme::PosPrefix: return Placement::Prefix;
    case Scheme::PosCircumfix: return Placement::Circumfix;
    default: return std::nullopt;
  }
}

TagMap TagMap::load(std::istream& in) {
  TagMap map;
  std::string line;
  std::size_t line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    auto fields = split(line, '\t');
    if (fields.size() != 3 || (fields[0] != "pos" && fields[0] != "form"))
      throw std::invalid_argument("tag map line " + std::to_string(line_number) +
                                  ": expected 'pos|form<TAB>native<TAB>display'");
    std::string native(fields[1]), display(fields[2]);
    bool is_pos = fields[0] == "pos";
    if (is_pos && display.find(kDisplaySeparator) != std::string::npos)
      throw std::invalid_argument("tag map line " + std::to_string(line_number) +
                                  ": display POS must not contain '-'");
    auto& fwd = is_pos ? map.pos_ : map.form_;
    auto& rev = is_pos ? map.pos_rev_ : map.form_rev_;
    if (!fwd.emplace(native, display).second || !rev.emplace(display, native).second)
      throw std::invalid_argument("tag map line " + std::to_string(line_number) +
                                  ": duplicate mapping");
  }
  return map;
}

TagMap TagMap::load_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open tag map " + path);
  return load(in);
}

std::string TagMap::display_pos(const std::string& native) const {
  auto it = pos_.find(native);
  return it == pos_.end() ? native : it->second;
}

std::string TagMap::display_form(const std::string& native) const {
  auto it = form_.find(native);
  return it == form_.end() ? native : it->second;
}

std::optional<std::string> TagMap::native_pos(const std::string& display) const {
  auto it = pos_rev_.find(display);
  if (it == pos_rev_.end()) return std::nullopt;
  return it->second;
}

std::optional<std::string> TagMap::native_form(const std::string& display) const {
  auto it = form_rev_.find(display);
  if (it == form_rev_.end()) return std::nullopt;
  return it->second;
}

std::string render_token(const Token& token, const TagMap* tag_map) {
  switch (token.kind) {
    case Token::Kind::Word:
      if (!token.text.empty() && (token.text[0] == '<' || token.text[0] == '\\'))
        return "\\" + token.text;
      return token.text;
    case Token::Kind::Conj:
      if (tag_map)
        return "<" + tag_map->display_pos(token.pos) + kDisplaySeparator +
               tag_map->display_form(token.form) + ">";
      return "<" + token.pos + std::string(kConjSeparator) + token.form + ">";
    case Token::Kind::Pos:
      if (tag_map) return "<" + tag_map->display_pos(token.pos) + ">";
      return "<" + token.pos + ">";
  }
  throw std::logic_error("unreachable");
}

Token parse_token(std::string_view text, const TagMap* tag_map) {
  if (!text.empty() && text[0] == '\\') return Token::word(std::string(text.substr(1)));
  if (text.size() < 3 || text.front() != '<' || text.back() != '>')
    return Token::word(std::string(text));

  std::string_view inner = text.substr(1, text.size() - 2);
  if (tag_map) {
    std::size_t dash = inner.find(kDisplaySeparator);
    if (dash != std::string_view::npos) {
      auto pos = tag_map->native_pos(std::string(inner.substr(0, dash)));
      auto form = tag_map->native_form(std::string(inner.substr(dash + 1)));
      if (pos && form) return Token::conj(*pos, *form);
    }
    if (auto pos = tag_map->native_pos(std::string(inner))) return Token::pos_tag(*pos);
    // Fall through: a native-format token in a tag-mapped stream.
  }
  std::size_t sep = inner.find(kConjSeparator);
  if (sep != std::string_view::npos)
    return Token::conj(std::string(inner.substr(0, sep)),
                       std::string(inner.substr(sep + kConjSeparator.size())));
  return Token::pos_tag(std::string(inner));
}

std::string render_token_line(const std::vector<Token>& tokens, const TagMap* tag_map) {
  std::string out;
  for (const auto& token : tokens) {
    if (!out.empty()) out += ' ';
    out += render_token(token, tag_map);
  }
  return out;
}

std::vector<Token> parse_token_line(std::string_view line, const TagMap* tag_map) {
  std::vector<Token> out;
  for (std::string_view piece : split(line, ' ')) {
    if (piece.empty()) continue;
    out.push_back(parse_token(piece, tag_map));
  }
  return out;
}

}  // namespace conjtok
