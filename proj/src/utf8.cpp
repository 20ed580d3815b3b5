#include "conjtok/utf8.hpp"

namespace conjtok::utf8 {

std::size_t sequence_length(unsigned char b) {
  if (b < 0x80) return 1;
  if ((b & 0xE0) == 0xC0) return 2;
  if ((b & 0xF0) == 0xE0) return 3;
  if ((b & 0xF8) == 0xF0) return 4;
  return 0;
}

bool valid(std::string_view s) {
  std::size_t i = 0;
  while (i < s.size()) {
    unsigned char b = s[i];
    std::size_t len = sequence_length(b);
    if (len == 0 || i + len > s.size()) return false;
    char32_t cp = 0;
    switch (len) {
      case 1:
        cp = b;
        break;
      case 2:
        cp = b & 0x1F;
        break;
      case 3:
        cp = b & 0x0F;
        break;
      case 4:
        cp = b & 0x07;
        break;
    }
    for (std::size_t k = 1; k < len; ++k) {
      unsigned char c = s[i + k];
      if ((c & 0xC0) != 0x80) return false;
      cp = (cp << 6) | (c & 0x3F);
    }
    // Overlong encodings, UTF-16 surrogates, out-of-range scalars.
    if (len == 2 && cp < 0x80) return false;
    if (len == 3 && cp < 0x800) return false;
    if (len == 4 && cp < 0x10000) return false;
    if (cp >= 0xD800 && cp <= 0xDFFF) return false;
    if (cp > 0x10FFFF) return false;
    i += len;
  }
  return true;
}

std::vector<std::string> codepoints(std::string_view s) {
  std::vector<std::string> out;
  std::size_t i = 0;
  while (i < s.size()) {
    std::size_t len = sequence_length(s[i]);
    if (len == 0 || i + len > s.size()) len = 1;  // caller guarantees validity
    out.emplace_back(s.substr(i, len));
    i += len;
  }
  return out;
}

std::size_t length(std::string_view s) {
  std::size_t n = 0, i = 0;
  while (i < s.size()) {
    std::size_t len = sequence_length(s[i]);
    if (len == 0 || i + len > s.size()) len = 1;
    ++n;
    i += len;
  }
  return n;
}

}  // namespace conjtok::utf8
