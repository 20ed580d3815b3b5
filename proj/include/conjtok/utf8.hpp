#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace conjtok::utf8 {

// True iff s is well-formed UTF-8 (no overlongs, surrogates, or > U+10FFFF).
bool valid(std::string_view s);

// Length in bytes of the UTF-8 sequence starting with byte b, or 0 if b is
// not a valid leading byte.
std::size_t sequence_length(unsigned char b);

// Splits s into one std::string per code point. s must be valid UTF-8.
std::vector<std::string> codepoints(std::string_view s);

// Number of code points in s. s must be valid UTF-8.
std::size_t length(std::string_view s);

}  // namespace conjtok::utf8
