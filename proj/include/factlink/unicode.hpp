#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include <unicode/normalizer2.h>
#include <unicode/uchar.h>
#include <unicode/unistr.h>

#include "factlink/common.hpp"

namespace factlink {

inline const icu::Normalizer2& nfkc_casefold_instance() {
  static const icu::Normalizer2* instance = [] {
    UErrorCode status = U_ZERO_ERROR;
    const icu::Normalizer2* n = icu::Normalizer2::getNFKCCasefoldInstance(status);
    if (U_FAILURE(status) || n == nullptr) {
      throw Error("ICU NFKC_Casefold normalizer unavailable");
    }
    return n;
  }();
  return *instance;
}

// NFKC normalization followed by case folding (ICU nfkc_cf).
inline std::string normalize_casefold(std::string_view text) {
  if (text.empty()) return {};
  icu::UnicodeString input = icu::UnicodeString::fromUTF8(
      icu::StringPiece(text.data(), static_cast<int32_t>(text.size())));
  UErrorCode status = U_ZERO_ERROR;
  icu::UnicodeString normalized = nfkc_casefold_instance().normalize(input, status);
  if (U_FAILURE(status)) throw Error("unicode normalization failed");
  std::string out;
  normalized.toUTF8String(out);
  return out;
}

inline bool is_unicode_space(char32_t cp) {
  return u_isUWhiteSpace(static_cast<UChar32>(cp)) != 0;
}

// Decodes the code point starting at `pos`. Malformed bytes decode as
// U+FFFD with length 1.
inline char32_t decode_codepoint(std::string_view s, std::size_t pos, std::size_t& length) {
  const auto byte = [&](std::size_t i) { return static_cast<unsigned char>(s[i]); };
  const unsigned char b0 = byte(pos);
  const std::size_t remaining = s.size() - pos;
  if (b0 < 0x80) {
    length = 1;
    return b0;
  }
  if ((b0 & 0xE0) == 0xC0 && remaining >= 2) {
    length = 2;
    return (char32_t(b0 & 0x1Fu) << 6) | (byte(pos + 1) & 0x3Fu);
  }
  if ((b0 & 0xF0) == 0xE0 && remaining >= 3) {
    length = 3;
    return (char32_t(b0 & 0x0Fu) << 12) | (char32_t(byte(pos + 1) & 0x3Fu) << 6) |
           (byte(pos + 2) & 0x3Fu);
  }
  if ((b0 & 0xF8) == 0xF0 && remaining >= 4) {
    length = 4;
    return (char32_t(b0 & 0x07u) << 18) | (char32_t(byte(pos + 1) & 0x3Fu) << 12) |
           (char32_t(byte(pos + 2) & 0x3Fu) << 6) | (byte(pos + 3) & 0x3Fu);
  }
  length = 1;
  return 0xFFFD;
}

// Byte offsets of code point boundaries, including text.size() as the
// final entry. Empty text yields {0}.
inline std::vector<std::size_t> codepoint_offsets(std::string_view text) {
  std::vector<std::size_t> offsets;
  offsets.reserve(text.size() + 1);
  std::size_t pos = 0;
  while (pos < text.size()) {
    offsets.push_back(pos);
    std::size_t len = 0;
    decode_codepoint(text, pos, len);
    pos += len;
  }
  offsets.push_back(text.size());
  return offsets;
}

}  // namespace factlink
