#ifndef XULOSA_UTF8_HPP
#define XULOSA_UTF8_HPP

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace xulosa::utf8 {

/// Decodes UTF-8 bytes into codepoints. Throws Error(EncodingError) on
/// malformed input (truncated sequences, overlong forms, surrogates,
/// codepoints above U+10FFFF).
std::vector<char32_t> decode(std::string_view bytes);

std::string encode(std::span<const char32_t> codepoints);
void append(std::string& out, char32_t cp);

/// Returns the substring covering codepoints [first, last) of `bytes`.
/// Offsets past the end clamp to the end.
std::string slice(std::string_view bytes, std::size_t first, std::size_t last);

std::size_t count(std::string_view bytes);

}  // namespace xulosa::utf8

#endif  // XULOSA_UTF8_HPP
