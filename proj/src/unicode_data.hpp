#ifndef XULOSA_UNICODE_DATA_HPP
#define XULOSA_UNICODE_DATA_HPP

namespace xulosa::detail {

/// Canonical composition of a base codepoint with a combining mark.
/// Returns 0 when no precomposed character exists.
char32_t compose_pair(char32_t base, char32_t mark);

/// Simple lowercase mapping (identity when no mapping is known).
char32_t to_lower(char32_t cp);

}  // namespace xulosa::detail

#endif  // XULOSA_UNICODE_DATA_HPP
