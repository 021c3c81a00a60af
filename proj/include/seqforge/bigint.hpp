#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace seqforge {

/// Arbitrary-precision signed integer used for every sequence term.
using BigInt = mpz_class;

using Terms = std::vector<BigInt>;

inline std::string to_string(const BigInt& v) { return v.get_str(10); }

/// Parses an optionally signed decimal integer; no surrounding whitespace.
std::optional<BigInt> parse_bigint(std::string_view text);

/// Value as uint64 when it fits, otherwise nullopt.
std::optional<std::uint64_t> to_u64(const BigInt& v);

BigInt from_u64(std::uint64_t v);

/// Splits "1,2,-3" (surrounding spaces tolerated, empty fields rejected).
/// Throws std::invalid_argument on malformed input.
Terms parse_term_list(std::string_view text);

std::string join_terms(const Terms& terms, std::string_view sep = ",");

}  // namespace seqforge
