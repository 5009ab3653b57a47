#ifndef PROXIGRAPH_RATIONAL_HPP
#define PROXIGRAPH_RATIONAL_HPP

#include <boost/rational.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace proxigraph {

// Exact rational distances. All distance arithmetic in the library is exact;
// there is no floating-point mode.
using Rat = boost::rational<std::int64_t>;

inline Rat rat(std::int64_t num, std::int64_t den = 1) { return Rat(num, den); }

/// Renders "p/q" in lowest terms, or just "p" when the denominator is 1.
std::string to_string(const Rat& r);

/// Parses an integer literal or "p/q" (unnormalized accepted, q != 0).
/// Returns nullopt on malformed text.
std::optional<Rat> parse_rational(std::string_view text);

}  // namespace proxigraph

#endif
