#pragma once

#include <string>
#include <string_view>

#include "lieperm/polymap.hpp"

namespace lieperm::exppoly {

/// Bumped whenever the canonical byte format changes; cache files are keyed
/// by (type, k, format version) so stale entries are simply never matched.
inline constexpr int kPolyMapFormatVersion = 1;

class ParseError : public std::runtime_error {
public:
  ParseError(const std::string& what, size_t byte_offset = 0)
      : std::runtime_error(what), off_(byte_offset) {}
  /// Byte position for syntax errors; 0 when the error is structural.
  size_t byte_offset() const { return off_; }

private:
  size_t off_;
};

/// Canonical text serialization: JSON with fields type, k, variables,
/// components; terms in graded-lex order with decimal-string coefficients.
/// Deterministic bytes; deserialize(serialize(p)) reproduces p exactly.
std::string serialize(const PolyMap& p);

/// Strict parser for the canonical format.  Throws ParseError on malformed
/// JSON (with byte offset), unknown fields, unsupported type, bad k,
/// non-canonical variables, malformed exponents or coefficients, or terms
/// out of canonical order.
PolyMap deserialize(std::string_view bytes, int max_rank = 6);

/// Rescaled variant matching full-group exponential sums: conjugation of p by
/// diag(stabilizer sizes of the fundamental weights).  Coefficients become
/// rationals; the output carries a "variant" marker and is deliberately NOT
/// accepted by deserialize.
std::string serialize_full_sum_variant(const PolyMap& p);

}  // namespace lieperm::exppoly
