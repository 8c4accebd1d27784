#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>

namespace pnn {

/// Exact rational plane coordinate.  All arithmetic on coordinates and on
/// anything derived from them (circumcenters, clip intersections, overlay
/// vertices) stays in this type; there is no floating point anywhere in the
/// geometric core.
using Coordinate = mpq_class;

inline int sign(const Coordinate& v) { return sgn(v); }

/// Parse a plain decimal literal ("12", "-3.25", "+0.5") into an exact
/// rational.  Returns nullopt on malformed input.
std::optional<Coordinate> parse_decimal(const std::string& text);

/// Render a rational as the shortest plain decimal if its denominator is of
/// the form 2^a*5^b (always true for values parsed by parse_decimal),
/// otherwise as "num/den".  Used for answer files; output is canonical so
/// identical values always print identically.
std::string decimal_string(const Coordinate& v);

/// Lossy view for SVG emission only.
double approx(const Coordinate& v);

/// True if v is an integer with |v| < 2^62, filled into out.
bool fits_int64(const Coordinate& v, std::int64_t& out);

}  // namespace pnn
