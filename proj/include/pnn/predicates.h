#pragma once

#include "pnn/point.h"

#include <cstdint>

namespace pnn {

enum class Orientation { Right = -1, Collinear = 0, Left = 1 };
enum class CircleSide { Outside = -1, Cocircular = 0, Inside = 1 };

/// Exact sign of the signed area of triangle abc.
Orientation orient(const ExactPoint& a, const ExactPoint& b, const ExactPoint& c);

/// Exact incircle classification of d against the circle through a,b,c
/// (a,b,c counterclockwise).  Collinear a,b,c is a caller bug.
CircleSide incircle(const ExactPoint& a, const ExactPoint& b, const ExactPoint& c,
                    const ExactPoint& d);

/// Incircle with the symbolic tie-break used by Delaunay construction:
/// each point carries a rank (its lexicographic rank among the sites), and a
/// cocircular quadruple is resolved as the limit regular triangulation of
/// sites weighted by eps^(rank+1).  Smaller rank means a slightly larger
/// weight, so the lexicographically smallest site wins boundary ties, which
/// matches the nearest-neighbor tie rule.  Never returns Cocircular for
/// four distinct points.
CircleSide incircle_ranked(const ExactPoint& a, std::uint32_t ra,
                           const ExactPoint& b, std::uint32_t rb,
                           const ExactPoint& c, std::uint32_t rc,
                           const ExactPoint& d, std::uint32_t rd);

/// Exact circumcenter of a nondegenerate triangle.
ExactPoint circumcenter(const ExactPoint& a, const ExactPoint& b, const ExactPoint& c);

}  // namespace pnn
