#pragma once

#include "pnn/rational.h"

#include <compare>
#include <utility>

namespace pnn {

/// Exact planar point.  Lexicographic (x, then y) order is the single
/// tie-breaking order used everywhere: nearest-neighbor ties, sample moves,
/// degeneracy resolution.
struct ExactPoint {
    Coordinate x;
    Coordinate y;

    ExactPoint() = default;
    ExactPoint(Coordinate px, Coordinate py) : x(std::move(px)), y(std::move(py)) {}
    ExactPoint(long px, long py) : x(px), y(py) {}

    bool operator==(const ExactPoint& o) const { return x == o.x && y == o.y; }
    bool operator!=(const ExactPoint& o) const { return !(*this == o); }
    bool operator<(const ExactPoint& o) const {
        int c = cmp(x, o.x);
        if (c != 0) return c < 0;
        return cmp(y, o.y) < 0;
    }
    bool operator<=(const ExactPoint& o) const { return !(o < *this); }
};

/// Squared Euclidean distance, exact.
inline Coordinate dist2(const ExactPoint& a, const ExactPoint& b) {
    Coordinate dx = a.x - b.x;
    Coordinate dy = a.y - b.y;
    return dx * dx + dy * dy;
}

/// True if `a` wins the nearest-to-q contest against `b`: strictly closer,
/// or equidistant and lexicographically smaller.
bool nearer(const ExactPoint& q, const ExactPoint& a, const ExactPoint& b);

}  // namespace pnn
