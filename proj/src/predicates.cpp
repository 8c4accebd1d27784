#include "pnn/predicates.h"

#include "pnn/counters.h"

#include <array>
#include <cassert>
#include <stdexcept>

namespace pnn {

namespace {

thread_local Counters* tl_sink = nullptr;

// Fast path: coordinates that are integers below this bound run on __int128.
// 2^25 keeps the largest incircle term under 2^108.  Site coordinates (domain
// bound 2^20 by default) always qualify; derived rationals take the mpq path.
constexpr std::int64_t kFastBound = std::int64_t(1) << 25;

bool small_int(const Coordinate& v, std::int64_t& out) {
    if (!fits_int64(v, out)) return false;
    return out > -kFastBound && out < kFastBound;
}

struct FastPoint {
    std::int64_t x, y;
};

bool fast(const ExactPoint& p, FastPoint& f) {
    return small_int(p.x, f.x) && small_int(p.y, f.y);
}

int sign128(__int128 v) { return v > 0 ? 1 : (v < 0 ? -1 : 0); }

int orient_sign(const ExactPoint& a, const ExactPoint& b, const ExactPoint& c) {
    count_orient();
    FastPoint fa, fb, fc;
    if (fast(a, fa) && fast(b, fb) && fast(c, fc)) {
        __int128 d = (__int128)(fb.x - fa.x) * (fc.y - fa.y) -
                     (__int128)(fb.y - fa.y) * (fc.x - fa.x);
        return sign128(d);
    }
    Coordinate d = (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
    return sign(d);
}

int incircle_sign(const ExactPoint& a, const ExactPoint& b, const ExactPoint& c,
                  const ExactPoint& d) {
    count_incircle();
    FastPoint fa, fb, fc, fd;
    if (fast(a, fa) && fast(b, fb) && fast(c, fc) && fast(d, fd)) {
        std::int64_t adx = fa.x - fd.x, ady = fa.y - fd.y;
        std::int64_t bdx = fb.x - fd.x, bdy = fb.y - fd.y;
        std::int64_t cdx = fc.x - fd.x, cdy = fc.y - fd.y;
        __int128 ad2 = (__int128)adx * adx + (__int128)ady * ady;
        __int128 bd2 = (__int128)bdx * bdx + (__int128)bdy * bdy;
        __int128 cd2 = (__int128)cdx * cdx + (__int128)cdy * cdy;
        __int128 det = ad2 * ((__int128)bdx * cdy - (__int128)bdy * cdx) -
                       bd2 * ((__int128)adx * cdy - (__int128)ady * cdx) +
                       cd2 * ((__int128)adx * bdy - (__int128)ady * bdx);
        return sign128(det);
    }
    Coordinate adx = a.x - d.x, ady = a.y - d.y;
    Coordinate bdx = b.x - d.x, bdy = b.y - d.y;
    Coordinate cdx = c.x - d.x, cdy = c.y - d.y;
    Coordinate det = (adx * adx + ady * ady) * (bdx * cdy - bdy * cdx) -
                     (bdx * bdx + bdy * bdy) * (adx * cdy - ady * cdx) +
                     (cdx * cdx + cdy * cdy) * (adx * bdy - ady * bdx);
    return sign(det);
}

}  // namespace

Counters* counter_sink() { return tl_sink; }
void set_counter_sink(Counters* c) { tl_sink = c; }

Orientation orient(const ExactPoint& a, const ExactPoint& b, const ExactPoint& c) {
    return static_cast<Orientation>(orient_sign(a, b, c));
}

CircleSide incircle(const ExactPoint& a, const ExactPoint& b, const ExactPoint& c,
                    const ExactPoint& d) {
    if (orient(a, b, c) != Orientation::Left)
        throw std::invalid_argument("incircle: a,b,c must be counterclockwise");
    return static_cast<CircleSide>(incircle_sign(a, b, c, d));
}

CircleSide incircle_ranked(const ExactPoint& a, std::uint32_t ra,
                           const ExactPoint& b, std::uint32_t rb,
                           const ExactPoint& c, std::uint32_t rc,
                           const ExactPoint& d, std::uint32_t rd) {
    int s = incircle_sign(a, b, c, d);
    if (s != 0) return static_cast<CircleSide>(s);

    // Cocircular: expand in the weight eps^(rank+1).  Successive terms are
    //   -w_a*O(d,b,c) + w_b*O(d,a,c) - w_c*O(d,a,b) + w_d*O(a,b,c),
    // and the smallest rank with a nonzero minor decides.  O(a,b,c) > 0
    // (a,b,c is a live ccw triangle), so the expansion never vanishes.
    struct Term {
        std::uint32_t rank;
        int value;
    };
    std::array<Term, 4> terms = {{
        {ra, -orient_sign(d, b, c)},
        {rb, orient_sign(d, a, c)},
        {rc, -orient_sign(d, a, b)},
        {rd, orient_sign(a, b, c)},
    }};
    const Term* best = nullptr;
    for (const Term& t : terms) {
        if (t.value == 0) continue;
        if (!best || t.rank < best->rank) best = &t;
    }
    assert(best != nullptr);
    return static_cast<CircleSide>(best->value);
}

ExactPoint circumcenter(const ExactPoint& a, const ExactPoint& b, const ExactPoint& c) {
    Coordinate abx = b.x - a.x, aby = b.y - a.y;
    Coordinate acx = c.x - a.x, acy = c.y - a.y;
    Coordinate den = 2 * (abx * acy - aby * acx);
    if (sign(den) == 0) throw std::invalid_argument("circumcenter: collinear points");
    Coordinate ab2 = abx * abx + aby * aby;
    Coordinate ac2 = acx * acx + acy * acy;
    Coordinate ux = (acy * ab2 - aby * ac2) / den;
    Coordinate uy = (abx * ac2 - acx * ab2) / den;
    return ExactPoint(a.x + ux, a.y + uy);
}

}  // namespace pnn
