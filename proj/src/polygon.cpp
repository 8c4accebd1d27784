#include "pnn/polygon.h"

#include "pnn/counters.h"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace pnn {

namespace {

int dot_sign(const ExactPoint& origin, const ExactPoint& a, const ExactPoint& b) {
    Coordinate d = (a.x - origin.x) * (b.x - origin.x) + (a.y - origin.y) * (b.y - origin.y);
    return sign(d);
}

int osign(const ExactPoint& a, const ExactPoint& b, const ExactPoint& c) {
    return static_cast<int>(orient(a, b, c));
}

}  // namespace

Coordinate twice_signed_area(std::span<const ExactPoint> ring) {
    Coordinate s = 0;
    for (std::size_t i = 0; i < ring.size(); ++i) {
        const ExactPoint& p = ring[i];
        const ExactPoint& q = ring[(i + 1) % ring.size()];
        s += p.x * q.y - q.x * p.y;
    }
    return s;
}

bool on_segment(const ExactPoint& a, const ExactPoint& b, const ExactPoint& q) {
    if (orient(a, b, q) != Orientation::Collinear) return false;
    int cx = cmp(a.x, b.x), cy = cmp(a.y, b.y);
    if (cx == 0 && cy == 0) return q == a;
    if (cx != 0)
        return cmp(q.x, std::min(a.x, b.x)) >= 0 && cmp(q.x, std::max(a.x, b.x)) <= 0;
    return cmp(q.y, std::min(a.y, b.y)) >= 0 && cmp(q.y, std::max(a.y, b.y)) <= 0;
}

ConvexPolygon make_polygon(std::vector<ExactPoint> ring) {
    // Drop consecutive duplicates (circular).
    std::vector<ExactPoint> r;
    r.reserve(ring.size());
    for (auto& p : ring) {
        if (r.empty() || !(r.back() == p)) r.push_back(std::move(p));
    }
    while (r.size() > 1 && r.front() == r.back()) r.pop_back();

    if (r.size() >= 3) {
        // Drop flat vertices until stable.
        bool changed = true;
        while (changed && r.size() >= 3) {
            changed = false;
            std::vector<ExactPoint> out;
            out.reserve(r.size());
            std::size_t n = r.size();
            for (std::size_t i = 0; i < n; ++i) {
                const ExactPoint& prev = r[(i + n - 1) % n];
                const ExactPoint& next = r[(i + 1) % n];
                if (osign(prev, r[i], next) == 0) {
                    changed = true;
                } else {
                    out.push_back(r[i]);
                }
            }
            if (changed) r = std::move(out);
        }
    }
    if (r.size() < 3 && !ring.empty() && r.size() < ring.size()) {
        // Fully collinear input: keep the lexicographic extremes.
        auto [mn, mx] = std::minmax_element(ring.begin(), ring.end());
        r.clear();
        r.push_back(*mn);
        if (!(*mn == *mx)) r.push_back(*mx);
    }
    ConvexPolygon poly;
    poly.v = std::move(r);
    if (poly.v.empty()) throw std::invalid_argument("make_polygon: empty ring");
    return poly;
}

ConvexPolygon convex_hull(std::span<const ExactPoint> pts) {
    if (pts.empty()) throw std::invalid_argument("convex_hull: empty input");
    std::vector<ExactPoint> p(pts.begin(), pts.end());
    std::sort(p.begin(), p.end());
    p.erase(std::unique(p.begin(), p.end()), p.end());
    if (p.size() <= 2) {
        ConvexPolygon poly;
        poly.v = std::move(p);
        return poly;
    }
    // Monotone chain with strict turns: collinear points dropped.
    std::vector<ExactPoint> h(2 * p.size());
    std::size_t k = 0;
    for (std::size_t i = 0; i < p.size(); ++i) {
        while (k >= 2 && osign(h[k - 2], h[k - 1], p[i]) <= 0) --k;
        h[k++] = p[i];
    }
    for (std::size_t i = p.size() - 1, t = k + 1; i-- > 0;) {
        while (k >= t && osign(h[k - 2], h[k - 1], p[i]) <= 0) --k;
        h[k++] = p[i];
    }
    h.resize(k - 1);
    if (h.size() < 3) {
        // All input collinear; keep the extremes.
        ConvexPolygon poly;
        poly.v = {p.front(), p.back()};
        return poly;
    }
    ConvexPolygon poly;
    poly.v = std::move(h);
    return poly;
}

Containment point_in_convex(std::span<const ExactPoint> poly, const ExactPoint& q) {
    const std::size_t n = poly.size();
    if (n == 0) throw std::invalid_argument("point_in_convex: empty polygon");
    if (n == 1) return q == poly[0] ? Containment::Boundary : Containment::Outside;
    if (n == 2)
        return on_segment(poly[0], poly[1], q) ? Containment::Boundary : Containment::Outside;

    if (q == poly[0]) return Containment::Boundary;
    int s1 = osign(poly[0], poly[1], q);
    if (s1 < 0) return Containment::Outside;
    int s2 = osign(poly[0], poly[n - 1], q);
    if (s2 > 0) return Containment::Outside;
    if (s1 == 0)
        return on_segment(poly[0], poly[1], q) ? Containment::Boundary : Containment::Outside;
    if (s2 == 0)
        return on_segment(poly[n - 1], poly[0], q) ? Containment::Boundary : Containment::Outside;

    // Strictly inside the fan wedge; binary search the containing triangle.
    std::size_t lo = 1, hi = n - 1;
    while (hi - lo > 1) {
        std::size_t mid = (lo + hi) / 2;
        int s = osign(poly[0], poly[mid], q);
        if (s > 0) {
            lo = mid;
        } else if (s < 0) {
            hi = mid;
        } else {
            // On the diagonal through v[mid].
            if (q == poly[mid]) return Containment::Boundary;
            return on_segment(poly[0], poly[mid], q) ? Containment::Inside : Containment::Outside;
        }
    }
    int s = osign(poly[lo], poly[hi], q);
    if (s > 0) return Containment::Inside;
    if (s == 0) return Containment::Boundary;
    return Containment::Outside;
}

namespace {

// Angular comparison of directions (a-origin) vs (b-origin), counterclockwise
// starting from reference direction (ref-origin).  Returns <0, 0, >0.
struct AngularFrame {
    const ExactPoint& origin;
    const ExactPoint& ref;

    int half(const ExactPoint& p) const {
        int cr = osign(origin, ref, p);
        if (cr > 0) return 0;
        if (cr < 0) return 1;
        return dot_sign(origin, ref, p) > 0 ? 0 : 1;
    }
    // -1 if a angularly before b, 0 same direction, 1 after.
    int compare(const ExactPoint& a, const ExactPoint& b) const {
        int ha = half(a), hb = half(b);
        if (ha != hb) return ha < hb ? -1 : 1;
        int cr = osign(origin, a, b);
        if (cr > 0) return -1;
        if (cr < 0) return 1;
        return 0;
    }
};

}  // namespace

std::size_t ray_exit_edge(std::span<const ExactPoint> poly, const Ray& r) {
    const std::size_t n = poly.size();
    if (n < 3) throw std::invalid_argument("ray_exit_edge: polygon has no interior");
    if (r.origin == r.through) throw std::invalid_argument("ray_exit_edge: degenerate ray");
    if (point_in_convex(poly, r.origin) != Containment::Inside)
        throw std::invalid_argument("ray_exit_edge: origin not strictly inside");

    AngularFrame frame{r.origin, poly[0]};
    // Vertex directions are strictly increasing in this frame; find the last
    // vertex whose direction is <= the ray direction.
    auto le = [&](const ExactPoint& v) { return frame.compare(v, r.through) <= 0; };
    std::size_t lo = 0, hi = n;  // le(poly[0]) holds: position 0 is minimal
    while (hi - lo > 1) {
        std::size_t mid = (lo + hi) / 2;
        if (le(poly[mid]))
            lo = mid;
        else
            hi = mid;
    }
    return lo;
}

Halfplane Halfplane::bisector(const ExactPoint& s, const ExactPoint& t) {
    // dist2(p,t) - dist2(p,s) = (|t|^2-|s|^2) - 2p.(t-s), nonnegative on s's side.
    Halfplane h;
    h.c0 = t.x * t.x + t.y * t.y - s.x * s.x - s.y * s.y;
    h.cx = 2 * (s.x - t.x);
    h.cy = 2 * (s.y - t.y);
    return h;
}

Halfplane Halfplane::left_of(const ExactPoint& a, const ExactPoint& b) {
    Halfplane h;
    h.cx = -(b.y - a.y);
    h.cy = b.x - a.x;
    h.c0 = a.x * (b.y - a.y) - a.y * (b.x - a.x);
    return h;
}

int Halfplane::side(const ExactPoint& p) const {
    count_orient();
    return sign(value(p));
}

std::vector<ExactPoint> clip_halfplane(std::span<const ExactPoint> ring, const Halfplane& h) {
    std::vector<ExactPoint> out;
    const std::size_t n = ring.size();
    if (n == 0) return out;
    if (n == 1) {
        if (h.side(ring[0]) >= 0) out.push_back(ring[0]);
        return out;
    }
    std::vector<int> s(n);
    for (std::size_t i = 0; i < n; ++i) s[i] = h.side(ring[i]);
    if (n == 2) {
        // Segment clip.
        if (s[0] >= 0) out.push_back(ring[0]);
        if (s[0] * s[1] < 0) {
            Coordinate va = h.value(ring[0]);
            Coordinate t = va / (va - h.value(ring[1]));
            out.push_back(ExactPoint(ring[0].x + t * (ring[1].x - ring[0].x),
                                     ring[0].y + t * (ring[1].y - ring[0].y)));
        }
        if (s[1] >= 0) out.push_back(ring[1]);
        return out;
    }
    for (std::size_t i = 0; i < n; ++i) {
        std::size_t j = (i + 1) % n;
        if (s[i] >= 0) out.push_back(ring[i]);
        if ((s[i] > 0 && s[j] < 0) || (s[i] < 0 && s[j] > 0)) {
            Coordinate vi = h.value(ring[i]);
            Coordinate t = vi / (vi - h.value(ring[j]));
            out.push_back(ExactPoint(ring[i].x + t * (ring[j].x - ring[i].x),
                                     ring[i].y + t * (ring[j].y - ring[i].y)));
        }
    }
    return out;
}

std::optional<ConvexPolygon> intersect_convex(std::span<const ExactPoint> a,
                                              std::span<const ExactPoint> b) {
    if (a.size() < b.size()) return intersect_convex(b, a);
    if (b.size() == 1)
        return point_in_convex(a, b[0]) != Containment::Outside
                   ? std::optional<ConvexPolygon>(ConvexPolygon{{b[0]}})
                   : std::nullopt;
    if (b.size() == 2) {
        auto iv = segment_in_convex(a, b[0], b[1]);
        if (!iv) return std::nullopt;
        auto at = [&](const Coordinate& t) {
            return ExactPoint(b[0].x + t * (b[1].x - b[0].x), b[0].y + t * (b[1].y - b[0].y));
        };
        ConvexPolygon poly;
        poly.v.push_back(at(iv->first));
        ExactPoint p2 = at(iv->second);
        if (!(poly.v[0] == p2)) poly.v.push_back(p2);
        return poly;
    }
    std::vector<ExactPoint> cur(a.begin(), a.end());
    for (std::size_t i = 0; i < b.size() && !cur.empty(); ++i) {
        Halfplane h = Halfplane::left_of(b[i], b[(i + 1) % b.size()]);
        cur = clip_halfplane(cur, h);
    }
    if (cur.empty()) return std::nullopt;
    return make_polygon(std::move(cur));
}

std::optional<std::pair<Coordinate, Coordinate>> segment_in_convex(
    std::span<const ExactPoint> poly, const ExactPoint& a, const ExactPoint& b) {
    if (poly.size() == 1) {
        if (!on_segment(a, b, poly[0])) return std::nullopt;
        Coordinate t;
        if (cmp(a.x, b.x) != 0)
            t = (poly[0].x - a.x) / (b.x - a.x);
        else if (cmp(a.y, b.y) != 0)
            t = (poly[0].y - a.y) / (b.y - a.y);
        else
            t = 0;  // degenerate query segment equal to the point
        return std::make_pair(t, t);
    }
    Coordinate t0 = 0, t1 = 1;
    auto clip = [&](const Halfplane& h) {
        Coordinate va = h.value(a);
        Coordinate vb = h.value(b);
        // value along the segment: va + t*(vb-va) >= 0
        Coordinate d = vb - va;
        int sd = sign(d);
        if (sd == 0) {
            if (sign(va) < 0) t0 = 1, t1 = -1;  // empty
            return;
        }
        Coordinate t = -va / d;
        if (sd > 0) {
            if (cmp(t, t0) > 0) t0 = t;
        } else {
            if (cmp(t, t1) < 0) t1 = t;
        }
    };
    if (poly.size() == 2) {
        // Segment-segment: restrict to the supporting line, then 1-D overlap.
        Halfplane l1 = Halfplane::left_of(poly[0], poly[1]);
        int sa = l1.side(a), sb = l1.side(b);
        if (sa != 0 || sb != 0) {
            // Proper crossing or touch: intersection is a single parameter.
            if (sa * sb > 0) return std::nullopt;
            Coordinate va = l1.value(a);
            Coordinate t = va / (va - l1.value(b));
            ExactPoint x(a.x + t * (b.x - a.x), a.y + t * (b.y - a.y));
            if (!on_segment(poly[0], poly[1], x)) return std::nullopt;
            return std::make_pair(t, t);
        }
        // Collinear: clip by the two endpoint-perpendicular halfplanes.
        clip(Halfplane::bisector(poly[0], ExactPoint(2 * poly[1].x - poly[0].x,
                                                     2 * poly[1].y - poly[0].y)));
        clip(Halfplane::bisector(poly[1], ExactPoint(2 * poly[0].x - poly[1].x,
                                                     2 * poly[0].y - poly[1].y)));
        if (cmp(t0, t1) > 0) return std::nullopt;
        return std::make_pair(t0, t1);
    }
    for (std::size_t i = 0; i < poly.size(); ++i) {
        clip(Halfplane::left_of(poly[i], poly[(i + 1) % poly.size()]));
        if (cmp(t0, t1) > 0) return std::nullopt;
    }
    return std::make_pair(t0, t1);
}

}  // namespace pnn
