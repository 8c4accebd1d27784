#include "pnn/delaunay.h"

#include "pnn/polygon.h"

#include <algorithm>
#include <cassert>
#include <map>
#include <stdexcept>

namespace pnn {

Triangulation::Triangulation(std::vector<ExactPoint> sites) : sites_(std::move(sites)) {
    for (std::size_t i = 1; i < sites_.size(); ++i)
        if (!(sites_[i - 1] < sites_[i]))
            throw std::invalid_argument("Triangulation: sites must be sorted and distinct");

    if (sites_.empty()) return;
    incident_.assign(sites_.size(), kNone);

    // Morton-ordered insertion (rank-based grid, so the key is scale-free).
    // Ordering is a heuristic for walk locality; correctness never depends
    // on it, since the rank-weighted triangulation is unique.
    std::vector<std::uint32_t> order(sites_.size());
    for (std::uint32_t i = 0; i < order.size(); ++i) order[i] = i;
    if (sites_.size() > 2) {
        std::vector<std::uint64_t> key(sites_.size());
        std::vector<std::uint32_t> xr(sites_.size()), yr(sites_.size());
        std::vector<std::uint32_t> tmp = order;
        std::sort(tmp.begin(), tmp.end(), [&](std::uint32_t a, std::uint32_t b) {
            int c = cmp(sites_[a].x, sites_[b].x);
            if (c != 0) return c < 0;
            return a < b;
        });
        for (std::uint32_t r = 0; r < tmp.size(); ++r) xr[tmp[r]] = r;
        std::sort(tmp.begin(), tmp.end(), [&](std::uint32_t a, std::uint32_t b) {
            int c = cmp(sites_[a].y, sites_[b].y);
            if (c != 0) return c < 0;
            return a < b;
        });
        for (std::uint32_t r = 0; r < tmp.size(); ++r) yr[tmp[r]] = r;
        for (std::uint32_t i = 0; i < sites_.size(); ++i) {
            std::uint64_t k = 0;
            for (int bit = 19; bit >= 0; --bit) {
                k = (k << 1) | ((xr[i] >> bit) & 1);
                k = (k << 1) | ((yr[i] >> bit) & 1);
            }
            key[i] = k;
        }
        std::sort(order.begin(), order.end(),
                  [&](std::uint32_t a, std::uint32_t b) { return key[a] < key[b]; });
    }

    for (std::uint32_t s : order) insert_point(s);
}

std::uint32_t Triangulation::corner_of(std::uint32_t t, std::uint32_t s) const {
    const Tri& tr = tris_[t];
    for (std::uint32_t k = 0; k < 3; ++k)
        if (tr.v[k] == s) return k;
    throw std::logic_error("corner_of: vertex not in triangle");
}

std::uint32_t Triangulation::new_tri(std::uint32_t a, std::uint32_t b, std::uint32_t c) {
    std::uint32_t t;
    if (!free_.empty()) {
        t = free_.back();
        free_.pop_back();
        live_[t] = 1;
        tris_[t] = Tri{{a, b, c}, {kNone, kNone, kNone}};
    } else {
        t = static_cast<std::uint32_t>(tris_.size());
        tris_.push_back(Tri{{a, b, c}, {kNone, kNone, kNone}});
        live_.push_back(1);
    }
    for (std::uint32_t x : {a, b, c})
        if (x != kInfinite) incident_[x] = t;
    return t;
}

void Triangulation::drop_tri(std::uint32_t t) {
    live_[t] = 0;
    free_.push_back(t);
}

void Triangulation::set_nbr(std::uint32_t t, std::uint32_t across_corner, std::uint32_t u) {
    tris_[t].nbr[across_corner] = u;
}

bool Triangulation::conflicts(std::uint32_t t, std::uint32_t p) const {
    const Tri& tr = tris_[t];
    const ExactPoint& q = sites_[p];
    if (infinite(t)) {
        // (a, b, INF) sits outside the ccw hull edge a -> b.
        const ExactPoint& a = sites_[tr.v[0]];
        const ExactPoint& b = sites_[tr.v[1]];
        Orientation o = orient(a, b, q);
        if (o == Orientation::Right) return true;
        if (o == Orientation::Left) return false;
        // Collinear: the hull edge breaks only when q is strictly interior
        // to it (the lifted point dips below the edge regardless of weights).
        return on_segment(a, b, q) && !(q == a) && !(q == b);
    }
    return incircle_ranked(sites_[tr.v[0]], tr.v[0], sites_[tr.v[1]], tr.v[1],
                           sites_[tr.v[2]], tr.v[2], q, p) == CircleSide::Inside;
}

std::uint32_t Triangulation::walk(std::uint32_t p) const {
    const ExactPoint& q = sites_[p];
    std::uint32_t t = last_tri_;
    assert(t != kNone && live_[t]);
    std::uint32_t prev = kNone;
    for (;;) {
        if (infinite(t)) return t;  // entered from outside the hull
        const Tri& tr = tris_[t];
        bool moved = false;
        for (std::uint32_t k = 0; k < 3 && !moved; ++k) {
            std::uint32_t nb = tr.nbr[k];
            if (nb == prev) continue;
            const ExactPoint& a = sites_[tr.v[(k + 1) % 3]];
            const ExactPoint& b = sites_[tr.v[(k + 2) % 3]];
            if (orient(a, b, q) == Orientation::Right) {
                prev = t;
                t = nb;
                moved = true;
            }
        }
        if (!moved) return t;
    }
}

void Triangulation::bootstrap_dim2(std::uint32_t p) {
    // line_order_ holds >=2 collinear sites in line order; p is off the line.
    const std::size_t m = line_order_.size();
    const ExactPoint& q = sites_[p];
    int side =
        static_cast<int>(orient(sites_[line_order_[0]], sites_[line_order_[m - 1]], q));
    assert(side != 0);
    std::vector<std::uint32_t> chain = line_order_;
    if (side < 0) std::reverse(chain.begin(), chain.end());
    // p is strictly left of chain[0] -> chain[m-1]; the ccw hull is
    // chain[0], ..., chain[m-1], p.

    std::vector<std::uint32_t> fin(m - 1), inf(m - 1);
    for (std::size_t t = 0; t + 1 < m; ++t) {
        fin[t] = new_tri(chain[t], chain[t + 1], p);
        inf[t] = new_tri(chain[t], chain[t + 1], kInfinite);
    }
    std::uint32_t cap_hi = new_tri(chain[m - 1], p, kInfinite);
    std::uint32_t cap_lo = new_tri(p, chain[0], kInfinite);
    for (std::size_t t = 0; t + 1 < m; ++t) {
        set_nbr(fin[t], 2, inf[t]);                           // across (c_t, c_t+1)
        set_nbr(inf[t], 2, fin[t]);
        set_nbr(fin[t], 0, t + 2 < m ? fin[t + 1] : cap_hi);  // across (c_t+1, p)
        set_nbr(fin[t], 1, t > 0 ? fin[t - 1] : cap_lo);      // across (p, c_t)
        set_nbr(inf[t], 0, t + 2 < m ? inf[t + 1] : cap_hi);  // across (c_t+1, INF)
        set_nbr(inf[t], 1, t > 0 ? inf[t - 1] : cap_lo);      // across (INF, c_t)
    }
    set_nbr(cap_hi, 0, cap_lo);       // across (p, INF)
    set_nbr(cap_hi, 1, inf[m - 2]);   // across (INF, c_m-1)
    set_nbr(cap_hi, 2, fin[m - 2]);   // across (c_m-1, p)
    set_nbr(cap_lo, 0, inf[0]);       // across (c_0, INF)
    set_nbr(cap_lo, 1, cap_hi);       // across (INF, p)
    set_nbr(cap_lo, 2, fin[0]);       // across (p, c_0)
    last_tri_ = fin[0];
    dim_ = 2;
    line_order_.clear();
}

void Triangulation::insert_point(std::uint32_t p) {
    if (dim_ == 0) {
        line_order_.push_back(p);
        if (line_order_.size() == 2) dim_ = 1;
        std::sort(line_order_.begin(), line_order_.end(),
                  [&](std::uint32_t a, std::uint32_t b) { return sites_[a] < sites_[b]; });
        return;
    }
    if (dim_ == 1) {
        const ExactPoint& a = sites_[line_order_.front()];
        const ExactPoint& b = sites_[line_order_.back()];
        if (orient(a, b, sites_[p]) == Orientation::Collinear) {
            line_order_.push_back(p);
            std::sort(line_order_.begin(), line_order_.end(),
                      [&](std::uint32_t x, std::uint32_t y) { return sites_[x] < sites_[y]; });
            return;
        }
        bootstrap_dim2(p);
        return;
    }

    // Dimension 2: locate, grow the conflict cavity, re-star.
    std::uint32_t seed = walk(p);
    if (!conflicts(seed, p)) {
        bool found = false;
        for (std::uint32_t k = 0; k < 3 && !found; ++k) {
            std::uint32_t nb = tris_[seed].nbr[k];
            if (nb != kNone && conflicts(nb, p)) {
                seed = nb;
                found = true;
            }
        }
        if (!found) throw std::logic_error("delaunay: no conflict at located triangle");
    }

    std::vector<std::uint32_t> cavity{seed};
    std::vector<char> in_cavity(tris_.size(), 0);
    in_cavity[seed] = 1;
    for (std::size_t h = 0; h < cavity.size(); ++h) {
        for (std::uint32_t nb : tris_[cavity[h]].nbr) {
            if (in_cavity[nb] || !conflicts(nb, p)) continue;
            in_cavity[nb] = 1;
            cavity.push_back(nb);
        }
    }

    // Boundary edges (x -> y), cavity on the left, chained by start vertex.
    struct BEdge {
        std::uint32_t y = 0;
        std::uint32_t outside = 0;
        std::uint32_t outside_corner = 0;
    };
    std::map<std::uint32_t, BEdge> by_start;
    for (std::uint32_t t : cavity) {
        const Tri& tr = tris_[t];
        for (std::uint32_t k = 0; k < 3; ++k) {
            std::uint32_t nb = tr.nbr[k];
            if (in_cavity[nb]) continue;
            std::uint32_t x = tr.v[(k + 1) % 3];
            std::uint32_t y = tr.v[(k + 2) % 3];
            std::uint32_t oc = 0;
            const Tri& ot = tris_[nb];
            for (std::uint32_t j = 0; j < 3; ++j)
                if (ot.nbr[j] == t) oc = j;
            bool fresh = by_start.emplace(x, BEdge{y, nb, oc}).second;
            if (!fresh) throw std::logic_error("delaunay: cavity boundary not simple");
        }
    }
    for (std::uint32_t t : cavity) drop_tri(t);

    std::vector<std::pair<std::uint32_t, BEdge>> loop;
    std::uint32_t start = by_start.begin()->first;
    std::uint32_t cur = start;
    do {
        auto it = by_start.find(cur);
        if (it == by_start.end()) throw std::logic_error("delaunay: broken cavity boundary");
        loop.emplace_back(it->first, it->second);
        cur = it->second.y;
    } while (cur != start && loop.size() <= by_start.size());
    if (loop.size() != by_start.size())
        throw std::logic_error("delaunay: cavity boundary is not a single cycle");

    std::vector<std::uint32_t> made(loop.size());
    for (std::size_t e = 0; e < loop.size(); ++e) {
        std::uint32_t x = loop[e].first, y = loop[e].second.y;
        if (x == kInfinite)
            made[e] = new_tri(y, p, kInfinite);
        else if (y == kInfinite)
            made[e] = new_tri(p, x, kInfinite);
        else
            made[e] = new_tri(x, y, p);
    }
    for (std::size_t e = 0; e < loop.size(); ++e) {
        std::uint32_t x = loop[e].first;
        const BEdge& be = loop[e].second;
        std::uint32_t t = made[e];
        std::uint32_t prev = made[(e + loop.size() - 1) % loop.size()];
        std::uint32_t next = made[(e + 1) % loop.size()];
        std::uint32_t cp = corner_of(t, p);
        std::uint32_t cx = corner_of(t, x);
        std::uint32_t cy = corner_of(t, be.y);
        set_nbr(t, cp, be.outside);  // across (x, y)
        set_nbr(be.outside, be.outside_corner, t);
        set_nbr(t, cx, next);        // across (y, p)
        set_nbr(t, cy, prev);        // across (p, x)
    }
    last_tri_ = made[0];
}

bool Triangulation::on_hull(std::uint32_t s) const {
    if (dim_ <= 1) return true;
    std::uint32_t t0 = incident_[s];
    std::uint32_t t = t0;
    do {
        if (infinite(t)) return true;
        std::uint32_t c = corner_of(t, s);
        t = tris_[t].nbr[(c + 1) % 3];
    } while (t != t0);
    return false;
}

std::vector<std::vector<std::uint32_t>> Triangulation::neighbor_lists() const {
    std::vector<std::vector<std::uint32_t>> out(sites_.size());
    if (dim_ <= 0) return out;
    if (dim_ == 1) {
        for (std::size_t i = 0; i < line_order_.size(); ++i) {
            if (i > 0) out[line_order_[i]].push_back(line_order_[i - 1]);
            if (i + 1 < line_order_.size()) out[line_order_[i]].push_back(line_order_[i + 1]);
        }
        return out;
    }
    for (std::uint32_t s = 0; s < sites_.size(); ++s) {
        // Collect the ccw triangle cycle, rotated to begin at an infinite
        // wedge when there is one, so hull sites yield their fan path.
        std::vector<std::uint32_t> cycle;
        std::uint32_t t0 = incident_[s];
        std::uint32_t t = t0;
        std::uint32_t start_inf = kNone;
        do {
            cycle.push_back(t);
            if (infinite(t) && start_inf == kNone) start_inf = cycle.size() - 1;
            std::uint32_t c = corner_of(t, s);
            t = tris_[t].nbr[(c + 1) % 3];
        } while (t != t0);
        std::size_t off = start_inf == kNone ? 0 : start_inf;
        std::vector<std::uint32_t>& lst = out[s];
        for (std::size_t e = 0; e < cycle.size(); ++e) {
            std::uint32_t tt = cycle[(e + off) % cycle.size()];
            std::uint32_t c = corner_of(tt, s);
            std::uint32_t lead = tris_[tt].v[(c + 1) % 3];
            if (lead != kInfinite) lst.push_back(lead);
        }
    }
    return out;
}

void Triangulation::interior_cell_ring(std::uint32_t s, std::vector<ExactPoint>& ring,
                                       std::vector<std::uint32_t>& edge_tags) const {
    ring.clear();
    edge_tags.clear();
    std::uint32_t t0 = incident_[s];
    std::uint32_t t = t0;
    do {
        const Tri& tr = tris_[t];
        std::uint32_t c = corner_of(t, s);
        ring.push_back(circumcenter(sites_[tr.v[0]], sites_[tr.v[1]], sites_[tr.v[2]]));
        edge_tags.push_back(tr.v[(c + 2) % 3]);
        t = tr.nbr[(c + 1) % 3];
    } while (t != t0);
}

std::vector<std::array<std::uint32_t, 3>> Triangulation::finite_triangles() const {
    std::vector<std::array<std::uint32_t, 3>> out;
    for (std::uint32_t t = 0; t < tris_.size(); ++t) {
        if (!live_[t] || infinite(t)) continue;
        out.push_back(tris_[t].v);
    }
    return out;
}

}  // namespace pnn
