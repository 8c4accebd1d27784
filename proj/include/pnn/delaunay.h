#pragma once

#include "pnn/predicates.h"

#include <array>
#include <cstdint>
#include <span>
#include <vector>

namespace pnn {

/// Delaunay triangulation of a distinct, lexicographically sorted site list.
///
/// Construction is incremental (Morton-ordered insertion, visibility walk,
/// cavity retriangulation) over exact predicates.  Cocircular degeneracies
/// are resolved by incircle_ranked, i.e. the triangulation is the limit
/// regular triangulation under rank weights, so the result is unique and
/// independent of insertion order.  Site sets of dimension 0 and 1 (single
/// point, all collinear) are represented without triangles.
class Triangulation {
  public:
    static constexpr std::uint32_t kInfinite = 0xffffffffu;
    static constexpr std::uint32_t kNone = 0xfffffffeu;

    struct Tri {
        std::array<std::uint32_t, 3> v;    // ccw; infinite tris hold kInfinite at slot 2
        std::array<std::uint32_t, 3> nbr;  // nbr[k] across the edge opposite v[k]
    };

    explicit Triangulation(std::vector<ExactPoint> sites);

    const std::vector<ExactPoint>& sites() const { return sites_; }
    std::size_t site_count() const { return sites_.size(); }

    /// 0: <=1 site, 1: >=2 collinear sites, 2: full-dimensional.
    int dimension() const { return dim_; }

    /// Dual adjacency per site, counterclockwise.  For a hull site the list
    /// is the ccw path from one hull neighbor to the other; interior sites
    /// get the full cycle.  Dimension 1 gives the line path (1 or 2 entries).
    std::vector<std::vector<std::uint32_t>> neighbor_lists() const;

    bool on_hull(std::uint32_t s) const;

    /// Interior-site Voronoi ring: circumcenters of the ccw incident
    /// triangles.  Parallel edge tags: ring edge t (center t -> t+1) is dual
    /// to the Delaunay edge toward tag t.  Precondition: !on_hull(s), dim 2.
    void interior_cell_ring(std::uint32_t s, std::vector<ExactPoint>& ring,
                            std::vector<std::uint32_t>& edge_tags) const;

    /// All live finite triangles (for validation and tests).
    std::vector<std::array<std::uint32_t, 3>> finite_triangles() const;

  private:
    int dim_ = 0;
    std::vector<ExactPoint> sites_;
    std::vector<std::uint32_t> line_order_;  // dim<=1: sites sorted along the line

    std::vector<Tri> tris_;
    std::vector<std::uint32_t> free_;
    std::vector<char> live_;
    std::vector<std::uint32_t> incident_;  // per site, one live triangle
    std::uint32_t last_tri_ = kNone;

    bool infinite(std::uint32_t t) const { return tris_[t].v[2] == kInfinite; }
    std::uint32_t corner_of(std::uint32_t t, std::uint32_t s) const;
    std::uint32_t new_tri(std::uint32_t a, std::uint32_t b, std::uint32_t c);
    void drop_tri(std::uint32_t t);
    bool conflicts(std::uint32_t t, std::uint32_t p) const;
    std::uint32_t walk(std::uint32_t p) const;
    void insert_point(std::uint32_t p);
    void bootstrap_dim2(std::uint32_t p);
    void set_nbr(std::uint32_t t, std::uint32_t across_corner, std::uint32_t u);
};

}  // namespace pnn
