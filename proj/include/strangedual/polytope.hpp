#pragma once

#include <string>
#include <utility>
#include <vector>

#include "strangedual/vec.hpp"

namespace strangedual {

// Supporting halfspace <normal, x> >= offset, tight on the facet.
// normal is a primitive integral vector, offset rational.
struct Facet {
    Vec3Q normal;
    Rat offset;

    friend bool operator==(const Facet& a, const Facet& b) {
        return a.normal == b.normal && a.offset == b.offset;
    }
    friend bool operator<(const Facet& a, const Facet& b) {
        if (a.normal != b.normal) return a.normal < b.normal;
        return a.offset < b.offset;
    }
};

// Convex polytope of dimension 0..3 with exact rational vertices.
// Vertices are stored in canonical (lexicographic ascending) order and are
// irredundant. Facets are present exactly when dim == 3; for dim == 2 the
// cyclic boundary order of the vertices is kept for face walks and fans.
class RationalPolytope {
public:
    RationalPolytope() = default;

    const std::vector<Vec3Q>& vertices() const { return vertices_; }
    int dim() const { return dim_; }
    const std::vector<Facet>& facets() const { return facets_; }

    // dim == 2 only: vertices in cyclic boundary order
    std::vector<Vec3Q> cycle() const;
    // dim >= 1: edges as vertex pairs (for dim 1, the polytope itself)
    std::vector<std::pair<Vec3Q, Vec3Q>> edges() const;

    // dim == 3 only: true iff 0 satisfies every facet strictly
    bool contains_origin_strictly() const;

    friend bool operator==(const RationalPolytope& a, const RationalPolytope& b) {
        return a.dim_ == b.dim_ && a.vertices_ == b.vertices_;
    }
    friend bool operator!=(const RationalPolytope& a, const RationalPolytope& b) {
        return !(a == b);
    }

    friend RationalPolytope convex_hull(std::vector<Vec3Q> points);

private:
    std::vector<Vec3Q> vertices_;
    int dim_ = -1;
    std::vector<Facet> facets_;
    std::vector<int> cycle_; // indices into vertices_, dim == 2 only
};

RationalPolytope convex_hull(std::vector<Vec3Q> points);

// {y : <x,y> >= -1 for all x in P}; requires dim 3 and 0 strictly interior.
RationalPolytope polar_dual(const RationalPolytope& p);

RationalPolytope translate(const RationalPolytope& p, const Vec3Q& t);

std::string to_string(const RationalPolytope& p);

} // namespace strangedual
