#include "strangedual/polytope.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "strangedual/error.hpp"

namespace strangedual {

namespace {

// 2D hull by monotone chain on exact rationals; input deduped points,
// returns extreme points in cyclic order (collinear midpoints dropped).
std::vector<std::array<Rat, 2>> hull2d(std::vector<std::array<Rat, 2>> pts) {
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    const size_t n = pts.size();
    if (n <= 2) return pts;
    auto turn = [](const std::array<Rat, 2>& o, const std::array<Rat, 2>& a,
                   const std::array<Rat, 2>& b) {
        return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
    };
    std::vector<std::array<Rat, 2>> h;
    for (const auto& p : pts) { // lower
        while (h.size() >= 2 && turn(h[h.size() - 2], h.back(), p) <= 0) h.pop_back();
        h.push_back(p);
    }
    size_t lower = h.size() + 1;
    for (auto it = pts.rbegin(); it != pts.rend(); ++it) { // upper
        while (h.size() >= lower && turn(h[h.size() - 2], h.back(), *it) <= 0) h.pop_back();
        h.push_back(*it);
    }
    h.pop_back();
    return h;
}

} // namespace

RationalPolytope convex_hull(std::vector<Vec3Q> points) {
    if (points.empty()) fail("EmptyInput", "convex hull of no points");
    std::sort(points.begin(), points.end());
    points.erase(std::unique(points.begin(), points.end()), points.end());

    RationalPolytope p;
    p.dim_ = affine_rank(points);

    if (p.dim_ == 0) {
        p.vertices_ = {points[0]};
        return p;
    }

    if (p.dim_ == 1) {
        Vec3Q d;
        for (size_t i = 1; i < points.size(); ++i) {
            d = points[i] - points[0];
            if (!d.is_zero()) break;
        }
        auto key = [&](const Vec3Q& q) { return dot(q - points[0], d); };
        Vec3Q lo = points[0], hi = points[0];
        for (const auto& q : points) {
            if (key(q) < key(lo)) lo = q;
            if (key(q) > key(hi)) hi = q;
        }
        p.vertices_ = {lo, hi};
        std::sort(p.vertices_.begin(), p.vertices_.end());
        return p;
    }

    if (p.dim_ == 2) {
        // plane normal from two independent edge vectors
        Vec3Q nrm;
        bool found = false;
        for (size_t i = 1; i < points.size() && !found; ++i)
            for (size_t j = i + 1; j < points.size() && !found; ++j) {
                Vec3Q c = cross(points[i] - points[0], points[j] - points[0]);
                if (!c.is_zero()) { nrm = primitive(c); found = true; }
            }
        int k = 0;
        for (int i = 1; i < 3; ++i)
            if (abs(nrm[i]) > abs(nrm[k])) k = i;
        auto proj = [&](const Vec3Q& q) {
            std::array<Rat, 2> r;
            int t = 0;
            for (int i = 0; i < 3; ++i)
                if (i != k) r[static_cast<size_t>(t++)] = q[i];
            return r;
        };
        std::map<std::array<Rat, 2>, Vec3Q> back;
        std::vector<std::array<Rat, 2>> flat;
        for (const auto& q : points) {
            auto f = proj(q);
            back[f] = q;
            flat.push_back(f);
        }
        auto cyc2 = hull2d(std::move(flat));
        std::vector<Vec3Q> cyc;
        for (const auto& f : cyc2) cyc.push_back(back.at(f));
        p.vertices_ = cyc;
        std::sort(p.vertices_.begin(), p.vertices_.end());
        for (const auto& v : cyc) {
            auto it = std::lower_bound(p.vertices_.begin(), p.vertices_.end(), v);
            p.cycle_.push_back(static_cast<int>(it - p.vertices_.begin()));
        }
        return p;
    }

    // dim 3: brute-force facet enumeration over point triples. Input sizes
    // never exceed a dozen points, exactness is what matters.
    const size_t n = points.size();
    std::map<Facet, std::vector<size_t>> facets;
    for (size_t a = 0; a < n; ++a)
        for (size_t b = a + 1; b < n; ++b)
            for (size_t c = b + 1; c < n; ++c) {
                Vec3Q nr = cross(points[b] - points[a], points[c] - points[a]);
                if (nr.is_zero()) continue;
                nr = primitive(nr);
                Rat off = dot(nr, points[a]);
                bool onside = true;
                int sign = 0;
                for (const auto& q : points) {
                    Rat v = dot(nr, q) - off;
                    if (v == 0) continue;
                    int s = v > 0 ? 1 : -1;
                    if (sign == 0) sign = s;
                    else if (sign != s) { onside = false; break; }
                }
                if (!onside || sign == 0) continue;
                if (sign < 0) { nr = -nr; off = -off; }
                Facet f{nr, off};
                if (facets.count(f)) continue;
                std::vector<size_t> on;
                for (size_t i = 0; i < n; ++i)
                    if (dot(f.normal, points[i]) == f.offset) on.push_back(i);
                facets.emplace(std::move(f), std::move(on));
            }

    std::vector<std::vector<Vec3Q>> normals_at(n);
    for (const auto& [f, on] : facets)
        for (size_t i : on) normals_at[i].push_back(f.normal);
    for (size_t i = 0; i < n; ++i)
        if (normals_at[i].size() >= 3 && linear_rank(normals_at[i]) == 3)
            p.vertices_.push_back(points[i]);
    std::sort(p.vertices_.begin(), p.vertices_.end());
    for (const auto& [f, on] : facets) p.facets_.push_back(f);
    std::sort(p.facets_.begin(), p.facets_.end());
    return p;
}

std::vector<Vec3Q> RationalPolytope::cycle() const {
    if (dim_ != 2) fail("DimensionMismatch", "cycle() requires a 2-dimensional polytope");
    std::vector<Vec3Q> out;
    for (int i : cycle_) out.push_back(vertices_[static_cast<size_t>(i)]);
    return out;
}

std::vector<std::pair<Vec3Q, Vec3Q>> RationalPolytope::edges() const {
    std::vector<std::pair<Vec3Q, Vec3Q>> out;
    if (dim_ == 1) {
        out.emplace_back(vertices_[0], vertices_[1]);
    } else if (dim_ == 2) {
        auto cyc = cycle();
        for (size_t i = 0; i < cyc.size(); ++i)
            out.emplace_back(cyc[i], cyc[(i + 1) % cyc.size()]);
    } else {
        fail("DimensionMismatch", "edges() requires dim 1 or 2");
    }
    return out;
}

bool RationalPolytope::contains_origin_strictly() const {
    if (dim_ != 3) return false;
    for (const auto& f : facets_)
        if (!(f.offset < 0)) return false;
    return true;
}

RationalPolytope polar_dual(const RationalPolytope& p) {
    if (p.dim() != 3 || !p.contains_origin_strictly())
        fail("OriginNotInterior",
             "polar dual needs a 3-dimensional polytope with 0 strictly inside");
    std::vector<Vec3Q> dual;
    for (const auto& f : p.facets())
        dual.push_back(Rat(-1) / f.offset * f.normal);
    return convex_hull(std::move(dual));
}

RationalPolytope translate(const RationalPolytope& p, const Vec3Q& t) {
    std::vector<Vec3Q> moved;
    for (const auto& v : p.vertices()) moved.push_back(v + t);
    return convex_hull(std::move(moved));
}

std::string to_string(const RationalPolytope& p) {
    std::ostringstream os;
    os << "{";
    for (size_t i = 0; i < p.vertices().size(); ++i) {
        if (i) os << ", ";
        os << to_string(p.vertices()[i]);
    }
    os << "}";
    return os.str();
}

} // namespace strangedual
