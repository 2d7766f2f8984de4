#include "fuzzpolar/region.hpp"

#include "fuzzpolar/errors.hpp"

namespace fuzzpolar {

Region Region::empty(int n) {
    Region r;
    r.kind = RegionKind::Empty;
    r.dim = n;
    return r;
}

Region Region::whole_space(int n) {
    Region r;
    r.kind = RegionKind::WholeSpace;
    r.dim = n;
    return r;
}

Region Region::make_points(int n, std::vector<Vec> pts) {
    Region r;
    r.kind = RegionKind::Points;
    r.dim = n;
    r.points = std::move(pts);
    for (const auto& p : r.points)
        if (static_cast<int>(p.size()) != n)
            throw InvalidInput("point dimension mismatch");
    return r;
}

Region Region::vpolytope(int n, std::vector<Vec> vertices) {
    Region r = make_points(n, std::move(vertices));
    r.kind = RegionKind::VPolytope;
    return r;
}

Region Region::hpolyhedron(int n, std::vector<Halfspace> hs) {
    Region r;
    r.kind = RegionKind::HPolyhedron;
    r.dim = n;
    r.halfspaces = std::move(hs);
    for (const auto& h : r.halfspaces)
        if (static_cast<int>(h.normal.size()) != n)
            throw InvalidInput("halfspace dimension mismatch");
    return r;
}

Region Region::make_union(int n, std::vector<Region> members) {
    Region r;
    r.kind = RegionKind::Union;
    r.dim = n;
    r.members = std::move(members);
    for (const auto& m : r.members)
        if (m.dim != n) throw InvalidInput("union member dimension mismatch");
    return r;
}

Region Region::origin(int n) { return make_points(n, {zero_vec(n)}); }

Region Region::box(const Vec& lo, const Vec& hi) {
    int n = static_cast<int>(lo.size());
    std::vector<Vec> verts{{}};
    for (int i = 0; i < n; ++i) {
        std::vector<Vec> next;
        for (const auto& v : verts)
            for (const Rational& c : {lo[i], hi[i]}) {
                Vec w = v;
                w.push_back(c);
                next.push_back(std::move(w));
            }
        verts = std::move(next);
    }
    return vpolytope(n, std::move(verts));
}

Region Region::interval(const Rational& lo, const Rational& hi) {
    return box({lo}, {hi});
}

int compare_halfspace(const Halfspace& a, const Halfspace& b) {
    int c = compare_vec(a.normal, b.normal);
    if (c != 0) return c;
    if (a.offset < b.offset) return -1;
    if (a.offset > b.offset) return 1;
    return 0;
}

int compare_region(const Region& a, const Region& b) {
    if (a.kind != b.kind) return a.kind < b.kind ? -1 : 1;
    if (a.dim != b.dim) return a.dim < b.dim ? -1 : 1;
    if (a.points.size() != b.points.size())
        return a.points.size() < b.points.size() ? -1 : 1;
    for (std::size_t i = 0; i < a.points.size(); ++i)
        if (int c = compare_vec(a.points[i], b.points[i])) return c;
    if (a.halfspaces.size() != b.halfspaces.size())
        return a.halfspaces.size() < b.halfspaces.size() ? -1 : 1;
    for (std::size_t i = 0; i < a.halfspaces.size(); ++i)
        if (int c = compare_halfspace(a.halfspaces[i], b.halfspaces[i])) return c;
    if (a.members.size() != b.members.size())
        return a.members.size() < b.members.size() ? -1 : 1;
    for (std::size_t i = 0; i < a.members.size(); ++i)
        if (int c = compare_region(a.members[i], b.members[i])) return c;
    return 0;
}

} // namespace fuzzpolar
