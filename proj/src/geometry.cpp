#include "fuzzpolar/geometry.hpp"

#include <algorithm>
#include <cassert>

#include "fuzzpolar/errors.hpp"
#include "fuzzpolar/lp.hpp"

namespace fuzzpolar {

namespace {

void check_dim(int n) {
    if (n > kMaxDimension)
        throw Unsupported("dimension " + std::to_string(n) + " exceeds the cap of " +
                          std::to_string(kMaxDimension));
}

// Positive scaling to a coprime-integer normal.
Halfspace canonical_halfspace(Halfspace h) {
    if (is_zero_vec(h.normal)) return h;
    Vec prim = primitive_integer_direction(h.normal);
    std::size_t i = 0;
    while (h.normal[i] == 0) ++i;
    Rational factor = prim[i] / h.normal[i]; // > 0
    h.normal = std::move(prim);
    h.offset *= factor;
    return h;
}

std::vector<Vec> dedupe_sort_points(std::vector<Vec> pts) {
    std::sort(pts.begin(), pts.end(),
              [](const Vec& a, const Vec& b) { return compare_vec(a, b) < 0; });
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    return pts;
}

// x in conv(pts), by exact feasibility of a convex combination.
bool point_in_vpoly(const std::vector<Vec>& pts, const Vec& x) {
    if (pts.empty()) return false;
    const std::size_t k = pts.size();
    const std::size_t n = x.size();
    std::vector<Vec> rows;
    Vec rhs;
    for (std::size_t i = 0; i < k; ++i) { // lambda_i >= 0
        Vec r(k, Rational(0));
        r[i] = -1;
        rows.push_back(std::move(r));
        rhs.push_back(0);
    }
    for (std::size_t j = 0; j < n; ++j) { // sum lambda_i * v_i = x
        Vec r(k);
        for (std::size_t i = 0; i < k; ++i) r[i] = pts[i][j];
        rows.push_back(r);
        rhs.push_back(x[j]);
        for (auto& e : r) e = -e;
        rows.push_back(std::move(r));
        rhs.push_back(-x[j]);
    }
    Vec ones(k, Rational(1)), mones(k, Rational(-1)); // sum lambda = 1
    rows.push_back(ones);
    rhs.push_back(1);
    rows.push_back(mones);
    rhs.push_back(-1);
    return lp_maximize(rows, rhs, Vec(k, Rational(0))).status != LpStatus::Infeasible;
}

std::vector<Vec> extreme_filter(std::vector<Vec> pts) {
    pts = dedupe_sort_points(std::move(pts));
    for (std::size_t i = 0; i < pts.size();) {
        std::vector<Vec> others;
        for (std::size_t j = 0; j < pts.size(); ++j)
            if (j != i) others.push_back(pts[j]);
        if (point_in_vpoly(others, pts[i]))
            pts.erase(pts.begin() + static_cast<std::ptrdiff_t>(i));
        else
            ++i;
    }
    return pts;
}

bool satisfies(const std::vector<Halfspace>& hs, const Vec& x) {
    for (const auto& h : hs)
        if (dot(h.normal, x) > h.offset) return false;
    return true;
}

bool h_feasible(const std::vector<Halfspace>& hs, int n) {
    std::vector<Vec> rows;
    Vec rhs;
    for (const auto& h : hs) {
        rows.push_back(h.normal);
        rhs.push_back(h.offset);
    }
    return lp_maximize(rows, rhs, zero_vec(n)).status != LpStatus::Infeasible;
}

template <typename F>
void for_each_subset(std::size_t m, std::size_t k, F&& f) {
    std::vector<std::size_t> idx(k);
    for (std::size_t i = 0; i < k; ++i) idx[i] = i;
    if (k > m) return;
    for (;;) {
        f(idx);
        std::size_t i = k;
        while (i > 0 && idx[i - 1] == m - k + i - 1) --i;
        if (i == 0) break;
        ++idx[i - 1];
        for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
}

// Extreme rays of the pointed cone { d : rows . d <= 0 } via (n-1)-subsets
// of active constraints.
std::vector<Vec> pointed_cone_rays(const std::vector<Vec>& normals, int n) {
    std::vector<Vec> rays;
    auto consider = [&](const Vec& d) {
        if (is_zero_vec(d)) return;
        for (const auto& a : normals)
            if (dot(a, d) > 0) return;
        rays.push_back(d);
    };
    if (n == 1) {
        consider(Vec{Rational(1)});
        consider(Vec{Rational(-1)});
    } else {
        for_each_subset(normals.size(), static_cast<std::size_t>(n - 1),
                        [&](const std::vector<std::size_t>& idx) {
                            Mat sub;
                            for (auto i : idx) sub.push_back(normals[i]);
                            auto ns = null_space(sub);
                            if (ns.size() != 1) return;
                            Vec d = primitive_integer_direction(ns[0]);
                            consider(d);
                            consider(vec_scale(-1, d));
                        });
    }
    return dedupe_sort_points(std::move(rays));
}

Generators h_generators_impl(const std::vector<Halfspace>& hs_in, int n) {
    check_dim(n);
    // Normalize and drop trivial constraints.
    std::vector<Halfspace> hs;
    for (const auto& h : hs_in) {
        Halfspace c = canonical_halfspace(h);
        if (is_zero_vec(c.normal)) {
            if (c.offset < 0) return {}; // infeasible
            continue;
        }
        hs.push_back(std::move(c));
    }
    if (!h_feasible(hs, n)) return {};

    Mat normals;
    for (const auto& h : hs) normals.push_back(h.normal);

    // Lineality space: directions on which every constraint vanishes.
    std::vector<Vec> lin =
        normals.empty() ? identity_mat(n) : null_space(normals);
    if (!lin.empty()) {
        // Quotient by the lineality: restrict to standard coordinates
        // complementing the pivot columns of the lineality basis.
        Mat lmat = lin;
        std::vector<bool> pivot_col(static_cast<std::size_t>(n), false);
        {
            Mat tmp = lmat;
            // Recompute pivots by elimination.
            std::size_t r = 0;
            for (int c = 0; c < n && r < tmp.size(); ++c) {
                std::size_t p = r;
                while (p < tmp.size() && tmp[p][static_cast<std::size_t>(c)] == 0) ++p;
                if (p == tmp.size()) continue;
                std::swap(tmp[p], tmp[r]);
                Rational inv = Rational(1) / tmp[r][static_cast<std::size_t>(c)];
                for (auto& x : tmp[r]) x *= inv;
                for (std::size_t i = 0; i < tmp.size(); ++i) {
                    if (i == r) continue;
                    Rational f = tmp[i][static_cast<std::size_t>(c)];
                    if (f == 0) continue;
                    for (int j = 0; j < n; ++j)
                        tmp[i][static_cast<std::size_t>(j)] -=
                            f * tmp[r][static_cast<std::size_t>(j)];
                }
                pivot_col[static_cast<std::size_t>(c)] = true;
                ++r;
            }
        }
        std::vector<std::size_t> keep;
        for (std::size_t j = 0; j < static_cast<std::size_t>(n); ++j)
            if (!pivot_col[j]) keep.push_back(j);
        const int k = static_cast<int>(keep.size());
        std::vector<Halfspace> reduced;
        for (const auto& h : hs) {
            Vec a(keep.size());
            for (std::size_t j = 0; j < keep.size(); ++j) a[j] = h.normal[keep[j]];
            reduced.push_back({std::move(a), h.offset});
        }
        Generators q = k == 0 ? Generators{{Vec{}}, {}}
                              : h_generators_impl(reduced, k);
        auto embed = [&](const Vec& u) {
            Vec x = zero_vec(n);
            for (std::size_t j = 0; j < keep.size(); ++j) x[keep[j]] = u[j];
            return x;
        };
        Generators out;
        for (const auto& u : q.points) out.points.push_back(embed(u));
        for (const auto& u : q.rays) out.rays.push_back(embed(u));
        for (const auto& l : lin) {
            Vec d = primitive_integer_direction(l);
            out.rays.push_back(d);
            out.rays.push_back(vec_scale(-1, d));
        }
        out.rays = dedupe_sort_points(std::move(out.rays));
        return out;
    }

    // Pointed case: vertices from n-subsets, rays from the recession cone.
    Generators out;
    for_each_subset(hs.size(), static_cast<std::size_t>(n),
                    [&](const std::vector<std::size_t>& idx) {
                        Mat sub;
                        Vec rhs;
                        for (auto i : idx) {
                            sub.push_back(hs[i].normal);
                            rhs.push_back(hs[i].offset);
                        }
                        if (determinant(sub) == 0) return;
                        auto x = solve_linear(sub, rhs);
                        if (x && satisfies(hs, *x)) out.points.push_back(*x);
                    });
    out.points = dedupe_sort_points(std::move(out.points));
    assert(!out.points.empty()); // feasible pointed polyhedra have a vertex
    out.rays = pointed_cone_rays(normals, n);
    return out;
}

// H-representation of conv(verts), handling lower-dimensional hulls by
// recursing inside the exact affine hull.
std::vector<Halfspace> v_to_h(std::vector<Vec> verts, int n) {
    check_dim(n);
    verts = dedupe_sort_points(std::move(verts));
    assert(!verts.empty());
    const Vec& p0 = verts[0];
    Mat dirs;
    for (std::size_t i = 1; i < verts.size(); ++i)
        dirs.push_back(vec_sub(verts[i], p0));
    int k = dirs.empty() ? 0 : rank(dirs);

    std::vector<Halfspace> out;
    if (k == 0) { // single point: coordinate equalities
        for (int j = 0; j < n; ++j) {
            Vec e = zero_vec(n);
            e[static_cast<std::size_t>(j)] = 1;
            out.push_back({e, p0[static_cast<std::size_t>(j)]});
            out.push_back({vec_scale(-1, e), -p0[static_cast<std::size_t>(j)]});
        }
        return out;
    }
    if (k == n) {
        // Facet candidates: hyperplanes through n-subsets of vertices.
        for_each_subset(verts.size(), static_cast<std::size_t>(n),
                        [&](const std::vector<std::size_t>& idx) {
                            Mat diffs;
                            for (std::size_t j = 1; j < idx.size(); ++j)
                                diffs.push_back(vec_sub(verts[idx[j]], verts[idx[0]]));
                            if (n > 1) {
                                auto ns = null_space(diffs);
                                if (ns.size() != 1) return;
                                Vec nu = primitive_integer_direction(ns[0]);
                                Rational off = dot(nu, verts[idx[0]]);
                                bool below = true, above = true;
                                for (const auto& v : verts) {
                                    Rational d = dot(nu, v);
                                    if (d > off) below = false;
                                    if (d < off) above = false;
                                }
                                if (below) out.push_back({nu, off});
                                if (above) out.push_back({vec_scale(-1, nu), -off});
                            } else {
                                Vec nu{Rational(1)};
                                Rational off = verts[idx[0]][0];
                                bool below = true, above = true;
                                for (const auto& v : verts) {
                                    if (v[0] > off) below = false;
                                    if (v[0] < off) above = false;
                                }
                                if (below) out.push_back({nu, off});
                                if (above) out.push_back({Vec{Rational(-1)}, -off});
                            }
                        });
        std::sort(out.begin(), out.end(), [](const Halfspace& a, const Halfspace& b) {
            return compare_halfspace(a, b) < 0;
        });
        out.erase(std::unique(out.begin(), out.end()), out.end());
        return out;
    }

    // Lower-dimensional: affine-hull equalities plus lifted facets.
    for (const auto& ns : null_space(dirs)) {
        Vec nu = primitive_integer_direction(ns);
        Rational off = dot(nu, p0);
        out.push_back({nu, off});
        out.push_back({vec_scale(-1, nu), -off});
    }
    // Basis of the direction space: k independent rows of dirs.
    Mat basis;
    for (const auto& d : dirs) {
        Mat trial = basis;
        trial.push_back(d);
        if (rank(trial) > static_cast<int>(basis.size())) basis = std::move(trial);
        if (static_cast<int>(basis.size()) == k) break;
    }
    // Columns view: x = p0 + sum u_j basis[j].
    Mat bcols = mat_transpose(basis); // n x k
    std::vector<Vec> uverts;
    for (const auto& v : verts) {
        auto u = solve_linear(bcols, vec_sub(v, p0));
        assert(u);
        uverts.push_back(*u);
    }
    auto inner = v_to_h(std::move(uverts), k);
    // Left inverse W = (B^T B)^{-1} B^T lifts u-functionals to x-functionals.
    Mat gram = mat_mul(basis, bcols); // k x k, invertible
    for (const auto& h : inner) {
        auto y = solve_linear(gram, h.normal); // y = G^{-1} a
        assert(y);
        Vec g(static_cast<std::size_t>(n), Rational(0));
        for (int j = 0; j < k; ++j)
            for (int i = 0; i < n; ++i)
                g[static_cast<std::size_t>(i)] +=
                    (*y)[static_cast<std::size_t>(j)] * basis[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)];
        Rational off = h.offset + dot(g, p0);
        out.push_back(canonical_halfspace({std::move(g), off}));
    }
    return out;
}

std::vector<Halfspace> remove_redundant(std::vector<Halfspace> hs, int n) {
    for (std::size_t i = 0; i < hs.size();) {
        std::vector<Vec> rows;
        Vec rhs;
        for (std::size_t j = 0; j < hs.size(); ++j) {
            if (j == i) continue;
            rows.push_back(hs[j].normal);
            rhs.push_back(hs[j].offset);
        }
        auto res = lp_maximize(rows, rhs, hs[i].normal);
        bool redundant =
            res.status == LpStatus::Optimal && res.value <= hs[i].offset;
        if (redundant)
            hs.erase(hs.begin() + static_cast<std::ptrdiff_t>(i));
        else
            ++i;
    }
    return hs;
}

// Convex decomposition for exact Minkowski sums / images: a region as a
// list of vertex sets (each piece the hull of its vertices).
std::vector<std::vector<Vec>> bounded_pieces(const Region& r) {
    switch (r.kind) {
    case RegionKind::Empty:
        return {};
    case RegionKind::Points: {
        std::vector<std::vector<Vec>> out;
        for (const auto& p : r.points) out.push_back({p});
        return out;
    }
    case RegionKind::VPolytope:
        return {r.points};
    case RegionKind::HPolyhedron: {
        Generators g = generators(r);
        if (!g.rays.empty())
            throw Unsupported("unbounded region where a bounded one is required");
        if (g.points.empty()) return {};
        return {g.points};
    }
    case RegionKind::WholeSpace:
        throw Unsupported("unbounded region where a bounded one is required");
    case RegionKind::Union: {
        std::vector<std::vector<Vec>> out;
        for (const auto& m : r.members)
            for (auto& p : bounded_pieces(m)) out.push_back(std::move(p));
        return out;
    }
    }
    return {};
}

Region region_from_pieces(int n, std::vector<std::vector<Vec>> pieces) {
    if (pieces.empty()) return Region::empty(n);
    bool all_singletons = true;
    for (const auto& p : pieces)
        if (p.size() != 1) all_singletons = false;
    if (all_singletons) {
        std::vector<Vec> pts;
        for (auto& p : pieces) pts.push_back(std::move(p[0]));
        return canonicalize(Region::make_points(n, std::move(pts)));
    }
    std::vector<Region> members;
    for (auto& p : pieces) {
        if (p.size() == 1)
            members.push_back(Region::make_points(n, std::move(p)));
        else
            members.push_back(Region::vpolytope(n, std::move(p)));
    }
    if (members.size() == 1) return canonicalize(members[0]);
    return canonicalize(Region::make_union(n, std::move(members)));
}

// H-constraint view of a convex region (throws on Union).
std::vector<Halfspace> as_constraints(const Region& r) {
    switch (r.kind) {
    case RegionKind::WholeSpace:
        return {};
    case RegionKind::Empty:
        return {{zero_vec(r.dim), Rational(-1)}};
    case RegionKind::HPolyhedron:
        return r.halfspaces;
    case RegionKind::VPolytope:
        return v_to_h(r.points, r.dim);
    case RegionKind::Points:
        if (r.points.size() == 1) return v_to_h(r.points, r.dim);
        throw InvalidInput("multi-point region has no single convex H form");
    case RegionKind::Union:
        throw InvalidInput("union region has no single convex H form");
    }
    return {};
}

// Members of b viewed as convex H-form pieces (Points expand to singletons).
std::vector<std::vector<Halfspace>> cover_pieces(const Region& b) {
    std::vector<std::vector<Halfspace>> out;
    auto add = [&](const Region& m) {
        if (m.kind == RegionKind::Empty) return;
        if (m.kind == RegionKind::Points) {
            for (const auto& p : m.points)
                out.push_back(v_to_h({p}, m.dim));
            return;
        }
        out.push_back(as_constraints(m));
    };
    if (b.kind == RegionKind::Union)
        for (const auto& m : b.members) add(m);
    else
        add(b);
    return out;
}

// Emptiness of { x in A : for each piece i, some constraint of piece i is
// strictly violated }, i.e. A \ union(pieces) = empty. Depth-first over the
// constraint choice per piece, pruning any branch whose accumulated strict
// system is already infeasible; pieces that miss A entirely are dropped up
// front (points of A avoid them for free).
bool convex_minus_cover_empty(const std::vector<Halfspace>& a, int n,
                              const std::vector<std::vector<Halfspace>>& pieces) {
    for (const auto& p : pieces)
        if (p.empty()) return true; // a piece covers the whole space

    std::vector<std::vector<Halfspace>> relevant;
    for (const auto& p : pieces) {
        std::vector<Halfspace> joint = a;
        joint.insert(joint.end(), p.begin(), p.end());
        if (h_feasible(joint, n)) relevant.push_back(p);
    }
    // Fewer constraints first: shallower branching near the root.
    std::sort(relevant.begin(), relevant.end(),
              [](const auto& x, const auto& y) { return x.size() < y.size(); });

    // Strict system rows over (x, t): x in A, chosen n_i.x - t >= off_i.
    std::vector<Vec> rows;
    Vec rhs;
    for (const auto& h : a) {
        Vec r = h.normal;
        r.push_back(0);
        rows.push_back(std::move(r));
        rhs.push_back(h.offset);
    }
    Vec obj = zero_vec(n);
    obj.push_back(1);

    // Returns true when the branch contains no strict solution (empty).
    auto rec = [&](auto&& self, std::size_t idx) -> bool {
        auto res = lp_maximize(rows, rhs, obj);
        bool open = res.status == LpStatus::Unbounded ||
                    (res.status == LpStatus::Optimal && res.value > 0);
        if (!open) return true; // pruned: already infeasible strictly
        if (idx == relevant.size())
            return false; // point of A strictly outside every piece
        for (const auto& h : relevant[idx]) {
            Vec r = vec_scale(-1, h.normal);
            r.push_back(1);
            rows.push_back(std::move(r));
            rhs.push_back(-h.offset);
            bool empty = self(self, idx + 1);
            rows.pop_back();
            rhs.pop_back();
            if (!empty) return false;
        }
        return true;
    };
    return rec(rec, 0);
}

bool region_is_empty(const Region& r) {
    switch (r.kind) {
    case RegionKind::Empty:
        return true;
    case RegionKind::WholeSpace:
        return false;
    case RegionKind::Points:
    case RegionKind::VPolytope:
        return r.points.empty();
    case RegionKind::HPolyhedron:
        return !h_feasible(r.halfspaces, r.dim);
    case RegionKind::Union:
        for (const auto& m : r.members)
            if (!region_is_empty(m)) return false;
        return true;
    }
    return true;
}

} // namespace

Region canonicalize(const Region& r) {
    switch (r.kind) {
    case RegionKind::Empty:
    case RegionKind::WholeSpace:
        return r;
    case RegionKind::Points: {
        auto pts = dedupe_sort_points(r.points);
        if (pts.empty()) return Region::empty(r.dim);
        return Region::make_points(r.dim, std::move(pts));
    }
    case RegionKind::VPolytope: {
        auto pts = extreme_filter(r.points);
        if (pts.empty()) return Region::empty(r.dim);
        return Region::vpolytope(r.dim, std::move(pts));
    }
    case RegionKind::HPolyhedron: {
        std::vector<Halfspace> hs;
        for (const auto& h : r.halfspaces) {
            Halfspace c = canonical_halfspace(h);
            if (is_zero_vec(c.normal)) {
                if (c.offset < 0) return Region::empty(r.dim);
                continue; // trivially true
            }
            hs.push_back(std::move(c));
        }
        // Same normal: keep the tightest offset.
        std::sort(hs.begin(), hs.end(), [](const Halfspace& a, const Halfspace& b) {
            return compare_halfspace(a, b) < 0;
        });
        hs.erase(std::unique(hs.begin(), hs.end(),
                             [](const Halfspace& a, const Halfspace& b) {
                                 return a.normal == b.normal;
                             }),
                 hs.end());
        if (!h_feasible(hs, r.dim)) return Region::empty(r.dim);
        hs = remove_redundant(std::move(hs), r.dim);
        if (hs.empty()) return Region::whole_space(r.dim);
        std::sort(hs.begin(), hs.end(), [](const Halfspace& a, const Halfspace& b) {
            return compare_halfspace(a, b) < 0;
        });
        return Region::hpolyhedron(r.dim, std::move(hs));
    }
    case RegionKind::Union: {
        std::vector<Region> flat;
        for (const auto& m : r.members) {
            Region c = canonicalize(m);
            if (c.kind == RegionKind::Empty) continue;
            if (c.kind == RegionKind::WholeSpace) return Region::whole_space(r.dim);
            if (c.kind == RegionKind::Union)
                for (auto& g : c.members) flat.push_back(std::move(g));
            else
                flat.push_back(std::move(c));
        }
        // Merge point sets, drop members absorbed by another member.
        std::vector<Vec> loose_points;
        std::vector<Region> members;
        for (auto& m : flat) {
            if (m.kind == RegionKind::Points)
                for (auto& p : m.points) loose_points.push_back(std::move(p));
            else
                members.push_back(std::move(m));
        }
        std::vector<Vec> kept_points;
        for (auto& p : dedupe_sort_points(std::move(loose_points))) {
            bool covered = false;
            for (const auto& m : members)
                if (contains_point(m, p)) {
                    covered = true;
                    break;
                }
            if (!covered) kept_points.push_back(std::move(p));
        }
        for (std::size_t i = 0; i < members.size();) {
            Region rest = Region::make_union(r.dim, {});
            for (std::size_t j = 0; j < members.size(); ++j)
                if (j != i) rest.members.push_back(members[j]);
            bool absorbed = !rest.members.empty() && subset(members[i], rest);
            if (absorbed)
                members.erase(members.begin() + static_cast<std::ptrdiff_t>(i));
            else
                ++i;
        }
        if (!kept_points.empty())
            members.push_back(Region::make_points(r.dim, std::move(kept_points)));
        if (members.empty()) return Region::empty(r.dim);
        if (members.size() == 1) return members[0];
        std::sort(members.begin(), members.end(),
                  [](const Region& a, const Region& b) {
                      return compare_region(a, b) < 0;
                  });
        return Region::make_union(r.dim, std::move(members));
    }
    }
    return r;
}

Generators generators(const Region& r) {
    switch (r.kind) {
    case RegionKind::Empty:
        return {};
    case RegionKind::Points:
    case RegionKind::VPolytope:
        return {r.points, {}};
    case RegionKind::WholeSpace: {
        Generators g{{zero_vec(r.dim)}, {}};
        for (int i = 0; i < r.dim; ++i) {
            Vec e = zero_vec(r.dim);
            e[static_cast<std::size_t>(i)] = 1;
            g.rays.push_back(e);
            g.rays.push_back(vec_scale(-1, e));
        }
        return g;
    }
    case RegionKind::HPolyhedron:
        return h_generators_impl(r.halfspaces, r.dim);
    case RegionKind::Union:
        throw InvalidInput("generators of a union are not a single convex cone pair");
    }
    return {};
}

Region convert(const Region& r, RepKind target) {
    check_dim(r.dim);
    switch (r.kind) {
    case RegionKind::Empty:
        return r;
    case RegionKind::WholeSpace:
        if (target == RepKind::H) return r;
        throw Unsupported("whole space has no bounded V representation");
    case RegionKind::Points:
        if (r.points.size() == 1)
            return target == RepKind::V
                       ? canonicalize(Region::vpolytope(r.dim, r.points))
                       : canonicalize(Region::hpolyhedron(r.dim, v_to_h(r.points, r.dim)));
        throw InvalidInput("multi-point region is not convex-convertible");
    case RegionKind::VPolytope:
        if (target == RepKind::V) return canonicalize(r);
        return canonicalize(Region::hpolyhedron(r.dim, v_to_h(r.points, r.dim)));
    case RegionKind::HPolyhedron: {
        if (target == RepKind::H) return canonicalize(r);
        Generators g = generators(r);
        if (!g.rays.empty())
            throw Unsupported("unbounded polyhedron has no V-polytope form; "
                              "use generators()");
        if (g.points.empty()) return Region::empty(r.dim);
        return canonicalize(Region::vpolytope(r.dim, std::move(g.points)));
    }
    case RegionKind::Union:
        throw InvalidInput("union regions are not convex-convertible");
    }
    return r;
}

bool contains_point(const Region& r, const Vec& x) {
    if (static_cast<int>(x.size()) != r.dim)
        throw InvalidInput("point dimension mismatch");
    switch (r.kind) {
    case RegionKind::Empty:
        return false;
    case RegionKind::WholeSpace:
        return true;
    case RegionKind::Points:
        for (const auto& p : r.points)
            if (p == x) return true;
        return false;
    case RegionKind::VPolytope:
        return point_in_vpoly(r.points, x);
    case RegionKind::HPolyhedron:
        return satisfies(r.halfspaces, x);
    case RegionKind::Union:
        for (const auto& m : r.members)
            if (contains_point(m, x)) return true;
        return false;
    }
    return false;
}

bool subset(const Region& a, const Region& b) {
    if (a.dim != b.dim) throw InvalidInput("subset: dimension mismatch");
    if (region_is_empty(a)) return true;
    if (b.kind == RegionKind::WholeSpace) return true;
    if (a.kind == RegionKind::Union) {
        for (const auto& m : a.members)
            if (!subset(m, b)) return false;
        return true;
    }
    if (a.kind == RegionKind::Points) {
        for (const auto& p : a.points)
            if (!contains_point(b, p)) return false;
        return true;
    }
    if (region_is_empty(b)) return false;
    // a is convex here. Cheap path: convex b with a's generators.
    if (b.kind != RegionKind::Union && b.kind != RegionKind::Points &&
        a.kind != RegionKind::WholeSpace) {
        auto bh = as_constraints(b);
        Generators g = generators(a);
        for (const auto& h : bh) {
            for (const auto& p : g.points)
                if (dot(h.normal, p) > h.offset) return false;
            for (const auto& d : g.rays)
                if (dot(h.normal, d) > 0) return false;
        }
        return true;
    }
    // General case: A \ cover empty, by strict-violation enumeration.
    return convex_minus_cover_empty(as_constraints(a), a.dim, cover_pieces(b));
}

bool region_equal(const Region& a, const Region& b) {
    if (compare_region(a, b) == 0) return true;
    return subset(a, b) && subset(b, a);
}

Region minkowski_sum(const Region& a, const Region& b) {
    if (a.dim != b.dim) throw InvalidInput("minkowski_sum: dimension mismatch");
    if (!is_bounded(a) || !is_bounded(b))
        throw Unsupported("minkowski_sum requires bounded operands");
    auto pa = bounded_pieces(a);
    auto pb = bounded_pieces(b);
    if (pa.empty() || pb.empty()) return Region::empty(a.dim);
    std::vector<std::vector<Vec>> pieces;
    for (const auto& va : pa)
        for (const auto& vb : pb) {
            std::vector<Vec> sums;
            for (const auto& x : va)
                for (const auto& y : vb) sums.push_back(vec_add(x, y));
            pieces.push_back(std::move(sums));
        }
    return region_from_pieces(a.dim, std::move(pieces));
}

Region scale(const Rational& t, const Region& r) {
    if (t == 0) {
        if (region_is_empty(r)) return Region::empty(r.dim);
        return Region::origin(r.dim);
    }
    switch (r.kind) {
    case RegionKind::Empty:
    case RegionKind::WholeSpace:
        return r;
    case RegionKind::Points:
    case RegionKind::VPolytope: {
        Region out = r;
        for (auto& p : out.points) p = vec_scale(t, p);
        return canonicalize(out);
    }
    case RegionKind::HPolyhedron: {
        std::vector<Halfspace> hs;
        for (const auto& h : r.halfspaces) {
            // a.(x/t) <= b
            if (t > 0)
                hs.push_back({h.normal, t * h.offset});
            else
                hs.push_back({vec_scale(-1, h.normal), -t * h.offset});
        }
        return canonicalize(Region::hpolyhedron(r.dim, std::move(hs)));
    }
    case RegionKind::Union: {
        std::vector<Region> members;
        for (const auto& m : r.members) members.push_back(scale(t, m));
        return canonicalize(Region::make_union(r.dim, std::move(members)));
    }
    }
    return r;
}

Region intersect_regions(const Region& a, const Region& b) {
    if (a.dim != b.dim)
        throw InvalidInput("intersect_regions: dimension mismatch");
    if (a.kind == RegionKind::Empty || b.kind == RegionKind::Empty)
        return Region::empty(a.dim);
    if (a.kind == RegionKind::WholeSpace) return canonicalize(b);
    if (b.kind == RegionKind::WholeSpace) return canonicalize(a);
    if (a.kind == RegionKind::Union) {
        std::vector<Region> members;
        for (const auto& m : a.members) members.push_back(intersect_regions(m, b));
        return canonicalize(Region::make_union(a.dim, std::move(members)));
    }
    if (b.kind == RegionKind::Union) return intersect_regions(b, a);
    if (a.kind == RegionKind::Points) {
        std::vector<Vec> pts;
        for (const auto& p : a.points)
            if (contains_point(b, p)) pts.push_back(p);
        return canonicalize(Region::make_points(a.dim, std::move(pts)));
    }
    if (b.kind == RegionKind::Points) return intersect_regions(b, a);
    std::vector<Halfspace> hs = as_constraints(a);
    for (auto& h : as_constraints(b)) hs.push_back(std::move(h));
    return canonicalize(Region::hpolyhedron(a.dim, std::move(hs)));
}

Region crisp_polar(const Region& r, const DualPair& pair, PairSide side) {
    const int n = r.dim;
    if (n != pair.dim()) throw InvalidInput("crisp_polar: dimension mismatch");
    const Mat p = side == PairSide::Primal ? mat_transpose(pair.pairing())
                                           : pair.pairing();
    auto dual_normal = [&](const Vec& v) { return mat_apply(p, v); };
    switch (r.kind) {
    case RegionKind::Empty:
        return Region::whole_space(n);
    case RegionKind::WholeSpace:
        return Region::origin(n);
    case RegionKind::Points:
    case RegionKind::VPolytope: {
        std::vector<Halfspace> hs;
        for (const auto& v : r.points) {
            Vec w = dual_normal(v);
            if (is_zero_vec(w)) continue;
            hs.push_back({w, Rational(1)});
            hs.push_back({vec_scale(-1, w), Rational(1)});
        }
        return canonicalize(Region::hpolyhedron(n, std::move(hs)));
    }
    case RegionKind::HPolyhedron: {
        Generators g = generators(r);
        if (g.points.empty()) return Region::whole_space(n); // empty set
        std::vector<Halfspace> hs;
        for (const auto& v : g.points) {
            Vec w = dual_normal(v);
            if (is_zero_vec(w)) continue;
            hs.push_back({w, Rational(1)});
            hs.push_back({vec_scale(-1, w), Rational(1)});
        }
        for (const auto& d : g.rays) {
            Vec w = dual_normal(d);
            hs.push_back({w, Rational(0)});
            hs.push_back({vec_scale(-1, w), Rational(0)});
        }
        return canonicalize(Region::hpolyhedron(n, std::move(hs)));
    }
    case RegionKind::Union: {
        std::vector<Halfspace> hs;
        bool saw_origin_only = false;
        for (const auto& m : r.members) {
            Region mp = crisp_polar(m, pair, side);
            if (mp.kind == RegionKind::WholeSpace) continue;
            if (mp.kind == RegionKind::Points) { // polar of the whole space
                saw_origin_only = true;
                continue;
            }
            for (const auto& h : mp.halfspaces) hs.push_back(h);
        }
        if (saw_origin_only) return Region::origin(n);
        return canonicalize(Region::hpolyhedron(n, std::move(hs)));
    }
    }
    return Region::whole_space(n);
}

Region convex_hull(const Region& r) {
    if (!is_bounded(r)) throw Unsupported("convex_hull requires a bounded region");
    auto pieces = bounded_pieces(r);
    std::vector<Vec> pts;
    for (auto& p : pieces)
        for (auto& v : p) pts.push_back(std::move(v));
    if (pts.empty()) return Region::empty(r.dim);
    return canonicalize(Region::vpolytope(r.dim, std::move(pts)));
}

Region abs_convex_hull(const Region& r) {
    if (!is_bounded(r))
        throw Unsupported("abs_convex_hull requires a bounded region");
    auto pieces = bounded_pieces(r);
    std::vector<Vec> pts;
    for (auto& p : pieces)
        for (auto& v : p) {
            pts.push_back(vec_scale(-1, v));
            pts.push_back(std::move(v));
        }
    if (pts.empty()) return Region::empty(r.dim);
    return canonicalize(Region::vpolytope(r.dim, std::move(pts)));
}

bool is_bounded(const Region& r) {
    switch (r.kind) {
    case RegionKind::Empty:
    case RegionKind::Points:
    case RegionKind::VPolytope:
        return true;
    case RegionKind::WholeSpace:
        return r.dim == 0;
    case RegionKind::HPolyhedron: {
        if (!h_feasible(r.halfspaces, r.dim)) return true;
        std::vector<Vec> rows;
        Vec rhs;
        for (const auto& h : r.halfspaces) {
            rows.push_back(h.normal);
            rhs.push_back(h.offset);
        }
        for (int i = 0; i < r.dim; ++i) {
            Vec obj = zero_vec(r.dim);
            obj[static_cast<std::size_t>(i)] = 1;
            if (lp_maximize(rows, rhs, obj).status == LpStatus::Unbounded)
                return false;
            obj[static_cast<std::size_t>(i)] = -1;
            if (lp_maximize(rows, rhs, obj).status == LpStatus::Unbounded)
                return false;
        }
        return true;
    }
    case RegionKind::Union:
        for (const auto& m : r.members)
            if (!is_bounded(m)) return false;
        return true;
    }
    return true;
}

bool zero_in_interior(const Region& r) {
    switch (r.kind) {
    case RegionKind::Empty:
    case RegionKind::Points:
        return false;
    case RegionKind::WholeSpace:
        return true;
    case RegionKind::VPolytope: {
        for (const auto& h : v_to_h(r.points, r.dim))
            if (h.offset <= 0) return false;
        return true;
    }
    case RegionKind::HPolyhedron: {
        Region c = canonicalize(r);
        if (c.kind != RegionKind::HPolyhedron) return c.kind == RegionKind::WholeSpace;
        for (const auto& h : c.halfspaces)
            if (h.offset <= 0) return false;
        return true;
    }
    case RegionKind::Union:
        for (const auto& m : r.members)
            if (zero_in_interior(m)) return true;
        return false; // conservative only for overlapping unions; members are convex
    }
    return false;
}

Region linear_image(const Mat& m, const Region& r) {
    const int target = static_cast<int>(m.size());
    for (const auto& row : m)
        if (static_cast<int>(row.size()) != r.dim)
            throw InvalidInput("linear_image: matrix dimension mismatch");
    if (!is_bounded(r)) throw Unsupported("linear_image requires a bounded region");
    auto pieces = bounded_pieces(r);
    std::vector<std::vector<Vec>> images;
    for (const auto& p : pieces) {
        std::vector<Vec> img;
        for (const auto& v : p) img.push_back(mat_apply(m, v));
        images.push_back(std::move(img));
    }
    return region_from_pieces(target, std::move(images));
}

MaxScale max_scale_inside(const Region& inner, const Region& outer) {
    if (inner.dim != outer.dim)
        throw InvalidInput("max_scale_inside: dimension mismatch");
    if (region_is_empty(inner)) return {true, std::nullopt};
    if (outer.kind == RegionKind::WholeSpace) return {true, std::nullopt};
    std::vector<Vec> verts;
    if (inner.kind == RegionKind::Union) {
        for (auto& p : bounded_pieces(inner))
            for (auto& v : p) verts.push_back(std::move(v));
    } else {
        Generators g = generators(inner);
        if (!g.rays.empty())
            throw Unsupported("max_scale_inside requires a bounded inner region");
        verts = std::move(g.points);
    }
    std::vector<Halfspace> hs;
    if (outer.kind == RegionKind::Union)
        throw InvalidInput("max_scale_inside: union outer region unsupported");
    hs = as_constraints(outer);

    bool have_bound = false;
    Rational best;
    for (const auto& h : hs)
        for (const auto& v : verts) {
            Rational d = dot(h.normal, v);
            if (d > 0) {
                Rational t = h.offset / d;
                if (!have_bound || t < best) {
                    best = t;
                    have_bound = true;
                }
            }
        }
    if (!have_bound) {
        // No constraint limits the scale; sanity-check one witness.
        if (subset(scale(Rational(1), inner), outer)) return {true, std::nullopt};
        return {false, std::nullopt};
    }
    if (best <= 0) return {false, std::nullopt};
    if (!subset(scale(best, inner), outer)) return {false, std::nullopt};
    return {false, best};
}

} // namespace fuzzpolar
