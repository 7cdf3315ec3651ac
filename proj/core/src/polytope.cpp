#include "toric/polytope.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

namespace toric {

namespace {

void enumerate_subsets(size_t n, size_t k, const std::function<void(const std::vector<size_t>&)>& visit) {
    std::vector<size_t> idx(k);
    std::function<void(size_t, size_t)> rec = [&](size_t pos, size_t start) {
        if (pos == k) {
            visit(idx);
            return;
        }
        for (size_t i = start; i + (k - pos) <= n; ++i) {
            idx[pos] = i;
            rec(pos + 1, i + 1);
        }
    };
    rec(0, 0);
}

std::vector<QVec> dedupe(std::vector<QVec> pts) {
    std::sort(pts.begin(), pts.end(), [](const QVec& a, const QVec& b) { return lex_less(a, b); });
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    return pts;
}

std::vector<IVec> dedupe(std::vector<IVec> pts) {
    std::sort(pts.begin(), pts.end(), [](const IVec& a, const IVec& b) { return lex_less(a, b); });
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    return pts;
}

// Normal of the hyperplane through d-1 difference vectors in dimension d,
// or the zero vector when they are dependent.
IVec hyperplane_normal(const std::vector<IVec>& diffs, size_t d) {
    if (d == 1) return {Int(1)};
    if (d == 2) {
        const IVec& u = diffs[0];
        return {-u[1], u[0]};
    }
    if (d == 3) {
        const IVec& u = diffs[0];
        const IVec& v = diffs[1];
        return {u[1] * v[2] - u[2] * v[1], u[2] * v[0] - u[0] * v[2], u[0] * v[1] - u[1] * v[0]};
    }
    if (d == 4) {
        const IVec& u = diffs[0];
        const IVec& v = diffs[1];
        const IVec& w = diffs[2];
        IVec n(4);
        int sign = 1;
        for (size_t skip = 0; skip < 4; ++skip) {
            size_t c[3], k = 0;
            for (size_t j = 0; j < 4; ++j)
                if (j != skip) c[k++] = j;
            Int det = u[c[0]] * (v[c[1]] * w[c[2]] - v[c[2]] * w[c[1]]) -
                      u[c[1]] * (v[c[0]] * w[c[2]] - v[c[2]] * w[c[0]]) +
                      u[c[2]] * (v[c[0]] * w[c[1]] - v[c[1]] * w[c[0]]);
            n[skip] = sign > 0 ? det : -det;
            sign = -sign;
        }
        return n;
    }
    IMat k = integer_kernel(transpose(IMat(diffs)));
    if (k.rows() != 1) return IVec(d, Int(0));
    return k.row(0);
}

std::vector<std::pair<IVec, Int>> brute_facets(const std::vector<IVec>& pts, size_t d) {
    std::set<std::pair<IVec, Int>> found;
    if (d == 0) fail("Internal", "facet enumeration in dimension zero");
    std::vector<IVec> diffs(d > 0 ? d - 1 : 0, IVec(d));
    enumerate_subsets(pts.size(), d, [&](const std::vector<size_t>& idx) {
        for (size_t i = 1; i < idx.size(); ++i) {
            for (size_t c = 0; c < d; ++c) diffs[i - 1][c] = pts[idx[i]][c] - pts[idx[0]][c];
        }
        IVec nrm = hyperplane_normal(diffs, d);
        if (is_zero(nrm)) return;
        nrm = primitive(std::move(nrm));
        Int c = dot(nrm, pts[idx[0]]);
        bool ge = true, le = true;
        for (const IVec& p : pts) {
            Int v = dot(nrm, p);
            if (v < c) ge = false;
            if (v > c) le = false;
            if (!ge && !le) return;
        }
        if (ge) {
            found.insert({nrm, c});
        } else {
            for (Int& e : nrm) e = -e;
            found.insert({nrm, -c});
        }
    });
    return {found.begin(), found.end()};
}

// Subtracts from v its projections onto a pairwise-orthogonal rational family.
QVec orth_component(QVec v, const std::vector<QVec>& ortho) {
    for (const QVec& e : ortho) {
        Rat pr = dotq(v, e) / dotq(e, e);
        for (size_t i = 0; i < v.size(); ++i) v[i] -= pr * e[i];
    }
    return v;
}

// Rotates the supporting normal n in the plane spanned by n and u until it
// hits a point off the current support: among points with f = <n, p-b> > 0
// the minimal ratio s = <u, p-b> / f gives the next normal -s*n + u.
// Requires <u, p-b> >= 0 for every point with f = 0.
IVec wrap_pivot(const std::vector<IVec>& pts, const IVec& base, const IVec& n, const IVec& u) {
    Int cn = dot(n, base), cu = dot(u, base);
    bool found = false;
    Rat best;
    for (const IVec& p : pts) {
        Int f = dot(n, p) - cn;
        if (f > 0) {
            Rat s(dot(u, p) - cu, f);
            if (!found || s < best) {
                best = s;
                found = true;
            }
        }
    }
    if (!found) fail("Internal", "pivot found no point off the support");
    QVec np(n.size());
    for (size_t i = 0; i < n.size(); ++i) np[i] = Rat(u[i]) - best * Rat(n[i]);
    return primitive(np);
}

// Grows a supporting hyperplane at the lex-min vertex into a facet normal.
IVec initial_facet_normal(const std::vector<IVec>& pts, size_t d) {
    size_t bi = 0;
    for (size_t i = 1; i < pts.size(); ++i) {
        if (lex_less(pts[i], pts[bi])) bi = i;
    }
    const IVec& b = pts[bi];
    IVec n(d, Int(0));
    n[0] = 1;
    while (true) {
        Int c = dot(n, b);
        std::vector<QVec> rows;
        for (const IVec& p : pts) {
            if (dot(n, p) != c) continue;
            QVec diff(d);
            bool zero = true;
            for (size_t i = 0; i < d; ++i) {
                diff[i] = Rat(p[i] - b[i]);
                if (p[i] != b[i]) zero = false;
            }
            if (!zero) rows.push_back(std::move(diff));
        }
        if (!rows.empty() && rank(QMat(rows)) == d - 1) return n;
        rows.push_back(to_rational(n));
        auto kern = rational_right_kernel(QMat(rows));
        if (kern.empty()) fail("Internal", "no rotation direction left");
        n = wrap_pivot(pts, b, n, primitive(kern[0]));
    }
}

// Gift-wrapping facet enumeration: breadth-first search over the facet-ridge
// graph, pivoting across each ridge exactly once. Ridges of a facet are read
// off from a brute-force run on the tight set projected along a coordinate
// the facet normal does not vanish on.
std::vector<std::pair<IVec, Int>> wrap_facets(const std::vector<IVec>& pts, size_t d) {
    std::set<std::pair<IVec, Int>> seen;
    std::vector<std::pair<IVec, Int>> queue;
    std::set<std::vector<size_t>> ridges_done;
    auto add = [&](const IVec& n) {
        Int c = dot(n, pts[0]);
        for (const IVec& p : pts) c = std::min(c, dot(n, p));
        auto key = std::make_pair(n, c);
        if (seen.insert(key).second) queue.push_back(key);
    };
    add(initial_facet_normal(pts, d));
    for (size_t qi = 0; qi < queue.size(); ++qi) {
        auto [n, c] = queue[qi];
        std::vector<size_t> tight;
        for (size_t i = 0; i < pts.size(); ++i) {
            if (dot(n, pts[i]) == c) tight.push_back(i);
        }
        size_t k = 0;
        while (n[k] == 0) ++k;
        std::vector<IVec> ppts;
        ppts.reserve(tight.size());
        for (size_t i : tight) {
            IVec q(d - 1);
            size_t w = 0;
            for (size_t cc = 0; cc < d; ++cc) {
                if (cc != k) q[w++] = pts[i][cc];
            }
            ppts.push_back(std::move(q));
        }
        for (const auto& [rn, rc] : brute_facets(ppts, d - 1)) {
            std::vector<size_t> ridge;
            for (size_t j = 0; j < ppts.size(); ++j) {
                if (dot(rn, ppts[j]) == rc) ridge.push_back(tight[j]);
            }
            if (!ridges_done.insert(ridge).second) continue;
            const IVec& b = pts[ridge[0]];
            std::vector<QVec> gs;
            for (size_t ri = 1; ri < ridge.size(); ++ri) {
                QVec w(d);
                for (size_t cc = 0; cc < d; ++cc) w[cc] = Rat(pts[ridge[ri]][cc] - b[cc]);
                w = orth_component(std::move(w), gs);
                if (!is_zero(w)) gs.push_back(std::move(w));
            }
            size_t qp = tight.size();
            for (size_t j = 0, rj = 0; j < tight.size(); ++j) {
                if (rj < ridge.size() && ridge[rj] == tight[j]) {
                    ++rj;
                    continue;
                }
                qp = j;
                break;
            }
            if (qp == tight.size()) fail("Internal", "facet has no point off its ridge");
            QVec w(d);
            for (size_t cc = 0; cc < d; ++cc) w[cc] = Rat(pts[tight[qp]][cc] - b[cc]);
            w = orth_component(std::move(w), gs);
            add(wrap_pivot(pts, b, n, primitive(w)));
        }
    }
    std::sort(queue.begin(), queue.end());
    return queue;
}

// Facets (n, c) with <n, x> >= c for all points and equality on the facet,
// for a point set of full affine dimension d.
std::vector<std::pair<IVec, Int>> integer_facets(const std::vector<IVec>& pts, size_t d) {
    if (pts.size() > 72) fail("TooManyVertices", "facet enumeration supports at most 72 points");
    if (d >= 4 && pts.size() > 16) return wrap_facets(pts, d);
    return brute_facets(pts, d);
}

struct AffineFrame {
    size_t affine_dim = 0;
    QVec base;
    IMat directions;  // saturated integer basis of the direction space (rows)
};

AffineFrame affine_frame(size_t dim, const std::vector<QVec>& pts) {
    AffineFrame fr;
    fr.base = pts.at(0);
    std::vector<IVec> diffs;
    for (const QVec& p : pts) {
        QVec d(dim);
        for (size_t c = 0; c < dim; ++c) d[c] = p[c] - fr.base[c];
        if (!is_zero(d)) diffs.push_back(primitive(d));
    }
    if (diffs.empty()) {
        fr.affine_dim = 0;
        fr.directions = IMat(0, dim);
        return fr;
    }
    IMat dm(diffs);
    IMat eqs = integer_kernel(transpose(dm));
    fr.directions = eqs.rows() == 0 ? IMat::identity(dim) : integer_kernel(transpose(eqs));
    fr.affine_dim = fr.directions.rows();
    return fr;
}

QVec reduce_point(const AffineFrame& fr, const QVec& p) {
    QVec rhs(p.size());
    for (size_t c = 0; c < p.size(); ++c) rhs[c] = p[c] - fr.base[c];
    QVec coords;
    if (!solve_linear(QMat(transpose(fr.directions)), rhs, coords)) {
        fail("Internal", "point not in affine hull");
    }
    return coords;
}

// Clears denominators: returns integer points L * pts and the factor L.
std::pair<std::vector<IVec>, Int> scale_to_integer(const std::vector<QVec>& pts) {
    Int l = 1;
    for (const QVec& p : pts)
        for (const Rat& x : p) l = lcm(l, den(x));
    std::vector<IVec> out;
    out.reserve(pts.size());
    for (const QVec& p : pts) {
        IVec v(p.size());
        for (size_t c = 0; c < p.size(); ++c) v[c] = num(p[c] * Rat(l));
        out.push_back(v);
    }
    return {out, l};
}

// Full linear description in ambient coordinates: equations <n,x> == c and
// inequalities <n,x> >= c.
struct LinearDescription {
    std::vector<std::pair<IVec, Rat>> equations;
    std::vector<std::pair<IVec, Rat>> inequalities;
};

LinearDescription linear_description(size_t dim, const std::vector<QVec>& verts) {
    if (verts.empty()) fail("EmptyPolytope", "polytope has no vertices");
    LinearDescription out;
    AffineFrame fr = affine_frame(dim, verts);

    if (fr.affine_dim == 0) {
        IMat id = IMat::identity(dim);
        for (size_t r = 0; r < dim; ++r) {
            out.equations.push_back({id.row(r), verts[0][r]});
        }
        return out;
    }

    if (fr.affine_dim < dim) {
        IMat eqs = integer_kernel(transpose(fr.directions));
        for (size_t r = 0; r < eqs.rows(); ++r) {
            IVec n = eqs.row(r);
            out.equations.push_back({n, dotq(to_rational(n), verts[0])});
        }
    }

    std::vector<QVec> reduced;
    reduced.reserve(verts.size());
    for (const QVec& v : verts) reduced.push_back(reduce_point(fr, v));
    auto [ipts, l] = scale_to_integer(reduced);
    for (const auto& [n_red, c_red] : integer_facets(ipts, fr.affine_dim)) {
        // Lift the reduced functional to the ambient space.
        QVec lifted;
        if (!solve_linear(QMat(fr.directions), to_rational(n_red), lifted)) {
            fail("Internal", "facet lift failed");
        }
        IVec n = primitive(lifted);
        // Positive factor relating n to the lifted functional.
        Rat alpha;
        for (size_t i = 0; i < n.size(); ++i) {
            if (lifted[i] != 0) {
                alpha = Rat(n[i]) / lifted[i];
                break;
            }
        }
        Rat rhs = alpha * (Rat(c_red, l) + dotq(lifted, verts[0]));
        out.inequalities.push_back({n, rhs});
    }
    std::sort(out.inequalities.begin(), out.inequalities.end());
    return out;
}

bool satisfies(const LinearDescription& d, const QVec& x) {
    for (const auto& [n, c] : d.equations) {
        if (dotq(to_rational(n), x) != c) return false;
    }
    for (const auto& [n, c] : d.inequalities) {
        if (dotq(to_rational(n), x) < c) return false;
    }
    return true;
}

std::vector<QVec> extreme_points(size_t dim, std::vector<QVec> pts) {
    pts = dedupe(std::move(pts));
    if (pts.size() <= 1) return pts;
    AffineFrame fr = affine_frame(dim, pts);
    if (fr.affine_dim == 0) return {pts[0]};

    std::vector<QVec> reduced;
    reduced.reserve(pts.size());
    for (const QVec& p : pts) reduced.push_back(reduce_point(fr, p));
    auto [ipts, l] = scale_to_integer(reduced);
    auto fs = integer_facets(ipts, fr.affine_dim);

    std::vector<QVec> out;
    for (size_t i = 0; i < pts.size(); ++i) {
        std::vector<IVec> tight;
        for (const auto& [n, c] : fs) {
            if (dot(n, ipts[i]) == c) tight.push_back(n);
        }
        if (!tight.empty() && rank(IMat(tight)) == fr.affine_dim) out.push_back(pts[i]);
    }
    return out;
}

Int nvol_rec(std::vector<IVec> pts, size_t d) {
    pts = dedupe(std::move(pts));
    if (pts.empty()) fail("EmptyPolytope", "volume of an empty set");
    if (d == 0) return 1;

    // Affine dimension check.
    std::vector<IVec> diffs;
    for (size_t i = 1; i < pts.size(); ++i) {
        IVec v(d);
        for (size_t c = 0; c < d; ++c) v[c] = pts[i][c] - pts[0][c];
        diffs.push_back(v);
    }
    if (diffs.empty() || rank(IMat(diffs)) < d) return 0;

    if (d == 1) {
        Int lo = pts.front()[0], hi = pts.back()[0];
        return hi - lo;
    }

    auto fs = integer_facets(pts, d);
    const IVec& v0 = pts.front();  // lex-min point is a vertex
    Int vol = 0;
    for (const auto& [n, c] : fs) {
        Int height = dot(n, v0) - c;
        if (height == 0) continue;
        // Project the facet along a coordinate its normal does not vanish on.
        // For primitive n the projection identifies the hyperplane lattice
        // with an index-|n_k| sublattice of Z^(d-1), so the projected volume
        // carries a factor |n_k|.
        size_t k = 0;
        while (n[k] == 0) ++k;
        std::vector<IVec> reduced;
        for (const IVec& p : pts) {
            if (dot(n, p) != c) continue;
            IVec ic(d - 1);
            size_t w = 0;
            for (size_t cc = 0; cc < d; ++cc) {
                if (cc != k) ic[w++] = p[cc];
            }
            reduced.push_back(ic);
        }
        Int fvol = nvol_rec(reduced, d - 1);
        if (fvol % abs(n[k]) != 0) fail("Internal", "projected facet volume not divisible");
        vol += fvol / abs(n[k]) * abs(height);
    }
    return vol;
}

std::vector<IVec> integral_vertices(const Polytope& p) {
    std::vector<IVec> out;
    out.reserve(p.vertices.size());
    for (const QVec& v : p.vertices) {
        IVec iv(v.size());
        for (size_t c = 0; c < v.size(); ++c) {
            if (!is_integer(v[c])) fail("NotIntegral", "operation requires a lattice polytope");
            iv[c] = num(v[c]);
        }
        out.push_back(iv);
    }
    return out;
}

}  // namespace

Polytope make_polytope(size_t dim, const std::vector<QVec>& points) {
    if (points.empty()) fail("EmptyPolytope", "polytope needs at least one point");
    for (const QVec& p : points) {
        if (p.size() != dim) fail("DimensionMismatch", "point length does not match dimension");
    }
    Polytope out;
    out.dim = dim;
    out.vertices = extreme_points(dim, points);
    std::sort(out.vertices.begin(), out.vertices.end(),
              [](const QVec& a, const QVec& b) { return lex_less(a, b); });
    return out;
}

Polytope make_polytope(size_t dim, const std::vector<IVec>& points) {
    std::vector<QVec> q;
    q.reserve(points.size());
    for (const IVec& p : points) q.push_back(to_rational(p));
    return make_polytope(dim, q);
}

bool is_full_dimensional(const Polytope& p) {
    if (p.vertices.empty()) return false;
    return affine_frame(p.dim, p.vertices).affine_dim == p.dim;
}

std::vector<FacetInequality> facets(const Polytope& p) {
    if (!is_full_dimensional(p)) fail("NotFullDimensional", "facets need a full-dimensional polytope");
    LinearDescription d = linear_description(p.dim, p.vertices);
    std::vector<FacetInequality> out;
    out.reserve(d.inequalities.size());
    for (const auto& [n, c] : d.inequalities) out.push_back({n, -c});
    return out;
}

std::vector<IVec> lattice_points(const Polytope& p) {
    if (p.vertices.empty()) return {};
    LinearDescription desc = linear_description(p.dim, p.vertices);
    std::vector<Int> lo(p.dim), hi(p.dim);
    for (size_t c = 0; c < p.dim; ++c) {
        Rat mn = p.vertices[0][c], mx = p.vertices[0][c];
        for (const QVec& v : p.vertices) {
            mn = std::min(mn, v[c]);
            mx = std::max(mx, v[c]);
        }
        lo[c] = ceil_rat(mn);
        hi[c] = floor_rat(mx);
    }
    std::vector<IVec> out;
    IVec cur(p.dim);
    std::function<void(size_t)> rec = [&](size_t pos) {
        if (pos == p.dim) {
            QVec q = to_rational(cur);
            if (satisfies(desc, q)) out.push_back(cur);
            return;
        }
        for (Int x = lo[pos]; x <= hi[pos]; ++x) {
            cur[pos] = x;
            rec(pos + 1);
        }
    };
    rec(0);
    return out;
}

bool is_integral(const Polytope& p) {
    for (const QVec& v : p.vertices)
        for (const Rat& x : v)
            if (!is_integer(x)) return false;
    return true;
}

Polytope polar_dual(const Polytope& p) {
    auto fs = facets(p);
    std::vector<QVec> verts;
    for (const auto& f : fs) {
        if (f.offset <= 0) fail("OriginNotInterior", "polar dual needs the origin strictly inside");
        QVec v(p.dim);
        for (size_t c = 0; c < p.dim; ++c) v[c] = Rat(f.normal[c]) / f.offset;
        verts.push_back(v);
    }
    Polytope out;
    out.dim = p.dim;
    out.vertices = dedupe(std::move(verts));
    return out;
}

bool is_reflexive(const Polytope& p) {
    if (!is_integral(p) || !is_full_dimensional(p)) return false;
    for (const auto& f : facets(p)) {
        if (f.offset != 1) return false;
    }
    return true;
}

Fan normal_fan(const Polytope& p) {
    auto fs = facets(p);
    Fan out;
    out.rank = p.dim;
    for (const auto& f : fs) out.rays.push_back(f.normal);
    // facets() output is already sorted by normal.
    for (const QVec& v : p.vertices) {
        Cone c;
        for (size_t i = 0; i < fs.size(); ++i) {
            if (dotq(to_rational(fs[i].normal), v) == -fs[i].offset) c.rays.push_back(i);
        }
        out.max_cones.push_back(c);
    }
    return out;
}

Polytope divisor_polytope(const Fan& f, const IVec& coeffs) {
    if (coeffs.size() != f.rays.size()) fail("DimensionMismatch", "one coefficient per ray required");
    ConeGeometry support = cone_geometry(f.rank, f.rays);
    if (support.dim != f.rank || !support.facet_normals.empty()) {
        fail("Unbounded", "rays do not positively span the lattice");
    }
    const size_t n = f.rays.size();
    std::vector<QVec> verts;
    enumerate_subsets(n, f.rank, [&](const std::vector<size_t>& idx) {
        std::vector<QVec> rows;
        QVec rhs;
        for (size_t i : idx) {
            rows.push_back(to_rational(f.rays[i]));
            rhs.push_back(Rat(-coeffs[i]));
        }
        QMat a(rows);
        if (rank(a) != f.rank) return;
        QVec m;
        if (!solve_linear(a, rhs, m)) return;
        for (size_t i = 0; i < n; ++i) {
            if (dotq(to_rational(f.rays[i]), m) < Rat(-coeffs[i])) return;
        }
        verts.push_back(m);
    });
    if (verts.empty()) fail("EmptyPolytope", "divisor polytope is empty");
    Polytope out;
    out.dim = f.rank;
    out.vertices = dedupe(std::move(verts));
    return out;
}

WpsGorensteinReport wps_gorenstein(const std::vector<Int>& weights) {
    if (weights.size() < 2) fail("InvalidWeights", "need at least two weights");
    Int g = 0;
    WpsGorensteinReport out;
    out.weights = weights;
    for (const Int& w : weights) {
        if (w < 1) fail("InvalidWeights", "weights must be positive");
        g = gcd(g, w);
        out.total += w;
    }
    if (g != 1) fail("InvalidWeights", "weights must have gcd one");
    out.gorenstein = true;
    for (const Int& w : weights) {
        if (out.total % w != 0) out.gorenstein = false;
    }
    return out;
}

Fan wps_fan(const std::vector<Int>& weights) {
    wps_gorenstein(weights);  // validates
    const size_t k = weights.size();
    IMat c(k, 1);
    for (size_t i = 0; i < k; ++i) c(i, 0) = weights[i];
    auto sr = smith_normal_form(c);
    if (sr.d(0, 0) != 1) fail("InvalidWeights", "weights must have gcd one");
    // x -> (u x) with the first coordinate dropped kills exactly Z * weights.
    Fan out;
    out.rank = k - 1;
    for (size_t i = 0; i < k; ++i) {
        IVec ray(k - 1);
        for (size_t r = 1; r < k; ++r) ray[r - 1] = sr.u(r, i);
        out.rays.push_back(ray);
    }
    for (size_t omit = 0; omit < k; ++omit) {
        Cone cone;
        for (size_t i = 0; i < k; ++i) {
            if (i != omit) cone.rays.push_back(i);
        }
        out.max_cones.push_back(cone);
    }
    return out;
}

BatyrevData batyrev_mirror_data(const Polytope& p) {
    if (!is_reflexive(p)) fail("NotReflexive", "mirror data needs a reflexive polytope");
    BatyrevData out;
    out.dual = polar_dual(p);
    for (const IVec& v : lattice_points(out.dual)) {
        if (!is_zero(v)) out.dual_rays.push_back(v);
    }
    out.points = lattice_points(p);
    for (const IVec& m : out.points) {
        IVec exps(out.dual_rays.size());
        for (size_t i = 0; i < out.dual_rays.size(); ++i) exps[i] = dot(m, out.dual_rays[i]) + 1;
        out.monomials.push_back(exps);
    }
    return out;
}

Int normalized_volume(const Polytope& p) {
    return nvol_rec(integral_vertices(p), p.dim);
}

Int mixed_volume(const std::vector<Polytope>& ps) {
    const size_t n = ps.size();
    if (n == 0 || n > 4) fail("DimensionMismatch", "mixed volume needs 1 to 4 polytopes");
    for (const Polytope& p : ps) {
        if (p.dim != n) fail("DimensionMismatch", "each polytope must live in dimension n");
    }
    std::vector<std::vector<IVec>> vert;
    for (const Polytope& p : ps) vert.push_back(integral_vertices(p));

    Int total = 0;
    for (size_t mask = 1; mask < (size_t(1) << n); ++mask) {
        std::vector<IVec> sum = {IVec(n, Int(0))};
        size_t bits = 0;
        for (size_t i = 0; i < n; ++i) {
            if (!((mask >> i) & 1)) continue;
            ++bits;
            std::vector<IVec> next;
            for (const IVec& a : sum)
                for (const IVec& b : vert[i]) {
                    IVec s(n);
                    for (size_t c = 0; c < n; ++c) s[c] = a[c] + b[c];
                    next.push_back(s);
                }
            sum = dedupe(std::move(next));
        }
        Int v = nvol_rec(sum, n);
        total += ((n - bits) % 2 == 0) ? v : -v;
    }
    // The alternating sum of ordinary volumes is already the normalized mixed
    // volume; with n! vol inside, one factor of n! must come back out.
    Int fact = 1;
    for (size_t i = 2; i <= n; ++i) fact *= i;
    if (total % fact != 0) fail("Internal", "mixed volume normalization failed");
    return total / fact;
}

IMat polytope_canonical_form(const Polytope& p) {
    std::vector<IVec> verts = integral_vertices(p);
    std::sort(verts.begin(), verts.end(), [](const IVec& a, const IVec& b) { return lex_less(a, b); });
    return hermite_normal_form(IMat(verts)).h;
}

}  // namespace toric
