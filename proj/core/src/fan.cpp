#include "toric/fan.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

namespace toric {

namespace {

std::vector<IVec> dedupe_nonzero(const std::vector<IVec>& gens) {
    std::vector<IVec> out;
    for (const IVec& g : gens) {
        if (!is_zero(g)) out.push_back(g);
    }
    std::sort(out.begin(), out.end(), [](const IVec& a, const IVec& b) { return lex_less(a, b); });
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

// Integer coordinates of v in the row basis b (full row rank, saturated).
IVec coordinates_in(const IMat& b, const IVec& v) {
    QVec c;
    if (!solve_linear(QMat(transpose(b)), to_rational(v), c)) {
        fail("Internal", "vector not in span during coordinate change");
    }
    IVec out(c.size());
    for (size_t i = 0; i < c.size(); ++i) {
        if (!is_integer(c[i])) fail("Internal", "non-integral coordinate in saturated basis");
        out[i] = num(c[i]);
    }
    return out;
}

// Lifts a functional expressed in coordinates of the row basis b back to an
// ambient integer functional agreeing with it on the span of b.
IVec lift_functional(const IMat& b, const IVec& n_coords) {
    QVec lifted;
    if (!solve_linear(QMat(b), to_rational(n_coords), lifted)) {
        fail("Internal", "functional lift failed");
    }
    return primitive(lifted);
}

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

std::vector<IVec> dual_generators(const ConeGeometry& g) {
    std::vector<IVec> out = g.facet_normals;
    for (const IVec& e : g.span_equations) {
        out.push_back(e);
        IVec neg(e.size());
        for (size_t i = 0; i < e.size(); ++i) neg[i] = -e[i];
        out.push_back(neg);
    }
    return out;
}

// Generators of the intersection of two cones, via double dualization.
std::vector<IVec> intersection_generators(const ConeGeometry& a, const ConeGeometry& b) {
    std::vector<IVec> d = dual_generators(a);
    std::vector<IVec> db = dual_generators(b);
    d.insert(d.end(), db.begin(), db.end());
    ConeGeometry gd = cone_geometry(a.ambient, d);
    return dual_generators(gd);
}

Int cross(const IVec& o, const IVec& a, const IVec& b) {
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
}

// Counter-clockwise convex hull (monotone chain); collinear inputs collapse
// to their two extreme points.
std::vector<IVec> convex_hull_2d(std::vector<IVec> pts) {
    std::sort(pts.begin(), pts.end(), [](const IVec& a, const IVec& b) { return lex_less(a, b); });
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    if (pts.size() <= 2) return pts;
    std::vector<IVec> lower, upper;
    for (const IVec& p : pts) {
        while (lower.size() >= 2 && cross(lower[lower.size() - 2], lower.back(), p) <= 0) lower.pop_back();
        lower.push_back(p);
    }
    for (auto it = pts.rbegin(); it != pts.rend(); ++it) {
        while (upper.size() >= 2 && cross(upper[upper.size() - 2], upper.back(), *it) <= 0) upper.pop_back();
        upper.push_back(*it);
    }
    lower.pop_back();
    upper.pop_back();
    lower.insert(lower.end(), upper.begin(), upper.end());
    return lower;
}

std::vector<IVec> lattice_points_on_segment(const IVec& u, const IVec& w) {
    IVec d = {w[0] - u[0], w[1] - u[1]};
    Int g = gcd(abs(d[0]), abs(d[1]));
    std::vector<IVec> out;
    for (Int k = 0; k <= g; ++k) {
        out.push_back({u[0] + k * d[0] / g, u[1] + k * d[1] / g});
    }
    return out;
}

struct FanGeometry {
    std::vector<ConeGeometry> cones;
};

FanGeometry fan_geometry(const Fan& f) {
    FanGeometry fg;
    fg.cones.reserve(f.max_cones.size());
    for (const Cone& c : f.max_cones) {
        std::vector<IVec> gens;
        for (size_t i : c.rays) gens.push_back(f.rays.at(i));
        fg.cones.push_back(cone_geometry(f.rank, gens));
    }
    return fg;
}

// Ray indices of the smallest face of cone ci containing the given cone
// intersection, described by its generators.
std::vector<size_t> face_through(const ConeGeometry& g, const Cone& c, const Fan& f,
                                 const std::vector<IVec>& inter_gens) {
    std::vector<const IVec*> tight;
    for (const IVec& h : g.facet_normals) {
        bool t = true;
        for (const IVec& x : inter_gens) {
            if (dot(h, x) != 0) {
                t = false;
                break;
            }
        }
        if (t) tight.push_back(&h);
    }
    std::vector<size_t> rays;
    for (size_t i : c.rays) {
        bool on_face = true;
        for (const IVec* h : tight) {
            if (dot(*h, f.rays[i]) != 0) {
                on_face = false;
                break;
            }
        }
        if (on_face) rays.push_back(i);
    }
    return rays;
}

std::string cone_name(size_t i) { return "cone " + std::to_string(i); }

}  // namespace

ConeGeometry cone_geometry(size_t ambient, const std::vector<IVec>& generators) {
    for (const IVec& g : generators) {
        if (g.size() != ambient) fail("DimensionMismatch", "generator length does not match ambient rank");
    }
    ConeGeometry out;
    out.ambient = ambient;
    out.generators = dedupe_nonzero(generators);

    if (out.generators.empty()) {
        out.dim = 0;
        out.pointed = true;
        IMat id = IMat::identity(ambient);
        for (size_t r = 0; r < ambient; ++r) out.span_equations.push_back(id.row(r));
        return out;
    }

    IMat g(out.generators);
    IMat eqs = integer_kernel(transpose(g));
    out.span_equations = eqs.row_vectors();

    IMat span_basis = eqs.rows() == 0 ? IMat::identity(ambient) : integer_kernel(transpose(eqs));
    const size_t s = span_basis.rows();
    out.dim = s;

    std::vector<IVec> coords;
    coords.reserve(out.generators.size());
    for (const IVec& v : out.generators) coords.push_back(coordinates_in(span_basis, v));

    std::set<IVec> normals;
    if (s == 1) {
        for (int sign : {1, -1}) {
            bool ok = true;
            for (const IVec& c : coords) {
                if (sign * c[0] < 0) {
                    ok = false;
                    break;
                }
            }
            if (ok) normals.insert({Int(sign)});
        }
    } else {
        enumerate_subsets(coords.size(), s - 1, [&](const std::vector<size_t>& idx) {
            std::vector<IVec> sub;
            for (size_t i : idx) sub.push_back(coords[i]);
            IMat k = integer_kernel(transpose(IMat(sub)));
            if (k.rows() != 1) return;
            IVec n = k.row(0);
            bool nonneg = true, nonpos = true;
            for (const IVec& c : coords) {
                Int d = dot(n, c);
                if (d > 0) nonpos = false;
                if (d < 0) nonneg = false;
            }
            if (nonneg) {
                normals.insert(n);
            } else if (nonpos) {
                for (Int& e : n) e = -e;
                normals.insert(n);
            }
        });
    }

    std::vector<IVec> normal_list(normals.begin(), normals.end());
    out.pointed = !normal_list.empty() && rank(IMat(normal_list)) == s;
    if (s == 0) out.pointed = true;

    for (const IVec& n : normal_list) out.facet_normals.push_back(lift_functional(span_basis, n));
    std::sort(out.facet_normals.begin(), out.facet_normals.end(),
              [](const IVec& a, const IVec& b) { return lex_less(a, b); });
    return out;
}

bool cone_contains(const ConeGeometry& g, const QVec& x) {
    if (x.size() != g.ambient) fail("DimensionMismatch", "point length does not match ambient rank");
    for (const IVec& e : g.span_equations) {
        if (dotq(to_rational(e), x) != 0) return false;
    }
    for (const IVec& n : g.facet_normals) {
        if (dotq(to_rational(n), x) < 0) return false;
    }
    return true;
}

bool cone_contains(const ConeGeometry& g, const IVec& x) { return cone_contains(g, to_rational(x)); }

FanValidation validate_fan(const Fan& f) {
    FanValidation v;
    auto add = [&](const std::string& p) {
        v.ok = false;
        v.problems.push_back(p);
    };

    if (f.rank == 0) {
        add("rank must be at least 1");
        return v;
    }
    for (size_t i = 0; i < f.rays.size(); ++i) {
        const IVec& r = f.rays[i];
        if (r.size() != f.rank) {
            add("ray " + std::to_string(i) + " has wrong length");
            return v;
        }
        if (is_zero(r)) add("ray " + std::to_string(i) + " is zero");
        else if (primitive(r) != r) add("ray " + std::to_string(i) + " is not primitive");
        for (size_t j = 0; j < i; ++j) {
            if (f.rays[j] == r) add("ray " + std::to_string(i) + " duplicates ray " + std::to_string(j));
        }
    }
    if (f.max_cones.empty()) add("fan has no maximal cones");
    for (size_t i = 0; i < f.max_cones.size(); ++i) {
        const auto& c = f.max_cones[i].rays;
        for (size_t k = 0; k < c.size(); ++k) {
            if (c[k] >= f.rays.size()) {
                add(cone_name(i) + " has an out-of-range ray index");
                return v;
            }
            if (k > 0 && c[k] <= c[k - 1]) add(cone_name(i) + " ray indices must be strictly increasing");
        }
    }
    if (!v.ok) return v;

    FanGeometry fg = fan_geometry(f);
    for (size_t i = 0; i < fg.cones.size(); ++i) {
        if (!fg.cones[i].pointed) add(cone_name(i) + " is not strongly convex");
    }

    std::vector<bool> used(f.rays.size(), false);
    for (const Cone& c : f.max_cones)
        for (size_t i : c.rays) used[i] = true;
    for (size_t i = 0; i < used.size(); ++i) {
        if (!used[i]) add("ray " + std::to_string(i) + " lies in no maximal cone");
    }

    for (size_t i = 0; i < f.max_cones.size(); ++i) {
        for (size_t j = 0; j < f.max_cones.size(); ++j) {
            if (i == j) continue;
            bool contained = true;
            for (size_t ri : f.max_cones[i].rays) {
                if (!cone_contains(fg.cones[j], f.rays[ri])) {
                    contained = false;
                    break;
                }
            }
            if (contained) add(cone_name(i) + " is contained in " + cone_name(j));
        }
    }
    if (!v.ok) return v;

    for (size_t i = 0; i < f.max_cones.size(); ++i) {
        for (size_t j = i + 1; j < f.max_cones.size(); ++j) {
            std::vector<IVec> inter = intersection_generators(fg.cones[i], fg.cones[j]);
            bool good = true;
            for (size_t k : face_through(fg.cones[i], f.max_cones[i], f, inter)) {
                if (!cone_contains(fg.cones[j], f.rays[k])) good = false;
            }
            for (size_t k : face_through(fg.cones[j], f.max_cones[j], f, inter)) {
                if (!cone_contains(fg.cones[i], f.rays[k])) good = false;
            }
            if (!good) {
                add(cone_name(i) + " and " + cone_name(j) + " do not intersect in a common face");
            }
        }
    }
    return v;
}

FanClassification classify_fan(const Fan& f) {
    FanClassification out;
    FanGeometry fg = fan_geometry(f);

    out.simplicial = true;
    out.smooth = true;
    for (const Cone& c : f.max_cones) {
        std::vector<IVec> gens;
        for (size_t i : c.rays) gens.push_back(f.rays[i]);
        if (gens.empty()) continue;
        IMat g(gens);
        auto sr = smith_normal_form(g);
        if (sr.rank != gens.size()) {
            out.simplicial = false;
            out.smooth = false;
            continue;
        }
        for (size_t i = 0; i < sr.rank; ++i) {
            if (sr.d(i, i) != 1) out.smooth = false;
        }
    }

    out.complete = !f.max_cones.empty();
    std::map<std::vector<size_t>, std::vector<size_t>> facet_owners;
    for (size_t ci = 0; ci < f.max_cones.size(); ++ci) {
        const ConeGeometry& g = fg.cones[ci];
        if (g.dim != f.rank) {
            out.complete = false;
            break;
        }
        for (const IVec& h : g.facet_normals) {
            std::vector<size_t> key;
            for (size_t ri : f.max_cones[ci].rays) {
                if (dot(h, f.rays[ri]) == 0) key.push_back(ri);
            }
            facet_owners[key].push_back(ci);
        }
    }
    if (out.complete) {
        for (const auto& [key, owners] : facet_owners) {
            if (owners.size() != 2) out.complete = false;
        }
    }
    if (out.complete && f.max_cones.size() > 1) {
        // The facet-pairing graph must connect all maximal cones.
        std::vector<std::vector<size_t>> adj(f.max_cones.size());
        for (const auto& [key, owners] : facet_owners) {
            adj[owners[0]].push_back(owners[1]);
            adj[owners[1]].push_back(owners[0]);
        }
        std::vector<bool> seen(f.max_cones.size(), false);
        std::vector<size_t> stack = {0};
        seen[0] = true;
        while (!stack.empty()) {
            size_t c = stack.back();
            stack.pop_back();
            for (size_t n : adj[c]) {
                if (!seen[n]) {
                    seen[n] = true;
                    stack.push_back(n);
                }
            }
        }
        for (bool s : seen) {
            if (!s) out.complete = false;
        }
    }
    return out;
}

IMat charge_matrix(const Fan& f) {
    if (f.rays.empty()) fail("DimensionMismatch", "fan has no rays");
    return transpose(integer_kernel(IMat(f.rays)));
}

ClassGroupReport divisor_class_group(const Fan& f) {
    if (f.rays.empty()) fail("DimensionMismatch", "fan has no rays");
    ClassGroupReport out;
    IMat r(f.rays);
    out.group = cokernel_invariants(r);
    out.rays_span = rank(r) == f.rank;
    return out;
}

IVec principal_divisor(const Fan& f, const IVec& m) {
    if (m.size() != f.rank) fail("DimensionMismatch", "character length does not match rank");
    IVec out(f.rays.size());
    for (size_t i = 0; i < f.rays.size(); ++i) out[i] = dot(m, f.rays[i]);
    return out;
}

std::vector<std::vector<size_t>> discriminant_components(const Fan& f) {
    const size_t n = f.rays.size();
    if (n > 16) fail("TooManyRays", "discriminant enumeration supports at most 16 rays");
    FanGeometry fg = fan_geometry(f);

    std::set<std::vector<size_t>> faces;
    for (size_t ci = 0; ci < f.max_cones.size(); ++ci) {
        const ConeGeometry& g = fg.cones[ci];
        const auto& local = f.max_cones[ci].rays;
        const size_t nf = g.facet_normals.size();
        if (nf > 20) fail("TooManyRays", "cone has too many facets for face enumeration");
        for (size_t mask = 0; mask < (size_t(1) << nf); ++mask) {
            std::vector<size_t> tight_rays;
            for (size_t ri : local) {
                bool on = true;
                for (size_t b = 0; b < nf; ++b) {
                    if ((mask >> b) & 1) {
                        if (dot(g.facet_normals[b], f.rays[ri]) != 0) {
                            on = false;
                            break;
                        }
                    }
                }
                if (on) tight_rays.push_back(ri);
            }
            faces.insert(tight_rays);
        }
    }

    std::vector<std::vector<size_t>> minimal;
    for (size_t size = 1; size <= n; ++size) {
        enumerate_subsets(n, size, [&](const std::vector<size_t>& s) {
            if (faces.count(s)) return;
            for (const auto& m : minimal) {
                if (std::includes(s.begin(), s.end(), m.begin(), m.end())) return;
            }
            minimal.push_back(s);
        });
    }
    return minimal;
}

bool is_subdivision(const Fan& fine, const Fan& coarse) {
    if (fine.rank != coarse.rank) fail("DimensionMismatch", "fans have different ranks");
    std::set<IVec> fine_rays(fine.rays.begin(), fine.rays.end());
    for (const IVec& r : coarse.rays) {
        if (!fine_rays.count(r)) return false;
    }
    FanGeometry cg = fan_geometry(coarse);
    for (const Cone& c : fine.max_cones) {
        bool covered = false;
        for (const ConeGeometry& g : cg.cones) {
            bool all_in = true;
            for (size_t ri : c.rays) {
                if (!cone_contains(g, fine.rays[ri])) {
                    all_in = false;
                    break;
                }
            }
            if (all_in) {
                covered = true;
                break;
            }
        }
        if (!covered) return false;
    }
    return true;
}

AbelianInvariants local_stabilizer(const Fan& f, size_t cone_index) {
    if (cone_index >= f.max_cones.size()) fail("DimensionMismatch", "cone index out of range");
    std::vector<IVec> gens;
    for (size_t i : f.max_cones[cone_index].rays) gens.push_back(f.rays.at(i));
    if (gens.empty()) fail("NotFullDimensional", "cone has no rays");
    IMat g(gens);
    if (rank(g) != gens.size()) fail("NotSimplicial", "cone rays are dependent");
    if (gens.size() != f.rank) fail("NotFullDimensional", "cone does not span the lattice");
    return cokernel_invariants(transpose(g));
}

Fan refine_lattice(const Fan& f, const std::vector<QVec>& generators) {
    Int d = 1;
    for (const QVec& g : generators) {
        if (g.size() != f.rank) fail("DimensionMismatch", "generator length does not match rank");
        for (const Rat& x : g) d = lcm(d, den(x));
    }
    std::vector<IVec> rows;
    IMat id = IMat::identity(f.rank);
    for (size_t r = 0; r < f.rank; ++r) {
        IVec row = id.row(r);
        for (Int& x : row) x *= d;
        rows.push_back(row);
    }
    for (const QVec& g : generators) {
        IVec row(f.rank);
        for (size_t i = 0; i < f.rank; ++i) row[i] = num(g[i] * Rat(d));
        rows.push_back(row);
    }
    auto hr = hermite_normal_form(IMat(rows));
    if (hr.rank != f.rank) fail("Internal", "refined lattice basis is degenerate");
    // Basis of N' has rows hr.h.row(i) / d.
    QMat basis(f.rank, f.rank);
    for (size_t r = 0; r < f.rank; ++r)
        for (size_t c = 0; c < f.rank; ++c) basis(r, c) = Rat(hr.h(r, c), d);
    QMat inv = rational_inverse(basis);

    Fan out;
    out.rank = f.rank;
    out.max_cones = f.max_cones;
    for (const IVec& ray : f.rays) {
        QVec c = vec_mat(to_rational(ray), inv);
        IVec ci(c.size());
        for (size_t i = 0; i < c.size(); ++i) {
            if (!is_integer(c[i])) fail("Internal", "old lattice point missing from refined lattice");
            ci[i] = num(c[i]);
        }
        out.rays.push_back(primitive(ci));
    }
    return out;
}

std::vector<IVec> resolve_cone_2d(const Fan& f, size_t cone_index) {
    if (f.rank != 2) fail("NotTwoDimensional", "fan rank must be 2");
    if (cone_index >= f.max_cones.size()) fail("DimensionMismatch", "cone index out of range");
    const auto& idx = f.max_cones[cone_index].rays;
    if (idx.size() != 2) fail("NotTwoDimensional", "cone must have exactly two rays");
    IVec p = f.rays.at(idx[0]);
    IVec q = f.rays.at(idx[1]);
    IMat m({p, q});
    Int det = determinant(m);
    if (det == 0) fail("NotTwoDimensional", "cone rays are dependent");
    if (abs(det) == 1) return {};

    QMat inv = rational_inverse(QMat(m));
    // Lattice points of {alpha p + beta q : alpha, beta in [0,1]}.
    std::vector<IVec> pts;
    IVec corners[4] = {{Int(0), Int(0)}, p, q, {p[0] + q[0], p[1] + q[1]}};
    Int lo0 = corners[0][0], hi0 = corners[0][0], lo1 = corners[0][1], hi1 = corners[0][1];
    for (const IVec& c : corners) {
        lo0 = std::min(lo0, c[0]);
        hi0 = std::max(hi0, c[0]);
        lo1 = std::min(lo1, c[1]);
        hi1 = std::max(hi1, c[1]);
    }
    for (Int x = lo0; x <= hi0; ++x) {
        for (Int y = lo1; y <= hi1; ++y) {
            if (x == 0 && y == 0) continue;
            QVec c = vec_mat(QVec{Rat(x), Rat(y)}, inv);
            if (c[0] < 0 || c[0] > 1 || c[1] < 0 || c[1] > 1) continue;
            pts.push_back({x, y});
        }
    }

    bool collinear = true;
    for (const IVec& a : pts) {
        if (cross(p, q, a) != 0) {
            collinear = false;
            break;
        }
    }

    std::vector<IVec> chain;
    if (collinear) {
        // The sail degenerates to the segment from p to q.
        chain = lattice_points_on_segment(p, q);
    } else {
        std::vector<IVec> hull = convex_hull_2d(pts);
        const size_t h = hull.size();
        std::vector<size_t> sail_edges;
        for (size_t i = 0; i < h; ++i) {
            const IVec& u = hull[i];
            const IVec& w = hull[(i + 1) % h];
            IVec nu = {w[1] - u[1], u[0] - w[0]};  // outward normal of a CCW polygon
            if (dot(nu, p) < 0 && dot(nu, q) < 0) sail_edges.push_back(i);
        }
        if (sail_edges.empty()) fail("Internal", "no bounded boundary found");
        // Bounded edges form one contiguous arc of the hull; rotate so the arc
        // starts at its first edge.
        std::sort(sail_edges.begin(), sail_edges.end());
        size_t start = sail_edges[0];
        if (sail_edges.size() < h) {
            for (size_t k = 0; k < sail_edges.size(); ++k) {
                size_t prev = (sail_edges[k] + h - 1) % h;
                if (std::find(sail_edges.begin(), sail_edges.end(), prev) == sail_edges.end()) {
                    start = sail_edges[k];
                    break;
                }
            }
        }
        for (size_t k = 0; k < sail_edges.size(); ++k) {
            size_t e = (start + k) % h;
            auto seg = lattice_points_on_segment(hull[e], hull[(e + 1) % h]);
            if (!chain.empty()) seg.erase(seg.begin());
            chain.insert(chain.end(), seg.begin(), seg.end());
        }
    }
    if (chain.front() == q) std::reverse(chain.begin(), chain.end());
    if (chain.front() != p || chain.back() != q) fail("Internal", "sail endpoints mismatch");
    chain.erase(chain.begin());
    chain.pop_back();
    return chain;
}

}  // namespace toric
