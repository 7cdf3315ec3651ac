#include "toric/state_space.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "toric/error.hpp"
#include "toric/linalg.hpp"

namespace toric {

namespace {

std::string phase_string(const DiagonalElement& g) {
    std::string s = "(";
    for (size_t i = 0; i < g.phases.size(); ++i) {
        if (i > 0) s += ", ";
        s += to_string(g.phases[i]);
    }
    return s + ")";
}

// Lattice generators of the group, so invariance only has to be tested N
// times per monomial. The test phase is integer-linear in the generator, so
// integrality on generators gives integrality on the whole group.
std::vector<DiagonalElement> invariance_generators(const InvertiblePolynomial& w,
                                                   const DiagonalGroup& g_group) {
    IMat basis = word_lattice(w, g_group.elements);
    std::vector<DiagonalElement> gens;
    for (const IVec& row : basis.row_vectors()) {
        gens.push_back(element_of_word(w, GroupElementWord{row}));
    }
    return gens;
}

bool invariant_under(const DiagonalElement& h, const std::vector<size_t>& fixed,
                     const IVec& monomial, InvarianceConvention convention,
                     const std::vector<bool>& in_fixed) {
    Rat phase = 0;
    for (size_t j = 0; j < fixed.size(); ++j) {
        phase += Rat(monomial[j] + 1) * h.phases[fixed[j]];
    }
    if (convention == InvarianceConvention::DeterminantTwist) {
        for (size_t i = 0; i < h.phases.size(); ++i) {
            if (!in_fixed[i]) phase += h.phases[i];
        }
    }
    return is_integer(phase);
}

GradedStateSpace build_state_space(const InvertiblePolynomial& w, const DiagonalGroup& g_group,
                                   InvarianceConvention convention, bool a_side) {
    ChargeData cd = charges(w);
    const size_t n = w.vars.size();
    Rat sum_q = 0;
    for (const Rat& q : cd.q) sum_q += q;
    const Rat c_w = Rat(n) - 2 * sum_q;

    for (const DiagonalElement& g : g_group.elements) {
        if (g.phases.size() != n) fail("DimensionMismatch", "group element has wrong length");
        if (!is_symmetry(w, g)) {
            fail("NotASymmetry",
                 "group element " + phase_string(g) + " does not preserve the polynomial");
        }
    }

    std::vector<DiagonalElement> sectors = g_group.elements;
    std::sort(sectors.begin(), sectors.end());
    sectors.erase(std::unique(sectors.begin(), sectors.end()), sectors.end());

    std::vector<DiagonalElement> gens = invariance_generators(w, g_group);

    GradedStateSpace out;
    out.w = w;
    for (const DiagonalElement& g : sectors) {
        std::vector<size_t> fixed = fixed_indices(g);
        std::vector<bool> in_fixed(n, false);
        for (size_t f : fixed) in_fixed[f] = true;

        std::vector<IVec> monomials;
        std::vector<Rat> qdegrees;
        if (fixed.empty()) {
            monomials.push_back(IVec{});
            qdegrees.push_back(Rat(0));
        } else {
            InvertiblePolynomial rest = restrict_to_fixed(w, fixed);
            IVec wts(fixed.size());
            for (size_t j = 0; j < fixed.size(); ++j) wts[j] = cd.weights[fixed[j]];
            JacobianBasis jb;
            try {
                jb = graded_jacobian_basis(rest.exponents, rest.coeffs, wts, cd.degree);
            } catch (const Error& e) {
                if (e.code() == "InfiniteDimensional") {
                    fail("DegenerateRestriction",
                         "sector " + phase_string(g) + " has an infinite-dimensional Milnor ring");
                }
                throw;
            }
            Rat mu = 1;
            for (size_t f : fixed) mu *= 1 / cd.q[f] - 1;
            if (!is_integer(mu) || Int(jb.monomials.size()) != num(mu)) {
                fail("DegenerateRestriction",
                     "sector " + phase_string(g) + " has Milnor number " +
                         std::to_string(jb.monomials.size()) + ", expected " + to_string(mu));
            }
            monomials = std::move(jb.monomials);
            qdegrees = std::move(jb.degrees);
        }

        const Rat iota_g = age(g);
        const Rat iota_inv = age(inverse(g));
        Rat fixed_q = 0;
        for (size_t f : fixed) fixed_q += cd.q[f];

        for (size_t k = 0; k < monomials.size(); ++k) {
            bool keep = true;
            for (const DiagonalElement& h : gens) {
                if (!invariant_under(h, fixed, monomials[k], convention, in_fixed)) {
                    keep = false;
                    break;
                }
            }
            if (!keep) continue;
            Rat p = qdegrees[k] + fixed_q;
            SectorBasisElement el;
            el.sector = g;
            el.monomial = monomials[k];
            el.bidegree_B = {p + iota_inv - sum_q, p + iota_g - sum_q};
            el.bidegree_A = {c_w - el.bidegree_B.first, el.bidegree_B.second};
            out.elements.push_back(std::move(el));
        }
    }
    out.total_dim = out.elements.size();
    for (const SectorBasisElement& el : out.elements) {
        out.poincare[a_side ? el.bidegree_A : el.bidegree_B] += 1;
    }
    return out;
}

}  // namespace

GradedStateSpace b_model_state_space(const InvertiblePolynomial& w, const DiagonalGroup& g_group,
                                     InvarianceConvention convention) {
    return build_state_space(w, g_group, convention, false);
}

GradedStateSpace a_model_state_space(const InvertiblePolynomial& w, const DiagonalGroup& g_group,
                                     InvarianceConvention convention) {
    return build_state_space(w, g_group, convention, true);
}

std::vector<MirrorMapEntry> bhk_mirror_map(const InvertiblePolynomial& w,
                                           const DiagonalGroup& g_group,
                                           InvarianceConvention convention) {
    const size_t n = w.vars.size();
    if (!g_group.contains(element_J(w))) {
        fail("MirrorMismatch", "group does not contain the exponential grading element");
    }
    GradedStateSpace source = b_model_state_space(w, g_group, convention);
    InvertiblePolynomial wt = transpose(w);
    DiagonalGroup gt = transpose_group(g_group, w);
    GradedStateSpace target = a_model_state_space(wt, gt, convention);
    if (source.total_dim != target.total_dim) {
        fail("MirrorMismatch", "state space dimensions " + std::to_string(source.total_dim) +
                                   " and " + std::to_string(target.total_dim) + " differ");
    }

    std::map<QVec, std::vector<size_t>> target_sectors;
    for (size_t i = 0; i < target.elements.size(); ++i) {
        target_sectors[target.elements[i].sector.phases].push_back(i);
    }

    std::vector<MirrorMapEntry> entries;
    std::vector<bool> used(target.elements.size(), false);
    for (const SectorBasisElement& src : source.elements) {
        std::vector<size_t> fg = fixed_indices(src.sector);
        IVec word(n, Int(0));
        for (size_t j = 0; j < fg.size(); ++j) word[fg[j]] = src.monomial[j] + 1;
        DiagonalElement h = element_of_word(wt, GroupElementWord{word});
        if (!gt.contains(h)) {
            fail("MirrorMismatch", "mirror sector of " + phase_string(src.sector) +
                                       " lies outside the transpose group");
        }
        std::vector<size_t> fh = fixed_indices(h);

        std::vector<size_t> candidates;
        auto it = target_sectors.find(h.phases);
        if (it != target_sectors.end()) {
            for (size_t idx : it->second) {
                const IVec& s = target.elements[idx].monomial;
                IVec back(n, Int(0));
                for (size_t j = 0; j < fh.size(); ++j) back[fh[j]] = s[j] + 1;
                if (element_of_word(w, GroupElementWord{back}) == src.sector) {
                    candidates.push_back(idx);
                }
            }
        }
        if (candidates.empty()) {
            fail("MirrorMismatch", "no mirror partner for a class in sector " +
                                       phase_string(src.sector));
        }
        size_t chosen = candidates[0];
        if (candidates.size() > 1) {
            bool exact = false;
            for (size_t idx : candidates) {
                if (fh == fg && target.elements[idx].monomial == src.monomial) {
                    chosen = idx;
                    exact = true;
                    break;
                }
            }
            if (!exact) {
                for (size_t idx : candidates) {
                    if (lex_less(target.elements[idx].monomial, target.elements[chosen].monomial)) {
                        chosen = idx;
                    }
                }
            }
        }
        if (used[chosen]) {
            fail("MirrorMismatch", "two classes share the mirror partner in sector " +
                                       phase_string(h));
        }
        const SectorBasisElement& img = target.elements[chosen];
        if (src.bidegree_B != img.bidegree_A) {
            fail("MirrorMismatch",
                 "bidegree (" + to_string(src.bidegree_B.first) + ", " +
                     to_string(src.bidegree_B.second) + ") maps to (" +
                     to_string(img.bidegree_A.first) + ", " + to_string(img.bidegree_A.second) +
                     ")");
        }
        used[chosen] = true;
        entries.push_back({src, img});
    }
    return entries;
}

PairingDegreeReport pairing_degree_report(const GradedStateSpace& space) {
    ChargeData cd = charges(space.w);
    Rat sum_q = 0;
    for (const Rat& q : cd.q) sum_q += q;
    const Rat c_w = Rat(space.w.vars.size()) - 2 * sum_q;

    std::map<QVec, std::vector<size_t>> by_sector;
    for (size_t i = 0; i < space.elements.size(); ++i) {
        by_sector[space.elements[i].sector.phases].push_back(i);
    }

    PairingDegreeReport report;
    for (size_t i = 0; i < space.elements.size(); ++i) {
        const SectorBasisElement& a = space.elements[i];
        std::vector<size_t> fixed = fixed_indices(a.sector);
        Rat c_sector = 0;
        for (size_t f : fixed) c_sector += 1 - 2 * cd.q[f];
        Rat deg_a = 0;
        for (size_t j = 0; j < fixed.size(); ++j) deg_a += Rat(a.monomial[j]) * cd.q[fixed[j]];

        auto it = by_sector.find(inverse(a.sector).phases);
        if (it == by_sector.end()) continue;
        for (size_t k : it->second) {
            const SectorBasisElement& b = space.elements[k];
            Rat deg_b = 0;
            for (size_t j = 0; j < fixed.size(); ++j) deg_b += Rat(b.monomial[j]) * cd.q[fixed[j]];
            if (deg_a + deg_b != c_sector) continue;
            report.pairs_checked += 1;
            if (a.bidegree_B.first + b.bidegree_B.first != c_w ||
                a.bidegree_B.second + b.bidegree_B.second != c_w) {
                report.ok = false;
                report.violations.push_back("pair in sectors " + phase_string(a.sector) + " and " +
                                            phase_string(b.sector) + " misses the central charge");
            }
        }
    }
    return report;
}

std::vector<ChenRuanSector> chen_ruan_affine_quotient(size_t n,
                                                      const std::vector<DiagonalElement>& group) {
    std::vector<DiagonalElement> sorted = group;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());

    std::vector<ChenRuanSector> sectors;
    for (const DiagonalElement& g : sorted) {
        if (g.phases.size() != n) fail("DimensionMismatch", "group element has wrong length");
        ChenRuanSector s;
        s.g = g;
        s.fixed_dim = fixed_indices(g).size();
        s.age = age(g);
        s.bidegree = {s.age, s.age};
        sectors.push_back(std::move(s));
    }
    return sectors;
}

WpsChenRuanData chen_ruan_wps_dimension(const IVec& c) {
    if (c.empty()) fail("InvalidWeights", "weight vector is empty");
    for (const Int& ci : c) {
        if (ci <= 0) fail("InvalidWeights", "weights must be positive");
    }
    std::set<Rat> phases;
    for (const Int& ci : c) {
        for (Int k = 0; k < ci; ++k) phases.insert(Rat(k, ci));
    }
    WpsChenRuanData data;
    for (const Rat& lam : phases) {
        WpsSector s;
        s.phase = lam;
        for (const Int& ci : c) {
            if (is_integer(lam * Rat(ci))) s.weights.push_back(ci);
        }
        data.total_dim += Int(s.weights.size());
        data.sectors.push_back(std::move(s));
    }
    return data;
}

}  // namespace toric
