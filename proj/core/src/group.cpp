#include "toric/group.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <string>
#include <utility>

#include "toric/error.hpp"

namespace toric {

namespace {

QVec normalized(const QVec& phases) { return mod1(phases); }

// Breadth-first closure of the generated subgroup, capped by `limit`. The walk
// runs over integer numerators against the lcm denominator of the generators;
// that lcm divides the exponent of the generated group, so it is bounded by
// `limit` whenever the closure is.
std::vector<DiagonalElement> closure(const std::vector<DiagonalElement>& gens, size_t nvars,
                                     size_t limit) {
    Int denom = 1;
    for (const DiagonalElement& g : gens) {
        for (const Rat& p : g.phases) denom = lcm(denom, den(p));
    }
    if (denom > Int(limit)) {
        fail("EnumerationLimit",
             "subgroup closure exceeds " + std::to_string(limit) + " elements");
    }
    long long d = denom.convert_to<long long>();
    std::vector<std::vector<long long>> igens;
    for (const DiagonalElement& g : gens) {
        std::vector<long long> v(nvars);
        for (size_t i = 0; i < nvars; ++i) {
            Int k = (num(g.phases[i]) * (denom / den(g.phases[i]))) % denom;
            if (k < 0) k += denom;
            v[i] = k.convert_to<long long>();
        }
        igens.push_back(std::move(v));
    }
    std::set<std::vector<long long>> seen;
    std::deque<std::vector<long long>> frontier;
    seen.insert(std::vector<long long>(nvars, 0));
    frontier.push_back(std::vector<long long>(nvars, 0));
    while (!frontier.empty()) {
        std::vector<long long> cur = std::move(frontier.front());
        frontier.pop_front();
        for (const auto& g : igens) {
            std::vector<long long> next(nvars);
            for (size_t i = 0; i < nvars; ++i) {
                next[i] = cur[i] + g[i];
                if (next[i] >= d) next[i] -= d;
            }
            if (seen.insert(next).second) {
                if (seen.size() > limit) {
                    fail("EnumerationLimit",
                         "subgroup closure exceeds " + std::to_string(limit) + " elements");
                }
                frontier.push_back(std::move(next));
            }
        }
    }
    std::vector<DiagonalElement> out;
    out.reserve(seen.size());
    for (const auto& v : seen) {
        QVec phases(nvars);
        for (size_t i = 0; i < nvars; ++i) phases[i] = Rat(v[i], d);
        out.push_back(DiagonalElement{std::move(phases)});
    }
    return out;
}

Int abs_det(const IMat& m) {
    Int d = determinant(m);
    return d < 0 ? Int(-d) : d;
}

void require_word_lattice(const IMat& exponents, const IMat& basis) {
    IMat et = transpose(exponents);
    if (basis.rows() != basis.cols() || basis.rows() != et.cols()) {
        fail("InvalidLattice", "word lattice basis must be square of the ambient rank");
    }
    for (size_t i = 0; i < et.rows(); ++i) {
        if (!word_lattice_contains(basis, et.row(i))) {
            fail("InvalidLattice", "word lattice does not contain E_W * Z^N");
        }
    }
}

}  // namespace

bool DiagonalGroup::contains(const DiagonalElement& g) const {
    return std::binary_search(elements.begin(), elements.end(), g);
}

DiagonalElement identity_element(size_t nvars) { return DiagonalElement{QVec(nvars, Rat(0))}; }

DiagonalElement add(const DiagonalElement& a, const DiagonalElement& b) {
    if (a.phases.size() != b.phases.size()) {
        fail("DimensionMismatch", "adding elements of different rank");
    }
    QVec out(a.phases.size());
    for (size_t i = 0; i < out.size(); ++i) out[i] = mod1(a.phases[i] + b.phases[i]);
    return DiagonalElement{std::move(out)};
}

DiagonalElement inverse(const DiagonalElement& g) {
    QVec out(g.phases.size());
    for (size_t i = 0; i < out.size(); ++i) out[i] = mod1(-g.phases[i]);
    return DiagonalElement{std::move(out)};
}

bool is_symmetry(const InvertiblePolynomial& w, const DiagonalElement& g) {
    if (g.phases.size() != w.exponents.cols()) {
        fail("DimensionMismatch", "element rank does not match the polynomial");
    }
    for (size_t i = 0; i < w.exponents.rows(); ++i) {
        Rat s = 0;
        for (size_t j = 0; j < w.exponents.cols(); ++j) s += Rat(w.exponents(i, j)) * g.phases[j];
        if (!is_integer(s)) return false;
    }
    return true;
}

GroupElementWord word_of(const InvertiblePolynomial& w, const DiagonalElement& g) {
    if (g.phases.size() != w.exponents.cols()) {
        fail("DimensionMismatch", "element rank does not match the polynomial");
    }
    IVec word(w.exponents.rows());
    for (size_t i = 0; i < w.exponents.rows(); ++i) {
        Rat s = 0;
        for (size_t j = 0; j < w.exponents.cols(); ++j) s += Rat(w.exponents(i, j)) * g.phases[j];
        if (!is_integer(s)) {
            fail("NotASymmetry", "phase vector does not preserve the polynomial");
        }
        word[i] = num(s);
    }
    return GroupElementWord{std::move(word)};
}

DiagonalElement element_of_word(const InvertiblePolynomial& w, const GroupElementWord& word) {
    if (word.exponents.size() != w.exponents.rows()) {
        fail("DimensionMismatch", "word length does not match the polynomial");
    }
    QVec x = solve_left(QMat(transpose(w.exponents)), to_rational(word.exponents));
    return DiagonalElement{normalized(x)};
}

DiagonalGroup max_symmetry_group(const InvertiblePolynomial& w, size_t limit) {
    Int order = abs_det(w.exponents);
    if (order == 0) fail("SingularExponentMatrix", "exponent matrix is singular");
    if (order > Int(limit)) {
        fail("EnumerationLimit", "group order " + to_string(order) + " exceeds the bound");
    }
    QMat inv = rational_inverse(QMat(w.exponents));
    std::vector<DiagonalElement> gens;
    for (size_t j = 0; j < inv.cols(); ++j) {
        QVec col(inv.rows());
        for (size_t i = 0; i < inv.rows(); ++i) col[i] = inv(i, j);
        gens.push_back(DiagonalElement{normalized(col)});
    }
    DiagonalGroup g{w, closure(gens, w.exponents.cols(), limit)};
    if (Int(g.elements.size()) != order) {
        fail("Internal", "maximal symmetry group has wrong order");
    }
    return g;
}

DiagonalElement element_J(const InvertiblePolynomial& w) {
    return DiagonalElement{normalized(charges(w).q)};
}

DiagonalGroup sl_subgroup(const DiagonalGroup& g) {
    DiagonalGroup out{g.w, {}};
    for (const DiagonalElement& e : g.elements) {
        if (is_integer(age(e))) out.elements.push_back(e);
    }
    return out;
}

DiagonalGroup subgroup_generated(const std::vector<DiagonalElement>& gens,
                                 const DiagonalGroup& g_max, size_t limit) {
    std::vector<DiagonalElement> normal;
    for (const DiagonalElement& g : gens) {
        DiagonalElement e{normalized(g.phases)};
        if (!is_symmetry(g_max.w, e)) {
            fail("NotASymmetry", "generator does not preserve the polynomial");
        }
        normal.push_back(std::move(e));
    }
    return DiagonalGroup{g_max.w, closure(normal, g_max.w.exponents.cols(), limit)};
}

Rat pairing(const GroupElementWord& rho, const GroupElementWord& h,
            const InvertiblePolynomial& w) {
    if (rho.exponents.size() != w.exponents.rows() || h.exponents.size() != w.exponents.rows()) {
        fail("DimensionMismatch", "word length does not match the polynomial");
    }
    QVec x = solve_left(QMat(transpose(w.exponents)), to_rational(rho.exponents));
    return mod1(dotq(to_rational(h.exponents), x));
}

DiagonalGroup transpose_group(const DiagonalGroup& g, const InvertiblePolynomial& w,
                              size_t limit) {
    IMat basis = word_lattice(w, g.elements);
    IMat dual = transpose_word_lattice(w.exponents, basis);
    return group_from_word_lattice(transpose(w), dual, limit);
}

bool check_cy_condition(const DiagonalGroup& g, const InvertiblePolynomial& w) {
    if (!g.contains(element_J(w))) return false;
    for (const DiagonalElement& e : g.elements) {
        if (!is_integer(age(e))) return false;
    }
    return true;
}

std::vector<size_t> fixed_indices(const DiagonalElement& g) {
    std::vector<size_t> out;
    for (size_t i = 0; i < g.phases.size(); ++i) {
        if (g.phases[i] == 0) out.push_back(i);
    }
    return out;
}

Rat age(const DiagonalElement& g) {
    Rat s = 0;
    for (const Rat& p : g.phases) s += p;
    return s;
}

IMat word_lattice(const InvertiblePolynomial& w, const std::vector<DiagonalElement>& gens) {
    std::vector<IVec> words;
    for (const DiagonalElement& g : gens) words.push_back(word_of(w, g).exponents);
    return word_lattice_from_words(w.exponents, words);
}

IMat word_lattice_from_words(const IMat& exponents, const std::vector<IVec>& words) {
    size_t n = exponents.cols();
    if (exponents.rows() != n) fail("SingularExponentMatrix", "exponent matrix must be square");
    if (abs_det(exponents) == 0) fail("SingularExponentMatrix", "exponent matrix is singular");
    std::vector<IVec> rows = transpose(exponents).row_vectors();
    for (const IVec& word : words) {
        if (word.size() != n) fail("DimensionMismatch", "word length does not match the rank");
        rows.push_back(word);
    }
    HermiteResult hr = hermite_normal_form(IMat(rows));
    if (hr.rank != n) fail("Internal", "word lattice is not full rank");
    IMat basis(n, n);
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = 0; j < n; ++j) basis(i, j) = hr.h(i, j);
    }
    return basis;
}

Int word_lattice_order(const IMat& exponents, const IMat& basis) {
    require_word_lattice(exponents, basis);
    Int full = abs_det(exponents);
    Int sub = abs_det(basis);
    if (sub == 0 || full % sub != 0) fail("Internal", "lattice index is not integral");
    return full / sub;
}

bool word_lattice_contains(const IMat& basis, const IVec& word) {
    size_t n = basis.rows();
    if (word.size() != n) fail("DimensionMismatch", "word length does not match the rank");
    IVec v = word;
    for (size_t i = 0; i < n; ++i) {
        const Int& pivot = basis(i, i);
        if (pivot == 0) {
            if (v[i] != 0) return false;
            continue;
        }
        if (v[i] % pivot != 0) return false;
        Int c = v[i] / pivot;
        if (c != 0) {
            for (size_t j = 0; j < n; ++j) v[j] -= c * basis(i, j);
        }
    }
    return is_zero(v);
}

IMat transpose_word_lattice(const IMat& exponents, const IMat& basis) {
    require_word_lattice(exponents, basis);
    QMat x = mat_mul(transpose(rational_inverse(QMat(basis))), QMat(exponents));
    std::vector<IVec> words;
    for (size_t i = 0; i < x.rows(); ++i) {
        IVec row(x.cols());
        for (size_t j = 0; j < x.cols(); ++j) {
            if (!is_integer(x(i, j))) fail("Internal", "dual generator word is not integral");
            row[j] = num(x(i, j));
        }
        words.push_back(std::move(row));
    }
    return word_lattice_from_words(transpose(exponents), words);
}

bool word_lattice_cy(const IMat& exponents, const IMat& basis) {
    require_word_lattice(exponents, basis);
    size_t n = exponents.cols();
    IVec j_word(n, Int(1));
    if (!word_lattice_contains(basis, j_word)) return false;
    QVec qt = solve_left(QMat(exponents), QVec(n, Rat(1)));
    for (size_t i = 0; i < n; ++i) {
        if (!is_integer(dotq(to_rational(basis.row(i)), qt))) return false;
    }
    return true;
}

DiagonalGroup group_from_word_lattice(const InvertiblePolynomial& w, const IMat& basis,
                                      size_t limit) {
    require_word_lattice(w.exponents, basis);
    Int order = word_lattice_order(w.exponents, basis);
    if (order > Int(limit)) {
        fail("EnumerationLimit", "group order " + to_string(order) + " exceeds the bound");
    }
    std::vector<DiagonalElement> gens;
    for (size_t i = 0; i < basis.rows(); ++i) {
        gens.push_back(element_of_word(w, GroupElementWord{basis.row(i)}));
    }
    DiagonalGroup g{w, closure(gens, w.exponents.cols(), limit)};
    if (Int(g.elements.size()) != order) {
        fail("Internal", "word lattice expansion has wrong order");
    }
    return g;
}

}  // namespace toric
