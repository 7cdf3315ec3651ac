#pragma once

#include <cstddef>
#include <vector>

#include "toric/lg.hpp"
#include "toric/linalg.hpp"
#include "toric/numeric.hpp"

namespace toric {

// Diagonal symmetry g = diag(e^{2 pi i p_1}, ..., e^{2 pi i p_N}) stored by its
// phase vector p, each entry reduced into [0, 1).
struct DiagonalElement {
    QVec phases;

    bool operator==(const DiagonalElement& o) const { return phases == o.phases; }
    bool operator<(const DiagonalElement& o) const { return lex_less(phases, o.phases); }
};

// Exponent word k expressing an element as rho_1^{k_1} ... rho_N^{k_N} in the
// standard generators rho_j (columns of E_W^{-1} mod 1).
struct GroupElementWord {
    IVec exponents;

    bool operator==(const GroupElementWord& o) const { return exponents == o.exponents; }
};

// Finite diagonal symmetry group of an invertible polynomial with its element
// list enumerated explicitly, sorted lexicographically by phases. Equality
// compares the ambient exponent matrix and the element list; coefficients play
// no role in the symmetry theory.
struct DiagonalGroup {
    InvertiblePolynomial w;
    std::vector<DiagonalElement> elements;

    size_t order() const { return elements.size(); }
    bool contains(const DiagonalElement& g) const;

    bool operator==(const DiagonalGroup& o) const {
        return w.exponents == o.w.exponents && elements == o.elements;
    }
};

inline constexpr size_t kGroupEnumerationLimit = 10000;

DiagonalElement identity_element(size_t nvars);
DiagonalElement add(const DiagonalElement& a, const DiagonalElement& b);
DiagonalElement inverse(const DiagonalElement& g);

// True when W(g.x) = W(x), i.e. E_W * phases is integral.
bool is_symmetry(const InvertiblePolynomial& w, const DiagonalElement& g);

// Canonical word of a symmetry: E_W * phases. Throws NotASymmetry otherwise.
GroupElementWord word_of(const InvertiblePolynomial& w, const DiagonalElement& g);
DiagonalElement element_of_word(const InvertiblePolynomial& w, const GroupElementWord& word);

// Full diagonal symmetry group G_max, generated by the columns of E_W^{-1}
// taken mod 1; its order is |det E_W|.
DiagonalGroup max_symmetry_group(const InvertiblePolynomial& w,
                                 size_t limit = kGroupEnumerationLimit);

// The exponential grading element J: phases are the charges of W.
DiagonalElement element_J(const InvertiblePolynomial& w);

// Subgroup of elements whose phases sum to an integer.
DiagonalGroup sl_subgroup(const DiagonalGroup& g);

DiagonalGroup subgroup_generated(const std::vector<DiagonalElement>& gens,
                                 const DiagonalGroup& g_max,
                                 size_t limit = kGroupEnumerationLimit);

// Word pairing <rho, h> = h^T E_W^{-1} rho mod 1, returned in [0, 1). rho is a
// word on the W side, h a word on the W^T side; changing either word by its
// relation lattice shifts the value by an integer.
Rat pairing(const GroupElementWord& rho, const GroupElementWord& h,
            const InvertiblePolynomial& w);

// Mirror dual subgroup G^T: all elements of G_max(W^T) pairing integrally with
// every element of g.
DiagonalGroup transpose_group(const DiagonalGroup& g, const InvertiblePolynomial& w,
                              size_t limit = kGroupEnumerationLimit);

// Calabi-Yau condition J in G and G contained in SL(W).
bool check_cy_condition(const DiagonalGroup& g, const InvertiblePolynomial& w);

std::vector<size_t> fixed_indices(const DiagonalElement& g);

// Age iota(g): sum of the phases.
Rat age(const DiagonalElement& g);

// Word-lattice form of a subgroup: the canonical Hermite row basis of the
// lattice spanned by the words of the generators together with E_W * Z^N.
// Intermediate lattices between E_W * Z^N and Z^N classify subgroups of G_max
// and support transpose computations without element enumeration.
IMat word_lattice(const InvertiblePolynomial& w, const std::vector<DiagonalElement>& gens);
IMat word_lattice_from_words(const IMat& exponents, const std::vector<IVec>& words);
Int word_lattice_order(const IMat& exponents, const IMat& basis);
bool word_lattice_contains(const IMat& basis, const IVec& word);

// Word lattice of the mirror dual subgroup, on the W^T side.
IMat transpose_word_lattice(const IMat& exponents, const IMat& basis);

bool word_lattice_cy(const IMat& exponents, const IMat& basis);

// Expands a word lattice back into an explicit subgroup of G_max(w).
DiagonalGroup group_from_word_lattice(const InvertiblePolynomial& w, const IMat& basis,
                                      size_t limit = kGroupEnumerationLimit);

}  // namespace toric
