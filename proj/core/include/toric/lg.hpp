#ifndef TORIC_LG_HPP
#define TORIC_LG_HPP

#include <string>
#include <vector>

#include "toric/linalg.hpp"
#include "toric/numeric.hpp"

namespace toric {

// Polynomial with one monomial row per term. Parsing and construction enforce
// the invertibility shape (square exponent matrix, every variable used);
// restrictions to fixed loci may be non-square or empty.
struct InvertiblePolynomial {
    std::vector<std::string> vars;
    std::vector<Rat> coeffs;
    IMat exponents;

    bool operator==(const InvertiblePolynomial& o) const {
        return vars == o.vars && coeffs == o.coeffs && exponents == o.exponents;
    }
};

struct ChargeData {
    QVec q;
    IVec weights;
    Int degree;
};

struct AtomicPiece {
    enum class Type { Fermat, Loop, Chain };
    Type type;
    std::vector<size_t> variable_indices;
    std::vector<Int> exponents;
};

struct AtomicDecomposition {
    std::vector<AtomicPiece> pieces;
};

struct NondegeneracyReport {
    bool ok;
    std::vector<std::string> reasons;
};

// Monomial basis of the graded Jacobian quotient, with normalized degrees
// (weighted degree divided by d).
struct JacobianBasis {
    std::vector<IVec> monomials;
    std::vector<Rat> degrees;
};

InvertiblePolynomial make_polynomial(std::vector<std::string> vars, std::vector<Rat> coeffs,
                                     IMat exponents);

// Text like "x^3*y + x*y^5" or "2x y^2 - 1/3 z^4"; variables are ordered by
// first appearance.
InvertiblePolynomial parse_polynomial(const std::string& text);

std::string polynomial_to_string(const InvertiblePolynomial& w);

// q = E^{-1} (1,...,1), together with the least-common-denominator weights.
ChargeData charges(const InvertiblePolynomial& w);

// Partition of the variables into Fermat / loop / chain pieces.
AtomicDecomposition ks_decompose(const InvertiblePolynomial& w);

NondegeneracyReport nondegeneracy_check(const InvertiblePolynomial& w);

Rat central_charge(const InvertiblePolynomial& w);

bool is_calabi_yau(const InvertiblePolynomial& w);

// prod (1/q_i - 1), asserted integral.
Int milnor_number(const InvertiblePolynomial& w);

// Core graded engine: quotient by the ideal (x^m . dW/dx_i) degree by degree
// for an arbitrary weighting. Throws InfiniteDimensional when the dimensions
// fail to vanish on the window above the expected top degree.
JacobianBasis graded_jacobian_basis(const IMat& exponents, const std::vector<Rat>& coeffs,
                                    const IVec& weights, const Int& degree);

JacobianBasis jacobian_basis(const InvertiblePolynomial& w);

InvertiblePolynomial transpose(const InvertiblePolynomial& w);

// Keeps exactly the monomials supported inside fixed_indices, as a polynomial
// over those variables (in increasing index order).
InvertiblePolynomial restrict_to_fixed(const InvertiblePolynomial& w,
                                       const std::vector<size_t>& fixed_indices);

}  // namespace toric

#endif
