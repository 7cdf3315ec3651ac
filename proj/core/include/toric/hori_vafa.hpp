#pragma once

#include <map>
#include <string>
#include <vector>

#include "toric/group.hpp"
#include "toric/lg.hpp"
#include "toric/linalg.hpp"
#include "toric/numeric.hpp"

namespace toric {

// One Laurent monomial coeff * prod params[name]^exp * prod x_i^{exponents[i]}.
// Parameter names stand for nonzero quantities (e^{t_j}, q_b); their exponents
// may be rational, the variable exponents are integers of either sign.
struct LaurentTerm {
    Rat coeff = 1;
    std::map<std::string, Rat> params;
    IVec exponents;

    bool operator==(const LaurentTerm& o) const {
        return coeff == o.coeff && params == o.params && exponents == o.exponents;
    }
};

// Equivariant correction -(sum coeffs[name] * name) * log(x_var). Solving
// constraints can mix several equivariant parameters into one variable's
// coefficient, so a linear combination is stored rather than a single name.
struct LogTerm {
    size_t var = 0;
    std::map<std::string, Rat> coeffs;

    bool operator==(const LogTerm& o) const { return var == o.var && coeffs == o.coeffs; }
};

struct LaurentSuperpotential {
    std::vector<std::string> vars;
    std::vector<LaurentTerm> terms;
    std::vector<LogTerm> log_terms;

    bool operator==(const LaurentSuperpotential& o) const {
        return vars == o.vars && terms == o.terms && log_terms == o.log_terms;
    }
};

// Validates sizes, nonzero coefficients, and the no-duplicate-exponent-vector
// invariant.
LaurentSuperpotential make_superpotential(std::vector<std::string> vars,
                                          std::vector<LaurentTerm> terms,
                                          std::vector<LogTerm> log_terms = {});

std::string superpotential_to_string(const LaurentSuperpotential& w);

// Monomial constraint prod x_i^{exponents[i]} = param.
struct MirrorConstraint {
    IVec exponents;
    std::string param;
};

struct MirrorConstraintSystem {
    size_t nvars = 0;
    std::vector<MirrorConstraint> constraints;
};

// Phase data of the rank-one GLSM with charges (c_1, ..., c_N, -d): for s > 0
// the total space of O(-d) over P(c), for s < 0 the orbifold [C^N / Z_d] with
// Z_d acting by the J-weights c_i / d.
struct GlsmPhases {
    IVec weights;
    Int degree = 0;
    std::string positive_phase;
    std::string negative_phase;
    QVec negative_j_phases;
};

GlsmPhases glsm_rank1_phases(const IVec& charges);

struct ToricMirror {
    MirrorConstraintSystem system;
    LaurentSuperpotential w;
};

// Hori-Vafa mirror of the toric variety with charge matrix q (rows = the N
// coordinates, columns = the r torus factors): W = x_1 + ... + x_N subject to
// prod x_i^{q_{ij}} = params[j].
ToricMirror hv_mirror_toric(const IMat& q, const std::vector<std::string>& params);

// Eliminates one variable per constraint. When the Hermite pivots of the
// constraint matrix are all 1 the pivot variables are substituted and the
// free variables keep their names; otherwise a Smith-form torus
// reparametrization in fresh variables u_k is used (parameter exponents may
// then be rational). Log terms are rewritten along the substitution; their
// constant parts are dropped.
LaurentSuperpotential solve_constraints(const MirrorConstraintSystem& sys,
                                        const LaurentSuperpotential& w);

// Solved mirror with log corrections -lambda_i log x_i for the chosen subset
// of the original coordinates. Corrections on eliminated coordinates are
// expanded through the substitution.
LaurentSuperpotential equivariant_hv_mirror(const IMat& q, const std::vector<std::string>& params,
                                            const std::vector<std::string>& lambda_params,
                                            const std::vector<size_t>& subset);

// BKK bound: mixed volume of the Newton polytopes of {x_i dW/dx_i}, with log
// terms contributing their constant -lambda_i. Exact for generic coefficients;
// degenerate is set when some gradient component vanishes identically (the
// critical locus is then positive dimensional and the count meaningless).
struct CriticalCountResult {
    Int count = 0;
    bool degenerate = false;
};

CriticalCountResult critical_count(const LaurentSuperpotential& w,
                                   const std::map<std::string, Rat>& assignment = {});

// Pre-Hori-Vafa mirror of the degree-d hypersurface {a = 0} in P(weights):
// transpose(a) plus e^{-t/d} u_1 ... u_N.
LaurentSuperpotential pre_hv_mirror_hypersurface(const InvertiblePolynomial& a,
                                                 const IVec& weights, const Int& degree,
                                                 const std::string& t_param);

// General ambient: charge matrix q (N x r, rows = coordinates), a in the first
// M coordinates with N - M + 1 = r, degrees d_a. The matrix D formed by the
// last N - M rows of q over the row (-d_1, ..., -d_r) must be invertible; its
// inverse supplies the parameter and variable exponents of the r
// compactification terms.
LaurentSuperpotential pre_hv_mirror_hypersurface(const InvertiblePolynomial& a, const IMat& q,
                                                 const IVec& degrees,
                                                 const std::vector<std::string>& t_params);

// Complete intersection case with as many monomials as ambient coordinates:
// systems[b] holds the exponent rows of A_b over all N variables, q is the
// N x k charge matrix, degrees(b, a) the degree of A_b under the a-th torus.
// Output is the transpose of the stacked exponent matrix plus one parameter
// term per A_b with exponents the block indicator and parameter exponents
// -degrees^{-1}.
LaurentSuperpotential pre_hv_mirror_complete_intersection(const std::vector<IMat>& systems,
                                                          const IMat& q, const IMat& degrees,
                                                          const std::vector<std::string>& t_params);

// Diagonal phase vectors g with (exponent row) . g integral for every term;
// sl is the subgroup with integral phase sum. The group element holder reuses
// the Laurent exponent matrix.
struct SuperpotentialSymmetry {
    DiagonalGroup full;
    DiagonalGroup sl;
};

SuperpotentialSymmetry superpotential_symmetry_group(const LaurentSuperpotential& w,
                                                     size_t limit = kGroupEnumerationLimit);

// Calabi-Yau consistency of the two mirror constructions: the constraint-form
// mirror z_1^N + ... + z_N^N + e^{t/N} z_1 ... z_N against the anticanonical
// family of the polar dual of the degree-N simplex.
struct BatyrevCyCheck {
    LaurentSuperpotential w;
    std::vector<IVec> hv_monomials;
    std::vector<IVec> batyrev_monomials;
    bool coincide = false;
};

BatyrevCyCheck batyrev_consistency_cy(size_t nvars, const Int& degree, const std::string& t_param);

}  // namespace toric
