#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "toric/group.hpp"
#include "toric/lg.hpp"
#include "toric/numeric.hpp"

namespace toric {

// How a symmetry h acts on a sector basis element x^r dx_g. FormPullback uses
// the pullback phase sum_{i in F_g} (r_i + 1) h_i; DeterminantTwist multiplies
// by det(h), adding sum_{i not in F_g} h_i. The two agree whenever every
// twisted sector is narrow.
enum class InvarianceConvention { FormPullback, DeterminantTwist };

// Basis element x^r dx_g of the g-sector: the monomial exponents run over
// fixed_indices(sector). Bidegrees are (deg-, deg+) pairs.
struct SectorBasisElement {
    DiagonalElement sector;
    IVec monomial;
    std::pair<Rat, Rat> bidegree_B;
    std::pair<Rat, Rat> bidegree_A;

    bool operator==(const SectorBasisElement& o) const {
        return sector == o.sector && monomial == o.monomial && bidegree_B == o.bidegree_B &&
               bidegree_A == o.bidegree_A;
    }
};

// Bigraded state space: sectors ordered by phase vector, monomials in the
// jacobian-basis order. `poincare` counts dimensions per bidegree (B-grading
// for the B-model, A-grading for the A-model).
struct GradedStateSpace {
    InvertiblePolynomial w;
    std::vector<SectorBasisElement> elements;
    size_t total_dim = 0;
    std::map<std::pair<Rat, Rat>, size_t> poincare;
};

GradedStateSpace b_model_state_space(const InvertiblePolynomial& w, const DiagonalGroup& g_group,
                                     InvarianceConvention convention = InvarianceConvention::FormPullback);

GradedStateSpace a_model_state_space(const InvertiblePolynomial& w, const DiagonalGroup& g_group,
                                     InvarianceConvention convention = InvarianceConvention::FormPullback);

// One row of the transpose mirror bijection.
struct MirrorMapEntry {
    SectorBasisElement source;
    SectorBasisElement image;
};

// Bidegree-preserving bijection from the B-model basis of (W, G) onto the
// A-model basis of (W^T, G^T): x^r dx_g with sector word k goes to the
// element of the word-(r+1) sector whose monomial word maps back to g.
// Throws MirrorMismatch when an image is missing, duplicated, or violates
// bidegree_B(source) = bidegree_A(image).
std::vector<MirrorMapEntry> bhk_mirror_map(const InvertiblePolynomial& w,
                                           const DiagonalGroup& g_group,
                                           InvarianceConvention convention = InvarianceConvention::FormPullback);

struct PairingDegreeReport {
    bool ok = true;
    size_t pairs_checked = 0;
    std::vector<std::string> violations;
};

// For every sector pair (g, g^-1) and every monomial pair of complementary
// internal degree (reaching the top class of Jac(W_g)), checks
// deg- + deg- = deg+ + deg+ = c_W on the B-grading.
PairingDegreeReport pairing_degree_report(const GradedStateSpace& space);

// Inertia sector of a finite diagonal quotient [C^n / G]: one generator per
// group element, in bidegree (age, age).
struct ChenRuanSector {
    DiagonalElement g;
    size_t fixed_dim = 0;
    Rat age;
    std::pair<Rat, Rat> bidegree;
};

std::vector<ChenRuanSector> chen_ruan_affine_quotient(size_t n,
                                                      const std::vector<DiagonalElement>& group);

// Twisted-sector data of weighted projective space P(c): one sector per
// root-of-unity phase lambda with lambda * c_i integral for some i; the sector
// size is the number of such i, and the total is sum(c_i).
struct WpsSector {
    Rat phase;
    IVec weights;
};

struct WpsChenRuanData {
    Int total_dim = 0;
    std::vector<WpsSector> sectors;
};

WpsChenRuanData chen_ruan_wps_dimension(const IVec& c);

}  // namespace toric
