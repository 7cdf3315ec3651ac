#pragma once

#include <vector>

#include "toric/fan.hpp"
#include "toric/linalg.hpp"

namespace toric {

// Convex lattice or rational polytope, stored by its extreme points in
// lexicographic order. dim is the ambient dimension; the polytope itself may
// be lower dimensional.
struct Polytope {
    size_t dim = 0;
    std::vector<QVec> vertices;

    bool operator==(const Polytope& o) const { return dim == o.dim && vertices == o.vertices; }
};

Polytope make_polytope(size_t dim, const std::vector<QVec>& points);
Polytope make_polytope(size_t dim, const std::vector<IVec>& points);

// Inward facet inequality <normal, x> >= -offset with primitive integer
// normal. For a lattice polytope the offset is an integer.
struct FacetInequality {
    IVec normal;
    Rat offset;
};

// Facet inequalities of a full-dimensional polytope.
std::vector<FacetInequality> facets(const Polytope& p);

std::vector<IVec> lattice_points(const Polytope& p);

bool is_integral(const Polytope& p);
bool is_full_dimensional(const Polytope& p);

// Polar dual {y : <x, y> >= -1 for all x}; requires the origin strictly
// interior.
Polytope polar_dual(const Polytope& p);

// Full-dimensional lattice polytope containing the origin in its interior
// whose polar dual is again a lattice polytope (equivalently, all facet
// offsets are 1).
bool is_reflexive(const Polytope& p);

// Fan of inward facet normals, one maximal cone per vertex.
Fan normal_fan(const Polytope& p);

// {m : <m, v_i> >= -a_i} for the fan's rays; requires the rays to span R^rank
// positively, so that the polyhedron is bounded.
Polytope divisor_polytope(const Fan& f, const IVec& coeffs);

struct WpsGorensteinReport {
    bool gorenstein = false;
    std::vector<Int> weights;
    Int total = 0;
};
WpsGorensteinReport wps_gorenstein(const std::vector<Int>& weights);

// Quotient fan of the weighted projective space P(c_0 : ... : c_n) on the
// lattice Z^{n+1} / Z (c_0, ..., c_n). Ray images are not re-primitivized.
Fan wps_fan(const std::vector<Int>& weights);

// Mirror data of a reflexive polytope: the polar dual, the ray lattice
// points of the maximally subdivided dual fan, and the anticanonical
// monomial exponents (<m, v> + 1 over those rays) of every lattice point m.
struct BatyrevData {
    Polytope dual;
    std::vector<IVec> dual_rays;
    std::vector<IVec> points;
    std::vector<IVec> monomials;
};
BatyrevData batyrev_mirror_data(const Polytope& p);

// dim! times the Euclidean volume; zero for lower-dimensional polytopes.
Int normalized_volume(const Polytope& p);

// Mixed volume (normalized) of dim polytopes in dimension dim <= 4, by
// inclusion-exclusion over Minkowski sums.
Int mixed_volume(const std::vector<Polytope>& ps);

// Hermite normal form of the vertex matrix of a lattice polytope.
IMat polytope_canonical_form(const Polytope& p);

}  // namespace toric
