#pragma once

#include <string>
#include <vector>

#include "toric/linalg.hpp"

namespace toric {

// Maximal cone given by indices into the fan's ray list, sorted ascending.
struct Cone {
    std::vector<size_t> rays;
};

struct Fan {
    size_t rank = 0;
    std::vector<IVec> rays;
    std::vector<Cone> max_cones;
};

// Exact H-description of a single rational polyhedral cone.
struct ConeGeometry {
    size_t ambient = 0;
    size_t dim = 0;
    std::vector<IVec> generators;
    // x lies in the cone iff equation . x == 0 for every span equation and
    // normal . x >= 0 for every facet normal.
    std::vector<IVec> span_equations;
    std::vector<IVec> facet_normals;
    bool pointed = false;
};

ConeGeometry cone_geometry(size_t ambient, const std::vector<IVec>& generators);
bool cone_contains(const ConeGeometry& g, const QVec& x);
bool cone_contains(const ConeGeometry& g, const IVec& x);

struct FanValidation {
    bool ok = true;
    std::vector<std::string> problems;
};

// Structural and geometric fan axioms: primitive distinct nonzero rays,
// well-formed cone index sets, strongly convex cones, no cone contained in
// another, pairwise intersections meeting in a common face, no unused rays.
FanValidation validate_fan(const Fan& f);

struct FanClassification {
    bool simplicial = false;
    bool smooth = false;
    bool complete = false;
};

FanClassification classify_fan(const Fan& f);

// n x s matrix whose columns form the canonical basis of the lattice of
// integer linear relations among the rays (n = number of rays).
IMat charge_matrix(const Fan& f);

struct ClassGroupReport {
    AbelianInvariants group;
    bool rays_span = true;
};

ClassGroupReport divisor_class_group(const Fan& f);

// Coefficient vector (<m, v_ray>) of the principal divisor of the character m.
IVec principal_divisor(const Fan& f, const IVec& m);

// Minimal subsets of ray indices that do not span a cone of the fan.
std::vector<std::vector<size_t>> discriminant_components(const Fan& f);

bool is_subdivision(const Fan& fine, const Fan& coarse);

// Invariants of N / (lattice generated by the rays of the given maximal
// cone); the cone must be simplicial and full-dimensional.
AbelianInvariants local_stabilizer(const Fan& f, size_t cone_index);

// Refines the lattice N to N' = N + Z g_1 + ... + Z g_k and rewrites the fan
// in coordinates of N'.
Fan refine_lattice(const Fan& f, const std::vector<QVec>& generators);

// Rays to insert, in order, to resolve a two-dimensional cone; empty when the
// cone is already smooth.
std::vector<IVec> resolve_cone_2d(const Fan& f, size_t cone_index);

}  // namespace toric
