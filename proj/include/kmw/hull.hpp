// Convex hull of the weights of a parabolic Verma module as the Minkowski
// sum of conv(W_J lambda) and the cone over W_J-translates of the simple
// roots outside J. All geometry lives in root-lattice offset coordinates.
#pragma once

#include "kmw/weight_sets.hpp"

namespace kmw {

struct HullPresentation {
    QVec c;
    ZVecSet vertices;  // offsets of W_J lambda
    ZVecSet rays;      // directions w(alpha_i), i not in J, pointing down from lambda
    bool truncated = false;
};

/// Untruncated when W_J is finite; otherwise vertices and rays are cut off
/// at height `cutoff` and the presentation is flagged truncated.
HullPresentation ray_decomposition(const GeneralizedCartanMatrix& gcm, const QVec& c, const IndexSet& J,
                                   std::int64_t cutoff);

/// Exact membership of lambda - m in conv(vertices) + cone(rays).
/// Throws TruncationUncertain for truncated presentations.
bool hull_contains(const HullPresentation& h, const QVec& m);
bool hull_contains(const HullPresentation& h, const ZVec& m);

/// Lattice points of the hull below lambda, height <= cutoff.
WeightSet wt_via_hull(const GeneralizedCartanMatrix& gcm, const QVec& c, const IndexSet& J, std::int64_t cutoff);

struct HullStabilizer {
    IndexSet simple_generators;    // simple reflections preserving the hull
    std::vector<WeylWord> elements;  // full setwise stabilizer in W
    bool equals_parabolic = false;   // stabilizer == W_{simple_generators}
};

/// Setwise stabilizer in the (finite) Weyl group of the polyhedron
/// presented by `h`, decided by exact containment in both directions.
HullStabilizer hull_stabilizer(const GeneralizedCartanMatrix& gcm, const HullPresentation& h);

}  // namespace kmw
