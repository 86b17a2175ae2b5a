#pragma once

#include <array>
#include <string>
#include <vector>

#include "tetratwist/aggregate.hpp"

namespace tetra {

/// Faces grouped by parallelism of their plane normals; antiparallel
/// normals belong to the same class (a plane's orientation is not part of
/// the class). Classes are ordered lexicographically by canonicalized
/// representative.
struct PlaneClassPartition {
    struct Class {
        Vec3 representative;          // unit normal, canonical sign
        std::vector<FaceRef> members; // sorted by (tet_id, face_index)
    };
    std::vector<Class> classes;

    int count() const { return static_cast<int>(classes.size()); }
};

PlaneClassPartition plane_classes(const Aggregate& agg, const ToleranceConfig& tol = {});

/// A detected pair of coincident faces: coplanar, outward normals
/// antiparallel, projected triangles overlapping with positive area.
///
/// angle_raw is the counterclockwise rotation in [0, 2*pi/3) about `plane`'s
/// normal (oriented from the lower tet id to the higher) taking the
/// lower-id triangle's vertex directions to the higher-id one's;
/// angle_min is its minimal representative, min(raw, 2*pi/3 - raw).
/// The in-plane offset is the centroid shift of the anchored
/// rotate-about-lower-centroid-then-translate decomposition.
struct FaceJunction {
    FaceRef lower;                   // tet_id < higher.tet_id
    FaceRef higher;
    Plane plane;                     // normal points from lower toward higher
    std::array<Vec3, 3> tri_lower;   // face vertices, label order
    std::array<Vec3, 3> tri_higher;
    double angle_raw = 0;
    double angle_min = 0;
    Vec3 offset;                     // in-plane centroid shift (3D vector)
    double offset_in_delta = 0;      // |offset| / delta(edge_length)
    double coplanarity_residual = 0; // worst vertex distance to the plane
    double edge_length = 1.0;
};

/// All face junctions of the aggregate, ordered by (lower tet, lower face,
/// higher tet, higher face). Exhaustive over face pairs.
std::vector<FaceJunction> find_face_junctions(const Aggregate& agg,
                                              const ToleranceConfig& tol = {});

struct JunctionSignature {
    double angle_raw;
    double angle_min;
    double offset_in_delta;
};

JunctionSignature junction_signature(const FaceJunction& j);

/// The junction-projection displacement unit: a / (2 * phi^2 * sqrt 6).
double delta_unit(double edge_length);

/// Both triangles of a junction in an orthonormal in-plane frame with
/// origin at the lower triangle's centroid and +x along the offset
/// direction (or along the lower triangle's first vertex direction when the
/// offset vanishes).
struct JunctionProjection {
    std::array<std::array<double, 2>, 3> lower;
    std::array<std::array<double, 2>, 3> higher;
    std::array<double, 2> higher_centroid;  // lower centroid is the origin
};

JunctionProjection junction_projection(const FaceJunction& j);

/// Cross-junction comparison of the four junction kinds. Offsets are
/// expressed in delta units along a common axis fixed by the 5-ring
/// junction; the phase of each offset relative to its triangle orientation
/// decides the sign (same ray mod 2*pi/3 -> positive, opposite -> negative).
struct Fig8Check {
    std::string name;
    bool pass;
    double measured;
    double expected;
    double tolerance;
};

struct Fig8Report {
    bool pass = false;
    std::vector<Fig8Check> checks;
    // signed offsets in delta units: helix, icosahedral, ring5, ring3
    double helix_offset = 0, icosa_offset = 0, ring5_offset = 0, ring3_offset = 0;
};

Fig8Report verify_fig8_family(const FaceJunction& helix_j, const FaceJunction& icosa_j,
                              const FaceJunction& ring5_j, const FaceJunction& ring3_j,
                              double offset_tol = 1e-6, double angle_tol = 1e-9);

}  // namespace tetra
