#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tetratwist/geom.hpp"

namespace tetra {

enum class AggregateKind { edge_ring, icosahedral, bc_helix, modified_bc_helix };

enum class Chirality { right, left };

std::string to_string(AggregateKind k);
std::string to_string(Chirality c);
AggregateKind aggregate_kind_from_string(const std::string& s);
Chirality chirality_from_string(const std::string& s);

/// Construction parameters carried along with an aggregate. Only the fields
/// meaningful for the kind are set (n for edge rings, count/chiralities for
/// helices).
struct AggregateParams {
    double edge_length = 1.0;
    int n = 0;                        // edge ring size
    int count = 0;                    // helix length
    bool twisted = false;             // edge ring / icosahedral only
    Chirality underlying = Chirality::right;      // helix centroid handedness
    Chirality rotation_sense = Chirality::right;  // helix junction rotation sense
};

/// Ordered collection of regular tetrahedra plus construction metadata.
struct Aggregate {
    AggregateKind kind = AggregateKind::edge_ring;
    AggregateParams params;
    std::vector<Tetrahedron> tetrahedra;

    int size() const { return static_cast<int>(tetrahedra.size()); }

    /// Checks ids (unique, contiguous from 0) and per-tetrahedron regularity.
    void validate(const ToleranceConfig& tol = {}) const;
};

/// Options shared by the twist operations. The default sense is
/// right-handed about each tetrahedron's outward axis; `mirrored` selects
/// the opposite (mirror image) sense. `angle_override` replaces the
/// gap-closing angle for exploratory sweeps and does not produce the
/// coincident-face contacts the default angle does.
struct TwistOptions {
    bool mirrored = false;
    std::optional<double> angle_override;
};

/// n regular tetrahedra (3 <= n <= 5) sharing the central edge on the
/// z-axis centered at the origin, tetrahedron centers at azimuths 2*pi*k/n,
/// each tetrahedron mirror symmetric about its own azimuthal half plane.
Aggregate build_edge_ring(int n, double edge_length);

/// Rotates each ring tetrahedron by alpha_edge_ring(n) about the line from
/// the central-edge midpoint (the origin) through the midpoint of its own
/// peripheral edge. Adjacent tetrahedra end up sharing coplanar,
/// overlapping faces.
Aggregate twist_edge_ring(const Aggregate& ring, const TwistOptions& opts = {});

/// 20 regular tetrahedra with a common vertex at the origin; each exterior
/// face is centered on a face-center direction of a reference regular
/// icosahedron, perpendicular to it, and rotationally aligned with that
/// icosahedron face.
Aggregate build_icosahedral(double edge_length);

/// Rotates each tetrahedron by alpha_icosahedral() about its own
/// origin-to-exterior-face-center axis (right-handed about the outward
/// direction unless mirrored).
Aggregate twist_icosahedral(const Aggregate& agg, const TwistOptions& opts = {});

/// Exterior face index of tetrahedron k in the icosahedral build (the face
/// opposite the origin vertex).
int icosahedral_exterior_face();

/// The 30 adjacent pairs of the icosahedral build (tetrahedra whose
/// icosahedron faces share an edge), each as (lower id, higher id).
std::vector<std::pair<int, int>> icosahedral_adjacent_pairs(const Aggregate& agg);

}  // namespace tetra
