#pragma once

#include <optional>

#include "tetratwist/aggregate.hpp"

namespace tetra {

/// Build request for a helical chain of face-appended tetrahedra.
/// `underlying` is the handedness of the centroid helix (via the exit-face
/// rule); `rotation_sense` is the sense of the junction rotation about the
/// appending face's outward normal (modified helices only).
struct HelixSpec {
    int count = 1;
    Chirality underlying = Chirality::right;
    Chirality rotation_sense = Chirality::right;
    double edge_length = 1.0;
    bool modified = false;

    /// Replaces the junction rotation angle (modified helices); exploratory
    /// only, the periodicity claims hold for the default.
    std::optional<double> angle_override;

    void validate() const;
};

/// Canonical Boerdijk-Coxeter helix: each tetrahedron is the mirror of the
/// previous one through the exit face chosen by the chirality rule.
Aggregate build_bc_helix(const HelixSpec& spec);

/// Modified helix: after the mirror append, the new tetrahedron is rotated
/// about the axis normal to the shared face through its own centroid, so
/// every consecutive pair meets in a centered face junction.
Aggregate build_modified_helix(const HelixSpec& spec);

/// The one-step screw motion carrying tetrahedron k onto k+1 for every k
/// simultaneously (unique for a generic helix). Throws when no single
/// proper motion is consistent with all steps.
RigidMotion helix_step_motion(const Aggregate& helix, const ToleranceConfig& tol = {});

/// Smallest m <= max_m such that the m-step map is a pure translation
/// (vertex sets match after translating by the common centroid shift);
/// nullopt when the helix has no such period.
std::optional<int> detect_period(const Aggregate& helix, int max_m,
                                 const ToleranceConfig& tol = {});

/// Order of the rotational symmetry of all vertices projected along the
/// common step-screw axis.
int projected_symmetry_order(const Aggregate& helix, const ToleranceConfig& tol = {});

}  // namespace tetra
