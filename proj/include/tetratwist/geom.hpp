#pragma once

#include <array>
#include <optional>

#include "tetratwist/vec.hpp"

namespace tetra {

/// Tolerances used by geometric predicates. Point and volume tolerances are
/// expressed in units of the aggregate edge length a.
struct ToleranceConfig {
    double point_tol = 1e-9;     // coincidence of points / plane residuals, units of a
    double angle_tol = 1e-9;     // radians
    double parallel_tol = 1e-9;  // norm of cross product of unit normals

    void validate() const;
};

/// Oriented plane: x is on the plane iff dot(normal, x) == offset.
struct Plane {
    Vec3 normal;     // unit
    double offset = 0.0;

    double signed_distance(const Vec3& p) const { return normal.dot(p) - offset; }
};

/// Proper rigid motion x -> R x + t.
struct RigidMotion {
    Mat3 rotation = Mat3::identity();
    Vec3 translation;

    Vec3 apply(const Vec3& p) const { return rotation * p + translation; }
    RigidMotion then(const RigidMotion& second) const;   // second ∘ this
    RigidMotion inverse() const;

    static RigidMotion identity() { return {}; }

    /// Largest deviation from a proper rotation (orthogonality residual and
    /// determinant distance from +1).
    double rotation_defect() const;
};

/// Rigid motion fixing the line {point + s*axis} and rotating right-handedly
/// by `angle` about the unit direction `axis`.
RigidMotion rotation_about_line(const Vec3& point_on_axis, const Vec3& axis, double angle);

RigidMotion translation_motion(const Vec3& t);

/// Regular tetrahedron with labeled vertices. Face i is the face opposite
/// vertex i.
struct Tetrahedron {
    int id = 0;
    std::array<Vec3, 4> vertices;
    double edge_length = 1.0;

    Vec3 centroid() const {
        return (vertices[0] + vertices[1] + vertices[2] + vertices[3]) * 0.25;
    }
    double signed_volume() const;

    /// The three vertex labels of face i, in increasing label order.
    static std::array<int, 3> face_labels(int face_index);
    std::array<Vec3, 3> face_vertices(int face_index) const;

    /// Throws on broken regularity (unequal edges) or negative orientation.
    void validate(double point_tol = 1e-9) const;

    Tetrahedron transformed(const RigidMotion& m) const;
};

/// Face handle within an aggregate.
struct FaceRef {
    int tet_id = 0;
    int face_index = 0;

    friend bool operator==(const FaceRef&, const FaceRef&) = default;
};

/// Plane through face f of t, normal oriented outward (away from the
/// opposite vertex).
Plane face_plane(const Tetrahedron& t, int face_index);

/// Regular tetrahedron sharing face f with t on the opposite side: the apex
/// is the reflection of vertex f through the face plane. The apex takes
/// label f; the shared vertices carry their labels with one deterministic
/// swap so the result keeps positive orientation.
Tetrahedron append_mirror(const Tetrahedron& t, int face_index, int new_id);

/// Screw form of a rigid motion: rotation by `angle` about the axis through
/// `axis_point` with direction `axis_dir`, then translation `pitch` along
/// the axis. A motion whose rotation part is the identity is reported as a
/// pure translation instead.
struct ScrewMotion {
    bool pure_translation = false;
    Vec3 axis_point;   // point on axis closest to the origin
    Vec3 axis_dir;     // unit
    double angle = 0;  // in (0, pi]; 0 for pure translations
    double pitch = 0;  // translation along the axis per application

    RigidMotion recompose() const;
};

ScrewMotion screw_decompose(const RigidMotion& m, double angle_tol = 1e-9);

/// Proper rigid motion mapping the ordered point set `from` onto `to`
/// exactly (the correspondence must already be rigid and orientation
/// preserving; residual above tol throws).
RigidMotion motion_from_correspondence(const std::array<Vec3, 4>& from,
                                       const std::array<Vec3, 4>& to,
                                       double tol = 1e-7);

/// Canonical reference tetrahedron: edge length a, centroid at the origin,
/// vertex 0 on +z, face 0 parallel to the xy-plane at the bottom.
Tetrahedron canonical_tetrahedron(double edge_length, int id = 0);

}  // namespace tetra
