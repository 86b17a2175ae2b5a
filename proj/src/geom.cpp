#include "tetratwist/geom.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace tetra {

void ToleranceConfig::validate() const {
    if (point_tol <= 0 || angle_tol <= 0 || parallel_tol <= 0)
        throw std::domain_error("ToleranceConfig: all tolerances must be strictly positive");
}

RigidMotion RigidMotion::then(const RigidMotion& second) const {
    RigidMotion r;
    r.rotation = second.rotation * rotation;
    r.translation = second.rotation * translation + second.translation;
    return r;
}

RigidMotion RigidMotion::inverse() const {
    RigidMotion r;
    r.rotation = rotation.transposed();
    r.translation = -(r.rotation * translation);
    return r;
}

double RigidMotion::rotation_defect() const {
    const Mat3 g = rotation.transposed() * rotation;
    double worst = std::abs(rotation.det() - 1.0);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            worst = std::max(worst, std::abs(g(i, j) - (i == j ? 1.0 : 0.0)));
    return worst;
}

RigidMotion rotation_about_line(const Vec3& point_on_axis, const Vec3& axis, double angle) {
    const double n = axis.norm();
    if (n < 1e-12) throw std::domain_error("rotation_about_line: axis must have nonzero norm");
    const Vec3 u = axis / n;

    // Rodrigues form.
    const double c = std::cos(angle);
    const double s = std::sin(angle);
    Mat3 R;
    R(0, 0) = c + u.x * u.x * (1 - c);
    R(0, 1) = u.x * u.y * (1 - c) - u.z * s;
    R(0, 2) = u.x * u.z * (1 - c) + u.y * s;
    R(1, 0) = u.y * u.x * (1 - c) + u.z * s;
    R(1, 1) = c + u.y * u.y * (1 - c);
    R(1, 2) = u.y * u.z * (1 - c) - u.x * s;
    R(2, 0) = u.z * u.x * (1 - c) - u.y * s;
    R(2, 1) = u.z * u.y * (1 - c) + u.x * s;
    R(2, 2) = c + u.z * u.z * (1 - c);

    RigidMotion m;
    m.rotation = R;
    m.translation = point_on_axis - R * point_on_axis;
    return m;
}

RigidMotion translation_motion(const Vec3& t) {
    RigidMotion m;
    m.translation = t;
    return m;
}

double Tetrahedron::signed_volume() const {
    const Vec3 a = vertices[1] - vertices[0];
    const Vec3 b = vertices[2] - vertices[0];
    const Vec3 c = vertices[3] - vertices[0];
    return a.dot(b.cross(c)) / 6.0;
}

std::array<int, 3> Tetrahedron::face_labels(int face_index) {
    switch (face_index) {
        case 0: return {1, 2, 3};
        case 1: return {0, 2, 3};
        case 2: return {0, 1, 3};
        case 3: return {0, 1, 2};
    }
    throw std::domain_error("face_index must be in 0..3, got " + std::to_string(face_index));
}

std::array<Vec3, 3> Tetrahedron::face_vertices(int face_index) const {
    const auto labels = face_labels(face_index);
    return {vertices[labels[0]], vertices[labels[1]], vertices[labels[2]]};
}

void Tetrahedron::validate(double point_tol) const {
    const double a = edge_length;
    if (!(a > 0)) throw std::domain_error("Tetrahedron: edge_length must be positive");
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j) {
            const double d = distance(vertices[i], vertices[j]);
            if (std::abs(d - a) > point_tol * a)
                throw std::runtime_error("Tetrahedron " + std::to_string(id) +
                                         ": edge (" + std::to_string(i) + "," +
                                         std::to_string(j) + ") has length " +
                                         std::to_string(d) + ", expected " + std::to_string(a));
        }
    const double v_expected = a * a * a / (6.0 * std::sqrt(2.0));
    if (std::abs(signed_volume() - v_expected) > point_tol * a * a * a)
        throw std::runtime_error("Tetrahedron " + std::to_string(id) +
                                 ": signed volume " + std::to_string(signed_volume()) +
                                 " is not the regular positive-orientation value " +
                                 std::to_string(v_expected));
}

Tetrahedron Tetrahedron::transformed(const RigidMotion& m) const {
    Tetrahedron t = *this;
    for (auto& v : t.vertices) v = m.apply(v);
    return t;
}

Plane face_plane(const Tetrahedron& t, int face_index) {
    const auto f = t.face_vertices(face_index);
    const Vec3 cr = (f[1] - f[0]).cross(f[2] - f[0]);
    const double n = cr.norm();
    if (n < 1e-12 * t.edge_length * t.edge_length)
        throw std::runtime_error("face_plane: degenerate face on tetrahedron " +
                                 std::to_string(t.id));
    Vec3 normal = cr / n;
    const Vec3 face_centroid = (f[0] + f[1] + f[2]) / 3.0;
    if (normal.dot(t.vertices[face_index] - face_centroid) > 0) normal = -normal;
    return {normal, normal.dot(f[0])};
}

Tetrahedron append_mirror(const Tetrahedron& t, int face_index, int new_id) {
    const Plane p = face_plane(t, face_index);
    Tetrahedron out = t;
    out.id = new_id;
    const Vec3 apex = t.vertices[face_index];
    out.vertices[face_index] = apex - 2.0 * p.signed_distance(apex) * p.normal;
    // The reflection flips orientation; swap the two lowest shared labels to
    // restore it. Geometry is label independent, so any fixed transposition
    // works; this one is the convention.
    const auto shared = Tetrahedron::face_labels(face_index);
    std::swap(out.vertices[shared[0]], out.vertices[shared[1]]);
    return out;
}

RigidMotion ScrewMotion::recompose() const {
    if (pure_translation) return translation_motion(axis_dir * pitch);
    RigidMotion rot = rotation_about_line(axis_point, axis_dir, angle);
    return rot.then(translation_motion(axis_dir * pitch));
}

ScrewMotion screw_decompose(const RigidMotion& m, double angle_tol) {
    const Mat3& R = m.rotation;
    ScrewMotion s;

    // sin-vector of the rotation: w = (R32-R23, R13-R31, R21-R12)/2, |w| = sin(angle)
    const Vec3 w{(R(2, 1) - R(1, 2)) / 2, (R(0, 2) - R(2, 0)) / 2, (R(1, 0) - R(0, 1)) / 2};
    const double sin_a = w.norm();
    const double cos_a = (R.trace() - 1.0) / 2.0;
    const double angle = std::atan2(sin_a, cos_a);

    if (angle < angle_tol) {
        s.pure_translation = true;
        const double tn = m.translation.norm();
        s.axis_dir = tn > 0 ? m.translation / tn : Vec3{0, 0, 1};
        s.pitch = tn;
        return s;
    }

    Vec3 axis;
    if (sin_a > 1e-6) {
        axis = w / sin_a;
    } else {
        // angle == pi: axis from the symmetric part, sign canonicalized.
        int best = 0;
        double bestd = -1;
        for (int i = 0; i < 3; ++i) {
            const double d = (R(i, i) + 1.0) / 2.0;
            if (d > bestd) { bestd = d; best = i; }
        }
        Vec3 a{0, 0, 0};
        const double ai = std::sqrt(std::max(0.0, bestd));
        if (best == 0) a = {ai, (R(0, 1) + R(1, 0)) / (4 * ai), (R(0, 2) + R(2, 0)) / (4 * ai)};
        if (best == 1) a = {(R(0, 1) + R(1, 0)) / (4 * ai), ai, (R(1, 2) + R(2, 1)) / (4 * ai)};
        if (best == 2) a = {(R(0, 2) + R(2, 0)) / (4 * ai), (R(1, 2) + R(2, 1)) / (4 * ai), ai};
        axis = a.normalized();
        if (axis.x < 0 || (axis.x == 0 && (axis.y < 0 || (axis.y == 0 && axis.z < 0))))
            axis = -axis;
    }

    s.axis_dir = axis;
    s.angle = angle;
    s.pitch = m.translation.dot(axis);

    // Solve (I - R) p = t_perp for the axis point in the plane orthogonal to
    // the axis; the 2x2 system is well conditioned for angle >= angle_tol.
    const Vec3 t_perp = m.translation - axis * s.pitch;
    Vec3 e1, e2;
    plane_basis(axis, e1, e2);
    const Vec3 c1 = e1 - R * e1;
    const Vec3 c2 = e2 - R * e2;
    const double a11 = e1.dot(c1), a12 = e1.dot(c2), a21 = e2.dot(c1), a22 = e2.dot(c2);
    const double b1 = e1.dot(t_perp), b2 = e2.dot(t_perp);
    const double det = a11 * a22 - a12 * a21;
    const double x = (b1 * a22 - b2 * a12) / det;
    const double y = (a11 * b2 - a21 * b1) / det;
    s.axis_point = e1 * x + e2 * y;
    return s;
}

RigidMotion motion_from_correspondence(const std::array<Vec3, 4>& from,
                                       const std::array<Vec3, 4>& to,
                                       double tol) {
    const Vec3 cf = (from[0] + from[1] + from[2] + from[3]) * 0.25;
    const Vec3 ct = (to[0] + to[1] + to[2] + to[3]) * 0.25;

    // R maps the (full-rank) edge frame of `from` to that of `to`.
    Mat3 A, B;
    for (int j = 0; j < 3; ++j) {
        A.set_col(j, from[j + 1] - cf);
        B.set_col(j, to[j + 1] - ct);
    }
    // invert A
    const double det = A.det();
    if (std::abs(det) < 1e-15) throw std::runtime_error("motion_from_correspondence: degenerate points");
    Mat3 Ainv;
    Ainv(0, 0) = (A(1, 1) * A(2, 2) - A(1, 2) * A(2, 1)) / det;
    Ainv(0, 1) = (A(0, 2) * A(2, 1) - A(0, 1) * A(2, 2)) / det;
    Ainv(0, 2) = (A(0, 1) * A(1, 2) - A(0, 2) * A(1, 1)) / det;
    Ainv(1, 0) = (A(1, 2) * A(2, 0) - A(1, 0) * A(2, 2)) / det;
    Ainv(1, 1) = (A(0, 0) * A(2, 2) - A(0, 2) * A(2, 0)) / det;
    Ainv(1, 2) = (A(0, 2) * A(1, 0) - A(0, 0) * A(1, 2)) / det;
    Ainv(2, 0) = (A(1, 0) * A(2, 1) - A(1, 1) * A(2, 0)) / det;
    Ainv(2, 1) = (A(0, 1) * A(2, 0) - A(0, 0) * A(2, 1)) / det;
    Ainv(2, 2) = (A(0, 0) * A(1, 1) - A(0, 1) * A(1, 0)) / det;
    Mat3 R = B * Ainv;

    // Gram-Schmidt polish: the correspondence is rigid up to roundoff, so R
    // is within ~1e-14 of orthogonal; make it exactly orthonormal.
    Vec3 c0 = R.col(0).normalized();
    Vec3 c1 = (R.col(1) - c0 * c0.dot(R.col(1))).normalized();
    Vec3 c2 = c0.cross(c1);
    R.set_col(0, c0);
    R.set_col(1, c1);
    R.set_col(2, c2);

    RigidMotion m;
    m.rotation = R;
    m.translation = ct - R * cf;

    if (m.rotation.det() < 0)
        throw std::runtime_error("motion_from_correspondence: correspondence is orientation reversing");
    for (int i = 0; i < 4; ++i)
        if (distance(m.apply(from[i]), to[i]) > tol)
            throw std::runtime_error("motion_from_correspondence: correspondence is not rigid");
    return m;
}

Tetrahedron canonical_tetrahedron(double edge_length, int id) {
    if (!(edge_length > 0)) throw std::domain_error("edge_length must be positive");
    const double a = edge_length;
    const double circum = a * std::sqrt(6.0) / 4.0;
    const double inrad = a / (2.0 * std::sqrt(6.0));
    const double rho = a / std::sqrt(3.0);
    const double c = std::cos(2.0 * std::numbers::pi / 3.0);
    const double s = std::sin(2.0 * std::numbers::pi / 3.0);

    Tetrahedron t;
    t.id = id;
    t.edge_length = a;
    t.vertices[0] = {0, 0, circum};
    t.vertices[1] = {rho, 0, -inrad};
    t.vertices[2] = {rho * c, -rho * s, -inrad};
    t.vertices[3] = {rho * c, rho * s, -inrad};
    return t;
}

}  // namespace tetra
