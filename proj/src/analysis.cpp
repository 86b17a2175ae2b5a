#include "tetratwist/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "tetratwist/golden.hpp"
#include "tetratwist/intersect.hpp"

namespace tetra {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kThird = 2.0 * std::numbers::pi / 3.0;

// Canonical sign for an unoriented direction: first component larger than
// the tie tolerance decides; flip so it is positive.
Vec3 canonical_direction(const Vec3& n) {
    constexpr double tie = 1e-7;
    if (n.x > tie) return n;
    if (n.x < -tie) return -n;
    if (n.y > tie) return n;
    if (n.y < -tie) return -n;
    return n.z >= 0 ? n : -n;
}

bool lex_less(const Vec3& a, const Vec3& b) {
    if (a.x != b.x) return a.x < b.x;
    if (a.y != b.y) return a.y < b.y;
    return a.z < b.z;
}

std::array<double, 2> project(const Vec3& p, const Vec3& e1, const Vec3& e2) {
    return {e1.dot(p), e2.dot(p)};
}

}  // namespace

PlaneClassPartition plane_classes(const Aggregate& agg, const ToleranceConfig& tol) {
    tol.validate();
    PlaneClassPartition part;
    for (const auto& t : agg.tetrahedra) {
        for (int fi = 0; fi < 4; ++fi) {
            const Vec3 n = face_plane(t, fi).normal;
            bool placed = false;
            for (auto& cls : part.classes) {
                if (n.cross(cls.representative).norm() < tol.parallel_tol) {
                    cls.members.push_back({t.id, fi});
                    placed = true;
                    break;
                }
            }
            if (!placed)
                part.classes.push_back({canonical_direction(n), {{t.id, fi}}});
        }
    }
    std::sort(part.classes.begin(), part.classes.end(),
              [](const auto& a, const auto& b) { return lex_less(a.representative, b.representative); });
    for (auto& cls : part.classes)
        std::sort(cls.members.begin(), cls.members.end(), [](const FaceRef& a, const FaceRef& b) {
            return a.tet_id != b.tet_id ? a.tet_id < b.tet_id : a.face_index < b.face_index;
        });
    return part;
}

namespace {

// Rotation in [0, 2*pi/3) about the plane normal taking the lower
// triangle's vertex directions (about its centroid) to the higher one's.
// Both triangles are equilateral, so a single vertex pair determines the
// angle modulo 2*pi/3.
double raw_rotation(const std::array<std::array<double, 2>, 3>& lo,
                    const std::array<std::array<double, 2>, 3>& hi) {
    auto centroid = [](const std::array<std::array<double, 2>, 3>& t) {
        return std::array<double, 2>{(t[0][0] + t[1][0] + t[2][0]) / 3.0,
                                     (t[0][1] + t[1][1] + t[2][1]) / 3.0};
    };
    const auto cl = centroid(lo);
    const auto ch = centroid(hi);
    const double al = std::atan2(lo[0][1] - cl[1], lo[0][0] - cl[0]);
    const double ah = std::atan2(hi[0][1] - ch[1], hi[0][0] - ch[0]);
    double raw = std::fmod(ah - al, kThird);
    if (raw < 0) raw += kThird;
    return raw;
}

}  // namespace

std::vector<FaceJunction> find_face_junctions(const Aggregate& agg, const ToleranceConfig& tol) {
    tol.validate();
    const double a = agg.params.edge_length;
    const double ptol = tol.point_tol * a;
    const double area_min = 1e-6 * a * a;

    struct FaceEntry {
        FaceRef ref;
        Plane plane;
        std::array<Vec3, 3> tri;
    };
    std::vector<FaceEntry> faces;
    faces.reserve(agg.tetrahedra.size() * 4);
    for (const auto& t : agg.tetrahedra)
        for (int fi = 0; fi < 4; ++fi)
            faces.push_back({{t.id, fi}, face_plane(t, fi), t.face_vertices(fi)});

    std::vector<FaceJunction> out;
    for (size_t i = 0; i < faces.size(); ++i) {
        for (size_t j = i + 1; j < faces.size(); ++j) {
            const auto& fa = faces[i];
            const auto& fb = faces[j];
            if (fa.ref.tet_id == fb.ref.tet_id) continue;
            if (fa.plane.normal.cross(fb.plane.normal).norm() > tol.parallel_tol) continue;
            if (fa.plane.normal.dot(fb.plane.normal) > 0) continue;  // need antiparallel outward normals

            const auto& lo = fa.ref.tet_id < fb.ref.tet_id ? fa : fb;
            const auto& hi = fa.ref.tet_id < fb.ref.tet_id ? fb : fa;

            double resid = 0;
            for (const auto& p : lo.tri) resid = std::max(resid, std::abs(lo.plane.signed_distance(p)));
            for (const auto& p : hi.tri) resid = std::max(resid, std::abs(lo.plane.signed_distance(p)));
            if (resid > ptol) continue;

            Vec3 e1, e2;
            plane_basis(lo.plane.normal, e1, e2);
            std::array<std::array<double, 2>, 3> pl, ph;
            for (int m = 0; m < 3; ++m) {
                pl[m] = project(lo.tri[m], e1, e2);
                ph[m] = project(hi.tri[m], e1, e2);
            }
            if (triangle_overlap_area(pl, ph) < area_min) continue;

            FaceJunction junc;
            junc.lower = lo.ref;
            junc.higher = hi.ref;
            junc.plane = lo.plane;
            junc.tri_lower = lo.tri;
            junc.tri_higher = hi.tri;
            junc.coplanarity_residual = resid;
            junc.edge_length = a;
            junc.angle_raw = raw_rotation(pl, ph);
            junc.angle_min = std::min(junc.angle_raw, kThird - junc.angle_raw);

            const Vec3 cl = (lo.tri[0] + lo.tri[1] + lo.tri[2]) / 3.0;
            const Vec3 ch = (hi.tri[0] + hi.tri[1] + hi.tri[2]) / 3.0;
            Vec3 off = ch - cl;
            off = off - junc.plane.normal * junc.plane.normal.dot(off);  // strictly in-plane
            junc.offset = off;
            junc.offset_in_delta = off.norm() / delta_unit(a);
            out.push_back(junc);
        }
    }
    std::sort(out.begin(), out.end(), [](const FaceJunction& x, const FaceJunction& y) {
        if (x.lower.tet_id != y.lower.tet_id) return x.lower.tet_id < y.lower.tet_id;
        if (x.lower.face_index != y.lower.face_index) return x.lower.face_index < y.lower.face_index;
        if (x.higher.tet_id != y.higher.tet_id) return x.higher.tet_id < y.higher.tet_id;
        return x.higher.face_index < y.higher.face_index;
    });
    return out;
}

JunctionSignature junction_signature(const FaceJunction& j) {
    Vec3 e1, e2;
    plane_basis(j.plane.normal, e1, e2);
    std::array<std::array<double, 2>, 3> pl, ph;
    for (int m = 0; m < 3; ++m) {
        pl[m] = project(j.tri_lower[m], e1, e2);
        ph[m] = project(j.tri_higher[m], e1, e2);
    }
    if (triangle_overlap_area(pl, ph) <= 0)
        throw std::domain_error("junction_signature: triangles do not overlap");
    return {j.angle_raw, j.angle_min, j.offset_in_delta};
}

double delta_unit(double edge_length) {
    if (!(edge_length > 0)) throw std::domain_error("delta_unit: edge length must be positive");
    const double p = golden::phi();
    return edge_length / (2.0 * p * p * std::sqrt(6.0));
}

JunctionProjection junction_projection(const FaceJunction& j) {
    const Vec3 cl = (j.tri_lower[0] + j.tri_lower[1] + j.tri_lower[2]) / 3.0;

    // +x along the offset when it is resolvable, else along the lower
    // triangle's first vertex direction.
    Vec3 xdir;
    if (j.offset.norm() > 1e-9 * j.edge_length)
        xdir = j.offset.normalized();
    else
        xdir = (j.tri_lower[0] - cl).normalized();
    const Vec3 ydir = j.plane.normal.cross(xdir);

    JunctionProjection prj;
    for (int m = 0; m < 3; ++m) {
        prj.lower[m] = {xdir.dot(j.tri_lower[m] - cl), ydir.dot(j.tri_lower[m] - cl)};
        prj.higher[m] = {xdir.dot(j.tri_higher[m] - cl), ydir.dot(j.tri_higher[m] - cl)};
    }
    const Vec3 ch = (j.tri_higher[0] + j.tri_higher[1] + j.tri_higher[2]) / 3.0;
    prj.higher_centroid = {xdir.dot(ch - cl), ydir.dot(ch - cl)};
    return prj;
}

namespace {

// Offset direction relative to the lower triangle's vertex directions,
// mod 2*pi/3; well defined only for a nonzero offset. Junctions whose raw
// rotation is the mirror representative (2*pi/3 - beta) are first flipped
// to the beta view so phases of different junction kinds are comparable.
double offset_phase_beta_view(const FaceJunction& j, double beta) {
    Vec3 e1, e2;
    plane_basis(j.plane.normal, e1, e2);
    const Vec3 cl = (j.tri_lower[0] + j.tri_lower[1] + j.tri_lower[2]) / 3.0;
    const auto v = project(j.tri_lower[0] - cl, e1, e2);
    const auto o = project(j.offset, e1, e2);
    double phase = std::atan2(o[1], o[0]) - std::atan2(v[1], v[0]);
    const bool mirror_view = std::abs(j.angle_raw - beta) > std::abs((kThird - j.angle_raw) - beta);
    if (mirror_view) phase = -phase;
    phase = std::fmod(phase, kThird);
    if (phase < 0) phase += kThird;
    return phase;
}

double phase_gap(double x, double y) {
    double d = std::abs(x - y);
    return std::min(d, kThird - d);
}

}  // namespace

Fig8Report verify_fig8_family(const FaceJunction& helix_j, const FaceJunction& icosa_j,
                              const FaceJunction& ring5_j, const FaceJunction& ring3_j,
                              double offset_tol, double angle_tol) {
    const double beta = golden::beta().radians;
    const double phi = golden::phi();
    Fig8Report rep;

    const std::array<const FaceJunction*, 4> js{&helix_j, &icosa_j, &ring5_j, &ring3_j};
    const std::array<const char*, 4> names{"helix", "icosahedral", "ring5", "ring3"};
    const std::array<double, 4> expect_mag{0.0, 2.0, 1.0, 3.0 * phi + 1.0};

    for (int i = 0; i < 4; ++i) {
        const double am = js[i]->angle_min;
        rep.checks.push_back({std::string(names[i]) + ".angle_min",
                              std::abs(am - beta) < angle_tol, am, beta, angle_tol});
        const double mag = js[i]->offset_in_delta;
        rep.checks.push_back({std::string(names[i]) + ".offset_magnitude",
                              std::abs(mag - expect_mag[i]) < offset_tol, mag, expect_mag[i],
                              offset_tol});
    }

    // Common axis: the 5-ring offset defines +x; phases equal mod 2*pi/3
    // mean the same ray (positive), phases pi/3 apart mean the opposite ray.
    const double phase5 = offset_phase_beta_view(ring5_j, beta);
    const double phase3 = offset_phase_beta_view(ring3_j, beta);
    const double phase20 = offset_phase_beta_view(icosa_j, beta);
    const double phase_tol = 1e-6;

    const double gap3 = phase_gap(phase3, phase5);
    const double gap20 = phase_gap(phase20, std::fmod(phase5 + kThird / 2.0, kThird));
    rep.checks.push_back({"ring3.offset_collinear_with_ring5", gap3 < phase_tol, gap3, 0.0, phase_tol});
    rep.checks.push_back(
        {"icosahedral.offset_antiparallel_to_ring5", gap20 < phase_tol, gap20, 0.0, phase_tol});

    rep.helix_offset = 0.0;
    rep.ring5_offset = ring5_j.offset_in_delta;
    rep.icosa_offset = -icosa_j.offset_in_delta;
    rep.ring3_offset = ring3_j.offset_in_delta;

    rep.pass = std::all_of(rep.checks.begin(), rep.checks.end(),
                           [](const Fig8Check& c) { return c.pass; });
    return rep;
}

}  // namespace tetra
