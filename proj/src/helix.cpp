#include "tetratwist/helix.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "tetratwist/golden.hpp"

namespace tetra {

namespace {

// Ordered exit-face triple: the three shared vertices in cyclic order as
// seen from outside the current tetrahedron through that face.
struct ExitState {
    std::array<Vec3, 3> triple;
};

int face_index_spanned_by(const Tetrahedron& t, const std::array<Vec3, 3>& pts) {
    const double tol = 1e-7 * t.edge_length;
    for (int fi = 0; fi < 4; ++fi) {
        const auto fv = t.face_vertices(fi);
        bool all = true;
        for (const auto& p : pts) {
            const bool hit = distance(p, fv[0]) < tol || distance(p, fv[1]) < tol ||
                             distance(p, fv[2]) < tol;
            if (!hit) { all = false; break; }
        }
        if (all) return fi;
    }
    throw std::runtime_error("helix builder: exit triple does not span a face");
}

Aggregate build_helix(const HelixSpec& spec) {
    spec.validate();
    Aggregate agg;
    agg.kind = spec.modified ? AggregateKind::modified_bc_helix : AggregateKind::bc_helix;
    agg.params.edge_length = spec.edge_length;
    agg.params.count = spec.count;
    agg.params.underlying = spec.underlying;
    agg.params.rotation_sense = spec.rotation_sense;

    Tetrahedron cur = canonical_tetrahedron(spec.edge_length, 0);
    agg.tetrahedra.push_back(cur);

    // First exit face is face 0; its label order (v1, v2, v3) is
    // counterclockwise seen from outside and fixes the cycle.
    ExitState st{{cur.vertices[1], cur.vertices[2], cur.vertices[3]}};

    const double turn = spec.angle_override.value_or(golden::beta().radians);
    const double sense = spec.rotation_sense == Chirality::right ? 1.0 : -1.0;

    for (int k = 1; k < spec.count; ++k) {
        const int fi = face_index_spanned_by(cur, st.triple);
        const Plane exit_plane = face_plane(cur, fi);

        Tetrahedron next = append_mirror(cur, fi, k);
        Vec3 apex = next.vertices[fi];

        if (spec.modified) {
            const RigidMotion rot =
                rotation_about_line(next.centroid(), exit_plane.normal, sense * turn);
            next = next.transformed(rot);
            apex = rot.apply(apex);
            for (auto& p : st.triple) p = rot.apply(p);
        }

        // Advance the shared triple one step cyclically (right) or
        // anticyclically (left); the dropped vertex is replaced by the new
        // apex so the exit faces wind around the helix axis.
        if (spec.underlying == Chirality::right)
            st.triple = {st.triple[1], st.triple[2], apex};
        else
            st.triple = {apex, st.triple[0], st.triple[1]};

        agg.tetrahedra.push_back(next);
        cur = next;
    }
    return agg;
}

bool maps_onto(const RigidMotion& m, const Tetrahedron& from, const Tetrahedron& to, double tol) {
    for (const auto& v : from.vertices) {
        const Vec3 img = m.apply(v);
        double best = tol * 2;
        for (const auto& w : to.vertices) best = std::min(best, distance(img, w));
        if (best > tol) return false;
    }
    return true;
}

}  // namespace

void HelixSpec::validate() const {
    if (count < 1) throw std::domain_error("HelixSpec: count must be >= 1");
    if (!(edge_length > 0)) throw std::domain_error("HelixSpec: edge_length must be positive");
}

Aggregate build_bc_helix(const HelixSpec& spec) {
    if (spec.modified)
        throw std::domain_error("build_bc_helix: spec.modified must be false");
    return build_helix(spec);
}

Aggregate build_modified_helix(const HelixSpec& spec) {
    if (!spec.modified)
        throw std::domain_error("build_modified_helix: spec.modified must be true");
    return build_helix(spec);
}

RigidMotion helix_step_motion(const Aggregate& helix, const ToleranceConfig& tol) {
    if (helix.kind != AggregateKind::bc_helix && helix.kind != AggregateKind::modified_bc_helix)
        throw std::domain_error("helix_step_motion: aggregate is not a helix");
    if (helix.size() < 3)
        throw std::runtime_error("helix_step_motion: need at least 3 tetrahedra to pin the step motion");

    const double ptol = tol.point_tol * helix.params.edge_length;
    const auto& t0 = helix.tetrahedra[0];
    const auto& t1 = helix.tetrahedra[1];

    // Candidate motions: proper rigid maps of t0's vertex set onto t1's.
    std::vector<RigidMotion> survivors;
    std::array<int, 4> perm{0, 1, 2, 3};
    do {
        // Both tetrahedra are positively oriented, so odd permutations give
        // orientation-reversing correspondences; only the 12 even ones can
        // be proper motions.
        int inversions = 0;
        for (int i = 0; i < 4; ++i)
            for (int j = i + 1; j < 4; ++j)
                if (perm[i] > perm[j]) ++inversions;
        if (inversions % 2 != 0) continue;

        std::array<Vec3, 4> to;
        for (int i = 0; i < 4; ++i) to[i] = t1.vertices[perm[i]];
        const RigidMotion m =
            motion_from_correspondence(t0.vertices, to, 1e-7 * helix.params.edge_length);
        bool all = true;
        for (int k = 0; k + 1 < helix.size(); ++k)
            if (!maps_onto(m, helix.tetrahedra[k], helix.tetrahedra[k + 1], ptol)) {
                all = false;
                break;
            }
        if (all) survivors.push_back(m);
    } while (std::next_permutation(perm.begin(), perm.end()));

    if (survivors.size() != 1)
        throw std::runtime_error("helix_step_motion: found " + std::to_string(survivors.size()) +
                                 " consistent step motions, expected exactly 1");
    return survivors.front();
}

std::optional<int> detect_period(const Aggregate& helix, int max_m, const ToleranceConfig& tol) {
    if (helix.kind != AggregateKind::bc_helix && helix.kind != AggregateKind::modified_bc_helix)
        throw std::domain_error("detect_period: aggregate is not a helix");
    if (helix.size() <= max_m)
        throw std::domain_error("detect_period: helix count " + std::to_string(helix.size()) +
                                " must exceed max_m " + std::to_string(max_m));
    const double ptol = tol.point_tol * helix.params.edge_length;

    for (int m = 1; m <= max_m; ++m) {
        const Vec3 shift = helix.tetrahedra[m].centroid() - helix.tetrahedra[0].centroid();
        const RigidMotion tr = translation_motion(shift);
        bool ok = true;
        for (int k = 0; k + m < helix.size(); ++k) {
            // same translation for every k, all four vertices matching
            if (distance(helix.tetrahedra[k].centroid() + shift,
                         helix.tetrahedra[k + m].centroid()) > ptol ||
                !maps_onto(tr, helix.tetrahedra[k], helix.tetrahedra[k + m], ptol)) {
                ok = false;
                break;
            }
        }
        if (ok) return m;
    }
    return std::nullopt;
}

int projected_symmetry_order(const Aggregate& helix, const ToleranceConfig& tol) {
    const RigidMotion step = helix_step_motion(helix, tol);
    const ScrewMotion screw = screw_decompose(step, tol.angle_tol);
    if (screw.pure_translation)
        throw std::runtime_error("projected_symmetry_order: step motion has no rotation");

    const double ptol = tol.point_tol * helix.params.edge_length;
    Vec3 e1, e2;
    plane_basis(screw.axis_dir, e1, e2);

    std::vector<std::array<double, 2>> pts;
    for (const auto& t : helix.tetrahedra)
        for (const auto& v : t.vertices) {
            const Vec3 r = v - screw.axis_point;
            pts.push_back({e1.dot(r), e2.dot(r)});
        }

    const auto symmetric_under = [&](int s) {
        const double c = std::cos(2.0 * std::numbers::pi / s);
        const double sn = std::sin(2.0 * std::numbers::pi / s);
        for (const auto& p : pts) {
            const std::array<double, 2> q{c * p[0] - sn * p[1], sn * p[0] + c * p[1]};
            double best = 2 * ptol;
            for (const auto& r : pts)
                best = std::min(best, std::hypot(q[0] - r[0], q[1] - r[1]));
            if (best > ptol) return false;
        }
        return true;
    };

    for (int s = 4 * helix.size(); s >= 2; --s)
        if (symmetric_under(s)) return s;
    return 1;
}

}  // namespace tetra
