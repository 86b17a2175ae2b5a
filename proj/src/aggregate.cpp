#include "tetratwist/aggregate.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>
#include <stdexcept>

#include "tetratwist/golden.hpp"

namespace tetra {

namespace {
constexpr double kPi = std::numbers::pi;
}

std::string to_string(AggregateKind k) {
    switch (k) {
        case AggregateKind::edge_ring: return "edge_ring";
        case AggregateKind::icosahedral: return "icosahedral";
        case AggregateKind::bc_helix: return "bc_helix";
        case AggregateKind::modified_bc_helix: return "modified_bc_helix";
    }
    return "?";
}

std::string to_string(Chirality c) { return c == Chirality::right ? "right" : "left"; }

AggregateKind aggregate_kind_from_string(const std::string& s) {
    if (s == "edge_ring") return AggregateKind::edge_ring;
    if (s == "icosahedral") return AggregateKind::icosahedral;
    if (s == "bc_helix") return AggregateKind::bc_helix;
    if (s == "modified_bc_helix") return AggregateKind::modified_bc_helix;
    throw std::domain_error("unknown aggregate kind: \"" + s + "\"");
}

Chirality chirality_from_string(const std::string& s) {
    if (s == "right") return Chirality::right;
    if (s == "left") return Chirality::left;
    throw std::domain_error("unknown chirality: \"" + s + "\" (expected right or left)");
}

void Aggregate::validate(const ToleranceConfig& tol) const {
    tol.validate();
    for (int i = 0; i < size(); ++i) {
        if (tetrahedra[i].id != i)
            throw std::runtime_error("Aggregate: tetrahedron at position " + std::to_string(i) +
                                     " has id " + std::to_string(tetrahedra[i].id) +
                                     "; ids must be contiguous from 0");
        if (std::abs(tetrahedra[i].edge_length - params.edge_length) >
            tol.point_tol * params.edge_length)
            throw std::runtime_error("Aggregate: tetrahedron " + std::to_string(i) +
                                     " does not have the common edge length");
        tetrahedra[i].validate(tol.point_tol);
    }
}

Aggregate build_edge_ring(int n, double edge_length) {
    if (n < 3 || n > 5)
        throw std::domain_error("build_edge_ring: n must be in [3, 5], got " + std::to_string(n));
    if (!(edge_length > 0)) throw std::domain_error("build_edge_ring: edge_length must be positive");

    const double a = edge_length;
    const double mid_dist = a / std::sqrt(2.0);  // distance between opposite edge midpoints
    Aggregate agg;
    agg.kind = AggregateKind::edge_ring;
    agg.params.edge_length = a;
    agg.params.n = n;

    const Vec3 top{0, 0, a / 2}, bottom{0, 0, -a / 2};
    for (int k = 0; k < n; ++k) {
        const double az = 2.0 * kPi * k / n;
        const Vec3 radial{std::cos(az), std::sin(az), 0};
        const Vec3 tangential{-std::sin(az), std::cos(az), 0};
        const Vec3 mid = radial * mid_dist;

        Tetrahedron t;
        t.id = k;
        t.edge_length = a;
        t.vertices = {top, bottom, mid + tangential * (a / 2), mid - tangential * (a / 2)};
        if (t.signed_volume() < 0) std::swap(t.vertices[2], t.vertices[3]);
        agg.tetrahedra.push_back(t);
    }
    return agg;
}

Aggregate twist_edge_ring(const Aggregate& ring, const TwistOptions& opts) {
    if (ring.kind != AggregateKind::edge_ring)
        throw std::domain_error("twist_edge_ring: aggregate is not an edge ring");
    if (ring.params.twisted)
        throw std::logic_error("twist_edge_ring: aggregate is already twisted");

    const int n = ring.params.n;
    const double angle = opts.angle_override.value_or(golden::alpha_edge_ring(n).radians);
    const double sense = opts.mirrored ? -1.0 : 1.0;

    Aggregate out = ring;
    out.params.twisted = true;
    for (int k = 0; k < n; ++k) {
        const double az = 2.0 * kPi * k / n;
        const Vec3 radial{std::cos(az), std::sin(az), 0};
        const RigidMotion m = rotation_about_line({0, 0, 0}, radial, sense * angle);
        out.tetrahedra[k] = ring.tetrahedra[k].transformed(m);
    }
    return out;
}

namespace {

struct IcosaGeometry {
    std::vector<Vec3> face_dirs;                    // 20 unit face-center directions
    std::vector<std::array<Vec3, 3>> face_corners;  // unit in-plane directions to corners
    std::vector<std::pair<int, int>> adjacent;      // 30 edge-sharing face pairs
};

const IcosaGeometry& icosa_geometry() {
    static const IcosaGeometry geo = [] {
        const double p = golden::phi();
        std::vector<Vec3> verts;
        for (double s1 : {1.0, -1.0})
            for (double s2 : {1.0, -1.0}) {
                verts.push_back({0, s1, s2 * p});
                verts.push_back({s1, s2 * p, 0});
                verts.push_back({s2 * p, 0, s1});
            }
        // faces = triples of mutually adjacent vertices (edge length 2)
        std::vector<std::array<int, 3>> faces;
        auto adj = [&](int i, int j) {
            return std::abs(distance(verts[i], verts[j]) - 2.0) < 1e-9;
        };
        const int nv = static_cast<int>(verts.size());
        for (int i = 0; i < nv; ++i)
            for (int j = i + 1; j < nv; ++j)
                for (int k = j + 1; k < nv; ++k)
                    if (adj(i, j) && adj(j, k) && adj(i, k)) faces.push_back({i, j, k});

        IcosaGeometry g;
        for (const auto& f : faces) {
            const Vec3 c = (verts[f[0]] + verts[f[1]] + verts[f[2]]) / 3.0;
            const Vec3 d = c.normalized();
            std::array<Vec3, 3> corners;
            for (int m = 0; m < 3; ++m) {
                Vec3 u = verts[f[m]] - c;
                u = u - d * u.dot(d);
                corners[m] = u.normalized();
            }
            // orient corners so (corner0 x corner1) points along +d
            if (corners[0].cross(corners[1]).dot(d) < 0) std::swap(corners[1], corners[2]);
            g.face_dirs.push_back(d);
            g.face_corners.push_back(corners);
        }
        const int nf = static_cast<int>(g.face_dirs.size());
        for (int i = 0; i < nf; ++i)
            for (int j = i + 1; j < nf; ++j) {
                int shared = 0;
                for (int u : faces[i])
                    for (int v : faces[j])
                        if (u == v) ++shared;
                if (shared == 2) g.adjacent.push_back({i, j});
            }
        return g;
    }();
    return geo;
}

}  // namespace

int icosahedral_exterior_face() { return 0; }  // vertex 0 is the origin apex

Aggregate build_icosahedral(double edge_length) {
    if (!(edge_length > 0)) throw std::domain_error("build_icosahedral: edge_length must be positive");
    const double a = edge_length;
    const double height = a * std::sqrt(2.0 / 3.0);  // origin to exterior face
    const double rho = a / std::sqrt(3.0);           // exterior face circumradius

    const auto& geo = icosa_geometry();
    Aggregate agg;
    agg.kind = AggregateKind::icosahedral;
    agg.params.edge_length = a;

    for (int k = 0; k < 20; ++k) {
        const Vec3 d = geo.face_dirs[k];
        const auto& corners = geo.face_corners[k];
        Tetrahedron t;
        t.id = k;
        t.edge_length = a;
        t.vertices[0] = {0, 0, 0};
        for (int m = 0; m < 3; ++m) t.vertices[1 + m] = d * height + corners[m] * rho;
        if (t.signed_volume() < 0) std::swap(t.vertices[2], t.vertices[3]);
        agg.tetrahedra.push_back(t);
    }
    return agg;
}

Aggregate twist_icosahedral(const Aggregate& agg, const TwistOptions& opts) {
    if (agg.kind != AggregateKind::icosahedral)
        throw std::domain_error("twist_icosahedral: aggregate is not the icosahedral kind");
    if (agg.params.twisted)
        throw std::logic_error("twist_icosahedral: aggregate is already twisted");

    const double angle = opts.angle_override.value_or(golden::alpha_icosahedral().radians);
    const double sense = opts.mirrored ? -1.0 : 1.0;

    Aggregate out = agg;
    out.params.twisted = true;
    for (auto& t : out.tetrahedra) {
        const auto f = t.face_vertices(icosahedral_exterior_face());
        const Vec3 axis = ((f[0] + f[1] + f[2]) / 3.0).normalized();
        const RigidMotion m = rotation_about_line({0, 0, 0}, axis, sense * angle);
        t = t.transformed(m);
    }
    return out;
}

std::vector<std::pair<int, int>> icosahedral_adjacent_pairs(const Aggregate& agg) {
    if (agg.kind != AggregateKind::icosahedral)
        throw std::domain_error("icosahedral_adjacent_pairs: wrong aggregate kind");
    return icosa_geometry().adjacent;
}

}  // namespace tetra
