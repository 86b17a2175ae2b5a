#include "tetratwist/intersect.hpp"

#include <algorithm>
#include <cmath>

namespace tetra {

namespace {

using Poly2 = std::vector<std::array<double, 2>>;

double cross2(const std::array<double, 2>& o, const std::array<double, 2>& a,
              const std::array<double, 2>& b) {
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
}

// Keep the part of `poly` on the left of the directed line a->b.
Poly2 clip_left(const Poly2& poly, const std::array<double, 2>& a,
                const std::array<double, 2>& b) {
    Poly2 out;
    const size_t n = poly.size();
    for (size_t i = 0; i < n; ++i) {
        const auto& p = poly[i];
        const auto& q = poly[(i + 1) % n];
        const double dp = cross2(a, b, p);
        const double dq = cross2(a, b, q);
        if (dp >= 0) out.push_back(p);
        if ((dp > 0) != (dq > 0) && dp != dq) {
            const double t = dp / (dp - dq);
            out.push_back({p[0] + t * (q[0] - p[0]), p[1] + t * (q[1] - p[1])});
        }
    }
    return out;
}

double polygon_area(const Poly2& poly) {
    if (poly.size() < 3) return 0.0;
    double s = 0;
    for (size_t i = 0; i < poly.size(); ++i) {
        const auto& p = poly[i];
        const auto& q = poly[(i + 1) % poly.size()];
        s += p[0] * q[1] - q[0] * p[1];
    }
    return std::abs(s) / 2.0;
}

using Face3 = std::vector<Vec3>;

// Clip a convex polyhedron (as oriented face loops) by the half space
// dot(n, x) <= off. New boundary points on the cut plane are collected and
// assembled into the cap face by angular sort.
std::vector<Face3> clip_polyhedron(const std::vector<Face3>& faces, const Vec3& n, double off) {
    std::vector<Face3> out;
    std::vector<Vec3> rim;
    for (const auto& face : faces) {
        Face3 nf;
        const size_t m = face.size();
        for (size_t i = 0; i < m; ++i) {
            const Vec3& p = face[i];
            const Vec3& q = face[(i + 1) % m];
            const double dp = n.dot(p) - off;
            const double dq = n.dot(q) - off;
            if (dp <= 0) nf.push_back(p);
            if ((dp < 0) != (dq < 0) && dp != dq) {
                const double t = dp / (dp - dq);
                const Vec3 x = p + (q - p) * t;
                nf.push_back(x);
                rim.push_back(x);
            }
        }
        if (nf.size() >= 3) out.push_back(std::move(nf));
    }
    if (rim.size() >= 3) {
        Vec3 c{0, 0, 0};
        for (const auto& p : rim) c += p;
        c = c / static_cast<double>(rim.size());
        Vec3 e1, e2;
        plane_basis(n, e1, e2);
        std::sort(rim.begin(), rim.end(), [&](const Vec3& p, const Vec3& q) {
            return std::atan2(e2.dot(p - c), e1.dot(p - c)) <
                   std::atan2(e2.dot(q - c), e1.dot(q - c));
        });
        out.push_back(std::move(rim));
    }
    return out;
}

double polyhedron_volume(const std::vector<Face3>& faces) {
    // Divergence theorem with fan triangulation; faces need not be
    // consistently oriented since we take the absolute value at the end of
    // a signed accumulation per face against the centroid.
    Vec3 origin{0, 0, 0};
    int cnt = 0;
    for (const auto& f : faces)
        for (const auto& p : f) {
            origin += p;
            ++cnt;
        }
    if (cnt == 0) return 0.0;
    origin = origin / cnt;

    double vol = 0;
    for (const auto& f : faces) {
        for (size_t i = 1; i + 1 < f.size(); ++i) {
            const Vec3 a = f[0] - origin;
            const Vec3 b = f[i] - origin;
            const Vec3 c = f[i + 1] - origin;
            vol += a.dot(b.cross(c)) / 6.0;
        }
    }
    return std::abs(vol);
}

}  // namespace

double triangle_overlap_area(const std::array<std::array<double, 2>, 3>& t1,
                             const std::array<std::array<double, 2>, 3>& t2) {
    auto ccw = [](std::array<std::array<double, 2>, 3> t) {
        if (cross2(t[0], t[1], t[2]) < 0) std::swap(t[1], t[2]);
        return t;
    };
    const auto a = ccw(t1);
    const auto b = ccw(t2);
    Poly2 poly{a[0], a[1], a[2]};
    for (int i = 0; i < 3 && !poly.empty(); ++i)
        poly = clip_left(poly, b[i], b[(i + 1) % 3]);
    return polygon_area(poly);
}

double tetra_intersection_volume(const Tetrahedron& a, const Tetrahedron& b) {
    std::vector<Face3> faces;
    for (int fi = 0; fi < 4; ++fi) {
        const auto fv = a.face_vertices(fi);
        faces.push_back({fv[0], fv[1], fv[2]});
    }
    for (int fi = 0; fi < 4 && !faces.empty(); ++fi) {
        const Plane p = face_plane(b, fi);
        faces = clip_polyhedron(faces, p.normal, p.offset);
    }
    return polyhedron_volume(faces);
}

double max_pairwise_intersection(const std::vector<Tetrahedron>& tets) {
    double worst = 0;
    for (size_t i = 0; i < tets.size(); ++i)
        for (size_t j = i + 1; j < tets.size(); ++j) {
            // cheap reject: circumspheres too far apart
            const double r = tets[i].edge_length * std::sqrt(6.0) / 4.0;
            if (distance(tets[i].centroid(), tets[j].centroid()) > 2 * r) continue;
            worst = std::max(worst, tetra_intersection_volume(tets[i], tets[j]));
        }
    return worst;
}

}  // namespace tetra
