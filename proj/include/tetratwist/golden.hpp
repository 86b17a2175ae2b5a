#pragma once

namespace tetra::golden {

/// An angle in radians together with how it was obtained: evaluated from an
/// exact closed-form expression, or measured/derived numerically.
struct AngleValue {
    enum class Provenance { closed_form, evaluated };

    double radians = 0.0;
    Provenance provenance = Provenance::closed_form;
};

/// Golden ratio (1 + sqrt 5) / 2.
double phi();

/// arccos((3*phi - 1) / 4), the angular displacement seen in face junctions.
AngleValue beta();

/// Dihedral angle of the regular tetrahedron, arccos(1/3).
AngleValue gamma_dihedral();

/// Gap-closing twist angle for an n-tetrahedron edge ring, 3 <= n <= 5:
/// arctan( sqrt(cos^2(g/2) - cos^2(t/2)) / (sin(g/2) cos(t/2)) ) with
/// g the tetrahedral dihedral angle and t = 2*pi/n.
AngleValue alpha_edge_ring(int n);

/// Junction angle produced by the edge-ring twist, 3 <= n <= 5:
/// 2 * arctan( sqrt(cos^2(g/2) - cos^2(t/2)) / cos(t/2) ).
AngleValue beta_edge_ring(int n);

/// The junction-angle expression with the subtended angle as a free
/// parameter; beta_edge_ring(n) is beta_for_theta(2*pi/n). Even in theta.
AngleValue beta_for_theta(double theta);

/// Twist angle for the 20-tetrahedron vertex aggregate, arccos(phi^2 / (2*sqrt 2)).
AngleValue alpha_icosahedral();

/// Checks that 2*pi/3 - beta equals the n = 3 junction angle, and that
/// substituting theta = +-2*pi/3 into the junction-angle formula reproduces
/// 2*pi/3 - beta, all within `tolerance`.
bool verify_beta3_identity(double tolerance);

}  // namespace tetra::golden
