#include "tetratwist/golden.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace tetra::golden {

namespace {

constexpr double kPi = std::numbers::pi;

void require_ring_n(int n, const char* who) {
    if (n < 3 || n > 5)
        throw std::domain_error(std::string(who) + ": n must be in [3, 5], got " +
                                std::to_string(n));
}

// Shared quotient of the two ring formulas: sqrt(cos^2(g/2) - cos^2(t/2)) / cos(t/2).
double ring_quotient(double theta) {
    const double g2 = gamma_dihedral().radians / 2.0;
    const double t2 = theta / 2.0;
    const double cg = std::cos(g2), ct = std::cos(t2);
    return std::sqrt(cg * cg - ct * ct) / ct;
}

double beta_of_theta(double theta) { return 2.0 * std::atan(ring_quotient(theta)); }

}  // namespace

double phi() { return (1.0 + std::sqrt(5.0)) / 2.0; }

AngleValue beta() {
    return {std::acos((3.0 * phi() - 1.0) / 4.0), AngleValue::Provenance::closed_form};
}

AngleValue gamma_dihedral() {
    return {std::acos(1.0 / 3.0), AngleValue::Provenance::closed_form};
}

AngleValue alpha_edge_ring(int n) {
    require_ring_n(n, "alpha_edge_ring");
    const double theta = 2.0 * kPi / n;
    const double g2 = gamma_dihedral().radians / 2.0;
    return {std::atan(ring_quotient(theta) / std::sin(g2)),
            AngleValue::Provenance::closed_form};
}

AngleValue beta_edge_ring(int n) {
    require_ring_n(n, "beta_edge_ring");
    return {beta_of_theta(2.0 * kPi / n), AngleValue::Provenance::closed_form};
}

AngleValue alpha_icosahedral() {
    const double p = phi();
    return {std::acos(p * p / (2.0 * std::sqrt(2.0))), AngleValue::Provenance::closed_form};
}

bool verify_beta3_identity(double tolerance) {
    if (!(tolerance > 0)) throw std::domain_error("verify_beta3_identity: tolerance must be positive");
    const double lhs = 2.0 * kPi / 3.0 - beta().radians;
    if (std::abs(lhs - beta_edge_ring(3).radians) >= tolerance) return false;
    // theta = +-2*pi/3 substituted into the junction-angle expression must
    // reproduce the same value.
    for (const double theta : {2.0 * kPi / 3.0, -2.0 * kPi / 3.0})
        if (std::abs(beta_of_theta(theta) - lhs) >= tolerance) return false;
    return true;
}

}  // namespace tetra::golden
