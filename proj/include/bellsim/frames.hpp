#pragma once

#include <Eigen/Dense>

#include "bellsim/chsh.hpp"
#include "bellsim/quantum_core.hpp"

namespace bellsim {

/// The three-angle misalignment of Alice's Poincare sphere relative to Bob's:
/// an in-plane rotation by theta about the shared Y axis, a degradation of
/// the shared Y direction by phi, and a final rotation by chi about Y.
///
/// The cached matrix is R_y(chi) R_z(phi) R_y(-theta); it is orthogonal with
/// determinant +1 and maps y to n' = (-sin phi cos chi, cos phi,
/// sin phi sin chi). The handedness of the phi and chi factors is pinned by
/// the n' image; the theta factor turns the opposite way so that the CHSH
/// statistics depend on theta - chi rather than theta + chi.
///
/// Angles are degrees at every interface and radians internally.
class FrameRotation {
 public:
  explicit FrameRotation(double theta_deg, double phi_deg,
                         double chi_deg = 0.0);

  double theta_deg() const { return theta_deg_; }
  double phi_deg() const { return phi_deg_; }
  double chi_deg() const { return chi_deg_; }
  const Eigen::Matrix3d& matrix() const { return matrix_; }

 private:
  double theta_deg_;
  double phi_deg_;
  double chi_deg_;
  Eigen::Matrix3d matrix_;
};

/// A party's two measurement directions. Mutually unbiased bases correspond
/// to perpendicular Bloch vectors, so the pair must be orthogonal within
/// 1e-12 (throws std::domain_error otherwise).
struct MeasurementPair {
  MeasurementPair(BlochVector first, BlochVector second);

  BlochVector first;
  BlochVector second;
};

/// Alice's {Z, X} pair carried through the frame rotation:
/// (matrix * z, matrix * x).
MeasurementPair alice_directions(const FrameRotation& rot);

/// Bob's fixed maximally complementary pair P = -(Z+X)/sqrt(2) and
/// Q = (Z-X)/sqrt(2), i.e. (-1/sqrt2, 0, -1/sqrt2) and (-1/sqrt2, 0,
/// 1/sqrt2); his sphere is held fixed.
MeasurementPair bob_directions();

/// Builds the 2x2 correlation matrix from correlator(state, a_i, b_j) with
/// a_i from alice_directions and b_j from bob_directions, and returns its
/// CHSH combinations.
ChshResult chsh_at(const TwoQubitState& state, double theta_deg,
                   double phi_deg, double chi_deg = 0.0);

}  // namespace bellsim
