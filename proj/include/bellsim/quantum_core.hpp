#pragma once

#include <Eigen/Dense>

#include <optional>

namespace bellsim {

namespace tol {

// Repo-wide matrix tolerances (double-precision round-off on 4x4 algebra).
inline constexpr double matrix = 1e-12;
inline constexpr double eigenvalue_floor = -1e-10;

// Strict-violation guard: saturating the local bound does not count as a
// violation (the aligned configurations sit exactly on it).
inline constexpr double violation_eps = 1e-9;

}  // namespace tol

/// Unit vector on the Poincare sphere describing a dichotomic polarization
/// observable O = r . sigma.
///
/// Axis conventions: the +/-Z eigenstates are the H/V linear polarizations,
/// +/-X are D/A, and +/-Y are the R/L circular polarizations.
class BlochVector {
 public:
  /// Throws std::domain_error unless (x, y, z) is unit length within 1e-12.
  BlochVector(double x, double y, double z);

  /// Rescales an arbitrary nonzero vector onto the sphere.
  static BlochVector normalized(double x, double y, double z);

  static BlochVector x_axis() { return {1.0, 0.0, 0.0}; }  // D/A
  static BlochVector y_axis() { return {0.0, 1.0, 0.0}; }  // R/L
  static BlochVector z_axis() { return {0.0, 0.0, 1.0}; }  // H/V

  double x() const { return v_.x(); }
  double y() const { return v_.y(); }
  double z() const { return v_.z(); }
  const Eigen::Vector3d& vec() const { return v_; }

 private:
  Eigen::Vector3d v_;
};

BlochVector operator-(const BlochVector& a);
double dot(const BlochVector& a, const BlochVector& b);

/// The Pauli matrices sigma = (X, Y, Z).
const Eigen::Matrix2cd& pauli_x();
const Eigen::Matrix2cd& pauli_y();
const Eigen::Matrix2cd& pauli_z();

/// r . sigma for a measurement direction r.
Eigen::Matrix2cd observable(const BlochVector& r);

/// Kronecker product of two single-qubit operators, qubit A as the left
/// factor.
Eigen::Matrix4cd kron(const Eigen::Matrix2cd& a, const Eigen::Matrix2cd& b);

/// Joint density matrix of two qubits.
///
/// Basis ordering of the 4-dimensional space is |00>, |01>, |10>, |11> with
/// qubit A as the left tensor factor. Every constructor output satisfies the
/// density-matrix invariants: Hermitian and unit trace within 1e-12, all
/// eigenvalues >= -1e-10.
class TwoQubitState {
 public:
  /// |Psi-><Psi-| with |Psi-> = (|01> - |10>)/sqrt(2). Visibility 1.
  static TwoQubitState singlet();

  /// V |Psi-><Psi-| + (1-V) I/4. Throws std::domain_error unless V in [0,1].
  static TwoQubitState werner(double visibility);

  /// Werner state with singlet fidelity F, i.e. visibility V = (4F-1)/3.
  /// Throws std::domain_error unless F in [1/4, 1].
  static TwoQubitState werner_from_fidelity(double fidelity);

  /// Wraps an externally built matrix; throws std::domain_error if any
  /// density-matrix invariant fails.
  static TwoQubitState from_matrix(const Eigen::Matrix4cd& rho);

  const Eigen::Matrix4cd& rho() const { return rho_; }

  /// Set when the state was constructed as a Werner mixture.
  std::optional<double> visibility() const { return visibility_; }

 private:
  TwoQubitState(Eigen::Matrix4cd rho, std::optional<double> visibility);

  Eigen::Matrix4cd rho_;
  std::optional<double> visibility_;
};

/// Joint expectation value E(a, b) = Tr[rho (a.sigma) x (b.sigma)] of the two
/// dichotomic observables; always in [-1, 1] for a valid state.
double correlator(const TwoQubitState& state, const BlochVector& a,
                  const BlochVector& b);

/// Transition probability Tr[rho_a rho_b]. Equals the usual fidelity whenever
/// at least one argument is pure; throws std::domain_error if neither is.
double fidelity(const TwoQubitState& a, const TwoQubitState& b);

}  // namespace bellsim
