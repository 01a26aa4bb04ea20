#pragma once

#include <array>
#include <optional>

namespace bellsim {

/// 2x2 matrix of joint expectation values: e(i, j) is the correlator of
/// Alice's i-th and Bob's j-th observable. Entries must lie in [-1, 1]
/// within 1e-12 (throws std::domain_error otherwise).
class CorrelationMatrix {
 public:
  CorrelationMatrix(double e00, double e01, double e10, double e11);

  double at(int i, int j) const { return e_[i][j]; }

 private:
  std::array<std::array<double, 2>, 2> e_;
};

/// The four signed CHSH combinations (one minus sign in each slot) and their
/// maximum absolute value. s_max is exactly max|combos[i]| as evaluated in
/// double precision; sigma is filled by the counting-noise estimator.
struct ChshResult {
  std::array<double, 4> combos{};
  double s_max = 0.0;
  int best_combo_index = 0;
  std::optional<double> sigma;
};

/// combos = { e00+e01+e10-e11, e00+e01-e10+e11, e00-e01+e10+e11,
///            -e00+e01+e10+e11 }.
///
/// Flipping the sign of any row or column of e (an outcome relabeling) or
/// swapping rows/columns (a setting relabeling) permutes and negates the
/// combos, so s_max is invariant under all of them.
ChshResult chsh_combinations(const CorrelationMatrix& e);

/// Strict violation of the local bound: s_max > 2 + 1e-9.
bool is_violation(const ChshResult& r);

/// Relabeling-maximized CHSH value for a Werner state when both parties share
/// the Y direction exactly (phi = 0) and Alice's in-plane angle is theta:
///
///   s(theta) = 2 sqrt(2) V max(|sin theta|, |cos theta|)
///
/// Derived from the correlator pipeline; the test suite re-checks the
/// agreement on a dense grid before anything relies on it.
double closed_form_s(double theta_deg, double visibility);

}  // namespace bellsim
