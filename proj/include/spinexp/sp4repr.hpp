#pragma once

#include <string>

#include "spinexp/core.hpp"

namespace spinexp {

/// Thrown when recovered parameters fail to reproduce the input matrix.
struct decomposition_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Angle form of an SU(2) matrix
///   [[c e^{i lambda}, s e^{i mu}], [-s e^{-i mu}, c e^{-i lambda}]]
/// with c = cos(theta), s = sin(theta).
struct CayleyKlein {
  double theta = 0;   // [0, pi/2]
  double lambda = 0;  // [0, 2pi)
  double mu = 0;      // [0, 2pi)

  cmat matrix() const;
};

/// Angles of s; averages the symmetric entry pairs, so inputs a hair off
/// SU(2) get projected. Throws domain_error when s is not SU(2) within tol.
CayleyKlein cayley_klein(const cmat& s, double tol = 1e-8);

/// Singular-value pattern of the upper-left block A of an element of
/// Sp(4) = {unitary X : X^T J4 X = J4} = {theta_h(A, B) unitary}.
enum class ReprCase {
  case1 = 1,  // 0 < s2 < s1 < 1
  case2,      // s1 = s2 in (0,1): A and B are scalar multiples of unitaries
  case3,      // s1 = s2 = 1: A unitary, B = 0
  case4,      // s1 = 0: A = 0, B unitary
  case5,      // s2 = 0 < s1 < 1
  case6,      // s1 = 1 > s2 > 0: B of rank one
};
const char* to_string(ReprCase c);

/// Parameters of X = theta_h(A, B) in Sp(4). Cases 1, 3, 4, 5, 6:
///   A = e^{i(a-b)} S1 diag(sigma1, sigma2) S2^*
///   B = e^{-ic} conj(S3) conj(S2) diag(theta1, theta2) S2^T
/// Case 2 stores the unitary factors directly:
///   A = sigma1 e^{ia} S1,  B = theta1 e^{ib} S2.
/// lambda is the angle of S4 = S2^* S3^* conj(S1), diagonal in the cases
/// that force it so (1, 5, 6); zero elsewhere.
struct Sp4Params {
  ReprCase kind = ReprCase::case1;
  double sigma1 = 1, sigma2 = 1;  // 0 <= sigma2 <= sigma1 <= 1
  double theta1 = 0, theta2 = 0;  // theta_i = sqrt(1 - sigma_i^2)
  CayleyKlein s1, s2, s3;
  double a = 0, b = 0, c = 0, lambda = 0;
};

/// theta_h(A, B) for the case's A, B. Validates the numeric invariants
/// (sigma ordering and range, theta consistency, the case's sigma window)
/// and throws domain_error on violation.
cmat reconstruct_sp4(const Sp4Params& p);

/// SVD-based representation of an element of Sp(4). Validates membership
/// (unitarity and X^T J4 X = J4, tolerance 1e-8), classifies the singular
/// values of A with absolute tolerance 1e-8, and recovers the parameters.
/// Coincidences inside 1e-10 snap straight to the degenerate case; in the
/// borderline band (1e-10, 1e-8] the generic case 1 wins when its
/// reconstruction passes 1e-9. Throws domain_error off Sp(4) and
/// decomposition_error when reconstruct_sp4 of the result misses x by more
/// than 1e-8.
Sp4Params decompose_sp4(const cmat& x);

/// |D S4^T - S4 D|_F for S4 = S2^* S3^* conj(S1) and the case's
///   D = diag(sigma1/theta1, sigma2/theta2)   (case 1)
///       diag(sigma1/theta1, 0)               (case 5)
///       diag(0, theta2/sigma2)               (case 6).
/// Zero exactly when S4 is diagonal, which valid decompositions force.
/// Throws domain_error for other cases or when D's entries blow up.
double verify_s4_constraint(const Sp4Params& p);

}  // namespace spinexp
