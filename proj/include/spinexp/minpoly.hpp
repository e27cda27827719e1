#pragma once

#include <string>

#include "spinexp/core.hpp"

namespace spinexp {

// ---------------------------------------------------------------------------
// membership

/// 4x4, anti-Hermitian, traceless.
bool is_su4(const cmat& x, double tol = 1e-10);
/// su(4) with X J4 = J4 conj(X).
bool is_sp4(const cmat& x, double tol = 1e-10);
/// su(4) with X Jhat4 = Jhat4 conj(X).
bool is_hat_sp4(const cmat& x, double tol = 1e-10);

struct StructCheck {
  bool ok = true;
  std::string detail;
};
/// Block anatomy of a hat-sp4 element X = [[A,B],[C,D]]: A and D traceless
/// anti-Hermitian, C = -adjoint(B), B of the form [[t, z],[conj(z), -conj(t)]].
StructCheck hat_sp4_block_validate(const cmat& x, double tol = 1e-10);

/// |X|_F^2 off the eight independent entries of a hat-sp4 element.
double hat_sp4_norm_sq(const cmat& x);
/// det via the 2x2 blocks: det(A)det(D) when B = 0, else
/// det(B) det(conj(B)^T ... ) -- see the implementation note.
cplx hat_sp4_det(const cmat& x);

// ---------------------------------------------------------------------------
// sp(4) / hat-sp(4) classification

enum class Sp4Case { zero, quadratic, cubic, quartic };
const char* to_string(Sp4Case c);

struct Sp4Classification {
  Sp4Case kind = Sp4Case::zero;
  RealPolynomial minimal;
  double norm_sq = 0;  // |Y|_F^2
  double det = 0;      // det(Y), real and nonnegative on these algebras
};

/// Minimal polynomial of Y in sp(4) or hat-sp(4) from |Y|_F and det(Y) alone:
///   zero       x
///   quadratic  x^2 + |Y|^2/4          iff |Y|^4 = 16 det
///   cubic      x^3 + (|Y|^2/2) x      iff det = 0
///   quartic    x^4 + (|Y|^2/2) x^2 + det
/// If a lower-degree candidate fails to annihilate Y numerically it is
/// demoted to the quartic.
Sp4Classification classify_sp4(const cmat& y, double tol = 1e-9);

/// The three scalar conditions equivalent to a quadratic minimal polynomial
/// for Y = [[A,B],[-conj(B),conj(A)]] in sp(4), plus the Gram form they
/// encode: A A^* + B conj(B)^T scalar and A B symmetric.
struct QuadraticStructure {
  double residual1 = 0;  // |a^2 + |z2|^2 - b^2 - |z4|^2|
  double residual2 = 0;  // |z2 conj(z3) + z3 conj(z4) - i (a + b) z1|
  double residual3 = 0;  // |conj(z1) z2 + z1 z4 - i (b - a) z3|
  double gram_residual = 0;
  double ab_symmetry = 0;
  bool quadratic(double tol = 1e-9) const;
};
QuadraticStructure sp4_quadratic_structure_check(const cmat& y);

// ---------------------------------------------------------------------------
// su(4) classification

struct Su4Classification {
  int kind = 6;  // 1..6
  ComplexPolynomial minimal;
  double e2 = 0, e3i = 0, e4 = 0;  // invariants: E2, Im E3, E4
  double a = 0;                    // recovered eigenvalue parameter, cases 2/4/5
};

/// Decide among the six minimal-polynomial shapes of a traceless
/// anti-Hermitian 4x4 from its characteristic coefficients:
///   1  x^2 + E2/2                        double pair +-i lambda
///   2  x^2 + 2iax + 3a^2                 triple ia, single -3ia
///   3  x^3 + E2 x                        0, 0, +-i lambda
///   4  x^3 + iax^2 + 2a^2 x              0, ia, ia, -2ia
///   5  x^3 + iax^2 + (E2 - a^2)x + iE4/a double ia, plus ib, ic
///   6  x^4 + E2 x^2 - iE3i x + E4        the characteristic polynomial
/// A candidate that fails to annihilate is demoted to case 6.
Su4Classification classify_su4(const cmat& x, double tol = 1e-9);

/// 16 E2^4 E4 + 4 E2^3 e3i^2 - 128 E2^2 E4^2 - 144 E2 e3i^2 E4 - 27 e3i^4
/// + 256 E4^3; vanishes exactly when the characteristic polynomial has a
/// repeated root.
double resultant_condition(double e2, double e3i, double e4);

/// The doubled eigenvalue parameter for case 5: a^2 solves
/// 6t^2 - |X|^2 t - 2 E4 = 0, the sign is fixed by 4a^3 - 2 E2 a + e3i = 0.
/// Falls back to solving that cubic directly. Returns false when no
/// candidate satisfies both.
bool recover_case5_a(double e2, double e3i, double e4, double norm_sq, double tol, double& a_out);

}  // namespace spinexp
