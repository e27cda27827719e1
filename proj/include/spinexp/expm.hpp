#pragma once

#include <array>
#include <string>

#include "spinexp/core.hpp"
#include "spinexp/minpoly.hpp"

namespace spinexp {

enum class ExpMethod {
  quadratic_formula,  // X^2 = -l^2 I
  shifted_formula,    // X^2 + 2ig X + l^2 = 0
  cubic_formula,      // X^3 = -c^2 X
  quartic_formula,    // spectrum {+-ia, +-ib} with a < b
  lagrange,           // interpolation over explicit distinct eigenvalues
  series_fallback,
};
const char* to_string(ExpMethod m);

enum class SpinAlgebra { sp4, hat_sp4, su4 };
const char* to_string(SpinAlgebra a);

struct ExpResult {
  cmat value;
  ExpMethod method = ExpMethod::series_fallback;
  std::string case_tag;  // e.g. "sp4:cubic", "su4:case5"
};

// ---------------------------------------------------------------------------
// Closed forms. Each assumes the stated relation holds for its input; they
// do not re-verify it.

/// e^X = cos(l) I + (sin(l)/l) X when X^2 = -l^2 I.
cmat exp_quadratic(const cmat& x, double lambda);
/// (X + ig)^2 = -(l^2 + g^2) I, so with s = sqrt(l^2 + g^2):
/// e^X = e^{-ig} [ (cos s + ig sin(s)/s) I + (sin(s)/s) X ].
cmat exp_shifted(const cmat& x, double gamma, double lambda_sq);
/// e^X = I + (sin(c)/c) X + ((1 - cos c)/c^2) X^2 when X^3 = -c^2 X.
cmat exp_cubic(const cmat& x, double c);
/// Spectrum {+-ia, +-ib}: the cubic interpolant of exp on those nodes.
/// Throws domain_error when b^2 - a^2 < 1e-8 (a^2 + b^2).
cmat exp_quartic(const cmat& x, double a, double b);

/// Real roots of y^4 + c3 y^3 + c2 y^2 + c1 y + c0 via the companion matrix,
/// Newton-polished. Throws domain_error if a root keeps a significant
/// imaginary part.
std::array<double, 4> quartic_real_roots(double c3, double c2, double c1, double c0);

// ---------------------------------------------------------------------------
// Dispatch

/// Classify x inside the given algebra and evaluate the matching closed
/// form. Any formula that turns out numerically unusable (degenerate
/// interpolation nodes, negative pair discriminant) drops to the scaled
/// Taylor series; the result records which route ran.
ExpResult exp_spin_element(const cmat& x, SpinAlgebra alg, double tol = 1e-9);

// ---------------------------------------------------------------------------
// 3x3 rotations, two independent routes

/// X^3 = -l^2 X with l = |axis|; the cubic closed form.
rmat exp_so3_cubic(const rmat& x);
/// Euler-Rodrigues: p = cos(l/2) + sin(l/2)/l (a i + b j + c k), columns of
/// the result are p e_k conj(p) on {i, j, k}.
rmat exp_so3_quaternion(const rmat& x);

}  // namespace spinexp
