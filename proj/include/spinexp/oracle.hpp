#pragma once

#include "spinexp/core.hpp"

namespace spinexp {

/// Knobs for the reference exponential.
struct OracleConfig {
  double scaling_threshold = 0.5;  ///< norm above which scaling-and-squaring engages
  double series_tolerance = 1e-15;
  int max_terms = 40;
};

/// Reference matrix exponential: scaling-and-squaring with a truncated Taylor
/// series. Independent of every closed form in this library.
cmat series_expm(const cmat& x, const OracleConfig& cfg = {});
rmat series_expm(const rmat& x, const OracleConfig& cfg = {});

/// Brute-force minimal polynomial of a diagonalizable matrix: eigenvalues,
/// clustered at 1e-7*(1+|x|_F), then prod(x - lambda) over distinct clusters.
/// Throws convergence_error when the result fails to annihilate x.
ComplexPolynomial brute_minpoly(const cmat& x);

}  // namespace spinexp
