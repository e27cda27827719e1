#include "spinexp/oracle.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/Eigenvalues>

namespace spinexp {

cmat series_expm(const cmat& x, const OracleConfig& cfg) {
  const Eigen::Index n = x.rows();
  if (n != x.cols()) throw domain_error("series_expm: square matrices only");
  const double norm = fnorm(x);
  int s = 0;
  if (norm > cfg.scaling_threshold)
    s = static_cast<int>(std::ceil(std::log2(norm / cfg.scaling_threshold)));
  const cmat t = x / std::pow(2.0, s);

  cmat sum = cmat::Identity(n, n);
  cmat term = cmat::Identity(n, n);
  bool converged = false;
  for (int k = 1; k <= cfg.max_terms; ++k) {
    term = (term * t) / static_cast<double>(k);
    sum += term;
    if (fnorm(term) <= cfg.series_tolerance) {
      converged = true;
      break;
    }
  }
  if (!converged) throw convergence_error("series_expm: max_terms exceeded");
  for (int k = 0; k < s; ++k) sum = sum * sum;
  return sum;
}

rmat series_expm(const rmat& x, const OracleConfig& cfg) {
  return series_expm(cmat(x.cast<cplx>()), cfg).real();
}

ComplexPolynomial brute_minpoly(const cmat& x) {
  const Eigen::Index n = x.rows();
  if (n != x.cols()) throw domain_error("brute_minpoly: square matrices only");
  Eigen::ComplexEigenSolver<cmat> es(x, /*computeEigenvectors=*/false);
  if (es.info() != Eigen::Success)
    throw convergence_error("brute_minpoly: eigensolver failed");
  std::vector<cplx> ev(es.eigenvalues().data(), es.eigenvalues().data() + n);

  // Assign each eigenvalue to the nearest existing cluster mean (sorting first
  // would interleave repeated imaginary pairs whose real parts are noise).
  const double tol = 1e-7 * (1.0 + fnorm(x));
  std::vector<cplx> acc;
  std::vector<int> cnt;
  for (const cplx& lam : ev) {
    int best = -1;
    double best_dist = tol;
    for (size_t c = 0; c < acc.size(); ++c) {
      const double d = std::abs(lam - acc[c] / static_cast<double>(cnt[c]));
      if (d <= best_dist) {
        best_dist = d;
        best = static_cast<int>(c);
      }
    }
    if (best >= 0) {
      acc[static_cast<size_t>(best)] += lam;
      ++cnt[static_cast<size_t>(best)];
    } else {
      acc.push_back(lam);
      cnt.push_back(1);
    }
  }
  std::vector<cplx> roots(acc.size());
  for (size_t c = 0; c < acc.size(); ++c) roots[c] = acc[c] / static_cast<double>(cnt[c]);
  std::sort(roots.begin(), roots.end(), [](cplx a, cplx b) {
    return a.real() != b.real() ? a.real() < b.real() : a.imag() < b.imag();
  });

  ComplexPolynomial m = ComplexPolynomial::from_roots(roots);
  const double resid = fnorm(m.eval(x));
  double scale = 1.0;
  for (size_t k = 0; k < roots.size(); ++k) scale *= 1.0 + fnorm(x);
  if (resid > 1e-8 * scale)
    throw convergence_error("brute_minpoly: annihilation check failed");
  return m;
}

}  // namespace spinexp
