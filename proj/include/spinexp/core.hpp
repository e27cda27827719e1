#pragma once

#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace spinexp {

using cplx = std::complex<double>;
using cmat = Eigen::MatrixXcd;
using rmat = Eigen::MatrixXd;
using cvec = Eigen::VectorXcd;

inline constexpr cplx iu{0.0, 1.0};

/// Thrown when an input violates a documented precondition.
struct domain_error : std::domain_error {
  using std::domain_error::domain_error;
};

/// Thrown when an iterative routine fails to reach its tolerance.
struct convergence_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// ---------------------------------------------------------------------------
// fixed small matrices

cmat pauli_x();
cmat pauli_y();
cmat pauli_z();

/// J2 = [[0,1],[-1,0]] (the realification of i).
rmat J2();
/// J_{2l} = [[0,I],[-I,0]].
rmat J(int size);
/// K_{2l} = [[0,I],[I,0]].
rmat K(int size);
/// Jtilde_{2n} = I_n (x) J2.
rmat Jtilde(int size);
/// Jhat4 = diag(J2, -J2).
rmat Jhat4();
/// Jbreve4: the third antisymmetric structure matrix on R^4.
rmat Jbreve4();

// ---------------------------------------------------------------------------
// basic operations

cmat kron(const cmat& a, const cmat& b);
rmat kron(const rmat& a, const rmat& b);

double frobenius_norm_sq(const cmat& a);
double frobenius_norm_sq(const rmat& a);
inline double fnorm(const cmat& a) { return std::sqrt(frobenius_norm_sq(a)); }
inline double fnorm(const rmat& a) { return std::sqrt(frobenius_norm_sq(a)); }

/// |v| <= eps * max(scale, 1)
inline bool near_zero(double v, double scale, double eps = 1e-9) {
  return std::abs(v) <= eps * std::max(scale, 1.0);
}

/// LU determinant.
cplx det(const cmat& a);

/// E_k(a) for k = 1..n: sums of k x k principal minors. n <= 8.
std::vector<cplx> principal_minor_sums(const cmat& a);

/// det of a 4x4 via 2x2 blocks: for x = [[A,B],[C,D]] with B invertible,
/// det(x) = det(B) det(C - D B^{-1} A).
cplx det_schur_2x2_blocks(const cmat& x);

// ---------------------------------------------------------------------------
// polynomials, coefficients lowest-degree first

struct RealPolynomial {
  std::vector<double> c;

  RealPolynomial() = default;
  explicit RealPolynomial(std::vector<double> coeffs) : c(std::move(coeffs)) {}

  int degree() const { return static_cast<int>(c.size()) - 1; }
  cplx eval(cplx x) const;
  cmat eval(const cmat& x) const;
  std::string str() const;
};

struct ComplexPolynomial {
  std::vector<cplx> c;

  ComplexPolynomial() = default;
  explicit ComplexPolynomial(std::vector<cplx> coeffs) : c(std::move(coeffs)) {}
  ComplexPolynomial(const RealPolynomial& p);

  int degree() const { return static_cast<int>(c.size()) - 1; }
  cplx eval(cplx x) const;
  cmat eval(const cmat& x) const;
  std::string str() const;

  /// Monic polynomial with the given roots.
  static ComplexPolynomial from_roots(const std::vector<cplx>& roots);
};

/// Polynomial long division: num = quot * den + rem.
void poly_divmod(const ComplexPolynomial& num, const ComplexPolynomial& den,
                 ComplexPolynomial& quot, ComplexPolynomial& rem);

/// exp(x) by Lagrange interpolation over the distinct eigenvalues `roots`.
/// Throws domain_error when two roots are closer than 1e-8*(1+max|root|).
cmat lagrange_exp(const cmat& x, const std::vector<cplx>& roots);

}  // namespace spinexp
