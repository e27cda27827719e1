#include "spinexp/core.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

namespace spinexp {

cmat pauli_x() {
  cmat m(2, 2);
  m << 0, 1, 1, 0;
  return m;
}

cmat pauli_y() {
  cmat m(2, 2);
  m << 0, -iu, iu, 0;
  return m;
}

cmat pauli_z() {
  cmat m(2, 2);
  m << 1, 0, 0, -1;
  return m;
}

rmat J2() {
  rmat m(2, 2);
  m << 0, 1, -1, 0;
  return m;
}

rmat J(int size) {
  const int l = size / 2;
  rmat m = rmat::Zero(size, size);
  m.topRightCorner(l, l) = rmat::Identity(l, l);
  m.bottomLeftCorner(l, l) = -rmat::Identity(l, l);
  return m;
}

rmat K(int size) {
  const int l = size / 2;
  rmat m = rmat::Zero(size, size);
  m.topRightCorner(l, l) = rmat::Identity(l, l);
  m.bottomLeftCorner(l, l) = rmat::Identity(l, l);
  return m;
}

rmat Jtilde(int size) { return kron(rmat::Identity(size / 2, size / 2), J2()); }

rmat Jhat4() {
  rmat m = rmat::Zero(4, 4);
  m.topLeftCorner(2, 2) = J2();
  m.bottomRightCorner(2, 2) = -J2();
  return m;
}

rmat Jbreve4() {
  // matrix of x -> x*jbar on H in the basis {1,i,j,k}
  rmat m(4, 4);
  m << 0, 0, -1, 0,
       0, 0, 0, 1,
       1, 0, 0, 0,
       0, -1, 0, 0;
  return m;
}

template <typename M>
static M kron_impl(const M& a, const M& b) {
  M out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

cmat kron(const cmat& a, const cmat& b) { return kron_impl(a, b); }
rmat kron(const rmat& a, const rmat& b) { return kron_impl(a, b); }

double frobenius_norm_sq(const cmat& a) { return a.squaredNorm(); }
double frobenius_norm_sq(const rmat& a) { return a.squaredNorm(); }

cplx det(const cmat& a) { return a.determinant(); }

namespace {

// determinant of the principal submatrix indexed by idx, by Gaussian
// elimination with partial pivoting
cplx submatrix_det(const cmat& a, const std::vector<int>& idx) {
  const int k = static_cast<int>(idx.size());
  cmat m(k, k);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) m(i, j) = a(idx[i], idx[j]);
  cplx d = 1.0;
  for (int col = 0; col < k; ++col) {
    int piv = col;
    for (int r = col + 1; r < k; ++r)
      if (std::abs(m(r, col)) > std::abs(m(piv, col))) piv = r;
    if (m(piv, col) == cplx(0.0)) return 0.0;
    if (piv != col) {
      m.row(piv).swap(m.row(col));
      d = -d;
    }
    d *= m(col, col);
    for (int r = col + 1; r < k; ++r) {
      const cplx f = m(r, col) / m(col, col);
      m.row(r).tail(k - col) -= f * m.row(col).tail(k - col);
    }
  }
  return d;
}

}  // namespace

std::vector<cplx> principal_minor_sums(const cmat& a) {
  const int n = static_cast<int>(a.rows());
  if (n != a.cols() || n < 1 || n > 8)
    throw domain_error("principal_minor_sums: need square matrix, n <= 8");
  std::vector<cplx> e(n, cplx(0.0));
  for (unsigned mask = 1; mask < (1u << n); ++mask) {
    std::vector<int> idx;
    for (int i = 0; i < n; ++i)
      if (mask & (1u << i)) idx.push_back(i);
    e[idx.size() - 1] += submatrix_det(a, idx);
  }
  return e;
}

cplx det_schur_2x2_blocks(const cmat& x) {
  if (x.rows() != 4 || x.cols() != 4)
    throw domain_error("det_schur_2x2_blocks: 4x4 only");
  const cmat a = x.block(0, 0, 2, 2), b = x.block(0, 2, 2, 2);
  const cmat c = x.block(2, 0, 2, 2), d = x.block(2, 2, 2, 2);
  const cplx db = b(0, 0) * b(1, 1) - b(0, 1) * b(1, 0);
  if (std::abs(db) <= 1e-14 * std::max(1.0, frobenius_norm_sq(b)))
    throw domain_error("det_schur_2x2_blocks: B block is singular");
  cmat binv(2, 2);
  binv << b(1, 1), -b(0, 1), -b(1, 0), b(0, 0);
  binv /= db;
  const cmat s = c - d * binv * a;
  return db * (s(0, 0) * s(1, 1) - s(0, 1) * s(1, 0));
}

// ---------------------------------------------------------------------------

namespace {

template <typename Coeff>
cplx horner(const std::vector<Coeff>& c, cplx x) {
  cplx acc = 0.0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + cplx(*it);
  return acc;
}

template <typename Coeff>
cmat horner_mat(const std::vector<Coeff>& c, const cmat& x) {
  const Eigen::Index n = x.rows();
  cmat acc = cmat::Zero(n, n);
  for (auto it = c.rbegin(); it != c.rend(); ++it)
    acc = acc * x + cplx(*it) * cmat::Identity(n, n);
  return acc;
}

std::string term_str(double v, int k, bool lead) {
  char buf[64];
  const char* sign = v < 0 ? (lead ? "-" : " - ") : (lead ? "" : " + ");
  const double av = std::abs(v);
  if (k == 0)
    std::snprintf(buf, sizeof buf, "%s%g", sign, av);
  else if (av == 1.0)
    std::snprintf(buf, sizeof buf, k == 1 ? "%sx" : "%sx^%d", sign, k);
  else if (k == 1)
    std::snprintf(buf, sizeof buf, "%s%gx", sign, av);
  else
    std::snprintf(buf, sizeof buf, "%s%gx^%d", sign, av, k);
  return buf;
}

}  // namespace

cplx RealPolynomial::eval(cplx x) const { return horner(c, x); }
cmat RealPolynomial::eval(const cmat& x) const { return horner_mat(c, x); }

std::string RealPolynomial::str() const {
  std::string out;
  for (int k = degree(); k >= 0; --k) {
    if (c[k] == 0.0 && degree() > 0) continue;
    out += term_str(c[k], k, out.empty());
  }
  return out.empty() ? "0" : out;
}

ComplexPolynomial::ComplexPolynomial(const RealPolynomial& p) {
  c.assign(p.c.begin(), p.c.end());
}

cplx ComplexPolynomial::eval(cplx x) const { return horner(c, x); }
cmat ComplexPolynomial::eval(const cmat& x) const { return horner_mat(c, x); }

std::string ComplexPolynomial::str() const {
  std::string out;
  for (int k = degree(); k >= 0; --k) {
    const cplx v = c[k];
    if (v == cplx(0.0) && degree() > 0) continue;
    char buf[96];
    if (v.imag() == 0.0) {
      out += term_str(v.real(), k, out.empty());
      continue;
    }
    const char* pre = out.empty() ? "" : " + ";
    if (k == 0)
      std::snprintf(buf, sizeof buf, "%s(%g%+gi)", pre, v.real(), v.imag());
    else if (k == 1)
      std::snprintf(buf, sizeof buf, "%s(%g%+gi)x", pre, v.real(), v.imag());
    else
      std::snprintf(buf, sizeof buf, "%s(%g%+gi)x^%d", pre, v.real(), v.imag(), k);
    out += buf;
  }
  return out.empty() ? "0" : out;
}

ComplexPolynomial ComplexPolynomial::from_roots(const std::vector<cplx>& roots) {
  std::vector<cplx> c{1.0};
  for (const cplx r : roots) {
    c.push_back(0.0);
    for (int k = static_cast<int>(c.size()) - 1; k > 0; --k)
      c[k] = c[k - 1] - r * c[k];
    c[0] *= -r;
  }
  return ComplexPolynomial(std::move(c));
}

void poly_divmod(const ComplexPolynomial& num, const ComplexPolynomial& den,
                 ComplexPolynomial& quot, ComplexPolynomial& rem) {
  if (den.c.empty() || den.c.back() == cplx(0.0))
    throw domain_error("poly_divmod: zero or non-normalized divisor");
  std::vector<cplx> r = num.c;
  const int dn = num.degree(), dd = den.degree();
  if (dn < dd) {
    quot = ComplexPolynomial({cplx(0.0)});
    rem = num;
    return;
  }
  std::vector<cplx> q(dn - dd + 1, cplx(0.0));
  for (int k = dn - dd; k >= 0; --k) {
    const cplx f = r[k + dd] / den.c[dd];
    q[k] = f;
    for (int j = 0; j <= dd; ++j) r[k + j] -= f * den.c[j];
  }
  r.resize(std::max(dd, 1));
  quot = ComplexPolynomial(std::move(q));
  rem = ComplexPolynomial(std::move(r));
}

cmat lagrange_exp(const cmat& x, const std::vector<cplx>& roots) {
  const Eigen::Index n = x.rows();
  if (roots.empty()) throw domain_error("lagrange_exp: no roots");
  double maxabs = 0.0;
  for (const cplx r : roots) maxabs = std::max(maxabs, std::abs(r));
  for (size_t i = 0; i < roots.size(); ++i)
    for (size_t j = i + 1; j < roots.size(); ++j)
      if (std::abs(roots[i] - roots[j]) <= 1e-8 * (1.0 + maxabs))
        throw domain_error("lagrange_exp: duplicate roots");
  cmat out = cmat::Zero(n, n);
  for (size_t k = 0; k < roots.size(); ++k) {
    cmat ell = cmat::Identity(n, n);
    cplx denom = 1.0;
    for (size_t j = 0; j < roots.size(); ++j) {
      if (j == k) continue;
      ell = ell * (x - roots[j] * cmat::Identity(n, n));
      denom *= roots[k] - roots[j];
    }
    out += (std::exp(roots[k]) / denom) * ell;
  }
  return out;
}

}  // namespace spinexp
