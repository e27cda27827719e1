#include "spinexp/minpoly.hpp"

#include <algorithm>
#include <cmath>

namespace spinexp {

namespace {
double rel(double scale) { return std::max(scale, 1.0); }
}  // namespace

bool is_su4(const cmat& x, double tol) {
  if (x.rows() != 4 || x.cols() != 4) return false;
  double s = rel(x.norm());
  return (x + x.adjoint()).norm() <= tol * s && std::abs(x.trace()) <= tol * s;
}

bool is_sp4(const cmat& x, double tol) {
  if (!is_su4(x, tol)) return false;
  cmat j = J(4).cast<cplx>();
  return (x * j - j * x.conjugate()).norm() <= tol * rel(x.norm());
}

bool is_hat_sp4(const cmat& x, double tol) {
  if (!is_su4(x, tol)) return false;
  cmat jh = Jhat4().cast<cplx>();
  return (x * jh - jh * x.conjugate()).norm() <= tol * rel(x.norm());
}

StructCheck hat_sp4_block_validate(const cmat& x, double tol) {
  if (x.rows() != 4 || x.cols() != 4) return {false, "wrong shape"};
  double s = rel(x.norm());
  cmat a = x.topLeftCorner(2, 2), b = x.topRightCorner(2, 2);
  cmat c = x.bottomLeftCorner(2, 2), d = x.bottomRightCorner(2, 2);
  if ((a + a.adjoint()).norm() > tol * s || std::abs(a.trace()) > tol * s)
    return {false, "top-left block not in su(2)"};
  if ((d + d.adjoint()).norm() > tol * s || std::abs(d.trace()) > tol * s)
    return {false, "bottom-right block not in su(2)"};
  if ((c + b.adjoint()).norm() > tol * s) return {false, "lower-left is not -adjoint(upper-right)"};
  // B = [[t, z], [conj(z), -conj(t)]]
  if (std::abs(b(1, 0) - std::conj(b(0, 1))) > tol * s ||
      std::abs(b(1, 1) + std::conj(b(0, 0))) > tol * s)
    return {false, "upper-right block lacks the swap symmetry"};
  return {};
}

double hat_sp4_norm_sq(const cmat& x) {
  auto m2 = [&](int r, int c) { return std::norm(x(r, c)); };
  return 2.0 * (m2(0, 0) + m2(0, 1) + m2(2, 2) + m2(2, 3)) + 4.0 * (m2(0, 2) + m2(0, 3));
}

cplx hat_sp4_det(const cmat& x) {
  cmat a = x.topLeftCorner(2, 2), b = x.topRightCorner(2, 2), d = x.bottomRightCorner(2, 2);
  cplx detb = b(0, 0) * b(1, 1) - b(0, 1) * b(1, 0);
  if (std::abs(detb) <= 1e-14 * rel(frobenius_norm_sq(x)))
    return (a(0, 0) * a(1, 1) - a(0, 1) * a(1, 0)) * (d(0, 0) * d(1, 1) - d(0, 1) * d(1, 0));
  // det [[A,B],[-conj(B),D]] = det(B) det(B^dagger + D B^{-1} A)
  cmat binv(2, 2);
  binv << b(1, 1), -b(0, 1), -b(1, 0), b(0, 0);
  binv /= detb;
  cmat m = cmat(b.adjoint()) + d * binv * a;
  return detb * (m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0));
}

const char* to_string(Sp4Case c) {
  switch (c) {
    case Sp4Case::zero: return "zero";
    case Sp4Case::quadratic: return "quadratic";
    case Sp4Case::cubic: return "cubic";
    default: return "quartic";
  }
}

Sp4Classification classify_sp4(const cmat& y, double tol) {
  Sp4Classification out;
  out.norm_sq = frobenius_norm_sq(y);
  out.det = det(y).real();
  const double nsq = out.norm_sq;

  auto quartic = [&] {
    out.kind = Sp4Case::quartic;
    out.minimal = RealPolynomial({out.det, 0, nsq / 2, 0, 1});
  };

  if (std::sqrt(nsq) <= 1e-12) {
    out.kind = Sp4Case::zero;
    out.minimal = RealPolynomial({0, 1});
    return out;
  }
  if (std::abs(nsq * nsq - 16.0 * out.det) <= tol * rel(nsq * nsq)) {
    out.kind = Sp4Case::quadratic;
    out.minimal = RealPolynomial({nsq / 4, 0, 1});
  } else if (std::abs(out.det) <= tol * rel(nsq * nsq)) {
    out.kind = Sp4Case::cubic;
    out.minimal = RealPolynomial({0, nsq / 2, 0, 1});
  } else {
    quartic();
    return out;
  }
  // annihilation safety net
  double resid = out.minimal.eval(y).norm();
  if (resid > tol * std::pow(1.0 + std::sqrt(nsq), out.minimal.degree())) quartic();
  return out;
}

bool QuadraticStructure::quadratic(double tol) const {
  double worst = std::max({residual1, residual2, residual3});
  return worst <= tol && gram_residual <= tol && ab_symmetry <= tol;
}

QuadraticStructure sp4_quadratic_structure_check(const cmat& y) {
  QuadraticStructure out;
  cmat a = y.topLeftCorner(2, 2), b = y.topRightCorner(2, 2);
  double av = a(0, 0).imag(), bv = a(1, 1).imag();
  cplx z1 = a(0, 1), z2 = b(0, 0), z3 = b(0, 1), z4 = b(1, 1);
  out.residual1 = std::abs(av * av + std::norm(z2) - bv * bv - std::norm(z4));
  out.residual2 = std::abs(z2 * std::conj(z3) + z3 * std::conj(z4) - iu * (av + bv) * z1);
  out.residual3 = std::abs(std::conj(z1) * z2 + z1 * z4 - iu * (bv - av) * z3);
  cmat gram = a * a.adjoint() + b * b.adjoint();
  cplx c = gram.trace() / 2.0;
  out.gram_residual = (gram - c * cmat::Identity(2, 2)).norm();
  cmat ab = a * b;
  out.ab_symmetry = (ab - ab.transpose()).norm();
  return out;
}

Su4Classification classify_su4(const cmat& x, double tol) {
  Su4Classification out;
  auto e = principal_minor_sums(x);
  out.e2 = e[1].real();
  out.e3i = e[2].imag();
  out.e4 = e[3].real();
  const double e2 = out.e2, e3i = out.e3i, e4 = out.e4;
  const double s = x.norm();
  const double nsq = frobenius_norm_sq(x);

  auto charpoly = [&] {
    out.kind = 6;
    out.minimal = ComplexPolynomial({cplx(e4), -iu * e3i, cplx(e2), cplx(0), cplx(1)});
  };
  auto near0 = [&](double v, double power) { return std::abs(v) <= tol * rel(std::pow(s, power)); };

  if (s <= 1e-12) {
    out.kind = 6;
    out.minimal = ComplexPolynomial({cplx(0), cplx(1)});
    return out;
  }

  bool e3_zero = near0(e3i, 3);
  bool e4_zero = near0(e4, 4);
  bool e2_pos = e2 > tol * rel(s * s);

  if (e3_zero && e2_pos && std::abs(e4 - e2 * e2 / 4.0) <= tol * rel(s * s * s * s)) {
    out.kind = 1;
    out.minimal = ComplexPolynomial({cplx(e2 / 2.0), cplx(0), cplx(1)});
  } else if (e2_pos && std::abs(e4 + e2 * e2 / 12.0) <= tol * rel(s * s * s * s) &&
             std::abs(std::abs(e3i) - 8.0 * std::pow(e2 / 6.0, 1.5)) <= tol * rel(s * s * s)) {
    out.kind = 2;
    out.a = (e3i >= 0 ? 1.0 : -1.0) * std::sqrt(e2 / 6.0);
    out.minimal = ComplexPolynomial({cplx(3.0 * out.a * out.a), 2.0 * iu * out.a, cplx(1)});
  } else if (e3_zero && e4_zero && e2_pos) {
    out.kind = 3;
    out.minimal = ComplexPolynomial({cplx(0), cplx(e2), cplx(0), cplx(1)});
  } else if (e2_pos && e4_zero &&
             std::abs(std::abs(e3i) - 2.0 * std::pow(e2 / 3.0, 1.5)) <= tol * rel(s * s * s)) {
    out.kind = 4;
    out.a = (e3i >= 0 ? 1.0 : -1.0) * std::sqrt(e2 / 3.0);
    out.minimal =
        ComplexPolynomial({cplx(0), cplx(2.0 * out.a * out.a), iu * out.a, cplx(1)});
  } else if (!near0(e4, 4) && near0(resultant_condition(e2, e3i, e4), 12) &&
             recover_case5_a(e2, e3i, e4, nsq, tol, out.a)) {
    out.kind = 5;
    out.minimal = ComplexPolynomial(
        {iu * (e4 / out.a), cplx(e2 - out.a * out.a), iu * out.a, cplx(1)});
  } else {
    charpoly();
    return out;
  }

  double resid = out.minimal.eval(x).norm();
  if (resid > tol * std::pow(1.0 + s, out.minimal.degree())) charpoly();
  return out;
}

double resultant_condition(double e2, double e3i, double e4) {
  double e2_2 = e2 * e2, e3_2 = e3i * e3i;
  return 16.0 * e2_2 * e2_2 * e4 + 4.0 * e2_2 * e2 * e3_2 - 128.0 * e2_2 * e4 * e4 -
         144.0 * e2 * e3_2 * e4 - 27.0 * e3_2 * e3_2 + 256.0 * e4 * e4 * e4;
}

bool recover_case5_a(double e2, double e3i, double e4, double norm_sq, double tol, double& a_out) {
  const double s = std::sqrt(std::max(norm_sq, 0.0));
  auto cubic_ok = [&](double a) {
    return std::abs(4.0 * a * a * a - 2.0 * e2 * a + e3i) <= 1e3 * tol * rel(s * s * s);
  };
  // 6 t^2 - |X|^2 t - 2 E4 == 0 at t = a^2
  double disc = norm_sq * norm_sq + 48.0 * e4;
  if (disc >= 0) {
    double rt = std::sqrt(disc);
    for (double t : {(norm_sq + rt) / 12.0, (norm_sq - rt) / 12.0}) {
      if (t <= 0) continue;
      for (double a : {std::sqrt(t), -std::sqrt(t)})
        if (cubic_ok(a)) {
          a_out = a;
          return true;
        }
    }
  }
  // direct fallback: Newton on 4a^3 - 2 E2 a + e3i from a spread of seeds
  for (double seed : {s, -s, s / 2, -s / 2, 0.1 * s + 1e-3, -0.1 * s - 1e-3}) {
    double a = seed;
    for (int it = 0; it < 60; ++it) {
      double fv = 4 * a * a * a - 2 * e2 * a + e3i;
      double dv = 12 * a * a - 2 * e2;
      if (std::abs(dv) < 1e-14) break;
      double step = fv / dv;
      a -= step;
      if (std::abs(step) < 1e-15 * rel(std::abs(a))) break;
    }
    if (std::abs(a) > 1e-9 * rel(s) && cubic_ok(a)) {
      a_out = a;
      return true;
    }
  }
  return false;
}

}  // namespace spinexp
