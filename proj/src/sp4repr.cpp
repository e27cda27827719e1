#include "spinexp/sp4repr.hpp"

#include <cmath>
#include <sstream>

#include "spinexp/quat.hpp"

namespace spinexp {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kCoincide = 1e-8;  // singular-value coincidence threshold
constexpr double kSnap = 1e-10;     // below this a coincidence is taken exact
constexpr double kRecover = 1e-8;   // reconstruction residual gate

double wrap_2pi(double t) {
  t = std::fmod(t, 2 * kPi);
  return t < 0 ? t + 2 * kPi : t;
}

cmat diag2(cplx d0, cplx d1) {
  cmat d = cmat::Zero(2, 2);
  d(0, 0) = d0;
  d(1, 1) = d1;
  return d;
}

cplx det2(const cmat& m) { return m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0); }

/// u = e^{i a} S with S in SU(2); returns S, writes a.
cmat su2_split(const cmat& u, double& a) {
  a = 0.5 * std::arg(det2(u));
  return std::polar(1.0, -a) * u;
}

/// A = U diag(s1, s2) V^* with V in SU(2), s1 >= s2, via the eigenpairs of
/// A^* A. s2 comes from |det A| / s1 when possible: the quadratic formula
/// loses half the digits of a near-zero small eigenvalue, the determinant
/// route does not.
struct Svd2 {
  cmat u, v;
  double s1 = 0, s2 = 0;
};

Svd2 svd2(const cmat& a) {
  Svd2 out;
  cmat h = a.adjoint() * a;
  double p = std::real(h(0, 0));
  double q = std::real(h(1, 1));
  cplx off = 0.5 * (h(0, 1) + std::conj(h(1, 0)));
  double gap = std::sqrt(std::max(0.0, (p - q) * (p - q) + 4 * std::norm(off)));
  double mu_hi = 0.5 * (p + q + gap);
  double mu_lo = std::max(0.0, 0.5 * (p + q - gap));

  Eigen::Vector2cd v1;
  Eigen::Vector2cd cand1(off, cplx(mu_hi - p, 0));
  Eigen::Vector2cd cand2(cplx(mu_hi - q, 0), std::conj(off));
  Eigen::Vector2cd best = cand1.norm() >= cand2.norm() ? cand1 : cand2;
  if (best.norm() <= 1e-14 * std::max(1.0, mu_hi))
    v1 = Eigen::Vector2cd(1, 0);  // A^* A is (near) scalar; any frame works
  else
    v1 = best / best.norm();
  out.v = cmat(2, 2);
  out.v << v1(0), -std::conj(v1(1)), v1(1), std::conj(v1(0));

  out.s1 = std::min(1.0, std::sqrt(mu_hi));
  out.s2 = out.s1 > 1e-8 ? std::min(std::abs(det2(a)) / out.s1, out.s1)
                         : std::sqrt(mu_lo);

  if (out.s1 <= 1e-8) {
    out.u = cmat::Identity(2, 2);
    return out;
  }
  Eigen::Vector2cd u1 = a * out.v.col(0);
  u1 /= u1.norm();
  Eigen::Vector2cd w = a * out.v.col(1);
  w -= u1.dot(w) * u1;
  Eigen::Vector2cd u2;
  if (w.norm() > 1e-14)
    u2 = w / w.norm();
  else
    u2 = Eigen::Vector2cd(-std::conj(u1(1)), std::conj(u1(0)));
  out.u = cmat(2, 2);
  out.u << u1(0), u2(0), u1(1), u2(1);
  return out;
}

CayleyKlein ck_identity() { return CayleyKlein{}; }

/// Recovers e^{-ic} conj(S3) = B conj(S2) diag(1/t1, 1/t2) S2^T. Valid for
/// every case with theta1 theta2 > 0: unitarity of the product is exactly
/// the square-root relation conj(B)^* conj(B) = I - A^* A.
void recover_s3_generic(const cmat& b, const cmat& s2, double t1, double t2,
                        CayleyKlein& s3, double& c) {
  cmat g = b * s2.conjugate() * diag2(1.0 / t1, 1.0 / t2) * s2.transpose();
  c = -0.5 * std::arg(det2(g));
  cmat s3bar = std::polar(1.0, c) * g;
  s3 = cayley_klein(s3bar.conjugate(), 1e-3);
}

/// theta1 = 0: only the second column of e^{-ic} conj(S3) conj(S2) touches
/// B, so read it off, complete to SU(2), and fold the phase in (c = 0).
void recover_s3_rank1(const cmat& b, const cmat& s2, double t2,
                      CayleyKlein& s3, double& c) {
  Eigen::Vector2cd u = (b * s2.conjugate()).col(1) / t2;
  u /= u.norm();
  cmat w(2, 2);
  w << std::conj(u(1)), u(0), -std::conj(u(0)), u(1);
  c = 0;
  cmat s3bar = w * s2.transpose();
  s3 = cayley_klein(s3bar.conjugate(), 1e-3);
}

double s4_angle(const Sp4Params& p) {
  cmat s4 = p.s2.matrix().adjoint() * p.s3.matrix().adjoint() *
            p.s1.matrix().conjugate();
  return std::arg(s4(0, 0));
}

Sp4Params recover(ReprCase kind, const cmat& a_blk, const cmat& b_blk,
                  const Svd2& sv) {
  Sp4Params p;
  p.kind = kind;
  p.sigma1 = sv.s1;
  p.sigma2 = sv.s2;
  switch (kind) {
    case ReprCase::case3: p.sigma1 = p.sigma2 = 1; break;
    case ReprCase::case4: p.sigma1 = p.sigma2 = 0; break;
    case ReprCase::case5: p.sigma2 = 0; break;
    case ReprCase::case6: p.sigma1 = 1; break;
    default: break;
  }
  p.theta1 = std::sqrt((1 - p.sigma1) * (1 + p.sigma1));
  p.theta2 = std::sqrt((1 - p.sigma2) * (1 + p.sigma2));

  if (kind == ReprCase::case2) {
    double s = 0.5 * (sv.s1 + sv.s2);
    double t = std::sqrt((1 - s) * (1 + s));
    p.sigma1 = p.sigma2 = s;
    p.theta1 = p.theta2 = t;
    double a = 0, b = 0;
    cmat s1m = su2_split(a_blk / s, a);
    cmat s2m = su2_split(b_blk / t, b);
    p.s1 = cayley_klein(s1m, 1e-3);
    p.s2 = cayley_klein(s2m, 1e-3);
    p.a = a;
    p.b = b;
    return p;
  }

  double a = 0;
  cmat s1m = su2_split(sv.u, a);
  p.s1 = cayley_klein(s1m, 1e-3);
  p.s2 = cayley_klein(sv.v, 1e-3);  // det V = 1 by construction, so b = 0
  p.a = a;

  if (p.theta2 <= 1e-12) {
    p.s3 = ck_identity();  // case 3: B = 0, nothing to recover
    p.c = 0;
  } else if (p.theta1 <= 1e-12) {
    recover_s3_rank1(b_blk, sv.v, p.theta2, p.s3, p.c);
  } else {
    recover_s3_generic(b_blk, sv.v, p.theta1, p.theta2, p.s3, p.c);
  }

  if (kind == ReprCase::case1 || kind == ReprCase::case5 ||
      kind == ReprCase::case6)
    p.lambda = s4_angle(p);
  return p;
}

bool in_window(ReprCase kind, double s1, double s2, double tol) {
  switch (kind) {
    case ReprCase::case1: return true;
    case ReprCase::case2: return s1 - s2 <= tol;
    case ReprCase::case3: return 1 - s2 <= tol;
    case ReprCase::case4: return s1 <= tol;
    case ReprCase::case5: return s2 <= tol;
    case ReprCase::case6: return 1 - s1 <= tol;
  }
  return false;
}

}  // namespace

cmat CayleyKlein::matrix() const {
  double c = std::cos(theta), s = std::sin(theta);
  cmat m(2, 2);
  m << c * std::polar(1.0, lambda), s * std::polar(1.0, mu),
      -s * std::polar(1.0, -mu), c * std::polar(1.0, -lambda);
  return m;
}

CayleyKlein cayley_klein(const cmat& s, double tol) {
  if (s.rows() != 2 || s.cols() != 2)
    throw domain_error("cayley_klein: input must be 2x2");
  if ((s.adjoint() * s - cmat::Identity(2, 2)).norm() > tol ||
      std::abs(det2(s) - 1.0) > tol)
    throw domain_error("cayley_klein: input is not in SU(2)");
  cplx alpha = 0.5 * (s(0, 0) + std::conj(s(1, 1)));
  cplx beta = 0.5 * (s(0, 1) - std::conj(s(1, 0)));
  CayleyKlein out;
  out.theta = std::atan2(std::abs(beta), std::abs(alpha));
  out.lambda = std::abs(alpha) > 0 ? wrap_2pi(std::arg(alpha)) : 0;
  out.mu = std::abs(beta) > 0 ? wrap_2pi(std::arg(beta)) : 0;
  return out;
}

const char* to_string(ReprCase c) {
  switch (c) {
    case ReprCase::case1: return "case1";
    case ReprCase::case2: return "case2";
    case ReprCase::case3: return "case3";
    case ReprCase::case4: return "case4";
    case ReprCase::case5: return "case5";
    case ReprCase::case6: return "case6";
  }
  return "?";
}

cmat reconstruct_sp4(const Sp4Params& p) {
  if (p.sigma2 < -1e-12 || p.sigma1 > 1 + 1e-12 || p.sigma2 > p.sigma1 + 1e-12)
    throw domain_error("reconstruct_sp4: need 0 <= sigma2 <= sigma1 <= 1");
  if (std::abs(p.theta1 * p.theta1 + p.sigma1 * p.sigma1 - 1) > 1e-9 ||
      std::abs(p.theta2 * p.theta2 + p.sigma2 * p.sigma2 - 1) > 1e-9)
    throw domain_error("reconstruct_sp4: theta_i^2 + sigma_i^2 != 1");
  if (!in_window(p.kind, p.sigma1, p.sigma2, 1e-6))
    throw domain_error("reconstruct_sp4: sigmas outside the case's window");

  cmat s1m = p.s1.matrix();
  cmat s2m = p.s2.matrix();
  cmat a, b;
  if (p.kind == ReprCase::case2) {
    a = p.sigma1 * std::polar(1.0, p.a) * s1m;
    b = p.theta1 * std::polar(1.0, p.b) * s2m;
  } else {
    a = std::polar(1.0, p.a - p.b) * s1m * diag2(p.sigma1, p.sigma2) *
        s2m.adjoint();
    b = std::polar(1.0, -p.c) * p.s3.matrix().conjugate() * s2m.conjugate() *
        diag2(p.theta1, p.theta2) * s2m.transpose();
  }
  return theta_h(a, b);
}

Sp4Params decompose_sp4(const cmat& x) {
  if (x.rows() != 4 || x.cols() != 4)
    throw domain_error("decompose_sp4: input must be 4x4");
  if (!((x.adjoint() * x - cmat::Identity(4, 4)).norm() <= 1e-8))
    throw domain_error("decompose_sp4: input is not unitary");
  cmat j4 = J(4).cast<cplx>();
  if (!((x.transpose() * j4 * x - j4).norm() <= 1e-8))
    throw domain_error("decompose_sp4: X^T J4 X != J4");

  cmat a_blk = x.block(0, 0, 2, 2);
  cmat b_blk = x.block(0, 2, 2, 2);
  Svd2 sv = svd2(a_blk);

  ReprCase kind;
  if (sv.s2 >= 1 - kCoincide)
    kind = ReprCase::case3;
  else if (sv.s1 <= kCoincide)
    kind = ReprCase::case4;
  else if (sv.s1 - sv.s2 <= kCoincide)
    kind = ReprCase::case2;
  else if (sv.s1 >= 1 - kCoincide)
    kind = ReprCase::case6;  // includes the s2 = 0 corner the cases skip
  else if (sv.s2 <= kCoincide)
    kind = ReprCase::case5;
  else
    kind = ReprCase::case1;

  // A coincidence in the borderline band is kept generic when that still
  // reproduces the matrix: the parameterization is redundant and case 1
  // loses no information.
  if (kind != ReprCase::case1 && !in_window(kind, sv.s1, sv.s2, kSnap) &&
      sv.s1 > 1e-12 && 1 - sv.s1 > 1e-12 && sv.s2 > 1e-12) {
    try {
      Sp4Params p = recover(ReprCase::case1, a_blk, b_blk, sv);
      if ((reconstruct_sp4(p) - x).norm() <= 1e-9) return p;
    } catch (const domain_error&) {
    }
  }

  Sp4Params p = recover(kind, a_blk, b_blk, sv);
  double residual = (reconstruct_sp4(p) - x).norm();
  if (!(residual <= kRecover)) {
    std::ostringstream msg;
    msg << "decompose_sp4: " << to_string(kind)
        << " recovery left residual " << residual;
    throw decomposition_error(msg.str());
  }
  return p;
}

double verify_s4_constraint(const Sp4Params& p) {
  cmat d;
  switch (p.kind) {
    case ReprCase::case1:
      if (p.theta1 <= 1e-12 || p.theta2 <= 1e-12)
        throw domain_error("verify_s4_constraint: theta_i = 0 is degenerate");
      d = diag2(p.sigma1 / p.theta1, p.sigma2 / p.theta2);
      break;
    case ReprCase::case5:
      if (p.theta1 <= 1e-12)
        throw domain_error("verify_s4_constraint: theta1 = 0 is degenerate");
      d = diag2(p.sigma1 / p.theta1, 0);
      break;
    case ReprCase::case6:
      if (p.sigma2 <= 1e-12)
        throw domain_error("verify_s4_constraint: sigma2 = 0 is degenerate");
      d = diag2(0, p.theta2 / p.sigma2);
      break;
    default:
      throw domain_error("verify_s4_constraint: cases 1, 5, 6 only");
  }
  cmat s4 = p.s2.matrix().adjoint() * p.s3.matrix().adjoint() *
            p.s1.matrix().conjugate();
  return (d * s4.transpose() - s4 * d).norm();
}

}  // namespace spinexp
