#include "spinexp/expm.hpp"

#include <algorithm>
#include <cmath>

#include "spinexp/oracle.hpp"
#include "spinexp/quat.hpp"

namespace spinexp {

namespace {

double sinc(double t) {
  if (std::abs(t) < 1e-4) {
    const double t2 = t * t;
    return 1.0 - t2 / 6.0 + t2 * t2 / 120.0;
  }
  return std::sin(t) / t;
}

// (1 - cos t) / t^2
double haversinc(double t) {
  if (std::abs(t) < 1e-4) {
    const double t2 = t * t;
    return 0.5 - t2 / 24.0 + t2 * t2 / 720.0;
  }
  return (1.0 - std::cos(t)) / (t * t);
}

}  // namespace

const char* to_string(ExpMethod m) {
  switch (m) {
    case ExpMethod::quadratic_formula: return "quadratic-formula";
    case ExpMethod::shifted_formula: return "shifted-formula";
    case ExpMethod::cubic_formula: return "cubic-formula";
    case ExpMethod::quartic_formula: return "quartic-formula";
    case ExpMethod::lagrange: return "lagrange";
    default: return "series-fallback";
  }
}

const char* to_string(SpinAlgebra a) {
  switch (a) {
    case SpinAlgebra::sp4: return "sp4";
    case SpinAlgebra::hat_sp4: return "sp4hat";
    default: return "su4";
  }
}

cmat exp_quadratic(const cmat& x, double lambda) {
  const Eigen::Index n = x.rows();
  return std::cos(lambda) * cmat::Identity(n, n) + sinc(lambda) * x;
}

cmat exp_shifted(const cmat& x, double gamma, double lambda_sq) {
  const double sigma = std::sqrt(lambda_sq + gamma * gamma);
  const double sc = sinc(sigma);
  const Eigen::Index n = x.rows();
  const cplx phase = std::exp(cplx(0, -gamma));
  return phase * ((std::cos(sigma) + iu * gamma * sc) * cmat::Identity(n, n) + sc * x);
}

cmat exp_cubic(const cmat& x, double c) {
  const Eigen::Index n = x.rows();
  return cmat::Identity(n, n) + sinc(c) * x + haversinc(c) * cmat(x * x);
}

cmat exp_quartic(const cmat& x, double a, double b) {
  const double d = b * b - a * a;
  if (d <= 1e-8 * (a * a + b * b))
    throw domain_error("exp_quartic: eigenvalue pairs too close");
  const Eigen::Index n = x.rows();
  const double ca = std::cos(a), cb = std::cos(b);
  const double sa = sinc(a), sb = sinc(b);  // sin(a)/a, sin(b)/b
  const cmat x2 = x * x;
  cmat r = (b * b * ca - a * a * cb) * cmat::Identity(n, n);
  r += (b * b * sa - a * a * sb) * x;
  r += (ca - cb) * x2;
  r += (sa - sb) * cmat(x2 * x);
  return r / d;
}

std::array<double, 4> quartic_real_roots(double c3, double c2, double c1, double c0) {
  rmat comp = rmat::Zero(4, 4);
  comp(0, 3) = -c0;
  comp(1, 3) = -c1;
  comp(2, 3) = -c2;
  comp(3, 3) = -c3;
  comp(1, 0) = comp(2, 1) = comp(3, 2) = 1.0;
  Eigen::EigenSolver<rmat> es(comp, /*computeEigenvectors=*/false);
  if (es.info() != Eigen::Success) throw convergence_error("quartic_real_roots: eigensolver failed");

  const double scale =
      1.0 + std::max({std::abs(c0), std::abs(c1), std::abs(c2), std::abs(c3)});
  auto p = [&](double y) { return (((y + c3) * y + c2) * y + c1) * y + c0; };
  auto dp = [&](double y) { return ((4.0 * y + 3.0 * c3) * y + 2.0 * c2) * y + c1; };

  std::array<double, 4> out{};
  for (int k = 0; k < 4; ++k) {
    cplx lam = es.eigenvalues()(k);
    if (std::abs(lam.imag()) > 1e-6 * scale)
      throw domain_error("quartic_real_roots: complex root");
    double y = lam.real();
    for (int it = 0; it < 3; ++it) {
      const double der = dp(y);
      if (std::abs(der) < 1e-14 * scale) break;
      y -= p(y) / der;
    }
    out[static_cast<size_t>(k)] = y;
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

ExpResult exp_sp4_family(const cmat& y, const char* prefix, double tol) {
  ExpResult out;
  const auto cl = classify_sp4(y, tol);
  out.case_tag = std::string(prefix) + ":" + to_string(cl.kind);
  try {
    switch (cl.kind) {
      case Sp4Case::zero:
        // |Y| <= 1e-12, the lambda -> 0 limit of the quadratic form
        out.value = cmat::Identity(4, 4) + y;
        out.method = ExpMethod::quadratic_formula;
        break;
      case Sp4Case::quadratic:
        out.value = exp_quadratic(y, std::sqrt(cl.norm_sq) / 2.0);
        out.method = ExpMethod::quadratic_formula;
        break;
      case Sp4Case::cubic:
        out.value = exp_cubic(y, std::sqrt(cl.norm_sq / 2.0));
        out.method = ExpMethod::cubic_formula;
        break;
      case Sp4Case::quartic: {
        const double th2 = cl.norm_sq / 2.0;
        const double disc = th2 * th2 - 4.0 * cl.det;
        if (disc < 0) throw domain_error("negative pair discriminant");
        const double s = std::sqrt(disc);
        const double a = std::sqrt(std::max(0.0, (th2 - s) / 2.0));
        const double b = std::sqrt((th2 + s) / 2.0);
        out.value = exp_quartic(y, a, b);
        out.method = ExpMethod::quartic_formula;
        break;
      }
    }
  } catch (const domain_error&) {
    out.value = series_expm(y);
    out.method = ExpMethod::series_fallback;
  }
  return out;
}

ExpResult exp_su4_family(const cmat& x, double tol) {
  ExpResult out;
  const auto cl = classify_su4(x, tol);
  out.case_tag = "su4:case" + std::to_string(cl.kind);
  const double s = x.norm();
  if (s <= 1e-12) {
    out.value = cmat::Identity(4, 4) + x;
    out.method = ExpMethod::quadratic_formula;
    return out;
  }
  try {
    switch (cl.kind) {
      case 1:
        out.value = exp_quadratic(x, std::sqrt(cl.e2 / 2.0));
        out.method = ExpMethod::quadratic_formula;
        break;
      case 2:
        out.value = exp_shifted(x, cl.a, 3.0 * cl.a * cl.a);
        out.method = ExpMethod::shifted_formula;
        break;
      case 3:
        out.value = exp_cubic(x, std::sqrt(cl.e2));
        out.method = ExpMethod::cubic_formula;
        break;
      case 4:
        out.value = lagrange_exp(x, {cplx(0), iu * cl.a, -2.0 * iu * cl.a});
        out.method = ExpMethod::lagrange;
        break;
      case 5: {
        // the two simple eigenvalues ib, ic: t^2 + 2 a t + E4 / a^2
        const double disc = 4.0 * cl.a * cl.a - 4.0 * cl.e4 / (cl.a * cl.a);
        if (disc < 0) throw domain_error("case5: complex companion pair");
        const double r = std::sqrt(disc);
        const double vb = (-2.0 * cl.a + r) / 2.0, vc = (-2.0 * cl.a - r) / 2.0;
        out.value = lagrange_exp(x, {iu * cl.a, iu * vb, iu * vc});
        out.method = ExpMethod::lagrange;
        break;
      }
      default: {
        if (std::abs(cl.e3i) <= tol * std::max(1.0, s * s * s)) {
          // biquadratic x^4 + E2 x^2 + E4: pairs from t^2 - E2 t + E4
          const double disc = cl.e2 * cl.e2 - 4.0 * cl.e4;
          if (disc < 0) throw domain_error("case6: complex biquadratic pair");
          const double r = std::sqrt(disc);
          const double a = std::sqrt(std::max(0.0, (cl.e2 - r) / 2.0));
          const double b = std::sqrt(std::max(0.0, (cl.e2 + r) / 2.0));
          out.value = exp_quartic(x, a, b);
          out.method = ExpMethod::quartic_formula;
        } else {
          // x = iy turns the characteristic polynomial into a real quartic
          const auto ys = quartic_real_roots(0.0, -cl.e2, cl.e3i, cl.e4);
          out.value = lagrange_exp(x, {iu * ys[0], iu * ys[1], iu * ys[2], iu * ys[3]});
          out.method = ExpMethod::lagrange;
        }
        break;
      }
    }
  } catch (const domain_error&) {
    out.value = series_expm(x);
    out.method = ExpMethod::series_fallback;
  }
  return out;
}

}  // namespace

ExpResult exp_spin_element(const cmat& x, SpinAlgebra alg, double tol) {
  switch (alg) {
    case SpinAlgebra::sp4: return exp_sp4_family(x, "sp4", tol);
    case SpinAlgebra::hat_sp4: return exp_sp4_family(x, "sp4hat", tol);
    default: return exp_su4_family(x, tol);
  }
}

rmat exp_so3_cubic(const rmat& x) {
  const double a = x(2, 1), b = x(0, 2), c = x(1, 0);
  const double lam = std::sqrt(a * a + b * b + c * c);
  return rmat::Identity(3, 3) + sinc(lam) * x + haversinc(lam) * rmat(x * x);
}

rmat exp_so3_quaternion(const rmat& x) {
  const double a = x(2, 1), b = x(0, 2), c = x(1, 0);
  const double lam = std::sqrt(a * a + b * b + c * c);
  const double h = 0.5 * sinc(lam / 2.0);  // sin(lam/2)/lam
  const Quaternion p{std::cos(lam / 2.0), h * a, h * b, h * c};
  const std::array<Quaternion, 3> axes = {Quaternion::i(), Quaternion::j(), Quaternion::k()};
  rmat r(3, 3);
  for (int col = 0; col < 3; ++col) {
    const Quaternion v = p * axes[static_cast<size_t>(col)] * p.conj();
    r(0, col) = v.x;
    r(1, col) = v.y;
    r(2, col) = v.z;
  }
  return r;
}

}  // namespace spinexp
