#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <iostream>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "spinexp/clifford.hpp"
#include "spinexp/core.hpp"
#include "spinexp/expm.hpp"
#include "spinexp/io.hpp"
#include "spinexp/minpoly.hpp"
#include "spinexp/oracle.hpp"
#include "spinexp/sp4repr.hpp"
#include "spinexp/spincover.hpp"

namespace {

using nlohmann::json;
using namespace spinexp;

enum class Group { so3, so5, so6, sp4, sp4hat, su4 };

const std::map<std::string, Group> kGroups{
    {"so3", Group::so3}, {"so5", Group::so5},       {"so6", Group::so6},
    {"sp4", Group::sp4}, {"sp4hat", Group::sp4hat}, {"su4", Group::su4}};

const std::map<std::string, SpinAlgebra> kAlgebras{{"sp4", SpinAlgebra::sp4},
                                                   {"sp4hat", SpinAlgebra::hat_sp4},
                                                   {"su4", SpinAlgebra::su4}};

// ---------------------------------------------------------------------------
// structural gates; violations throw domain_error, mapped to exit 3

rmat require_real_antisym(const MatrixFile& mf, int n) {
  if (mf.rows != n || mf.cols != n) {
    throw domain_error("expected a " + std::to_string(n) + "x" + std::to_string(n) +
                       " matrix, got " + std::to_string(mf.rows) + "x" +
                       std::to_string(mf.cols));
  }
  if (mf.complex_field && mf.data.imag().cwiseAbs().maxCoeff() > 0) {
    throw domain_error("matrix is not real");
  }
  rmat x = mf.data.real();
  double scale = 1 + x.norm();
  if (!((x + x.transpose()).norm() <= 1e-8 * scale)) {
    throw domain_error("matrix is not antisymmetric");
  }
  return x;
}

cmat require_algebra(const MatrixFile& mf, SpinAlgebra alg) {
  if (mf.rows != 4 || mf.cols != 4) {
    throw domain_error("expected a 4x4 matrix, got " + std::to_string(mf.rows) +
                       "x" + std::to_string(mf.cols));
  }
  const cmat& x = mf.data;
  double scale = 1 + x.norm();
  if (!((x + x.adjoint()).norm() <= 1e-8 * scale)) {
    throw domain_error("matrix is not anti-Hermitian");
  }
  if (!(std::abs(x.trace()) <= 1e-8 * scale)) {
    throw domain_error("matrix has nonzero trace");
  }
  if (alg == SpinAlgebra::sp4) {
    cmat j = J(4).cast<cplx>();
    if (!((x * j - j * x.conjugate()).norm() <= 1e-8 * scale)) {
      throw domain_error("X J4 != J4 conj(X): not in sp(4)");
    }
  }
  if (alg == SpinAlgebra::hat_sp4) {
    cmat j = Jhat4().cast<cplx>();
    if (!((x * j - j * x.conjugate()).norm() <= 1e-8 * scale)) {
      throw domain_error("X Jhat4 != Jhat4 conj(X): not in hat-sp(4)");
    }
  }
  return x;
}

// ---------------------------------------------------------------------------
// json fragments

json matrix_doc(const rmat& m) {
  json rows = json::array();
  for (int r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (int c = 0; c < m.cols(); ++c) row.push_back(m(r, c));
    rows.push_back(std::move(row));
  }
  return {{"rows", m.rows()}, {"cols", m.cols()}, {"field", "real"}, {"data", rows}};
}

json matrix_doc(const cmat& m) {
  json rows = json::array();
  for (int r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (int c = 0; c < m.cols(); ++c) {
      row.push_back(json::array({m(r, c).real(), m(r, c).imag()}));
    }
    rows.push_back(std::move(row));
  }
  return {{"rows", m.rows()}, {"cols", m.cols()}, {"field", "complex"}, {"data", rows}};
}

json poly_doc(const RealPolynomial& p) {
  return {{"str", p.str()}, {"degree", p.degree()}, {"coeff", p.c}};
}

json poly_doc(const ComplexPolynomial& p) {
  json coeff = json::array();
  for (const cplx& z : p.c) coeff.push_back(json::array({z.real(), z.imag()}));
  return {{"str", p.str()}, {"degree", p.degree()}, {"coeff", coeff}};
}

json ck_doc(const CayleyKlein& k) {
  return {{"theta", k.theta}, {"lambda", k.lambda}, {"mu", k.mu}};
}

// ---------------------------------------------------------------------------
// expm

struct ExpmOpts {
  Group group = Group::so5;
  std::string input, output, route = "cubic";
  bool verify = false, as_json = false;
};

int run_expm(const ExpmOpts& o) {
  if (o.route != "cubic" && o.group != Group::so3) {
    throw parse_error("--route applies to --group so3 only");
  }
  MatrixFile mf = read_matrix(o.input);

  bool real_out = true;
  rmat value_r;
  cmat value_c;
  std::string method, tag, group_name;
  double dev = 0;

  auto finish_real = [&](const rmat& x, const rmat& v) {
    value_r = v;
    if (o.verify) {
      rmat ref = series_expm(x);
      dev = (v - ref).norm() / std::max(1.0, ref.norm());
    }
  };

  switch (o.group) {
    case Group::so3: {
      group_name = "so3";
      rmat x = require_real_antisym(mf, 3);
      bool quat = o.route == "quaternion";
      method = quat ? "quaternion" : "cubic-formula";
      tag = std::string("so3:") + (quat ? "quaternion" : "cubic");
      finish_real(x, quat ? exp_so3_quaternion(x) : exp_so3_cubic(x));
      break;
    }
    case Group::so5:
    case Group::so6: {
      bool five = o.group == Group::so5;
      group_name = five ? "so5" : "so6";
      rmat x = require_real_antisym(mf, five ? 5 : 6);
      CoverResult cr = five ? exp_so5(x) : exp_so6(x);
      method = to_string(cr.element.method);
      tag = cr.element.case_tag;
      finish_real(x, cr.value);
      break;
    }
    case Group::sp4:
    case Group::sp4hat:
    case Group::su4: {
      SpinAlgebra alg = o.group == Group::sp4      ? SpinAlgebra::sp4
                        : o.group == Group::sp4hat ? SpinAlgebra::hat_sp4
                                                   : SpinAlgebra::su4;
      group_name = o.group == Group::sp4      ? "sp4"
                   : o.group == Group::sp4hat ? "sp4hat"
                                              : "su4";
      cmat x = require_algebra(mf, alg);
      ExpResult er = exp_spin_element(x, alg);
      real_out = false;
      value_c = er.value;
      method = to_string(er.method);
      tag = er.case_tag;
      if (o.verify) {
        cmat ref = series_expm(x);
        dev = (value_c - ref).norm() / std::max(1.0, ref.norm());
      }
      break;
    }
  }

  if (!o.output.empty()) {
    if (real_out) {
      write_matrix(o.output, value_r);
    } else {
      write_matrix(o.output, value_c);
    }
  }

  if (o.as_json) {
    json j{{"command", "expm"}, {"group", group_name}, {"method", method}, {"case", tag}};
    if (!o.output.empty()) j["output"] = o.output;
    if (o.verify) j["deviation"] = dev;
    if (o.output.empty()) {
      j["matrix"] = real_out ? matrix_doc(value_r) : matrix_doc(value_c);
    }
    std::cout << j.dump(2) << "\n";
  } else if (o.output.empty()) {
    // bare document on stdout, metadata out of the way on stderr
    std::cout << (real_out ? matrix_json(value_r) : matrix_json(value_c));
    std::cerr << "method: " << method << " (" << tag << ")\n";
    if (o.verify) std::cerr << "deviation: " << format_g17(dev) << "\n";
  } else {
    std::cout << "group: " << group_name << "\n"
              << "method: " << method << " (" << tag << ")\n"
              << "wrote: " << o.output << "\n";
    if (o.verify) std::cout << "deviation: " << format_g17(dev) << "\n";
  }

  if (o.verify && !(dev <= 1e-8)) {
    std::cerr << "error: verification deviation " << format_g17(dev)
              << " exceeds 1e-8\n";
    return 4;
  }
  return 0;
}

// ---------------------------------------------------------------------------
// classify

struct ClassifyOpts {
  SpinAlgebra alg = SpinAlgebra::su4;
  std::string name = "su4";
  std::string input;
  bool as_json = false;
};

int run_classify(const ClassifyOpts& o) {
  MatrixFile mf = read_matrix(o.input);
  cmat x = require_algebra(mf, o.alg);

  if (o.alg == SpinAlgebra::su4) {
    Su4Classification c = classify_su4(x);
    double nsq = frobenius_norm_sq(x);
    double dt = det(x).real();
    bool has_a = c.kind == 2 || c.kind == 4 || c.kind == 5;
    if (o.as_json) {
      json j{{"command", "classify"},
             {"algebra", "su4"},
             {"case", c.kind},
             {"case_tag", "case" + std::to_string(c.kind)},
             {"minimal", poly_doc(c.minimal)},
             {"E2", c.e2},
             {"E3_im", c.e3i},
             {"E4", c.e4},
             {"norm_sq", nsq},
             {"det", dt}};
      if (has_a) j["a"] = c.a;
      std::cout << j.dump(2) << "\n";
    } else {
      std::cout << "algebra: su4\n"
                << "case: case" << c.kind << "\n"
                << "minimal: " << c.minimal.str() << "\n"
                << "degree: " << c.minimal.degree() << "\n"
                << "E2: " << format_g17(c.e2) << "\n"
                << "E3_im: " << format_g17(c.e3i) << "\n"
                << "E4: " << format_g17(c.e4) << "\n";
      if (has_a) std::cout << "a: " << format_g17(c.a) << "\n";
      std::cout << "norm_sq: " << format_g17(nsq) << "\n"
                << "det: " << format_g17(dt) << "\n";
    }
  } else {
    Sp4Classification c = classify_sp4(x);
    if (o.as_json) {
      json j{{"command", "classify"},
             {"algebra", o.name},
             {"case_tag", to_string(c.kind)},
             {"minimal", poly_doc(c.minimal)},
             {"E2", c.norm_sq / 2},
             {"E4", c.det},
             {"norm_sq", c.norm_sq},
             {"det", c.det}};
      std::cout << j.dump(2) << "\n";
    } else {
      std::cout << "algebra: " << o.name << "\n"
                << "case: " << to_string(c.kind) << "\n"
                << "minimal: " << c.minimal.str() << "\n"
                << "degree: " << c.minimal.degree() << "\n"
                << "E2: " << format_g17(c.norm_sq / 2) << "\n"
                << "E4: " << format_g17(c.det) << "\n"
                << "norm_sq: " << format_g17(c.norm_sq) << "\n"
                << "det: " << format_g17(c.det) << "\n";
    }
  }
  return 0;
}

// ---------------------------------------------------------------------------
// verify-basis

struct VerifyBasisOpts {
  std::string name = "all";
  bool perturb = false, as_json = false;
};

int run_verify_basis(const VerifyBasisOpts& o) {
  std::vector<std::string> names;
  if (o.name == "all") {
    names = {"F", "Y", "g", "fhat"};
  } else {
    names = {o.name};
  }

  bool all_ok = true;
  json report = json::array();
  for (const std::string& n : names) {
    CliffordStructure s = named_basis(n);
    if (o.perturb) s.basis.f[0](0, 0) += 1e-3;

    BasisCheck rel = verify_relations(s.basis, 0.0);
    bool rev_ok = true, cc_ok = true, grade_ok = true;
    for (const cmat& g : s.basis.generators()) {
      rev_ok = rev_ok && (s.rev(g) - g).norm() == 0;
      cc_ok = cc_ok && (s.cc(g) + g).norm() == 0;
      grade_ok = grade_ok && (grade_involution(s, g) + g).norm() == 0;
    }

    auto line = [&](const char* what, bool ok) {
      if (!o.as_json) {
        std::cout << n << ": " << what << ": " << (ok ? "pass" : "FAIL") << "\n";
      }
      all_ok = all_ok && ok;
    };
    line("generator relations", rel.ok);
    if (!rel.ok && !o.as_json) std::cout << "  " << rel.detail << "\n";
    line("reversion fixes 1-vectors", rev_ok);
    line("conjugation negates 1-vectors", cc_ok);
    line("grade involution negates 1-vectors", grade_ok);

    report.push_back(json{{"name", n},
                          {"relations", rel.ok},
                          {"relations_detail", rel.detail},
                          {"rev_fixes", rev_ok},
                          {"cc_negates", cc_ok},
                          {"grade_negates", grade_ok}});
  }
  if (o.as_json) {
    std::cout << json{{"command", "verify-basis"}, {"ok", all_ok}, {"bases", report}}.dump(2)
              << "\n";
  } else {
    std::cout << (all_ok ? "all checks passed\n" : "checks FAILED\n");
  }
  return all_ok ? 0 : 1;
}

// ---------------------------------------------------------------------------
// decompose-sp4

int run_decompose(const std::string& input) {
  MatrixFile mf = read_matrix(input);
  if (mf.rows != 4 || mf.cols != 4) {
    throw domain_error("expected a 4x4 matrix, got " + std::to_string(mf.rows) +
                       "x" + std::to_string(mf.cols));
  }
  const cmat& x = mf.data;

  Sp4Params p;
  try {
    p = decompose_sp4(x);
  } catch (const decomposition_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 5;
  }
  double residual = (reconstruct_sp4(p) - x).norm();

  json j{{"command", "decompose-sp4"},
         {"case", to_string(p.kind)},
         {"case_index", static_cast<int>(p.kind)},
         {"sigma", {p.sigma1, p.sigma2}},
         {"theta", {p.theta1, p.theta2}},
         {"s1", ck_doc(p.s1)},
         {"s2", ck_doc(p.s2)},
         {"s3", ck_doc(p.s3)},
         {"a", p.a},
         {"b", p.b},
         {"c", p.c},
         {"lambda", p.lambda},
         {"residual", residual}};
  std::cout << j.dump(2) << "\n";
  return 0;
}

// ---------------------------------------------------------------------------
// bench

struct BenchOpts {
  std::string sizes = "5,6";
  int count = 100;
  std::uint64_t seed = 42;
  bool as_json = false;
};

rmat random_antisym(int n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  // uniform in [-1, 1] straight off the raw 64-bit stream: u = (r >> 11) / 2^53
  auto draw = [&rng]() {
    return 2.0 * ((rng() >> 11) * (1.0 / 9007199254740992.0)) - 1.0;
  };
  rmat x = rmat::Zero(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      double v = draw();
      x(i, j) = v;
      x(j, i) = -v;
    }
  }
  return x;
}

int run_bench(const BenchOpts& o) {
  std::vector<int> sizes;
  {
    std::stringstream ss(o.sizes);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
      if (tok == "5") {
        sizes.push_back(5);
      } else if (tok == "6") {
        sizes.push_back(6);
      } else {
        throw parse_error("bench: --sizes entries must be 5 or 6, got \"" + tok + "\"");
      }
    }
    if (sizes.empty()) throw parse_error("bench: --sizes is empty");
  }
  if (o.count < 1) throw parse_error("bench: --count must be positive");

  using clock = std::chrono::steady_clock;
  auto us = [](clock::duration d) {
    return std::chrono::duration<double, std::micro>(d).count();
  };
  auto median = [](std::vector<double> v) {
    std::nth_element(v.begin(), v.begin() + v.size() / 2, v.end());
    return v[v.size() / 2];
  };

  json results = json::array();
  if (!o.as_json) {
    std::cout << "count: " << o.count << "  seed: " << o.seed << "\n";
  }
  for (int n : sizes) {
    std::vector<double> t_spin, t_series;
    t_spin.reserve(o.count);
    t_series.reserve(o.count);
    double max_dev = 0;
    for (int k = 0; k < o.count; ++k) {
      rmat x = random_antisym(n, o.seed + 0x9E3779B97F4A7C15ull * (k + 1));

      auto t0 = clock::now();
      CoverResult cr = n == 5 ? exp_so5(x) : exp_so6(x);
      auto t1 = clock::now();
      rmat ref = series_expm(x);
      auto t2 = clock::now();

      t_spin.push_back(us(t1 - t0));
      t_series.push_back(us(t2 - t1));
      max_dev = std::max(max_dev, (cr.value - ref).norm() / ref.norm());
    }
    double med_spin = median(t_spin), med_series = median(t_series);
    if (o.as_json) {
      results.push_back(json{{"n", n},
                             {"median_spin_us", med_spin},
                             {"median_series_us", med_series},
                             {"max_deviation", max_dev}});
    } else {
      std::cout << "n=" << n << "\n"
                << "  spin route median:   " << med_spin << " us\n"
                << "  series route median: " << med_series << " us\n"
                << "  max relative deviation: " << format_g17(max_dev) << "\n";
    }
  }
  if (o.as_json) {
    std::cout << json{{"command", "bench"},
                      {"count", o.count},
                      {"seed", o.seed},
                      {"results", results}}
                     .dump(2)
              << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"closed-form exponentials on so(5) and so(6) through their spin covers"};
  app.require_subcommand(1);
  int rc = 0;

  ExpmOpts eo;
  CLI::App* expm = app.add_subcommand("expm", "exponentiate a Lie-algebra element");
  expm->add_option("--group", eo.group, "so3|so5|so6|sp4|sp4hat|su4")
      ->required()
      ->transform(CLI::CheckedTransformer(kGroups));
  expm->add_option("--input", eo.input, "matrix json file")->required();
  expm->add_option("--output", eo.output, "where to write the exponential");
  expm->add_option("--route", eo.route, "so3 only: cubic|quaternion")
      ->check(CLI::IsMember({"cubic", "quaternion"}));
  expm->add_flag("--verify", eo.verify, "compare against the series exponential");
  expm->add_flag("--json", eo.as_json, "machine-readable report");
  expm->callback([&] { rc = run_expm(eo); });

  ClassifyOpts co;
  CLI::App* classify = app.add_subcommand("classify", "minimal-polynomial case of an algebra element");
  classify->add_option("--algebra", co.name, "sp4|sp4hat|su4")
      ->required()
      ->check(CLI::IsMember({"sp4", "sp4hat", "su4"}));
  classify->add_option("--input", co.input, "matrix json file")->required();
  classify->add_flag("--json", co.as_json, "machine-readable report");
  classify->callback([&] {
    co.alg = kAlgebras.at(co.name);
    rc = run_classify(co);
  });

  VerifyBasisOpts vo;
  CLI::App* vb = app.add_subcommand("verify-basis", "check generator relations and involution actions");
  vb->add_option("--name", vo.name, "F|Y|g|fhat|all")
      ->check(CLI::IsMember({"F", "Y", "g", "fhat", "all"}));
  vb->add_flag("--perturb", vo.perturb, "inject an error to exercise the failure path");
  vb->add_flag("--json", vo.as_json, "machine-readable report");
  vb->callback([&] { rc = run_verify_basis(vo); });

  std::string di;
  bool dec_json = false;
  CLI::App* dec = app.add_subcommand("decompose-sp4", "Cartan-style parameters of an Sp(4) element");
  dec->add_option("--input", di, "matrix json file")->required();
  dec->add_flag("--json", dec_json, "accepted for uniformity; output is already json");
  dec->callback([&] { rc = run_decompose(di); });

  BenchOpts bo;
  CLI::App* bench = app.add_subcommand("bench", "time the spin route against the series");
  bench->add_option("--sizes", bo.sizes, "comma list of 5 and 6 (default 5,6)");
  bench->add_option("--count", bo.count, "trials per size");
  bench->add_option("--seed", bo.seed, "base seed");
  bench->add_flag("--json", bo.as_json, "machine-readable report");
  bench->callback([&] { rc = run_bench(bo); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const parse_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const decomposition_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 5;
  } catch (const domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return rc;
}
