// Command-line front end: build representations, run the verification
// suites, and emit states, matrices and reports as exact JSON or text.

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "exlorentz/exlorentz.hpp"

namespace {

using namespace exlorentz;

struct CommonOpts {
  std::string lambda_text = "0";
  std::string format = "json";
  bool decimal = false;
  std::string out_path;
  int lambda_cap = kDefaultLambdaCap;
};

void add_common(CLI::App* cmd, CommonOpts& o, bool needs_lambda = true) {
  auto* opt = cmd->add_option("--lambda", o.lambda_text,
                              "maximal spin, written \"k\" or \"k/2\"");
  if (needs_lambda) opt->required();
  cmd->add_option("--format", o.format, "output format")
      ->check(CLI::IsMember({"json", "text"}))
      ->capture_default_str();
  cmd->add_flag("--decimal", o.decimal,
                "render matrix entries as 15-digit decimals instead of exact triples");
  cmd->add_option("--out", o.out_path, "write the document to a file instead of stdout");
  cmd->add_option("--lambda-cap", o.lambda_cap, "largest accepted maximal spin")
      ->capture_default_str();
}

void emit(const CommonOpts& o, const std::string& doc) {
  if (o.out_path.empty()) {
    std::cout << doc;
    if (!doc.empty() && doc.back() != '\n') std::cout << "\n";
  } else {
    std::ofstream f(o.out_path, std::ios::binary);
    if (!f) throw Error("cannot open output file: " + o.out_path);
    f << doc;
  }
}

std::vector<double> parse_doubles(const std::string& text, std::size_t expected,
                                  const std::string& what) {
  std::vector<double> vals;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      vals.push_back(std::stod(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw ParseError("cannot parse '" + item + "' in " + what);
    }
  }
  if (vals.size() != expected)
    throw ParseError(what + " needs " + std::to_string(expected) + " comma-separated values");
  return vals;
}

std::string sci(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6e", v);
  return buf;
}

std::string render_matrix_text(const std::string& name, const ExactMatrix& m, bool decimal) {
  std::string s = name + " =\n";
  for (std::size_t i = 0; i < m.size(); ++i) {
    s += "  [";
    for (std::size_t j = 0; j < m.size(); ++j) {
      if (j) s += ", ";
      if (decimal) {
        auto z = m(i, j).to_complex();
        char buf[64];
        if (z.imag() == 0)
          std::snprintf(buf, sizeof buf, "%.15g", z.real());
        else
          std::snprintf(buf, sizeof buf, "%.15g%+.15gi", z.real(), z.imag());
        s += buf;
      } else {
        s += to_string(m(i, j));
      }
    }
    s += "]\n";
  }
  return s;
}

int run_states(const CommonOpts& o) {
  LabeledBasis basis = build_labeled_basis(parse_half_integer(o.lambda_text), o.lambda_cap);
  if (o.format == "json") {
    Json doc = basis_to_json(basis);
    if (o.decimal)
      for (auto& state : doc["states"])
        for (auto& term : state["polynomial"])
          term["coeff"] = complex_to_decimal_json(
              complex_from_json(term["coeff"]));
    emit(o, doc.dump(2));
  } else {
    std::string s = "lambda = " + to_string(basis.lambda) + ", dimension = " +
                    std::to_string(basis.dimension()) + "\n";
    for (const auto& [label, poly] : basis.states)
      s += to_string(label) + " = " + to_string(poly) + "\n";
    emit(o, s);
  }
  return 0;
}

int run_matrices(const CommonOpts& o, bool include_delta) {
  LabeledBasis basis = build_labeled_basis(parse_half_integer(o.lambda_text), o.lambda_cap);
  std::vector<Gen> gens = {Gen::Jx, Gen::Jy,     Gen::Jz,     Gen::K1,     Gen::K2,
                           Gen::K3, Gen::Gamma0, Gen::Gamma1, Gen::Gamma2, Gen::Gamma3};
  if (include_delta)
    for (Gen g : {Gen::DeltaZP, Gen::DeltaZM, Gen::DeltaPP, Gen::DeltaPM, Gen::DeltaMP,
                  Gen::DeltaMM, Gen::DeltaJP, Gen::DeltaJM})
      gens.push_back(g);

  ExactMatrix g_metric = spinor_metric_matrix(basis);
  if (o.format == "json") {
    auto encode = [&](const ExactMatrix& m) {
      return o.decimal ? matrix_to_decimal_json(m) : matrix_to_json(m);
    };
    Json mats = Json::array();
    for (Gen g : gens)
      mats.push_back(Json{{"generator", gen_name(g)},
                          {"entries", encode(generator_matrix(basis, g))}});
    Json doc{{"lambda", half_integer_to_json(basis.lambda)},
             {"dimension", basis.dimension()},
             {"matrices", mats},
             {"metric", Json{{"generator", "g"}, {"entries", encode(g_metric)}}}};
    emit(o, doc.dump(2));
  } else {
    std::string s = "lambda = " + to_string(basis.lambda) + ", dimension = " +
                    std::to_string(basis.dimension()) + "\n";
    for (Gen g : gens)
      s += render_matrix_text(gen_name(g), generator_matrix(basis, g), o.decimal);
    s += render_matrix_text("g", g_metric, o.decimal);
    emit(o, s);
  }
  return 0;
}

int run_verify(const CommonOpts& o) {
  VerificationReport rep =
      run_full_verification(parse_half_integer(o.lambda_text), o.lambda_cap);
  if (o.format == "json")
    emit(o, report_to_json(rep).dump(2));
  else
    emit(o, summary_table(rep));
  return rep.all_hard_pass() ? 0 : 1;
}

int run_metric(const CommonOpts& o) {
  ExactMatrix eta = group_metric();
  if (o.format == "json") {
    Json names = Json::array();
    for (int a = 0; a < 10; ++a) names.push_back(algebra_basis_name(a));
    Json doc{{"generators", names},
             {"entries", o.decimal ? matrix_to_decimal_json(eta) : matrix_to_json(eta)}};
    emit(o, doc.dump(2));
  } else {
    emit(o, render_matrix_text("eta", eta, o.decimal));
  }
  return 0;
}

int run_count(const CommonOpts& o) {
  HalfInteger lambda = parse_half_integer(o.lambda_text);
  long long formula = state_count(lambda);
  long long sum = 0;
  for (HalfInteger j = j_min(lambda); j <= lambda; j = j + HalfInteger(1))
    sum += static_cast<long long>(j.twice + 1) * (j.twice + 1);
  long long t = lambda.twice;
  long long binom = (t + 1) * (t + 2) * (t + 3) / 6;
  if (o.format == "json") {
    Json doc{{"lambda", half_integer_to_json(lambda)},
             {"formula", formula},
             {"multiplet_sum", sum},
             {"monomial_count", binom}};
    emit(o, doc.dump(2));
  } else {
    emit(o, std::to_string(formula) + ", " + std::to_string(sum) + ", " +
                std::to_string(binom) + " (formula, multiplet sum, binomial)\n");
  }
  return formula == sum && formula == binom ? 0 : 1;
}

struct DispersionOpts {
  std::string p_text;
  std::string p2_text;
  std::string rotation_text;
  std::string boost_text;
  double spectral_tol = 1e-9;
  double current_tol = 1e-9;
  double covariance_tol = 1e-8;
};

int run_dispersion(const CommonOpts& o, const DispersionOpts& d) {
  HalfInteger lambda = parse_half_integer(o.lambda_text);
  FloatRep rep = FloatRep::build(lambda, o.lambda_cap);
  auto pv = parse_doubles(d.p_text, 4, "--p");
  FourMomentum p{pv[0], pv[1], pv[2], pv[3]};

  bool ok = true;
  Json doc{{"lambda", half_integer_to_json(lambda)},
           {"p", {p.p0, p.p1, p.p2, p.p3}},
           {"mass_squared", p.mass_squared()}};
  std::string text = "lambda = " + to_string(lambda) + ", p.p = " +
                     sci(p.mass_squared()) + "\n";

  SpectrumResult spec = spectrum(rep, p);
  doc["spectrum"] = spectrum_to_json(spec);
  text += "eigenvalues:";
  for (Eigen::Index k = 0; k < spec.eigenvalues.size(); ++k) {
    char buf[64];
    std::snprintf(buf, sizeof buf, " %.12g%+.3gi", spec.eigenvalues(k).real(),
                  spec.eigenvalues(k).imag());
    text += buf;
  }
  text += "\n";

  if (p.is_timelike()) {
    // Spectral covariance: eigenvalues must be {gamma * sqrt(p.p)}.
    double root_s = std::sqrt(p.mass_squared());
    std::vector<double> expected;
    for (HalfInteger g : rep.gamma_labels) expected.push_back(g.value() * root_s);
    std::vector<double> actual;
    for (Eigen::Index k = 0; k < spec.eigenvalues.size(); ++k)
      actual.push_back(spec.eigenvalues(k).real());
    std::sort(expected.begin(), expected.end());
    std::sort(actual.begin(), actual.end());
    double dnorm = slash(rep, p).norm();
    double worst = 0;
    for (std::size_t k = 0; k < actual.size(); ++k)
      worst = std::max(worst, std::abs(actual[k] - expected[k]));
    for (Eigen::Index k = 0; k < spec.eigenvalues.size(); ++k)
      worst = std::max(worst, std::abs(spec.eigenvalues(k).imag()));
    bool pass = worst < d.spectral_tol * dnorm;
    ok = ok && pass;
    doc["spectral_match"] = Json{{"max_deviation", worst},
                                 {"tolerance", d.spectral_tol * dnorm},
                                 {"status", pass ? "pass" : "fail"}};
    text += "spectral match deviation " + sci(worst) + (pass ? " pass" : " FAIL") + "\n";
  }

  if (!d.p2_text.empty()) {
    auto qv = parse_doubles(d.p2_text, 4, "--p2");
    FourMomentum q{qv[0], qv[1], qv[2], qv[3]};
    if (q.mass_squared() <= 0 || p.mass_squared() <= 0)
      throw Error("cross-current requires timelike momenta");
    // Rescale to equal mass so an equal-eigenvalue mode pair exists.
    double scale = std::sqrt(p.mass_squared() / q.mass_squared());
    q = {q.p0 * scale, q.p1 * scale, q.p2 * scale, q.p3 * scale};
    SpectrumResult spec2 = spectrum(rep, q);
    Eigen::Index k1 = 0, k2 = 0;
    for (Eigen::Index k = 0; k < spec.eigenvalues.size(); ++k)
      if (spec.eigenvalues(k).real() > spec.eigenvalues(k1).real()) k1 = k;
    for (Eigen::Index k = 0; k < spec2.eigenvalues.size(); ++k)
      if (spec2.eigenvalues(k).real() > spec2.eigenvalues(k2).real()) k2 = k;
    CurrentVector cur = plane_wave_current(rep, p, spec.eigenvectors.col(k1), q,
                                           spec2.eigenvectors.col(k2));
    double scale_j = std::max({std::abs(cur.j0), std::abs(cur.j1), std::abs(cur.j2),
                               std::abs(cur.j3), 1e-300});
    bool pass = cur.conservation_residual < d.current_tol * (p.norm() + q.norm()) * scale_j;
    ok = ok && pass;
    doc["current"] = current_to_json(cur);
    doc["current"]["p2_equal_mass"] = {q.p0, q.p1, q.p2, q.p3};
    doc["current"]["status"] = pass ? "pass" : "fail";
    text += "cross-current residual " + sci(cur.conservation_residual) +
            (pass ? " pass" : " FAIL") + "\n";
  }

  auto run_cov = [&](TransformKind kind, const std::string& spec_text, const char* key) {
    auto vals = parse_doubles(spec_text, 4, std::string("--") + key);
    CovarianceResult res =
        covariance_check(rep, kind, {vals[0], vals[1], vals[2]}, vals[3]);
    bool pass = res.max_deviation < d.covariance_tol;
    ok = ok && pass;
    doc[key] = covariance_to_json(res);
    doc[key]["status"] = pass ? "pass" : "fail";
    text += std::string(key) + " covariance deviation " + sci(res.max_deviation) +
            (pass ? " pass" : " FAIL") + "\n";
  };
  if (!d.rotation_text.empty()) run_cov(TransformKind::Rotation, d.rotation_text, "rotation");
  if (!d.boost_text.empty()) run_cov(TransformKind::Boost, d.boost_text, "boost");

  emit(o, o.format == "json" ? doc.dump(2) : text);
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "exlorentz: exact representations of the extended Lorentz algebra and "
      "analysis of the linear dispersion operator"};
  app.require_subcommand(1);

  CommonOpts states_o, matrices_o, verify_o, metric_o, count_o, dispersion_o;
  bool include_delta = false;
  DispersionOpts disp;

  auto* states = app.add_subcommand("states", "emit the labeled orthonormal basis");
  add_common(states, states_o);
  auto* matrices = app.add_subcommand("matrices", "emit exact generator matrices plus the spinor metric");
  add_common(matrices, matrices_o);
  matrices->add_flag("--include-delta", include_delta,
                     "also emit the six Delta ladder matrices and DeltaJ+-");
  auto* verify = app.add_subcommand("verify", "run the full verification suite (exit 0 iff all hard checks pass)");
  add_common(verify, verify_o);
  auto* metric = app.add_subcommand("metric", "emit the 10x10 group metric from the adjoint representation");
  add_common(metric, metric_o, /*needs_lambda=*/false);
  auto* count = app.add_subcommand("count", "emit the state count and its three independent evaluations");
  add_common(count, count_o);
  auto* dispersion = app.add_subcommand("dispersion", "spectrum, currents and covariance of Gamma^mu p_mu");
  add_common(dispersion, dispersion_o);
  dispersion->add_option("--p", disp.p_text, "four-momentum \"p0,p1,p2,p3\"")->required();
  dispersion->add_option("--p2", disp.p2_text,
                         "second momentum for the cross-current (rescaled to equal mass)");
  dispersion->add_option("--rotation", disp.rotation_text, "rotation check \"nx,ny,nz,angle\"");
  dispersion->add_option("--boost", disp.boost_text, "boost check \"nx,ny,nz,rapidity\"");
  dispersion->add_option("--spectral-tol", disp.spectral_tol)->capture_default_str();
  dispersion->add_option("--current-tol", disp.current_tol)->capture_default_str();
  dispersion->add_option("--covariance-tol", disp.covariance_tol)->capture_default_str();

  CLI11_PARSE(app, argc, argv);

  try {
    if (states->parsed()) return run_states(states_o);
    if (matrices->parsed()) return run_matrices(matrices_o, include_delta);
    if (verify->parsed()) return run_verify(verify_o);
    if (metric->parsed()) return run_metric(metric_o);
    if (count->parsed()) return run_count(count_o);
    if (dispersion->parsed()) return run_dispersion(dispersion_o, disp);
  } catch (const exlorentz::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
