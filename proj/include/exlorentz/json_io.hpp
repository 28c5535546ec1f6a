#pragma once

#include <json.hpp>

#include <string>

#include "exlorentz/dispersion.hpp"
#include "exlorentz/verification.hpp"

namespace exlorentz {

/// Field order is part of the wire format, so everything uses ordered_json.
using Json = nlohmann::ordered_json;

/// Half-integers appear as plain integers when whole and as "p/2" strings
/// when odd ("1/2", "-3/2").
inline Json half_integer_to_json(HalfInteger h) {
  if (h.is_integer()) return h.as_integer();
  return to_string(h);
}

inline HalfInteger half_integer_from_json(const Json& j) {
  if (j.is_number_integer()) return HalfInteger(j.get<int>());
  if (j.is_string()) return parse_half_integer(j.get<std::string>());
  throw ParseError("expected integer or \"p/2\" string for half-integer");
}

/// RadicalScalar: list of [radicand, numerator, denominator] triples sorted
/// by radicand; [] is zero.
inline Json radical_to_json(const RadicalScalar& v) {
  Json out = Json::array();
  for (const auto& t : v.terms())
    out.push_back({t.radicand, t.coeff.numerator(), t.coeff.denominator()});
  return out;
}

inline RadicalScalar radical_from_json(const Json& j) {
  RadicalScalar out;
  for (const auto& triple : j) {
    if (!triple.is_array() || triple.size() != 3)
      throw ParseError("radical term must be [radicand, numerator, denominator]");
    std::int64_t rad = triple[0].get<std::int64_t>();
    Rational coeff(triple[1].get<std::int64_t>(), triple[2].get<std::int64_t>());
    // Square parts are extracted on the way in, so parsed values are canonical.
    out += RadicalScalar(coeff) * RadicalScalar::sqrt_of(Rational(rad));
  }
  return out;
}

inline Json complex_to_json(const ComplexScalar& v) {
  return Json{{"re", radical_to_json(v.re)}, {"im", radical_to_json(v.im)}};
}

inline ComplexScalar complex_from_json(const Json& j) {
  return {radical_from_json(j.at("re")), radical_from_json(j.at("im"))};
}

/// SpinorPolynomial: list of {monomial: [a,b,c,d], coeff} sorted leading
/// monomial first.
inline Json polynomial_to_json(const SpinorPolynomial& p) {
  Json out = Json::array();
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it)
    out.push_back({{"monomial", {it->first.e[0], it->first.e[1], it->first.e[2], it->first.e[3]}},
                   {"coeff", complex_to_json(it->second)}});
  return out;
}

inline SpinorPolynomial polynomial_from_json(const Json& j) {
  SpinorPolynomial p;
  for (const auto& term : j) {
    const auto& m = term.at("monomial");
    Monomial mono{{m.at(0).get<int>(), m.at(1).get<int>(), m.at(2).get<int>(),
                   m.at(3).get<int>()}};
    p.add_term(mono, complex_from_json(term.at("coeff")));
  }
  return p;
}

inline Json basis_to_json(const LabeledBasis& basis) {
  Json states = Json::array();
  for (const auto& [label, poly] : basis.states)
    states.push_back({{"J", half_integer_to_json(label.j)},
                      {"gamma", half_integer_to_json(label.gamma)},
                      {"M", half_integer_to_json(label.m)},
                      {"polynomial", polynomial_to_json(poly)}});
  return Json{{"lambda", half_integer_to_json(basis.lambda)},
              {"dimension", basis.dimension()},
              {"states", states}};
}

inline Json matrix_to_json(const ExactMatrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.size(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.size(); ++j) row.push_back(complex_to_json(m(i, j)));
    rows.push_back(row);
  }
  return rows;
}

inline ExactMatrix matrix_from_json(const Json& j) {
  ExactMatrix m(j.size());
  for (std::size_t i = 0; i < j.size(); ++i) {
    if (j.at(i).size() != j.size()) throw ParseError("matrix is not square");
    for (std::size_t k = 0; k < j.size(); ++k) m(i, k) = complex_from_json(j.at(i).at(k));
  }
  return m;
}

inline Json generator_matrix_to_json(const std::string& name, const ExactMatrix& m) {
  return Json{{"generator", name}, {"entries", matrix_to_json(m)}};
}

inline Json report_to_json(const VerificationReport& rep) {
  Json checks = Json::array();
  for (const auto& c : rep.checks)
    checks.push_back({{"name", c.name},
                      {"status", c.pass ? "pass" : "fail"},
                      {"deviation", c.deviation},
                      {"detail", c.detail}});
  return Json{{"lambda", half_integer_to_json(rep.lambda)}, {"checks", checks}};
}

/// Decimal rendering used by the CLI --decimal flag: 15 significant digits.
inline Json complex_to_decimal_json(const ComplexScalar& v) {
  auto z = v.to_complex();
  char re[32], im[32];
  std::snprintf(re, sizeof re, "%.15g", z.real());
  std::snprintf(im, sizeof im, "%.15g", z.imag());
  return Json{{"re", Json::parse(re)}, {"im", Json::parse(im)}};
}

inline Json matrix_to_decimal_json(const ExactMatrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.size(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.size(); ++j) row.push_back(complex_to_decimal_json(m(i, j)));
    rows.push_back(row);
  }
  return rows;
}

inline Json spectrum_to_json(const SpectrumResult& s) {
  Json evs = Json::array();
  for (Eigen::Index k = 0; k < s.eigenvalues.size(); ++k)
    evs.push_back({{"re", s.eigenvalues(k).real()}, {"im", s.eigenvalues(k).imag()}});
  return Json{{"eigenvalues", evs}, {"residual", s.residual}};
}

inline Json current_to_json(const CurrentVector& c) {
  auto comp = [](std::complex<double> z) {
    return Json{{"re", z.real()}, {"im", z.imag()}};
  };
  return Json{{"j0", comp(c.j0)},
              {"j1", comp(c.j1)},
              {"j2", comp(c.j2)},
              {"j3", comp(c.j3)},
              {"conservation_residual", c.conservation_residual}};
}

inline Json covariance_to_json(const CovarianceResult& r) {
  return Json{{"kind", r.kind == TransformKind::Rotation ? "rotation" : "boost"},
              {"axis", {r.axis[0], r.axis[1], r.axis[2]}},
              {"parameter", r.parameter},
              {"max_deviation", r.max_deviation}};
}

}  // namespace exlorentz
