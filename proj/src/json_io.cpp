#include "hcover/json_io.hpp"

#include <cstdio>
#include <stdexcept>

namespace hcover {

using nlohmann::json;

std::string format_real(double v)
{
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

double parse_real(const json& j)
{
  if (j.is_number()) return j.get<double>();
  if (j.is_string()) return std::stod(j.get<std::string>());
  throw std::invalid_argument("expected a real number or decimal string");
}

namespace {

json point_to_json(const PointR& p)
{
  json arr = json::array();
  for (double v : p) arr.push_back(format_real(v));
  return arr;
}

PointR point_from_json(const json& j)
{
  PointR p;
  for (const auto& v : j) p.push_back(parse_real(v));
  return p;
}

}  // namespace

json polytope_to_json(const PolytopeV& poly)
{
  json j;
  j["dim"] = poly.n;
  if (poly.symmetric_half) {
    json arr = json::array();
    for (const PointR& v : *poly.symmetric_half) arr.push_back(point_to_json(v));
    j["symmetric_half"] = std::move(arr);
  } else {
    json arr = json::array();
    for (const PointR& v : poly.vertices) arr.push_back(point_to_json(v));
    j["vertices"] = std::move(arr);
  }
  return j;
}

PolytopeV polytope_from_json(const json& j)
{
  PolytopeV poly;
  poly.n = j.at("dim").get<unsigned>();
  if (j.contains("symmetric_half")) {
    std::vector<PointR> half;
    for (const auto& v : j.at("symmetric_half")) half.push_back(point_from_json(v));
    poly.symmetric_half = std::move(half);
  } else {
    for (const auto& v : j.at("vertices")) poly.vertices.push_back(point_from_json(v));
  }
  for (const auto& v : poly.symmetric_half ? *poly.symmetric_half : poly.vertices)
    if (v.size() != poly.n)
      throw std::invalid_argument("polytope: vertex dimension mismatch");
  return poly;
}

json certificate_to_json(const CoveringCertificate& cert)
{
  json j;
  j["gamma"] = {
      {"num", static_cast<std::int64_t>(numerator(cert.gamma))},
      {"den", static_cast<std::int64_t>(denominator(cert.gamma))},
  };
  j["lift_kind"] =
      cert.lift_kind == LiftKind::simplex ? "simplex" : "crosspolytope";
  j["m"] = cert.m;
  j["k"] = cert.k;
  json centers = json::array();
  for (const PointR& c : cert.centers) centers.push_back(point_to_json(c));
  j["centers"] = std::move(centers);
  return j;
}

CoveringCertificate certificate_from_json(const json& j)
{
  CoveringCertificate cert;
  const std::string kind = j.at("lift_kind").get<std::string>();
  if (kind == "simplex")
    cert.lift_kind = LiftKind::simplex;
  else if (kind == "crosspolytope")
    cert.lift_kind = LiftKind::crosspolytope;
  else
    throw std::invalid_argument("certificate: unknown lift_kind " + kind);
  cert.m = j.at("m").get<unsigned>();
  cert.k = j.at("k").get<unsigned>();
  cert.gamma = Rational(j.at("gamma").at("num").get<std::int64_t>(),
                        j.at("gamma").at("den").get<std::int64_t>());
  for (const auto& c : j.at("centers")) cert.centers.push_back(point_from_json(c));

  auto regenerated = cert.lift_kind == LiftKind::simplex
                         ? q_cover_simplex(cert.m, cert.k)
                         : q_cover_cross(cert.m, cert.k);
  cert.q_centers = std::move(regenerated.second);
  if (cert.q_centers.size() != cert.centers.size())
    throw std::invalid_argument(
        "certificate: center count does not match the (m, k) lattice set");
  return cert;
}

json decomposition_to_json(const DecompositionResult& d)
{
  json j;
  j["case"] = static_cast<int>(d.case_tag);
  j["lattice"] = d.lattice;
  json rem = json::array();
  for (double v : d.remainder) rem.push_back(format_real(v));
  j["remainder"] = std::move(rem);
  return j;
}

json verification_to_json(const VerificationReport& r)
{
  json j;
  j["samples"] = r.samples;
  j["failures"] = r.failures;
  j["max_residual"] = format_real(r.max_residual);
  if (r.first_failure_witness) {
    j["first_failure"] = {
        {"sample_index", r.first_failure_index},
        {"witness", *r.first_failure_witness},
    };
  }
  return j;
}

json bound_report_to_json(const BoundReport& r)
{
  json j;
  j["n"] = r.n;
  j["vertex_count"] = r.vertex_count;
  j["t"] = {{"num", r.t.num}, {"den", r.t.den}};
  j["threshold"] = r.threshold;
  j["theorem_bound"] = {
      {"num", static_cast<std::int64_t>(numerator(r.theorem_bound))},
      {"den", static_cast<std::int64_t>(denominator(r.theorem_bound))},
  };
  j["theorem_bound_value"] = format_real(static_cast<double>(r.theorem_bound));
  j["floor_bound"] = format_real(r.floor_bound);
  j["general_bound"] = {
      {"num", static_cast<std::int64_t>(numerator(r.general_bound))},
      {"den", static_cast<std::int64_t>(denominator(r.general_bound))},
  };
  j["best"] = format_real(r.best);
  j["shrinking"] = r.shrinking;
  return j;
}

}  // namespace hcover
