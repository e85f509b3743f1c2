#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "hcover/combinatorics.hpp"
#include "hcover/covering.hpp"
#include "hcover/json_io.hpp"
#include "hcover/precision.hpp"

namespace {

using hcover::TwoPowerRational;
using nlohmann::json;

struct TValue {
  double value = 2.0;
  std::optional<TwoPowerRational> exact;  // set when given as "u/v" exponent
};

// "u/v" means t = 2^{u/v} exactly; a plain decimal is used as-is and only
// feeds the float solvers.
TValue parse_t(const std::string& s)
{
  TValue t;
  const auto slash = s.find('/');
  if (slash != std::string::npos) {
    const std::uint64_t u = std::stoull(s.substr(0, slash));
    const std::uint64_t v = std::stoull(s.substr(slash + 1));
    t.exact = TwoPowerRational(u, v);
    t.value = t.exact->to_double();
  } else {
    t.value = std::stod(s);
  }
  return t;
}

json read_json_file(const std::string& path)
{
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open " + path);
  json j;
  in >> j;
  return j;
}

void write_json_file(const std::string& path, const json& j)
{
  std::ofstream out(path);
  if (!out) throw std::invalid_argument("cannot open " + path + " for writing");
  out << j.dump(2) << '\n';
}

int run_constants(const std::string& t_str, std::optional<unsigned> pn,
                  const std::string& format)
{
  json j;
  if (pn) {
    auto [lo, hi] = hcover::p_bracket(*pn);
    j["n"] = *pn;
    j["p_n"] = hcover::format_real(hcover::p_of(*pn));
    j["bracket"] = {hcover::format_real(lo), hcover::format_real(hi)};
  } else {
    const TValue t = parse_t(t_str);
    j["t"] = hcover::format_real(t.value);
    if (t.value > 1.0 && t.value <= 4.0)
      j["a"] = hcover::format_real(hcover::solve_a(t.value));
    if (t.value > 1.0 && t.value <= 8.0)
      j["b"] = hcover::format_real(hcover::solve_b(t.value));
    j["f1"] = hcover::format_real(hcover::eval_f(1.0));
    j["g1"] = hcover::format_real(hcover::eval_g(1.0));
  }
  if (format == "text") {
    for (auto& [key, val] : j.items()) std::cout << key << " = " << val << '\n';
  } else {
    std::cout << j.dump(2) << '\n';
  }
  return 0;
}

int run_bounds(unsigned n, unsigned vertices, bool symmetric,
               const std::string& format)
{
  const hcover::BoundReport rep = hcover::bound_report(n, vertices, symmetric);
  const json j = hcover::bound_report_to_json(rep);
  if (format == "text") {
    std::cout << "theorem_bound = " << rep.theorem_bound << " ("
              << static_cast<double>(rep.theorem_bound) << ")\n"
              << "floor_bound   = " << rep.floor_bound << '\n'
              << "general_bound = " << rep.general_bound << '\n'
              << "best          = " << rep.best << '\n';
  } else {
    std::cout << j.dump(2) << '\n';
  }
  return 0;
}

int run_table(unsigned n_from, unsigned n_to, unsigned ratio,
              const std::string& format)
{
  if (format == "csv") std::cout << "n,vertices,k,theorem_bound\n";
  for (unsigned n = n_from; n <= n_to; ++n) {
    const unsigned vertices = ratio * n + 1;
    const hcover::BoundReport rep = hcover::bound_report(n, vertices, false);
    if (format == "json") {
      std::cout << hcover::bound_report_to_json(rep).dump() << '\n';
    } else {
      const char sep = format == "csv" ? ',' : ' ';
      std::cout << n << sep << vertices << sep << rep.threshold << sep
                << hcover::format_real(static_cast<double>(rep.theorem_bound))
                << '\n';
    }
  }
  return 0;
}

int run_enumerate(const std::string& set, unsigned n, unsigned k,
                  const std::string& format)
{
  auto emit = [&](const hcover::LatticeVector& v) {
    if (format == "json") {
      std::cout << json(v).dump() << '\n';
    } else {
      const char* sep = format == "csv" ? "," : " ";
      for (std::size_t i = 0; i < v.size(); ++i)
        std::cout << (i ? sep : "") << v[i];
      std::cout << '\n';
    }
  };
  if (set == "M1") {
    hcover::M1Enumerator e(n, k);
    while (auto v = e.next()) emit(*v);
  } else if (set == "M2") {
    hcover::M2Enumerator e(n, k);
    while (auto v = e.next()) emit(*v);
  } else {
    throw std::invalid_argument("enumerate: --set must be M1 or M2");
  }
  return 0;
}

int run_decompose(const std::string& space, unsigned n, unsigned k, double p,
                  const std::string& point_csv)
{
  hcover::PointR z;
  std::size_t pos = 0;
  while (pos <= point_csv.size()) {
    const auto comma = point_csv.find(',', pos);
    const std::string tok =
        point_csv.substr(pos, comma == std::string::npos ? std::string::npos
                                                         : comma - pos);
    z.push_back(std::stod(tok));
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  hcover::DecompositionResult d;
  if (space == "orthant")
    d = hcover::decompose_orthant(z, n, k, p);
  else if (space == "ball")
    d = hcover::decompose_ball(z, n, k, p);
  else
    throw std::invalid_argument("decompose: --space must be orthant or ball");
  std::cout << hcover::decomposition_to_json(d).dump(2) << '\n';
  return 0;
}

int run_certify(const std::string& in_path, const std::string& out_path,
                unsigned n)
{
  const hcover::PolytopeV poly = hcover::polytope_from_json(read_json_file(in_path));
  const hcover::CoveringCertificate cert = hcover::make_certificate(poly, n);
  write_json_file(out_path, hcover::certificate_to_json(cert));
  std::cout << "wrote certificate: gamma = " << cert.gamma << ", "
            << cert.centers.size() << " centers\n";
  return 0;
}

int run_verify(const std::string& poly_path, const std::string& cert_path,
               std::uint64_t samples, std::uint64_t seed)
{
  const hcover::PolytopeV poly =
      hcover::polytope_from_json(read_json_file(poly_path));
  const hcover::CoveringCertificate cert =
      hcover::certificate_from_json(read_json_file(cert_path));
  const hcover::VerificationReport rep =
      hcover::verify_certificate(poly, cert, samples, seed);
  std::cout << hcover::verification_to_json(rep).dump(2) << '\n';
  return rep.failures == 0 ? 0 : 3;
}

}  // namespace

int main(int argc, char** argv)
{
  hcover::init_precision();

  CLI::App app{"Homothetic covering bounds and certificates for polytopes"};
  app.require_subcommand(1);

  std::string format = "json";
  std::uint64_t seed = 1;
  app.add_option("--format", format, "Output format: json, csv, text")
      ->check(CLI::IsMember({"json", "csv", "text"}));
  app.add_option("--seed", seed, "Sampling seed");

  auto* constants = app.add_subcommand("constants", "Roots a(t), b(t), p(n)");
  std::string t_str = "2";
  unsigned pn = 0;
  constants->add_option("--t", t_str, "t as decimal or exact exponent u/v (t = 2^{u/v})");
  auto* pn_opt = constants->add_option("--pn", pn, "Print p(n) with its bracket");

  auto* bounds = app.add_subcommand("bounds", "Covering bound report");
  unsigned bn = 0, bvertices = 0;
  bool bsym = false;
  bounds->add_option("--n", bn, "Ambient dimension")->required();
  bounds->add_option("--vertices", bvertices, "Vertex count")->required();
  bounds->add_flag("--symmetric", bsym, "Centrally symmetric body (count = 2m)");

  auto* table = app.add_subcommand("table", "Bound rows for M = r*n + 1");
  unsigned n_from = 3, n_to = 10, ratio = 2;
  table->add_option("--n-from", n_from)->required();
  table->add_option("--n-to", n_to)->required();
  table->add_option("--ratio", ratio)->required();

  auto* enumerate = app.add_subcommand("enumerate", "Stream M1 or M2 lattice vectors");
  std::string set = "M1";
  unsigned en = 0, ek = 0;
  enumerate->add_option("--set", set)->required()->check(CLI::IsMember({"M1", "M2"}));
  enumerate->add_option("--n", en)->required();
  enumerate->add_option("--k", ek)->required();

  auto* decompose = app.add_subcommand("decompose", "Lattice-translate decomposition");
  std::string space = "orthant", point_csv;
  unsigned dn = 0, dk = 0;
  double dp = 1.0;
  decompose->add_option("--space", space)->required()->check(CLI::IsMember({"orthant", "ball"}));
  decompose->add_option("--n", dn)->required();
  decompose->add_option("--k", dk)->required();
  decompose->add_option("--p", dp)->required();
  decompose->add_option("--point", point_csv, "Comma-separated coordinates")->required();

  auto* certify = app.add_subcommand("certify", "Write a covering certificate");
  std::string in_path, out_path;
  unsigned cn = 0;
  certify->add_option("--in", in_path)->required();
  certify->add_option("--out", out_path)->required();
  certify->add_option("--n", cn)->required();

  auto* verify = app.add_subcommand("verify", "Verify a certificate by sampling");
  std::string vpoly, vcert;
  std::uint64_t vsamples = 10000;
  verify->add_option("--poly", vpoly)->required();
  verify->add_option("--cert", vcert)->required();
  verify->add_option("--samples", vsamples);

  for (CLI::App* sub : app.get_subcommands({})) sub->fallthrough();

  CLI11_PARSE(app, argc, argv);

  try {
    if (*constants)
      return run_constants(t_str, pn_opt->count() ? std::optional(pn) : std::nullopt, format);
    if (*bounds) return run_bounds(bn, bvertices, bsym, format);
    if (*table) return run_table(n_from, n_to, ratio, format);
    if (*enumerate) return run_enumerate(set, en, ek, format);
    if (*decompose) return run_decompose(space, dn, dk, dp, point_csv);
    if (*certify) return run_certify(in_path, out_path, cn);
    if (*verify) return run_verify(vpoly, vcert, vsamples, seed);
  } catch (const hcover::NoShrinkingCertificate& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: malformed input: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
