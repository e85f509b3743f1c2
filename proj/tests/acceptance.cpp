// Acceptance suite: one pass/fail line per criterion.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include "hcover/covering.hpp"
#include "hcover/json_io.hpp"
#include "hcover/precision.hpp"
#include "test_support.hpp"

using namespace hcover;
using hcover::testing::random_polytope;
using hcover::testing::random_symmetric_polytope;

namespace {

int g_failures = 0;

void run_criterion(int id, const std::string& label,
                   const std::function<bool()>& body)
{
  const auto start = std::chrono::steady_clock::now();
  bool ok = false;
  std::string error;
  try {
    ok = body();
  } catch (const std::exception& e) {
    error = e.what();
  }
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  std::printf("%s criterion %2d: %s (%.2fs)%s%s\n", ok ? "PASS" : "FAIL", id,
              label.c_str(), secs, error.empty() ? "" : " -- ",
              error.c_str());
  if (!ok) ++g_failures;
}

BigInt factorial(unsigned n)
{
  BigInt r = 1;
  for (unsigned i = 2; i <= n; ++i) r *= i;
  return r;
}

bool criterion_constants()
{
  return std::fabs(solve_a(2.0) - 0.293815) <= 5e-6 &&
         std::fabs(solve_b(2.0) - 0.205597) <= 5e-6 &&
         std::fabs(solve_a(std::sqrt(2.0)) - 0.104828) <= 5e-6;
}

bool criterion_headline()
{
  const BoundReport rep = bound_report(6, 9, false);
  const auto cover = q_cover_simplex(8, 2);
  return rep.theorem_bound == Rational(4, 5) &&
         k_of(8, TwoPowerRational(3, 4)) == 2 && cover.second.size() == 45 &&
         cover.second.size() <= 64;
}

bool criterion_asymptotic()
{
  bool ok = true;
  double at_500 = 0;
  for (unsigned n : {50u, 200u, 500u}) {
    const BoundReport rep = bound_report(n, 2 * n + 1, false);
    const double v = static_cast<double>(rep.theorem_bound);
    ok = ok && v > 0.90 && v <= 0.9052;
    if (n == 500) at_500 = v;
  }
  return ok && std::fabs(at_500 - 0.905118) <= 5e-3;
}

bool criterion_degenerate()
{
  for (unsigned n = 3; n <= 10; ++n) {
    const BoundReport rep = bound_report(n, 1u << n, false);
    if (rep.theorem_bound != Rational((1u << n) - 1, 1u << n)) return false;
    if (rep.best != static_cast<double>(rep.general_bound)) return false;
    if (rep.general_bound != Rational(n, n + 1)) return false;
  }
  return true;
}

bool criterion_thresholds()
{
  for (unsigned j = 1; j <= 8; ++j) {
    const TwoPowerRational t(j, 8);
    const double at = solve_a(t.to_double());
    const double bt = solve_b(t.to_double());
    for (unsigned n = 1; n <= 200; ++n) {
      const unsigned k = k_of(n, t);
      const unsigned l = l_of(n, t);
      if (k < static_cast<unsigned>(std::floor(at * n))) return false;
      if (l < static_cast<unsigned>(std::floor(bt * n))) return false;
      if ((k > 0) != (t.compare_power(BigInt(n + 1), n) <= 0)) return false;
      if ((l > 0) != (t.compare_power(2 * BigInt(n + 1), n) <= 0)) return false;
    }
  }
  return true;
}

bool criterion_cardinalities()
{
  for (unsigned n = 1; n <= 6; ++n)
    for (unsigned k = 0; k <= 6; ++k) {
      if (BigInt(collect_m1(n, k).size()) != card_m1(n, k)) return false;
      if (BigInt(collect_m2(n, k).size()) != card_m2(n, k)) return false;
    }
  for (unsigned n = 1; n <= 20; ++n)
    for (unsigned k = 0; k <= 20; ++k)
      if (card_m2(n, k) > (BigInt(1) << k) * card_m1(n, k)) return false;
  return true;
}

bool criterion_robbins()
{
  for (unsigned n = 1; n <= 50; ++n) {
    const RobbinsBracket b = robbins_bracket(n);
    const BigFloat exact(factorial(n));
    if (!(b.lower < exact && exact < b.upper)) return false;
  }
  const RobbinsBracket five = robbins_bracket(5);
  return five.lower > 119.9698 && five.lower < 120 && five.upper > 120 &&
         five.upper < 120.005;
}

bool criterion_decomposition()
{
  for (unsigned n = 1; n <= 6; ++n)
    for (unsigned k = 1; k <= 4; ++k)
      for (double p : {1.0, 1.5, 2.0, 3.0}) {
        const std::uint64_t base =
            (static_cast<std::uint64_t>(n) << 32) ^ (k << 16) ^
            static_cast<std::uint64_t>(p * 64);
        for (std::uint64_t s = 0; s < 10000; ++s) {
          const PointR zo = sample_scaled_orthant(n, k, p, base + s);
          const auto od = decompose_orthant(zo, n, k, p);
          if (!member_orthant(od.remainder, n, p)) return false;
          long long sum = 0;
          for (long long c : od.lattice) {
            if (c < 0) return false;
            sum += c;
          }
          if (sum > k) return false;
          for (unsigned i = 0; i < n; ++i)
            if (std::fabs(zo[i] - (od.lattice[i] + od.remainder[i])) >
                kReconstructionTol)
              return false;

          const PointR zb = sample_scaled_ball(n, k, p, base + s);
          const auto bd = decompose_ball(zb, n, k, p);
          if (!member_ball(bd.remainder, n, p)) return false;
          sum = 0;
          for (long long c : bd.lattice) sum += std::llabs(c);
          if (sum > k) return false;
          for (unsigned i = 0; i < n; ++i)
            if (std::fabs(zb[i] - (bd.lattice[i] + bd.remainder[i])) >
                kReconstructionTol)
              return false;
        }
      }
  return true;
}

bool criterion_certificates()
{
  struct Config {
    unsigned n;
    unsigned count;  // vertex count (or half count when symmetric)
    bool symmetric;
  };
  std::vector<Config> configs;
  for (unsigned vc = 4; vc <= 8; ++vc) configs.push_back({3, vc, false});
  configs.push_back({3, 3, true});
  configs.push_back({6, 9, false});

  for (const Config& cfg : configs) {
    for (unsigned trial = 0; trial < 20; ++trial) {
      const std::uint64_t seed = cfg.n * 1000 + cfg.count * 10 + trial;
      const PolytopeV poly =
          cfg.symmetric ? random_symmetric_polytope(cfg.n, cfg.count, seed)
                        : random_polytope(cfg.n, cfg.count, seed);
      const CoveringCertificate cert = make_certificate(poly, cfg.n);
      if (BigInt(cert.centers.size()) > (BigInt(1) << cfg.n)) return false;
      if (verify_certificate(poly, cert, 10000, seed + 1).failures != 0)
        return false;
      if (trial == 0) {
        // mutation tests: both must be caught
        CoveringCertificate dropped = cert;
        dropped.centers.pop_back();
        dropped.q_centers.pop_back();
        if (verify_certificate(poly, dropped, 10000, seed + 2).failures == 0)
          return false;
        CoveringCertificate halved = cert;
        halved.gamma /= 2;
        if (verify_certificate(poly, halved, 10000, seed + 3).failures == 0)
          return false;
      }
    }
  }
  return true;
}

bool criterion_pn_brackets()
{
  const double b2 = solve_b(2.0);
  for (unsigned n = 3; n <= 100; ++n) {
    const double p = p_of(n);
    const auto [lo, hi] = p_bracket(n);
    if (!(p >= lo - 1e-9 && p <= hi + 1e-9)) return false;
    const double ratio = static_cast<double>(n) / (n + std::floor(b2 * n));
    const double residual =
        std::pow(ratio, 1.0 / p) - (std::pow(n, 1.0 / p) - 0.5);
    if (std::fabs(residual) > 1e-10) return false;
  }
  return true;
}

}  // namespace

int main()
{
  init_precision();

  run_criterion(1, "constants a(2), b(2), a(sqrt 2)", criterion_constants);
  run_criterion(2, "headline bound 8/(8+2) = 0.8 with 45 centers",
                criterion_headline);
  run_criterion(3, "asymptotic trend toward 0.905118 for M-1 = 2n",
                criterion_asymptotic);
  run_criterion(4, "degenerate comparator at M = 2^n", criterion_degenerate);
  run_criterion(5, "threshold lower bounds on n <= 200, t = 2^{j/8}",
                criterion_thresholds);
  run_criterion(6, "cardinality oracles for M1/M2", criterion_cardinalities);
  run_criterion(7, "Robbins bracket contains n! for n <= 50",
                criterion_robbins);
  run_criterion(8, "decomposition soundness sweep (10^4 samples each)",
                criterion_decomposition);
  run_criterion(9, "certificate end-to-end with mutation detection",
                criterion_certificates);
  run_criterion(10, "p(n) brackets and residuals for 3 <= n <= 100",
                criterion_pn_brackets);

  return g_failures == 0 ? 0 : 1;
}
