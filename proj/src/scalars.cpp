#include "hcover/scalars.hpp"

#include <cmath>
#include <stdexcept>

#include "hcover/combinatorics.hpp"

namespace hcover {

TwoPowerRational::TwoPowerRational(std::uint64_t u, std::uint64_t v)
    : num(u), den(v)
{
  if (den == 0) throw std::domain_error("TwoPowerRational: zero denominator");
}

int TwoPowerRational::compare_power(const BigInt& value, unsigned n) const
{
  if (value <= 0) return -1;
  const BigInt lhs = pow(value, static_cast<unsigned>(den));
  const BigInt rhs = BigInt(1) << (static_cast<std::uint64_t>(n) * num);
  return lhs.compare(rhs);
}

double TwoPowerRational::to_double() const
{
  return std::exp2(static_cast<double>(num) / static_cast<double>(den));
}

double eval_f(double x)
{
  if (x <= 0) throw std::domain_error("eval_f: x must be positive");
  // (1+x)^{1+x} / x^x, via logs for stability at small x
  return std::exp((1 + x) * std::log1p(x) - x * std::log(x));
}

double eval_g(double x)
{
  if (x <= 0) throw std::domain_error("eval_g: x must be positive");
  return std::exp2(x) * eval_f(x);
}

namespace {

template <class F>
double bisect(F&& fn, double lo, double hi, const SolverConfig& config)
{
  double flo = fn(lo);
  double fhi = fn(hi);
  if (flo > 0 || fhi < 0)
    throw std::domain_error("bisect: root not bracketed");
  for (int it = 0; it < config.max_iterations; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (hi - lo <= config.abs_tolerance || mid == lo || mid == hi) break;
    const double fm = fn(mid);
    if (fm <= 0)
      lo = mid;
    else
      hi = mid;
  }
  return 0.5 * (lo + hi);
}

}  // namespace

double solve_a(double t, const SolverConfig& config)
{
  if (!(t > 1.0 && t <= 4.0))
    throw std::domain_error("solve_a: t must lie in (1, 4]");
  return bisect([t](double x) { return eval_f(x) - t; }, 1e-9, 1.0, config);
}

double solve_b(double t, const SolverConfig& config)
{
  if (!(t > 1.0 && t <= 8.0))
    throw std::domain_error("solve_b: t must lie in (1, 8]");
  return bisect([t](double x) { return eval_g(x) - t; }, 1e-9, 1.0, config);
}

unsigned k_of(unsigned n, const TwoPowerRational& t)
{
  if (!t.in_unit_range())
    throw std::domain_error("k_of: t must lie in (1, 2]");
  // Walk C(n+k, n) upward until the next binomial exceeds t^n.
  unsigned k = 0;
  BigInt next = n + 1;  // C(n+1, n)
  while (t.compare_power(next, n) <= 0) {
    ++k;
    next = next * (n + k + 1) / (k + 1);
  }
  return k;
}

unsigned l_of(unsigned n, const TwoPowerRational& t)
{
  if (!t.in_unit_range())
    throw std::domain_error("l_of: t must lie in (1, 2]");
  unsigned l = 0;
  BigInt next = 2 * BigInt(n + 1);  // 2^1 C(n+1, n)
  while (t.compare_power(next, n) <= 0) {
    ++l;
    next = next * 2 * (n + l + 1) / (l + 1);
  }
  return l;
}

std::pair<double, double> p_bracket(unsigned n)
{
  const double b2 = solve_b(2.0);
  const double lo = std::log(n) / std::log(1.5);
  const double hi = std::log(n) / std::log(0.5 + 1.0 / (1.0 + b2));
  return {lo, hi};
}

double p_of(unsigned n, const SolverConfig& config)
{
  if (n < 3) throw std::domain_error("p_of: n must be >= 3");
  const double b2 = solve_b(2.0);
  const double ratio =
      static_cast<double>(n) / (n + std::floor(b2 * n));
  auto [lo, hi] = p_bracket(n);
  lo *= 0.9;
  hi *= 1.1;
  // LHS - RHS is increasing in p; locate its zero.
  auto residual = [&](double p) {
    return std::pow(ratio, 1.0 / p) - (std::pow(n, 1.0 / p) - 0.5);
  };
  SolverConfig tight = config;
  tight.abs_tolerance = std::min(config.abs_tolerance, 1e-13);
  return bisect(residual, lo, hi, tight);
}

}  // namespace hcover
