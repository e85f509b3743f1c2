#ifndef HCOVER_SCALARS_HPP
#define HCOVER_SCALARS_HPP

#include <cstdint>
#include <utility>

#include "hcover/precision.hpp"

namespace hcover {

// Exact representation of t = 2^{num/den}. Comparisons of an integer N
// against t^n are carried out in arbitrary-precision integers:
//   N <= t^n  <=>  N^den <= 2^{n * num}.
struct TwoPowerRational {
  std::uint64_t num = 1;
  std::uint64_t den = 1;

  TwoPowerRational() = default;
  TwoPowerRational(std::uint64_t u, std::uint64_t v);

  // t in (1, 2]  <=>  0 < num/den <= 1
  bool in_unit_range() const { return num > 0 && num <= den; }

  // Sign of N - t^n, exactly.
  int compare_power(const BigInt& value, unsigned n) const;

  double to_double() const;
};

struct SolverConfig {
  double abs_tolerance = 1e-12;
  int max_iterations = 200;
};

// f(x) = (1+x)^{1+x} / x^x and g(x) = 2^x f(x), both strictly increasing
// on (0, inf) with limit 1 at 0+. f(1) = 4, g(1) = 8.
double eval_f(double x);
double eval_g(double x);

// Unique roots of f(x) = t on (0, 1] for t in (1, 4], and of g(x) = t for
// t in (1, 8], located by bisection.
double solve_a(double t, const SolverConfig& config = {});
double solve_b(double t, const SolverConfig& config = {});

// The unique nonnegative integer k with
//   C(n+k, n) <= t^n < C(n+k+1, n),  t in (1, 2].
unsigned k_of(unsigned n, const TwoPowerRational& t);

// The unique nonnegative integer l with
//   2^l C(n+l, n) <= t^n < 2^{l+1} C(n+l+1, n),  t in (1, 2].
unsigned l_of(unsigned n, const TwoPowerRational& t);

// Guaranteed bracket for p(n): [ln n / ln(3/2), ln n / ln(1/2 + 1/(1+b(2)))].
std::pair<double, double> p_bracket(unsigned n);

// Unique solution of (n/(n+floor(b(2) n)))^{1/p} = n^{1/p} - 1/2, n >= 3.
double p_of(unsigned n, const SolverConfig& config = {});

}  // namespace hcover

#endif
