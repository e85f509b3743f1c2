#include "hcover/geometry.hpp"

#include <cmath>
#include <random>
#include <stdexcept>
#include <string>

namespace hcover {

namespace {

double orthant_power_sum(std::span<const double> z, double p)
{
  double s = 0;
  for (double v : z) s += std::pow(std::max(v, 0.0), p);
  return s;
}

double ball_power_sum(std::span<const double> z, double p)
{
  double s = 0;
  for (double v : z) s += std::pow(std::fabs(v), p);
  return s;
}

int sgn(double v) { return (v > 0) - (v < 0); }

}  // namespace

bool member_orthant(std::span<const double> z, unsigned n, double p,
                    double tol)
{
  if (z.size() != n) throw std::invalid_argument("member_orthant: dimension mismatch");
  for (double v : z)
    if (v < -tol) return false;
  return orthant_power_sum(z, p) <= n + tol;
}

bool member_ball(std::span<const double> z, unsigned n, double p, double tol)
{
  if (z.size() != n) throw std::invalid_argument("member_ball: dimension mismatch");
  return ball_power_sum(z, p) <= n + tol;
}

DecompositionResult decompose_orthant(std::span<const double> z, unsigned n,
                                      unsigned k, double p)
{
  if (z.size() != n)
    throw std::invalid_argument("decompose_orthant: dimension mismatch");
  for (double v : z)
    if (v < -kMembershipTol)
      throw std::domain_error(
          "decompose_orthant: coordinate " + std::to_string(v) +
          " violates x_i >= 0");
  const double psum = orthant_power_sum(z, p);
  if (psum > n + k + kMembershipTol)
    throw std::domain_error(
        "decompose_orthant: p-power sum " + std::to_string(psum) +
        " exceeds n + k = " + std::to_string(n + k));

  // Indices with z_i >= 1 (inclusive), in stable order.
  std::vector<unsigned> large;
  for (unsigned i = 0; i < n; ++i)
    if (z[i] >= 1.0) large.push_back(i);

  DecompositionResult out;
  out.lattice.assign(n, 0);
  if (large.size() >= k) {
    out.case_tag = DecompCase::many_large;
    for (unsigned j = 0; j < k; ++j) out.lattice[large[j]] = 1;
  } else {
    std::int64_t floor_sum = 0;
    for (unsigned i : large) floor_sum += static_cast<std::int64_t>(std::floor(z[i]));
    if (floor_sum >= static_cast<std::int64_t>(k)) {
      out.case_tag = DecompCase::budget_filled;
      std::int64_t budget = k;
      for (unsigned i : large) {
        const std::int64_t a =
            std::min<std::int64_t>(static_cast<std::int64_t>(std::floor(z[i])), budget);
        out.lattice[i] = a;
        budget -= a;
        if (budget == 0) break;
      }
    } else {
      out.case_tag = DecompCase::all_fractional;
      for (unsigned i : large)
        out.lattice[i] = static_cast<std::int64_t>(std::floor(z[i]));
    }
  }
  out.remainder.resize(n);
  for (unsigned i = 0; i < n; ++i)
    out.remainder[i] = z[i] - static_cast<double>(out.lattice[i]);
  return out;
}

DecompositionResult decompose_ball(std::span<const double> z, unsigned n,
                                   unsigned k, double p)
{
  if (z.size() != n)
    throw std::invalid_argument("decompose_ball: dimension mismatch");
  const double psum = ball_power_sum(z, p);
  if (psum > n + k + kMembershipTol)
    throw std::domain_error(
        "decompose_ball: p-power sum " + std::to_string(psum) +
        " exceeds n + k = " + std::to_string(n + k));

  std::vector<unsigned> large;
  for (unsigned i = 0; i < n; ++i)
    if (std::fabs(z[i]) >= 1.0) large.push_back(i);

  DecompositionResult out;
  out.lattice.assign(n, 0);
  if (large.size() >= k) {
    out.case_tag = DecompCase::many_large;
    for (unsigned j = 0; j < k; ++j) out.lattice[large[j]] = sgn(z[large[j]]);
  } else {
    std::int64_t floor_sum = 0;
    for (unsigned i : large)
      floor_sum += static_cast<std::int64_t>(std::floor(std::fabs(z[i])));
    if (floor_sum >= static_cast<std::int64_t>(k)) {
      out.case_tag = DecompCase::budget_filled;
      std::int64_t budget = k;
      for (unsigned i : large) {
        const std::int64_t a = std::min<std::int64_t>(
            static_cast<std::int64_t>(std::floor(std::fabs(z[i]))), budget);
        out.lattice[i] = a * sgn(z[i]);
        budget -= a;
        if (budget == 0) break;
      }
    } else {
      out.case_tag = DecompCase::all_fractional;
      for (unsigned i : large)
        out.lattice[i] =
            static_cast<std::int64_t>(std::floor(std::fabs(z[i]))) * sgn(z[i]);
    }
  }
  out.remainder.resize(n);
  for (unsigned i = 0; i < n; ++i)
    out.remainder[i] = z[i] - static_cast<double>(out.lattice[i]);
  return out;
}

namespace {

// Direction scaled by a uniform radius fraction; not uniform over the body
// but supported on all of it, which is what the decomposition tests need.
PointR sample_impl(unsigned n, unsigned k, double p, std::uint64_t seed,
                   bool signed_coords)
{
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  PointR d(n);
  double norm_p = 0;
  do {
    norm_p = 0;
    for (unsigned i = 0; i < n; ++i) {
      d[i] = unit(rng);
      norm_p += std::pow(d[i], p);
    }
  } while (norm_p == 0);
  const double radius = std::pow(static_cast<double>(n + k), 1.0 / p);
  const double scale = unit(rng) * radius / std::pow(norm_p, 1.0 / p);
  for (unsigned i = 0; i < n; ++i) {
    d[i] *= scale;
    if (signed_coords && unit(rng) < 0.5) d[i] = -d[i];
  }
  return d;
}

}  // namespace

PointR sample_scaled_orthant(unsigned n, unsigned k, double p,
                             std::uint64_t seed)
{
  return sample_impl(n, k, p, seed, false);
}

PointR sample_scaled_ball(unsigned n, unsigned k, double p, std::uint64_t seed)
{
  return sample_impl(n, k, p, seed, true);
}

}  // namespace hcover
