#ifndef HCOVER_GEOMETRY_HPP
#define HCOVER_GEOMETRY_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "hcover/combinatorics.hpp"

namespace hcover {

using PointR = std::vector<double>;

// Default tolerances: membership goes through p-th powers, reconstruction
// is subtraction only.
inline constexpr double kMembershipTol = 1e-9;
inline constexpr double kReconstructionTol = 1e-12;

// x in K_n^{p*}-bar = { x : sum x_i^p <= n, x_i >= 0 } up to tol.
bool member_orthant(std::span<const double> z, unsigned n, double p,
                    double tol = kMembershipTol);

// x in K_n^p-bar = { x : sum |x_i|^p <= n } up to tol.
bool member_ball(std::span<const double> z, unsigned n, double p,
                 double tol = kMembershipTol);

enum class DecompCase : int { many_large = 1, budget_filled = 2, all_fractional = 3 };

struct DecompositionResult {
  LatticeVector lattice;
  PointR remainder;
  DecompCase case_tag;
};

// Splits z in ((n+k)/n)^{1/p} K_n^{p*}-bar into a translate from M1(n,k)
// plus a remainder in K_n^{p*}-bar.
DecompositionResult decompose_orthant(std::span<const double> z, unsigned n,
                                      unsigned k, double p);

// Signed variant: z in ((n+k)/n)^{1/p} K_n^p-bar, translate from M2(n,k).
DecompositionResult decompose_ball(std::span<const double> z, unsigned n,
                                   unsigned k, double p);

// Deterministic full-support samplers for the scaled bodies.
PointR sample_scaled_orthant(unsigned n, unsigned k, double p,
                             std::uint64_t seed);
PointR sample_scaled_ball(unsigned n, unsigned k, double p,
                          std::uint64_t seed);

}  // namespace hcover

#endif
