#ifndef HCOVER_COMBINATORICS_HPP
#define HCOVER_COMBINATORICS_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "hcover/precision.hpp"

namespace hcover {

// Integer lattice point, element of M1(n,k) or M2(n,k).
using LatticeVector = std::vector<std::int64_t>;

// C(n, k), exact. k > n yields 0.
BigInt binomial(unsigned n, unsigned k);

// Two-sided Stirling-type bracket on n!:
//   sqrt(2*pi) n^{n+1/2} e^{-n} e^{r}  with  1/(12n+1) < r < 1/(12n),
// so lower < n! < upper strictly.
struct RobbinsBracket {
  BigFloat lower;
  BigFloat upper;
};
RobbinsBracket robbins_bracket(unsigned n);

// |M1(n,k)| = C(n+k, n)
BigInt card_m1(unsigned n, unsigned k);

// |M2(n,k)| = sum_{i=0}^{n} 2^{n-i} C(n,i) C(k,n-i)
BigInt card_m2(unsigned n, unsigned k);

// Strict upper bound on C(n+k, n):
//   ((n+k)/(2 pi n k))^{1/2} * f(k/n)^n,  f(x) = (1+x)^{1+x}/x^x.
BigFloat binom_upper(unsigned n, unsigned k);

// Lazy lexicographic enumeration of
//   M1(n,k) = { x in Z^n : x_i >= 0, sum x_i <= k }.
class M1Enumerator {
 public:
  M1Enumerator(unsigned n, unsigned k);
  std::optional<LatticeVector> next();

 private:
  unsigned n_, k_;
  LatticeVector cur_;
  std::int64_t sum_ = 0;
  bool started_ = false;
  bool done_ = false;
};

// Lazy lexicographic enumeration of
//   M2(n,k) = { x in Z^n : sum |x_i| <= k }.
class M2Enumerator {
 public:
  M2Enumerator(unsigned n, unsigned k);
  std::optional<LatticeVector> next();

 private:
  unsigned n_, k_;
  LatticeVector cur_;
  bool started_ = false;
  bool done_ = false;
};

// Convenience: fully materialized sets (small n, k only).
std::vector<LatticeVector> collect_m1(unsigned n, unsigned k);
std::vector<LatticeVector> collect_m2(unsigned n, unsigned k);

}  // namespace hcover

#endif
