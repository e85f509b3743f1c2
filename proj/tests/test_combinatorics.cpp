#include <doctest.h>

#include <algorithm>
#include <set>

#include "hcover/combinatorics.hpp"

using namespace hcover;

namespace {

BigInt factorial(unsigned n)
{
  BigInt r = 1;
  for (unsigned i = 2; i <= n; ++i) r *= i;
  return r;
}

// Independent brute-force enumerations, recursion over coordinates.
void brute_m1(unsigned n, long long budget, LatticeVector& prefix,
              std::vector<LatticeVector>& out)
{
  if (prefix.size() == n) {
    out.push_back(prefix);
    return;
  }
  for (long long v = 0; v <= budget; ++v) {
    prefix.push_back(v);
    brute_m1(n, budget - v, prefix, out);
    prefix.pop_back();
  }
}

void brute_m2(unsigned n, long long budget, LatticeVector& prefix,
              std::vector<LatticeVector>& out)
{
  if (prefix.size() == n) {
    out.push_back(prefix);
    return;
  }
  for (long long v = -budget; v <= budget; ++v) {
    prefix.push_back(v);
    brute_m2(n, budget - std::llabs(v), prefix, out);
    prefix.pop_back();
  }
}

std::vector<LatticeVector> brute_m1(unsigned n, unsigned k)
{
  std::vector<LatticeVector> out;
  LatticeVector prefix;
  brute_m1(n, k, prefix, out);
  return out;
}

std::vector<LatticeVector> brute_m2(unsigned n, unsigned k)
{
  std::vector<LatticeVector> out;
  LatticeVector prefix;
  brute_m2(n, k, prefix, out);
  return out;
}

}  // namespace

TEST_CASE("binomial basics")
{
  CHECK(binomial(4, 2) == 6);
  CHECK(binomial(7, 0) == 1);
  CHECK(binomial(10, 8) == 45);
  CHECK(binomial(3, 5) == 0);
  CHECK(binomial(65, 50) == factorial(65) / (factorial(50) * factorial(15)));
}

TEST_CASE("robbins bracket contains the exact factorial")
{
  for (unsigned n : {1u, 5u, 30u, 50u}) {
    const RobbinsBracket b = robbins_bracket(n);
    const BigFloat exact(factorial(n));
    CHECK(b.lower < exact);
    CHECK(exact < b.upper);
  }
}

TEST_CASE("robbins bracket is tight at n = 5")
{
  // lower = 119.96985..., upper = 120.00263...
  const RobbinsBracket b = robbins_bracket(5);
  CHECK(b.lower > 119.9698);
  CHECK(b.lower < 120);
  CHECK(b.upper > 120);
  CHECK(b.upper < 120.005);
}

TEST_CASE("robbins bracket, full range 1..50")
{
  for (unsigned n = 1; n <= 50; ++n) {
    const RobbinsBracket b = robbins_bracket(n);
    const BigFloat exact(factorial(n));
    CHECK(b.lower < exact);
    CHECK(exact < b.upper);
  }
}

TEST_CASE("cardinalities against brute-force enumeration")
{
  CHECK(card_m1(2, 2) == 6);
  CHECK(card_m1(5, 0) == 1);
  CHECK(card_m1(3, 2) == 10);
  CHECK(card_m2(2, 1) == 5);
  CHECK(card_m2(5, 0) == 1);
  CHECK(card_m2(3, 2) == 25);
  for (unsigned n = 1; n <= 4; ++n)
    for (unsigned k = 0; k <= 4; ++k) {
      CHECK(card_m1(n, k) == brute_m1(n, k).size());
      CHECK(card_m2(n, k) == brute_m2(n, k).size());
    }
}

TEST_CASE("enumeration is lexicographic, complete and constraint-respecting")
{
  CHECK(collect_m1(1, 2) == std::vector<LatticeVector>{{0}, {1}, {2}});
  CHECK(collect_m1(2, 1) == std::vector<LatticeVector>{{0, 0}, {0, 1}, {1, 0}});
  CHECK(collect_m1(4, 3).size() == 35);
  CHECK(collect_m2(1, 1) == std::vector<LatticeVector>{{-1}, {0}, {1}});
  CHECK(collect_m2(2, 1).size() == 5);
  CHECK(collect_m2(3, 2).size() == 25);

  for (unsigned n = 1; n <= 6; ++n)
    for (unsigned k = 0; k <= 6; ++k) {
      const auto m1 = collect_m1(n, k);
      const auto m2 = collect_m2(n, k);
      CHECK(BigInt(m1.size()) == card_m1(n, k));
      CHECK(BigInt(m2.size()) == card_m2(n, k));
      CHECK(std::is_sorted(m1.begin(), m1.end()));
      CHECK(std::is_sorted(m2.begin(), m2.end()));
      for (const auto& v : m1) {
        long long s = 0;
        for (long long c : v) {
          CHECK(c >= 0);
          s += c;
        }
        CHECK(s <= k);
      }
      for (const auto& v : m2) {
        long long s = 0;
        for (long long c : v) s += std::llabs(c);
        CHECK(s <= k);
      }
      // no duplicates (sorted + unique)
      CHECK(std::adjacent_find(m1.begin(), m1.end()) == m1.end());
      CHECK(std::adjacent_find(m2.begin(), m2.end()) == m2.end());
    }
}

TEST_CASE("card_m2 <= 2^k card_m1")
{
  for (unsigned n = 1; n <= 20; ++n)
    for (unsigned k = 0; k <= 20; ++k)
      CHECK(card_m2(n, k) <= (BigInt(1) << k) * card_m1(n, k));
}

TEST_CASE("binom_upper strictly dominates the exact binomial")
{
  CHECK(static_cast<double>(binom_upper(1, 1)) ==
        doctest::Approx(2.2568).epsilon(1e-4));
  CHECK(binom_upper(10, 3) > 286);
  for (unsigned n = 1; n <= 100; ++n)
    for (unsigned k = 1; k <= 100; ++k)
      CHECK(BigFloat(binomial(n + k, n)) < binom_upper(n, k));
}
