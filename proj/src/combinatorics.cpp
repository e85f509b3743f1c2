#include "hcover/combinatorics.hpp"

#include <boost/math/constants/constants.hpp>
#include <cstdlib>
#include <stdexcept>

namespace hcover {

BigInt binomial(unsigned n, unsigned k)
{
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  BigInt r = 1;
  for (unsigned i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;
  }
  return r;
}

namespace {

BigFloat robbins_term(unsigned n, const BigFloat& correction_exponent)
{
  const BigFloat nn(n);
  const BigFloat two_pi = 2 * boost::math::constants::pi<BigFloat>();
  return sqrt(two_pi) * pow(nn, nn + BigFloat(0.5)) *
         exp(-nn + correction_exponent);
}

}  // namespace

RobbinsBracket robbins_bracket(unsigned n)
{
  if (n < 1) throw std::domain_error("robbins_bracket: n must be >= 1");
  const BigFloat lo_exp = BigFloat(1) / (12 * BigFloat(n) + 1);
  const BigFloat hi_exp = BigFloat(1) / (12 * BigFloat(n));
  return {robbins_term(n, lo_exp), robbins_term(n, hi_exp)};
}

BigInt card_m1(unsigned n, unsigned k) { return binomial(n + k, n); }

BigInt card_m2(unsigned n, unsigned k)
{
  BigInt total = 0;
  for (unsigned i = 0; i <= n; ++i) {
    if (n - i > k) continue;  // C(k, n-i) = 0
    total += (BigInt(1) << (n - i)) * binomial(n, i) * binomial(k, n - i);
  }
  return total;
}

BigFloat binom_upper(unsigned n, unsigned k)
{
  if (n < 1 || k < 1) throw std::domain_error("binom_upper: n, k must be >= 1");
  const BigFloat nn(n), kk(k);
  const BigFloat two_pi = 2 * boost::math::constants::pi<BigFloat>();
  const BigFloat x = kk / nn;
  // log f(x) = (1+x) log(1+x) - x log x
  const BigFloat log_f = (1 + x) * log(1 + x) - x * log(x);
  return sqrt((nn + kk) / (two_pi * nn * kk)) * exp(nn * log_f);
}

M1Enumerator::M1Enumerator(unsigned n, unsigned k)
    : n_(n), k_(k), cur_(n, 0)
{
}

std::optional<LatticeVector> M1Enumerator::next()
{
  if (done_) return std::nullopt;
  if (!started_) {
    started_ = true;
    return cur_;  // all-zero vector is lexicographically first
  }
  // Find the rightmost position that can be incremented once all later
  // positions reset to zero.
  for (int i = static_cast<int>(n_) - 1; i >= 0; --i) {
    const unsigned ui = static_cast<unsigned>(i);
    const std::int64_t old = cur_[ui];
    sum_ -= old;
    cur_[ui] = 0;
    if (sum_ + old + 1 <= static_cast<std::int64_t>(k_)) {
      cur_[ui] = old + 1;
      sum_ += old + 1;
      return cur_;
    }
  }
  done_ = true;
  return std::nullopt;
}

M2Enumerator::M2Enumerator(unsigned n, unsigned k)
    : n_(n), k_(k), cur_(n, 0)
{
}

std::optional<LatticeVector> M2Enumerator::next()
{
  auto abs_sum_prefix = [&](unsigned len) {
    std::int64_t s = 0;
    for (unsigned j = 0; j < len; ++j) s += std::llabs(cur_[j]);
    return s;
  };
  if (done_) return std::nullopt;
  if (!started_) {
    started_ = true;
    // Lexicographic minimum: put the whole budget, negated, first.
    if (n_ > 0) cur_[0] = -static_cast<std::int64_t>(k_);
    return cur_;
  }
  for (int i = static_cast<int>(n_) - 1; i >= 0; --i) {
    const unsigned ui = static_cast<unsigned>(i);
    const std::int64_t used_before = abs_sum_prefix(ui);
    const std::int64_t candidate = cur_[ui] + 1;
    if (used_before + std::llabs(candidate) <= static_cast<std::int64_t>(k_)) {
      cur_[ui] = candidate;
      // Lexicographically minimal suffix: dump remaining budget, negated,
      // into the next position.
      const std::int64_t rest =
          static_cast<std::int64_t>(k_) - used_before - std::llabs(candidate);
      for (unsigned j = ui + 1; j < n_; ++j) cur_[j] = 0;
      if (ui + 1 < n_) cur_[ui + 1] = -rest;
      return cur_;
    }
  }
  done_ = true;
  return std::nullopt;
}

std::vector<LatticeVector> collect_m1(unsigned n, unsigned k)
{
  std::vector<LatticeVector> out;
  M1Enumerator e(n, k);
  while (auto v = e.next()) out.push_back(std::move(*v));
  return out;
}

std::vector<LatticeVector> collect_m2(unsigned n, unsigned k)
{
  std::vector<LatticeVector> out;
  M2Enumerator e(n, k);
  while (auto v = e.next()) out.push_back(std::move(*v));
  return out;
}

}  // namespace hcover
