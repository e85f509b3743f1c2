#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <map>
#include <random>

#include "hcover/covering.hpp"

namespace hcover {

namespace {

constexpr std::uint64_t kBlockSize = 1024;
constexpr double kImageTol = 1e-9;
constexpr std::int64_t kGridScale = 1 << 20;

std::uint64_t splitmix64(std::uint64_t x)
{
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Exact decomposition of z_i = num_i / den (common denominator den > 0)
// against the scaled canonical body; p = 1 so everything stays integral.
struct ExactDecomposition {
  LatticeVector lattice;
  std::vector<std::int64_t> remainder_num;  // over the same denominator
};

ExactDecomposition decompose_exact(const std::vector<std::int64_t>& num,
                                   std::int64_t den, unsigned k,
                                   bool signed_body)
{
  const unsigned n = static_cast<unsigned>(num.size());
  std::vector<unsigned> large;
  for (unsigned i = 0; i < n; ++i) {
    const std::int64_t mag = signed_body ? std::llabs(num[i]) : num[i];
    if (mag >= den) large.push_back(i);
  }
  auto sign_of = [&](unsigned i) -> std::int64_t {
    return (num[i] > 0) - (num[i] < 0);
  };
  ExactDecomposition out;
  out.lattice.assign(n, 0);
  if (large.size() >= k) {
    for (unsigned j = 0; j < k; ++j) {
      const unsigned i = large[j];
      out.lattice[i] = signed_body ? sign_of(i) : 1;
    }
  } else {
    std::int64_t floor_sum = 0;
    for (unsigned i : large) floor_sum += std::llabs(num[i]) / den;
    if (floor_sum >= static_cast<std::int64_t>(k)) {
      std::int64_t budget = k;
      for (unsigned i : large) {
        const std::int64_t a =
            std::min<std::int64_t>(std::llabs(num[i]) / den, budget);
        out.lattice[i] = signed_body ? a * sign_of(i) : a;
        budget -= a;
        if (budget == 0) break;
      }
    } else {
      for (unsigned i : large) {
        const std::int64_t a = std::llabs(num[i]) / den;
        out.lattice[i] = signed_body ? a * sign_of(i) : a;
      }
    }
  }
  out.remainder_num.resize(n);
  for (unsigned i = 0; i < n; ++i)
    out.remainder_num[i] = num[i] - out.lattice[i] * den;
  return out;
}

struct BlockResult {
  std::uint64_t failures = 0;
  double max_residual = 0.0;
  std::uint64_t first_failure_offset = std::numeric_limits<std::uint64_t>::max();
  LatticeVector first_failure_witness;
};

struct VerifyContext {
  const CoveringCertificate* cert;
  AffineMapSpec lift;
  double gamma;
  std::map<LatticeVector, std::size_t> center_index;
  bool signed_body;
};

BlockResult run_block(const VerifyContext& ctx, std::uint64_t block_seed,
                      std::uint64_t count)
{
  const unsigned m = ctx.cert->m;
  const unsigned k = ctx.cert->k;
  const std::int64_t scale = m + k;
  std::mt19937_64 rng(block_seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);

  BlockResult res;
  std::vector<std::int64_t> grid(m + 1), z_num(m);
  PointR q(m), y(m);

  for (std::uint64_t s = 0; s < count; ++s) {
    // Dirichlet-like weights over m+1 cells; dropping cell 0 spreads the
    // samples over the whole solid body.
    std::int64_t total = 0;
    do {
      total = 0;
      for (unsigned i = 0; i <= m; ++i) {
        const double e = -std::log1p(-unit(rng));
        grid[i] = std::llround(kGridScale * e);
        total += grid[i];
      }
    } while (total == 0);
    for (unsigned i = 0; i < m; ++i) {
      std::int64_t g = grid[i + 1];
      if (ctx.signed_body && unit(rng) < 0.5) g = -g;
      z_num[i] = scale * g;
      q[i] = static_cast<double>(g) / static_cast<double>(total);
    }

    bool failed = false;
    const ExactDecomposition dec =
        decompose_exact(z_num, total, k, ctx.signed_body);

    // Witness must satisfy the M-set constraints and be present in the
    // certificate's center list.
    std::int64_t wsum = 0;
    for (unsigned i = 0; i < m; ++i) {
      if (!ctx.signed_body && dec.lattice[i] < 0) failed = true;
      wsum += std::llabs(dec.lattice[i]);
    }
    if (wsum > static_cast<std::int64_t>(k)) failed = true;

    // Remainder must lie in m * Q, exactly.
    std::int64_t rsum = 0;
    for (unsigned i = 0; i < m; ++i) {
      if (!ctx.signed_body && dec.remainder_num[i] < 0) failed = true;
      rsum += std::llabs(dec.remainder_num[i]);
    }
    if (rsum > static_cast<std::int64_t>(m) * total) failed = true;

    std::size_t center_idx = 0;
    if (!failed) {
      auto it = ctx.center_index.find(dec.lattice);
      if (it == ctx.center_index.end())
        failed = true;
      else
        center_idx = it->second;
    }

    if (!failed) {
      for (unsigned i = 0; i < m; ++i)
        y[i] = static_cast<double>(dec.remainder_num[i]) /
               (static_cast<double>(m) * static_cast<double>(total));
      const PointR img_q = ctx.lift.apply(q);
      const PointR img_y = ctx.lift.apply(y);
      const PointR& center = ctx.cert->centers[center_idx];
      double residual = 0.0;
      for (unsigned r = 0; r < ctx.lift.rows; ++r)
        residual = std::max(
            residual, std::fabs(img_q[r] - (center[r] + ctx.gamma * img_y[r])));
      res.max_residual = std::max(res.max_residual, residual);
      if (residual > kImageTol) failed = true;
    }

    if (failed) {
      ++res.failures;
      if (s < res.first_failure_offset) {
        res.first_failure_offset = s;
        res.first_failure_witness = dec.lattice;
      }
    }
  }
  return res;
}

VerifyContext build_context(const PolytopeV& poly,
                            const CoveringCertificate& cert)
{
  VerifyContext ctx;
  ctx.cert = &cert;
  ctx.lift = lift_map(poly);
  ctx.signed_body = cert.lift_kind == LiftKind::crosspolytope;
  const bool poly_symmetric = poly.symmetric_half.has_value();
  if (poly_symmetric != ctx.signed_body || ctx.lift.cols != cert.m)
    throw std::invalid_argument(
        "verify_certificate: certificate does not match the polytope");
  if (cert.q_centers.size() != cert.centers.size())
    throw std::invalid_argument(
        "verify_certificate: q_center/center lists differ in length");
  for (std::size_t i = 0; i < cert.q_centers.size(); ++i)
    ctx.center_index.emplace(cert.q_centers[i].numer, i);
  ctx.gamma = static_cast<double>(cert.gamma);
  return ctx;
}

VerificationReport merge_blocks(const std::vector<BlockResult>& blocks,
                                std::uint64_t samples)
{
  VerificationReport rep;
  rep.samples = samples;
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    const BlockResult& r = blocks[b];
    rep.failures += r.failures;
    rep.max_residual = std::max(rep.max_residual, r.max_residual);
    if (r.failures > 0 && !rep.first_failure_witness) {
      rep.first_failure_witness = r.first_failure_witness;
      rep.first_failure_index = b * kBlockSize + r.first_failure_offset;
    }
  }
  return rep;
}

}  // namespace

VerificationReport verify_certificate_serial(const PolytopeV& poly,
                                             const CoveringCertificate& cert,
                                             std::uint64_t samples,
                                             std::uint64_t seed)
{
  const VerifyContext ctx = build_context(poly, cert);
  const std::uint64_t nblocks = (samples + kBlockSize - 1) / kBlockSize;
  std::vector<BlockResult> blocks(nblocks);
  for (std::uint64_t b = 0; b < nblocks; ++b) {
    const std::uint64_t count = std::min(kBlockSize, samples - b * kBlockSize);
    blocks[b] = run_block(ctx, splitmix64(seed ^ b), count);
  }
  return merge_blocks(blocks, samples);
}

VerificationReport verify_certificate(const PolytopeV& poly,
                                      const CoveringCertificate& cert,
                                      std::uint64_t samples,
                                      std::uint64_t seed)
{
  const VerifyContext ctx = build_context(poly, cert);
  const std::uint64_t nblocks = (samples + kBlockSize - 1) / kBlockSize;
  std::vector<BlockResult> blocks(nblocks);
#pragma omp parallel for schedule(dynamic)
  for (std::int64_t b = 0; b < static_cast<std::int64_t>(nblocks); ++b) {
    const std::uint64_t ub = static_cast<std::uint64_t>(b);
    const std::uint64_t count =
        std::min(kBlockSize, samples - ub * kBlockSize);
    blocks[ub] = run_block(ctx, splitmix64(seed ^ ub), count);
  }
  return merge_blocks(blocks, samples);
}

}  // namespace hcover
