#ifndef HCOVER_COVERING_HPP
#define HCOVER_COVERING_HPP

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "hcover/geometry.hpp"
#include "hcover/scalars.hpp"

namespace hcover {

// Vertex-represented polytope. For a centrally symmetric body the half
// vertex list {v_1, ..., v_m} stands for conv{+-v_1, ..., +-v_m}; in that
// case `vertices` stays empty.
struct PolytopeV {
  unsigned n = 0;
  std::vector<PointR> vertices;
  std::optional<std::vector<PointR>> symmetric_half;

  unsigned vertex_count() const
  {
    return symmetric_half ? 2 * static_cast<unsigned>(symmetric_half->size())
                          : static_cast<unsigned>(vertices.size());
  }
};

// apply(x) = matrix * x + offset; matrix is n x m, row-major.
struct AffineMapSpec {
  unsigned rows = 0;  // ambient dimension n
  unsigned cols = 0;  // parameter dimension m
  std::vector<double> matrix;
  PointR offset;

  PointR apply(std::span<const double> x) const;
};

enum class LiftKind { simplex, crosspolytope };

// Exact rational point in parameter space, all entries w_i / den.
struct QPoint {
  LatticeVector numer;
  std::int64_t den = 1;
};

struct CoveringCertificate {
  Rational gamma;                // m/(m+k), exact
  std::vector<PointR> centers;   // image-space centers, dim n
  std::vector<QPoint> q_centers; // {w/(m+k) : w in the M-set}
  LiftKind lift_kind = LiftKind::simplex;
  unsigned m = 0;
  unsigned k = 0;
};

struct BoundReport {
  unsigned n = 0;
  unsigned vertex_count = 0;
  TwoPowerRational t;
  unsigned threshold = 0;     // k(m, t) or l(m, t)
  Rational theorem_bound;     // m/(m+threshold)
  double floor_bound = 1.0;   // m/(m + floor(a(t) m)) resp. b(t)
  Rational general_bound;     // 1 - 1/(n+1)
  double best = 1.0;
  bool shrinking = false;
};

struct VerificationReport {
  std::uint64_t samples = 0;
  std::uint64_t failures = 0;
  double max_residual = 0.0;
  // Lattice witness of the first failing sample, when any.
  std::optional<LatticeVector> first_failure_witness;
  std::uint64_t first_failure_index = 0;
};

struct LpBallBound {
  double ratio_term = 1.0;  // (n/(n+floor(b(2)n)))^{1/p}
  double bm_term = 0.0;     // n^{1/p} - 1/2
  double value = 1.0;       // min of the two
  double uniform = 1.0;     // ratio term evaluated at p(n)
  bool vacuous = false;     // floor(b(2) n) == 0
};

// Theorem preconditions unmet: the construction would not shrink.
class NoShrinkingCertificate : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Lattice covering of the canonical bodies: (m+k) Q is covered by the
// translates {w/(m+k) + (m/(m+k)) Q : w in M-set} after rescaling by
// 1/(m+k). Returns gamma = m/(m+k) and the scaled centers.
std::pair<Rational, std::vector<QPoint>> q_cover_simplex(unsigned m,
                                                         unsigned k);
std::pair<Rational, std::vector<QPoint>> q_cover_cross(unsigned m,
                                                       unsigned k);

// Affine map sending the canonical body onto the polytope:
// simplex: S(x) = v0 + sum x_i (v_i - v0); symmetric: S(x) = sum x_i v_i.
AffineMapSpec lift_map(const PolytopeV& poly);

CoveringCertificate make_certificate(const PolytopeV& poly, unsigned n);

// Samples parameter points, decomposes them exactly, and checks the
// image identity against the certificate. OpenMP-parallel over sample
// blocks; verify_certificate_serial is the reference implementation and
// produces an identical report for identical inputs.
VerificationReport verify_certificate(const PolytopeV& poly,
                                      const CoveringCertificate& cert,
                                      std::uint64_t samples,
                                      std::uint64_t seed);
VerificationReport verify_certificate_serial(const PolytopeV& poly,
                                             const CoveringCertificate& cert,
                                             std::uint64_t samples,
                                             std::uint64_t seed);

BoundReport bound_report(unsigned n, unsigned vertex_count, bool symmetric);

LpBallBound lp_ball_bound(unsigned n, double p);

}  // namespace hcover

#endif
