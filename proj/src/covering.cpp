#include "hcover/covering.hpp"

#include <cmath>

namespace hcover {

PointR AffineMapSpec::apply(std::span<const double> x) const
{
  PointR y = offset;
  for (unsigned r = 0; r < rows; ++r) {
    double acc = 0;
    for (unsigned c = 0; c < cols; ++c) acc += matrix[r * cols + c] * x[c];
    y[r] += acc;
  }
  return y;
}

std::pair<Rational, std::vector<QPoint>> q_cover_simplex(unsigned m,
                                                         unsigned k)
{
  if (m < 1 || k < 1)
    throw std::domain_error("q_cover_simplex: m, k must be >= 1");
  std::vector<QPoint> centers;
  M1Enumerator e(m, k);
  while (auto w = e.next())
    centers.push_back({std::move(*w), static_cast<std::int64_t>(m + k)});
  return {Rational(m, m + k), std::move(centers)};
}

std::pair<Rational, std::vector<QPoint>> q_cover_cross(unsigned m, unsigned k)
{
  if (m < 1 || k < 1)
    throw std::domain_error("q_cover_cross: m, k must be >= 1");
  std::vector<QPoint> centers;
  M2Enumerator e(m, k);
  while (auto w = e.next())
    centers.push_back({std::move(*w), static_cast<std::int64_t>(m + k)});
  return {Rational(m, m + k), std::move(centers)};
}

AffineMapSpec lift_map(const PolytopeV& poly)
{
  AffineMapSpec spec;
  spec.rows = poly.n;
  if (poly.symmetric_half) {
    const auto& half = *poly.symmetric_half;
    if (half.empty())
      throw std::invalid_argument("lift_map: empty symmetric half list");
    spec.cols = static_cast<unsigned>(half.size());
    spec.offset.assign(poly.n, 0.0);
    spec.matrix.resize(static_cast<std::size_t>(spec.rows) * spec.cols);
    for (unsigned c = 0; c < spec.cols; ++c) {
      if (half[c].size() != poly.n)
        throw std::invalid_argument("lift_map: vertex dimension mismatch");
      for (unsigned r = 0; r < spec.rows; ++r)
        spec.matrix[r * spec.cols + c] = half[c][r];
    }
    return spec;
  }
  if (poly.vertices.size() < 2)
    throw std::invalid_argument("lift_map: need at least two vertices");
  spec.cols = static_cast<unsigned>(poly.vertices.size()) - 1;
  spec.offset = poly.vertices[0];
  if (spec.offset.size() != poly.n)
    throw std::invalid_argument("lift_map: vertex dimension mismatch");
  spec.matrix.resize(static_cast<std::size_t>(spec.rows) * spec.cols);
  for (unsigned c = 0; c < spec.cols; ++c) {
    const PointR& v = poly.vertices[c + 1];
    if (v.size() != poly.n)
      throw std::invalid_argument("lift_map: vertex dimension mismatch");
    for (unsigned r = 0; r < spec.rows; ++r)
      spec.matrix[r * spec.cols + c] = v[r] - spec.offset[r];
  }
  return spec;
}

CoveringCertificate make_certificate(const PolytopeV& poly, unsigned n)
{
  if (poly.n != n)
    throw std::invalid_argument("make_certificate: dimension mismatch");
  const AffineMapSpec lift = lift_map(poly);
  CoveringCertificate cert;

  if (poly.symmetric_half) {
    const unsigned m = lift.cols;
    if (m < n)
      throw std::domain_error(
          "make_certificate: symmetric body needs at least n half-vertices");
    const TwoPowerRational t(n, m);
    const unsigned l = l_of(m, t);
    if (l == 0)
      throw NoShrinkingCertificate(
          "no shrinking certificate: 2(m+1) > 2^n for the cross-polytope lift");
    cert.lift_kind = LiftKind::crosspolytope;
    cert.m = m;
    cert.k = l;
    auto [gamma, q_centers] = q_cover_cross(m, l);
    cert.gamma = std::move(gamma);
    cert.q_centers = std::move(q_centers);
  } else {
    const unsigned vertex_count = static_cast<unsigned>(poly.vertices.size());
    if (vertex_count < n + 1)
      throw std::domain_error(
          "make_certificate: need at least n+1 vertices");
    const unsigned m = vertex_count - 1;
    const TwoPowerRational t(n, m);
    const unsigned k = k_of(m, t);
    if (k == 0)
      throw NoShrinkingCertificate(
          "no shrinking certificate: vertex count exceeds 2^n");
    cert.lift_kind = LiftKind::simplex;
    cert.m = m;
    cert.k = k;
    auto [gamma, q_centers] = q_cover_simplex(m, k);
    cert.gamma = std::move(gamma);
    cert.q_centers = std::move(q_centers);
  }

  // c' = S(c) - gamma S(0); for the linear symmetric lift S(0) = 0.
  const double g = static_cast<double>(cert.gamma);
  cert.centers.reserve(cert.q_centers.size());
  PointR c(cert.m);
  for (const QPoint& q : cert.q_centers) {
    for (unsigned i = 0; i < cert.m; ++i)
      c[i] = static_cast<double>(q.numer[i]) / static_cast<double>(q.den);
    PointR img = lift.apply(c);
    for (unsigned r = 0; r < n; ++r) img[r] -= g * lift.offset[r];
    cert.centers.push_back(std::move(img));
  }
  return cert;
}

BoundReport bound_report(unsigned n, unsigned vertex_count, bool symmetric)
{
  if (n < 3)
    throw std::domain_error("bound_report: n must be >= 3");
  BoundReport rep;
  rep.n = n;
  rep.vertex_count = vertex_count;
  rep.general_bound = Rational(n, n + 1);

  unsigned m = 0;
  if (symmetric) {
    if (vertex_count % 2 != 0 || vertex_count / 2 < n)
      throw std::domain_error(
          "bound_report: symmetric body needs 2m vertices with m >= n");
    m = vertex_count / 2;
  } else {
    if (vertex_count < n + 1)
      throw std::domain_error("bound_report: need at least n+1 vertices");
    m = vertex_count - 1;
  }
  rep.t = TwoPowerRational(n, m);
  rep.threshold = symmetric ? l_of(m, rep.t) : k_of(m, rep.t);
  rep.theorem_bound = Rational(m, m + rep.threshold);
  const double root = symmetric ? solve_b(rep.t.to_double())
                                : solve_a(rep.t.to_double());
  rep.floor_bound =
      static_cast<double>(m) / (m + std::floor(root * m));
  rep.shrinking = rep.threshold > 0;
  rep.best = static_cast<double>(std::min(rep.theorem_bound, rep.general_bound));
  return rep;
}

LpBallBound lp_ball_bound(unsigned n, double p)
{
  if (n < 3 || p < 1)
    throw std::domain_error("lp_ball_bound: need n >= 3 and p >= 1");
  LpBallBound out;
  const double b2 = solve_b(2.0);
  const double fl = std::floor(b2 * n);
  out.vacuous = fl == 0;
  const double ratio = static_cast<double>(n) / (n + fl);
  out.ratio_term = std::pow(ratio, 1.0 / p);
  out.bm_term = std::pow(static_cast<double>(n), 1.0 / p) - 0.5;
  out.value = std::min(out.ratio_term, out.bm_term);
  out.uniform = std::pow(ratio, 1.0 / p_of(n));
  return out;
}

}  // namespace hcover
