#include "cboom/polytope.hpp"

#include <algorithm>
#include <numeric>

namespace cboom {

namespace {

std::int64_t cross(const LatticePoint& o, const LatticePoint& a, const LatticePoint& b) noexcept {
  return (a.u - o.u) * (b.v - o.v) - (a.v - o.v) * (b.u - o.u);
}

std::int64_t gcd4(const std::array<std::int64_t, 4>& w) {
  std::int64_t g = 0;
  for (std::int64_t c : w) g = std::gcd(g, c);
  return g;
}

void require_triangle(const LatticePoint& a, const LatticePoint& b, const LatticePoint& c) {
  if (triangle_area2(a, b, c) == 0) throw Error(ErrorKind::DegenerateTriangle, "collinear vertices");
}

}  // namespace

LatticePolytope LatticePolytope::hull(std::span<const LatticePoint> points) {
  std::vector<LatticePoint> pts(points.begin(), points.end());
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  LatticePolytope out;
  if (pts.size() <= 2) {
    out.vertices_ = std::move(pts);
    return out;
  }
  // Andrew's monotone chain; collinear points are dropped.
  std::vector<LatticePoint> h(2 * pts.size());
  std::size_t k = 0;
  for (const LatticePoint& p : pts) {
    while (k >= 2 && cross(h[k - 2], h[k - 1], p) <= 0) --k;
    h[k++] = p;
  }
  for (std::size_t i = pts.size() - 1, lower = k + 1; i-- > 0;) {
    while (k >= lower && cross(h[k - 2], h[k - 1], pts[i]) <= 0) --k;
    h[k++] = pts[i];
  }
  h.resize(k - 1);
  // all points collinear: the chain collapses onto the two endpoints
  if (h.size() == 2 || (h.size() > 2 && cross(h[0], h[1], h[2]) == 0)) h = {pts.front(), pts.back()};
  out.vertices_ = std::move(h);
  return out;
}

bool LatticePolytope::contains(const LatticePoint& p) const {
  const auto& vs = vertices_;
  if (vs.empty()) return false;
  if (vs.size() == 1) return p == vs[0];
  if (vs.size() == 2) {
    return cross(vs[0], vs[1], p) == 0 && std::min(vs[0].u, vs[1].u) <= p.u && p.u <= std::max(vs[0].u, vs[1].u) &&
           std::min(vs[0].v, vs[1].v) <= p.v && p.v <= std::max(vs[0].v, vs[1].v);
  }
  for (std::size_t i = 0; i < vs.size(); ++i)
    if (cross(vs[i], vs[(i + 1) % vs.size()], p) < 0) return false;
  return true;
}

LatticePolytope newton_polytope(const BiPoly& f) {
  if (f.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "Newton polytope of zero");
  std::vector<LatticePoint> pts;
  pts.reserve(f.size());
  for (const auto& [m, c] : f.terms()) pts.push_back({m.x, m.z});
  return LatticePolytope::hull(pts);
}

LatticePolytope minkowski_sum(const LatticePolytope& a, const LatticePolytope& b) {
  std::vector<LatticePoint> pts;
  pts.reserve(a.vertices().size() * b.vertices().size());
  for (const LatticePoint& p : a.vertices())
    for (const LatticePoint& q : b.vertices()) pts.push_back(p + q);
  return LatticePolytope::hull(pts);
}

std::int64_t triangle_area2(const LatticePoint& a, const LatticePoint& b, const LatticePoint& c) noexcept {
  const std::int64_t d = cross(a, b, c);
  return d < 0 ? -d : d;
}

bool point_in_triangle(const LatticePoint& p, const LatticePoint& a, const LatticePoint& b,
                       const LatticePoint& c) {
  require_triangle(a, b, c);
  return triangle_area2(a, b, c) == triangle_area2(p, a, b) + triangle_area2(p, b, c) + triangle_area2(p, c, a);
}

bool triangle_indecomposable(const LatticePoint& a, const LatticePoint& b, const LatticePoint& c) {
  require_triangle(a, b, c);
  const LatticePoint e1 = b - a, e2 = c - a;
  return gcd4({e1.u, e1.v, e2.u, e2.v}) == 1;
}

IrreducibilityResult certify_absolutely_irreducible_difference(const UniPoly& f, const Elt& a) {
  const FieldCtx& ctx = f.ctx();
  const int d = f.degree();
  if (d < 2) return Inapplicable{"degree below 2"};
  if (a.is_zero()) return Inapplicable{"a = 0"};
  if (static_cast<std::uint64_t>(d) % ctx.characteristic() == 0)
    return Inapplicable{"characteristic divides the degree"};

  std::vector<Elt> c = f.coeffs();
  c[0] = Elt{};
  const UniPoly f0(ctx, std::move(c));
  const BiPoly shifted =
      from_uni_of_sum(f0) - from_uni_in(Var::Z, f0) + BiPoly::constant(ctx, a);

  const auto du = static_cast<std::uint32_t>(d);
  IrreducibilityCertificate cert;
  cert.triangle = newton_polytope(shifted);
  cert.anchor_const = shifted.coeff({0, 0});
  cert.anchor_xd = shifted.coeff({du, 0});
  cert.anchor_xyd1 = shifted.coeff({1, du - 1});

  const LatticePoint v0{0, 0}, v1{d, 0}, v2{1, d - 1};
  const LatticePoint expected[] = {v0, v1, v2};
  if (cert.triangle != LatticePolytope::hull(expected))
    return Inapplicable{"Newton polygon is not the expected triangle"};
  if (cert.anchor_const.is_zero() || cert.anchor_xd.is_zero() || cert.anchor_xyd1.is_zero())
    return Inapplicable{"vanishing anchor coefficient"};

  const auto& vs = cert.triangle.vertices();
  const LatticePoint e1 = vs[1] - vs[0], e2 = vs[2] - vs[0];
  cert.gcd_witness = {e1.u, e1.v, e2.u, e2.v};
  cert.gcd = gcd4(cert.gcd_witness);
  if (cert.gcd != 1) return Inapplicable{"triangle is decomposable"};
  return cert;
}

bool check_certificate(const IrreducibilityCertificate& cert) {
  const auto& vs = cert.triangle.vertices();
  if (vs.size() != 3 || vs[0] != LatticePoint{0, 0}) return false;
  const std::int64_t d = std::max(vs[1].u, vs[2].u);
  const LatticePoint expected[] = {{0, 0}, {d, 0}, {1, d - 1}};
  if (cert.triangle != LatticePolytope::hull(expected)) return false;
  const LatticePoint e1 = vs[1] - vs[0], e2 = vs[2] - vs[0];
  if (cert.gcd_witness != std::array<std::int64_t, 4>{e1.u, e1.v, e2.u, e2.v}) return false;
  if (cert.gcd != 1 || gcd4(cert.gcd_witness) != 1) return false;
  return !cert.anchor_const.is_zero() && !cert.anchor_xd.is_zero() && !cert.anchor_xyd1.is_zero();
}

}  // namespace cboom
