#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "cboom/bpoly.hpp"

namespace cboom {

// Exponent vector in Z^2. For bivariate polynomials u is the x-exponent and v
// the z-exponent; newton_polytope() is the only place that mapping is made.
struct LatticePoint {
  std::int64_t u = 0;
  std::int64_t v = 0;

  friend auto operator<=>(const LatticePoint&, const LatticePoint&) = default;
  friend LatticePoint operator+(const LatticePoint& a, const LatticePoint& b) noexcept {
    return {a.u + b.u, a.v + b.v};
  }
  friend LatticePoint operator-(const LatticePoint& a, const LatticePoint& b) noexcept {
    return {a.u - b.u, a.v - b.v};
  }
};

// Convex lattice polygon stored by its extreme points, counterclockwise,
// starting at the lexicographically smallest vertex. Degenerate hulls (a
// point or a segment) keep one or two vertices.
class LatticePolytope {
 public:
  LatticePolytope() = default;
  static LatticePolytope hull(std::span<const LatticePoint> points);

  const std::vector<LatticePoint>& vertices() const noexcept { return vertices_; }
  bool empty() const noexcept { return vertices_.empty(); }
  // Inside or on the boundary.
  bool contains(const LatticePoint& p) const;

  friend bool operator==(const LatticePolytope&, const LatticePolytope&) = default;

 private:
  std::vector<LatticePoint> vertices_;
};

LatticePolytope newton_polytope(const BiPoly& f);
LatticePolytope minkowski_sum(const LatticePolytope& a, const LatticePolytope& b);

// Twice the area of triangle abc.
std::int64_t triangle_area2(const LatticePoint& a, const LatticePoint& b, const LatticePoint& c) noexcept;
// Area-identity test; DegenerateTriangle when a, b, c are collinear.
bool point_in_triangle(const LatticePoint& p, const LatticePoint& a, const LatticePoint& b,
                       const LatticePoint& c);
// gcd of the coordinates of b - a and c - a equals 1.
bool triangle_indecomposable(const LatticePoint& a, const LatticePoint& b, const LatticePoint& c);

struct IrreducibilityCertificate {
  LatticePolytope triangle;                // Newton polygon of f(x + z) - f(z) + a
  std::array<std::int64_t, 4> gcd_witness;  // edge vectors from the first vertex
  std::int64_t gcd = 0;
  Elt anchor_const;  // coefficient of 1
  Elt anchor_xd;     // coefficient of x^d
  Elt anchor_xyd1;   // coefficient of x z^(d-1)
};

struct Inapplicable {
  std::string reason;
};

using IrreducibilityResult = std::variant<IrreducibilityCertificate, Inapplicable>;

// Certificate that f(x) - f(y) + a is absolutely irreducible, obtained from the
// shifted form F(x + y, y), written here in the variables (x, z). The constant
// term of f is dropped first.
IrreducibilityResult certify_absolutely_irreducible_difference(const UniPoly& f, const Elt& a);

// Re-checks a certificate: the polygon is the triangle (0,0), (d,0), (1,d-1),
// the witness matches its edges with gcd 1, and every anchor is nonzero.
bool check_certificate(const IrreducibilityCertificate& cert);

}  // namespace cboom
