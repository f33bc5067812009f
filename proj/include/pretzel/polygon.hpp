#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include "pretzel/laurent.hpp"

namespace pretzel {

/// Lattice point in (L-exponent, M-exponent) coordinates. The paper's
/// polygon displays are in (L, M) order while polynomial terms index (M, L).
struct LatticePoint {
  std::int64_t l = 0;
  std::int64_t m = 0;

  friend bool operator==(const LatticePoint&, const LatticePoint&) = default;
  friend auto operator<=>(const LatticePoint&, const LatticePoint&) = default;
};

/// Convex polygon on the exponent lattice. Vertices are strictly convex,
/// counter-clockwise, starting from the lexicographically smallest vertex;
/// degenerate hulls (point, segment) have one or two vertices.
struct LatticePolygon {
  std::vector<LatticePoint> vertices;

  friend bool operator==(const LatticePolygon&, const LatticePolygon&) = default;
};

/// Sorts six formula vertices into the canonical polygon ordering.
LatticePolygon canonical_polygon(std::vector<LatticePoint> vertices);

/// Newton polygon of p: convex hull of the support. Precondition: p != 0.
LatticePolygon hull(const LaurentPoly& p);

/// Hexagon of P_n's Newton polygon for n > 1:
/// {0,0}, {1,-4n+16}, {n-1,12n-12}, {2n+1,16n+18}, {3n-1,32n-10}, {3n,28n+6}.
LatticePolygon predicted_P_polygon(std::int64_t n);

/// Hexagon of Q_n's Newton polygon for n < -1:
/// {0,4n+28}, {1,38}, {-n,-12n+26}, {-2n-3,-16n-4}, {-3n-4,-28n-16},
/// {-3n-3,-32n-6}.
LatticePolygon predicted_Q_polygon(std::int64_t n);

/// Hexagon of A_n's Newton polygon for |n| >= 2, including the special
/// hexagon {0,0},{1,0},{2,4},{1,10},{2,14},{3,14} at n = -2.
LatticePolygon predicted_A_polygon(std::int64_t n);

/// Coefficient (in M) of the highest L-power. Precondition: p != 0.
LaurentPoly leading_coeff_L(const LaurentPoly& p);

/// Image of a polygon under the unit-monomial/shear map
/// (l, m) -> (l + dl, m + dm + s*l).
LatticePolygon map_polygon(const LatticePolygon& poly, std::int64_t dl,
                           std::int64_t dm, std::int64_t shear = 0);

/// Exact quasi-polynomial fit of vertex trajectories across n. One
/// coefficient table per vertex, coordinate, and residue class mod the
/// period; a successful fit reproduces every sample exactly.
struct VertexFit {
  bool exact = false;
  int degree = 0;
  int period = 1;
  // coeffs[vertex][coord (0=l,1=m)][residue] = c_0..c_degree
  std::vector<std::array<std::vector<std::vector<Rational>>, 2>> coeffs;
};

struct PolygonSample {
  std::int64_t n = 0;
  LatticePolygon polygon;
};

/// Fits each vertex coordinate by a polynomial in n of degree <= max_degree
/// per residue class, trying periods 1..max_period in order and returning
/// the smallest that fits all samples exactly. Throws on inconsistent vertex
/// counts or underdetermined residue classes.
VertexFit fit_vertices(std::span<const PolygonSample> samples, int max_degree,
                       int max_period);

}  // namespace pretzel
