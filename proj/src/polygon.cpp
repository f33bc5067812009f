#include "pretzel/polygon.hpp"

#include <algorithm>
#include <stdexcept>

namespace pretzel {

namespace {

// Cross product (a - o) x (b - o); exponents are small enough that the
// checked helpers guard the arithmetic.
Integer cross(const LatticePoint& o, const LatticePoint& a, const LatticePoint& b) {
  return Integer(a.l - o.l) * Integer(b.m - o.m) -
         Integer(a.m - o.m) * Integer(b.l - o.l);
}

// Monotone chain. Input points need not be unique or sorted. Returns the
// strict hull, counter-clockwise, starting from the lexicographically
// smallest point.
LatticePolygon hull_of_points(std::vector<LatticePoint> pts) {
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.size() <= 2) return LatticePolygon{std::move(pts)};

  std::vector<LatticePoint> chain;
  chain.reserve(pts.size() + 1);
  for (const auto& p : pts) {  // lower hull
    while (chain.size() >= 2 &&
           cross(chain[chain.size() - 2], chain.back(), p) <= 0) {
      chain.pop_back();
    }
    chain.push_back(p);
  }
  const std::size_t lower_size = chain.size() + 1;
  for (auto it = pts.rbegin() + 1; it != pts.rend(); ++it) {  // upper hull
    while (chain.size() >= lower_size &&
           cross(chain[chain.size() - 2], chain.back(), *it) <= 0) {
      chain.pop_back();
    }
    chain.push_back(*it);
  }
  chain.pop_back();  // last point repeats the first
  return LatticePolygon{std::move(chain)};
}

}  // namespace

LatticePolygon canonical_polygon(std::vector<LatticePoint> vertices) {
  return hull_of_points(std::move(vertices));
}

LatticePolygon hull(const LaurentPoly& p) {
  if (p.is_zero()) throw std::domain_error("hull: zero polynomial");
  std::vector<LatticePoint> pts;
  pts.reserve(p.term_count());
  for (const auto& [e, c] : p.terms()) pts.push_back({e.l, e.m});
  return hull_of_points(std::move(pts));
}

LatticePolygon predicted_P_polygon(std::int64_t n) {
  if (n <= 1) throw std::domain_error("predicted_P_polygon: requires n > 1");
  return canonical_polygon({{0, 0},
                            {1, -4 * n + 16},
                            {n - 1, 12 * n - 12},
                            {2 * n + 1, 16 * n + 18},
                            {3 * n - 1, 32 * n - 10},
                            {3 * n, 28 * n + 6}});
}

LatticePolygon predicted_Q_polygon(std::int64_t n) {
  if (n >= -1) throw std::domain_error("predicted_Q_polygon: requires n < -1");
  return canonical_polygon({{0, 4 * n + 28},
                            {1, 38},
                            {-n, -12 * n + 26},
                            {-2 * n - 3, -16 * n - 4},
                            {-3 * n - 4, -28 * n - 16},
                            {-3 * n - 3, -32 * n - 6}});
}

LatticePolygon predicted_A_polygon(std::int64_t n) {
  if (n >= -1 && n <= 1) {
    throw std::domain_error("predicted_A_polygon: requires |n| >= 2");
  }
  if (n >= 2) {
    return canonical_polygon({{0, 0},
                              {1, 16},
                              {n - 1, 4 * (n * n + 2 * n - 3)},
                              {2 * n + 1, 2 * (4 * n * n + 10 * n + 9)},
                              {3 * n - 1, 2 * (6 * n * n + 14 * n - 5)},
                              {3 * n, 2 * (6 * n * n + 14 * n + 3)}});
  }
  if (n == -2) {
    return canonical_polygon({{0, 0}, {1, 0}, {2, 4}, {1, 10}, {2, 14}, {3, 14}});
  }
  return canonical_polygon({{-3 * n - 4, 0},
                            {-3 * (1 + n), 10},
                            {-3 - 2 * n, 4 * (3 + 4 * n + n * n)},
                            {-n, 2 * (4 * n * n + 16 * n + 21)},
                            {0, 4 * (3 * n * n + 12 * n + 11)},
                            {1, 6 * (2 * n * n + 8 * n + 9)}});
}

LaurentPoly leading_coeff_L(const LaurentPoly& p) {
  if (p.is_zero()) throw std::domain_error("leading_coeff_L: zero polynomial");
  const std::int64_t top_l = p.leading_term().first.l;
  LaurentPoly coeff;
  for (const auto& [e, c] : p.terms()) {
    if (e.l == top_l) coeff.add_term(ExpVec{e.m, 0}, c);
  }
  return coeff;
}

LatticePolygon map_polygon(const LatticePolygon& poly, std::int64_t dl,
                           std::int64_t dm, std::int64_t shear) {
  std::vector<LatticePoint> pts;
  pts.reserve(poly.vertices.size());
  for (const auto& v : poly.vertices) {
    pts.push_back({checked_add(v.l, dl),
                   checked_add(checked_add(v.m, dm), checked_mul(shear, v.l))});
  }
  return canonical_polygon(std::move(pts));
}

namespace {

// Exact solve of a (d+1)x(d+1) Vandermonde system; returns the polynomial
// coefficients c_0..c_d fitting the given (n, value) pairs.
std::vector<Rational> solve_vandermonde(std::span<const std::pair<std::int64_t, std::int64_t>> pts) {
  const std::size_t dim = pts.size();
  std::vector<std::vector<Rational>> a(dim, std::vector<Rational>(dim + 1));
  for (std::size_t i = 0; i < dim; ++i) {
    Rational x = 1;
    for (std::size_t j = 0; j < dim; ++j) {
      a[i][j] = x;
      x *= pts[i].first;
    }
    a[i][dim] = pts[i].second;
  }
  for (std::size_t col = 0; col < dim; ++col) {
    std::size_t pivot = col;
    while (pivot < dim && a[pivot][col].is_zero()) ++pivot;
    if (pivot == dim) throw std::invalid_argument("fit_vertices: singular system");
    std::swap(a[col], a[pivot]);
    for (std::size_t row = 0; row < dim; ++row) {
      if (row == col || a[row][col].is_zero()) continue;
      const Rational factor = a[row][col] / a[col][col];
      for (std::size_t j = col; j <= dim; ++j) a[row][j] -= factor * a[col][j];
    }
  }
  std::vector<Rational> coeffs(dim);
  for (std::size_t i = 0; i < dim; ++i) coeffs[i] = a[i][dim] / a[i][i];
  return coeffs;
}

Rational eval_poly(std::span<const Rational> coeffs, std::int64_t n) {
  Rational value = 0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
    value = value * n + *it;
  }
  return value;
}

std::int64_t residue(std::int64_t n, int period) {
  return ((n % period) + period) % period;
}

}  // namespace

VertexFit fit_vertices(std::span<const PolygonSample> samples, int max_degree,
                       int max_period) {
  if (samples.empty()) throw std::invalid_argument("fit_vertices: no samples");
  const std::size_t vertex_count = samples.front().polygon.vertices.size();
  for (const auto& s : samples) {
    if (s.polygon.vertices.size() != vertex_count) {
      throw std::invalid_argument("fit_vertices: inconsistent vertex counts");
    }
  }

  for (int period = 1; period <= max_period; ++period) {
    bool usable = true;
    for (int r = 0; r < period && usable; ++r) {
      std::size_t count = 0;
      for (const auto& s : samples) count += residue(s.n, period) == r;
      if (count < static_cast<std::size_t>(max_degree) + 2) usable = false;
    }
    if (!usable) {
      if (period == 1) throw std::invalid_argument("fit_vertices: underdetermined sample set");
      continue;
    }

    VertexFit fit;
    fit.period = period;
    fit.coeffs.resize(vertex_count);
    bool ok = true;
    for (std::size_t v = 0; v < vertex_count && ok; ++v) {
      for (int coord = 0; coord < 2 && ok; ++coord) {
        auto& classes = fit.coeffs[v][static_cast<std::size_t>(coord)];
        classes.resize(static_cast<std::size_t>(period));
        for (int r = 0; r < period && ok; ++r) {
          std::vector<std::pair<std::int64_t, std::int64_t>> pts;
          for (const auto& s : samples) {
            if (residue(s.n, period) != r) continue;
            const auto& vert = s.polygon.vertices[v];
            pts.emplace_back(s.n, coord == 0 ? vert.l : vert.m);
          }
          auto coeffs = solve_vandermonde(
              std::span(pts).first(static_cast<std::size_t>(max_degree) + 1));
          for (const auto& [n, value] : pts) {
            if (eval_poly(coeffs, n) != value) {
              ok = false;
              break;
            }
          }
          classes[static_cast<std::size_t>(r)] = std::move(coeffs);
        }
      }
    }
    if (!ok) continue;

    fit.exact = true;
    for (const auto& per_vertex : fit.coeffs) {
      for (const auto& per_coord : per_vertex) {
        for (const auto& coeffs : per_coord) {
          for (std::size_t d = coeffs.size(); d-- > 0;) {
            if (!coeffs[d].is_zero()) {
              fit.degree = std::max(fit.degree, static_cast<int>(d));
              break;
            }
          }
        }
      }
    }
    return fit;
  }
  return VertexFit{};
}

}  // namespace pretzel
