#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "pretzel/polygon.hpp"
#include "pretzel/recursion.hpp"

using namespace pretzel;

namespace {
const FamilyEngine engine;
std::mt19937_64 rng(0x9e770ULL);

LaurentPoly random_poly() {
  std::uniform_int_distribution<int> nterms(1, 8);
  std::uniform_int_distribution<std::int64_t> exp(-10, 10);
  std::uniform_int_distribution<long> coeff(1, 5);
  LaurentPoly p;
  const int k = nterms(rng);
  for (int i = 0; i < k; ++i) p += term(coeff(rng), exp(rng), exp(rng));
  if (p.is_zero()) p = 1;
  return p;
}
}  // namespace

TEST_CASE("hull basics") {
  CHECK(hull(LaurentPoly(1) + term(1, 1, 1) + term(1, 0, 2)).vertices ==
        std::vector<LatticePoint>{{0, 0}, {2, 0}, {1, 1}});
  CHECK(hull(term(1, 5, 0)).vertices == std::vector<LatticePoint>{{0, 5}});
  CHECK(hull(term(1, 0, 0) + term(1, 3, 2)).vertices ==
        std::vector<LatticePoint>{{0, 0}, {2, 3}});
  CHECK_THROWS_AS(hull(LaurentPoly{}), std::domain_error);
}

TEST_CASE("hull of P_2 is the predicted hexagon") {
  const LatticePolygon expected = canonical_polygon(
      {{0, 0}, {1, 8}, {5, 50}, {6, 62}, {5, 54}, {1, 12}});
  CHECK(hull(engine.compute_P(2).value.num()) == expected);
  CHECK(predicted_P_polygon(2) == expected);
}

TEST_CASE("predicted polygons") {
  CHECK(predicted_Q_polygon(-2) ==
        canonical_polygon({{0, 20}, {1, 38}, {2, 50}, {1, 28}, {2, 40}, {3, 58}}));
  CHECK(predicted_A_polygon(2) ==
        canonical_polygon({{0, 0}, {1, 16}, {1, 20}, {5, 90}, {5, 94}, {6, 110}}));
  CHECK(predicted_A_polygon(-2) ==
        canonical_polygon({{0, 0}, {1, 0}, {2, 4}, {1, 10}, {2, 14}, {3, 14}}));
  CHECK_THROWS_AS(predicted_P_polygon(1), std::domain_error);
  CHECK_THROWS_AS(predicted_Q_polygon(-1), std::domain_error);
  CHECK_THROWS_AS(predicted_A_polygon(0), std::domain_error);

  // every predicted polygon is a genuine hexagon
  for (std::int64_t n = 2; n <= 12; ++n) {
    CHECK(predicted_P_polygon(n).vertices.size() == 6);
    CHECK(predicted_Q_polygon(-n).vertices.size() == 6);
    CHECK(predicted_A_polygon(n).vertices.size() == 6);
    CHECK(predicted_A_polygon(-n).vertices.size() == 6);
  }
}

TEST_CASE("shear relation between A- and P-polygons") {
  // P_n(M,L) = A_n(M, LM^{-4n}), so the A-polygon sheared by -4n is NP_n
  CHECK(map_polygon(predicted_A_polygon(3), 0, 0, -12) == predicted_P_polygon(3));
}

TEST_CASE("shear covariance of hulls") {
  std::uniform_int_distribution<std::int64_t> ss(-8, 8);
  for (int trial = 0; trial < 40; ++trial) {
    const LaurentPoly p = random_poly();
    const std::int64_t s = ss(rng);
    CHECK(hull(substitute(p, GeneralSubst::shear(s))) ==
          map_polygon(hull(p), 0, 0, s));
  }
}

TEST_CASE("leading_coeff_L") {
  CHECK(leading_coeff_L(engine.compute_P(2).value.num()) == term(1, 62, 0));
  CHECK(leading_coeff_L(LaurentPoly(1) + term(1, 0, 1) * (term(1, 1, 0) + 1)) ==
        term(1, 1, 0) + 1);
  CHECK(leading_coeff_L(term(1, -3, 0)) == term(1, -3, 0));
  CHECK_THROWS_AS(leading_coeff_L(LaurentPoly{}), std::domain_error);
}

TEST_CASE("fit recovers the linear P-hexagon table") {
  std::vector<PolygonSample> samples;
  for (std::int64_t n = 2; n <= 8; ++n) {
    samples.push_back({n, hull(engine.compute_P(n).value.num())});
  }
  const VertexFit fit = fit_vertices(samples, 1, 3);
  REQUIRE(fit.exact);
  CHECK(fit.period == 1);
  CHECK(fit.degree == 1);

  // locate the vertex that is (6, 62) at n = 2: it must fit l = 3n, m = 28n+6
  const auto& verts = samples.front().polygon.vertices;
  const auto it = std::find(verts.begin(), verts.end(), LatticePoint{6, 62});
  REQUIRE(it != verts.end());
  const auto v = static_cast<std::size_t>(it - verts.begin());
  CHECK(fit.coeffs[v][0][0] == std::vector<Rational>{0, 3});
  CHECK(fit.coeffs[v][1][0] == std::vector<Rational>{6, 28});
}

TEST_CASE("fit recovers the quadratic A-hexagon table") {
  std::vector<PolygonSample> samples;
  for (std::int64_t n = 2; n <= 10; ++n) {
    samples.push_back({n, predicted_A_polygon(n)});
  }
  const VertexFit fit = fit_vertices(samples, 2, 3);
  REQUIRE(fit.exact);
  CHECK(fit.period == 1);
  CHECK(fit.degree == 2);

  const auto& verts = samples.front().polygon.vertices;  // n = 2
  const auto it = std::find(verts.begin(), verts.end(), LatticePoint{6, 110});
  REQUIRE(it != verts.end());
  const auto v = static_cast<std::size_t>(it - verts.begin());
  CHECK(fit.coeffs[v][0][0] == std::vector<Rational>{0, 3, 0});
  CHECK(fit.coeffs[v][1][0] == std::vector<Rational>{6, 28, 12});
}

TEST_CASE("fit on constant polygons has degree zero") {
  std::vector<PolygonSample> samples;
  for (std::int64_t n = 1; n <= 4; ++n) {
    samples.push_back({n, canonical_polygon({{0, 0}, {1, 0}, {0, 1}})});
  }
  const VertexFit fit = fit_vertices(samples, 2, 3);
  REQUIRE(fit.exact);
  CHECK(fit.degree == 0);
  CHECK(fit.period == 1);
}

TEST_CASE("fit error paths") {
  std::vector<PolygonSample> mismatched{
      {1, canonical_polygon({{0, 0}, {1, 0}, {0, 1}})},
      {2, canonical_polygon({{0, 0}, {1, 0}})}};
  CHECK_THROWS_AS(fit_vertices(mismatched, 1, 1), std::invalid_argument);

  std::vector<PolygonSample> tiny{
      {1, canonical_polygon({{0, 0}, {1, 0}, {0, 1}})},
      {2, canonical_polygon({{0, 0}, {1, 0}, {0, 1}})}};
  CHECK_THROWS_AS(fit_vertices(tiny, 2, 1), std::invalid_argument);
}
