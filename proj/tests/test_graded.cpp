#include "eqc/error.hpp"
#include "eqc/graded.hpp"

#include <doctest.h>

#include <random>

using namespace eqc;

namespace {

GradedRing ring_ue() { return GradedRing({{"u", 4}, {"e", 2}}); }

Polynomial random_homogeneous(const GradedRing& ring, int d, std::mt19937& rng) {
  Polynomial p = ring.zero();
  for (const auto& m : ring.slice(d).monomials) {
    const int c = static_cast<int>(rng() % 7) - 3;
    Rational q(c, 1 + static_cast<int>(rng() % 3));
    q.canonicalize();
    p.add_term(m, q);
  }
  return p;
}

// Independent count of monomials of weighted degree d.
std::size_t count_monomials(const std::vector<int>& degrees, std::size_t var, int d) {
  if (var == degrees.size()) return d == 0 ? 1 : 0;
  std::size_t total = 0;
  for (int k = 0; k * degrees[var] <= d; ++k) total += count_monomials(degrees, var + 1, d - k * degrees[var]);
  return total;
}

}  // namespace

TEST_CASE("slice_basis orders monomials grlex-descending") {
  const GradedRing r = ring_ue();
  CHECK(slice_basis(r, 4) == std::vector<Exponent>{{1, 0}, {0, 2}});
  CHECK(slice_basis(r, 0) == std::vector<Exponent>{{0, 0}});
  CHECK(slice_basis(GradedRing({{"u", 4}}), 6).empty());
  CHECK(slice_basis(GradedRing(), 0).size() == 1);
  CHECK(slice_basis(r, 3).empty());
}

TEST_CASE("rings reject odd or non-positive generator degrees") {
  CHECK_THROWS_AS(GradedRing({{"x", 3}}), AlgebraError);
  CHECK_THROWS_AS(GradedRing({{"x", 0}}), AlgebraError);
  CHECK_THROWS_AS(GradedRing({{"x", 2}, {"x", 4}}), AlgebraError);
}

TEST_CASE("apply_map examples") {
  const GradedRing right = ring_ue();
  const GradedRing bottom({{"e", 2}});
  const RingMap pi2(right, bottom, {bottom.zero(), bottom.gen("e")});
  CHECK(apply_map(pi2, right.gen("u") * right.gen("e")).is_zero());

  const GradedRing left({{"p1", 4}});
  const RingMap pi1(left, bottom, {bottom.gen("e").pow(2)});
  CHECK(apply_map(pi1, left.gen("p1").pow(2)) == bottom.gen("e").pow(4));

  const Polynomial p = parse_polynomial("3*u*e - 1/2*e^3", right);
  CHECK(apply_map(RingMap::identity(right), p) == p);
}

TEST_CASE("map_matrix examples") {
  const GradedRing left({{"p1", 4}});
  const GradedRing bottom({{"e", 2}});
  const RingMap pi1(left, bottom, {bottom.gen("e").pow(2)});
  const Matrix m = map_matrix(pi1, 4);
  REQUIRE(m.rows() == 1);
  REQUIRE(m.cols() == 1);
  CHECK(m(0, 0) == 1);

  const GradedRing r = ring_ue();
  for (int d = 0; d <= 12; d += 2) CHECK(map_matrix(RingMap::identity(r), d) == Matrix::identity(r.slice_dim(d)));

  const RingMap zero = RingMap::zero_map(r, GradedRing());
  for (int d = 2; d <= 12; d += 2) CHECK(map_matrix(zero, d).is_zero());
}

TEST_CASE("ring maps must preserve degree") {
  const GradedRing src({{"p1", 4}});
  const GradedRing dst({{"e", 2}});
  CHECK_THROWS_AS(RingMap(src, dst, {dst.gen("e")}), AlgebraError);
  CHECK_THROWS_AS(RingMap(src, dst, {}), AlgebraError);
}

TEST_CASE("hilbert_series_ring examples") {
  const auto one = hilbert_series_ring(GradedRing({{"u", 4}}), 12);
  for (int d = 0; d <= 12; ++d) CHECK(one.truncated[d] == (d % 4 == 0 ? 1 : 0));

  const auto two = hilbert_series_ring(GradedRing({{"u", 4}, {"p1", 4}}), 8);
  CHECK(two.truncated[0] == 1);
  CHECK(two.truncated[4] == 2);
  CHECK(two.truncated[8] == 3);
  CHECK(format_closed_form(*two.closed_form) == "1 / (1-t^4)^2");

  const auto scalars = hilbert_series_ring(GradedRing(), 6);
  CHECK(scalars.truncated == std::vector<std::int64_t>{1, 0, 0, 0, 0, 0, 0});
}

TEST_CASE("closed form formatting") {
  CHECK(format_closed_form({{1, 0, 0, 0, 0, 0, 1}, {4, 4}}) == "(1 + t^6) / (1-t^4)^2");
  CHECK(format_closed_form({{1, 0, 2}, {2, 4}}) == "(1 + 2*t^2) / (1-t^2)(1-t^4)");
  CHECK(format_closed_form({{1}, {}}) == "1");
}

TEST_CASE("surjectivity_check examples") {
  const GradedRing so3({{"p1", 4}});
  const GradedRing so2({{"e", 2}});
  const auto not_onto = surjectivity_check(RingMap(so3, so2, {so2.gen("e").pow(2)}), 20);
  CHECK_FALSE(not_onto.surjective);
  CHECK(not_onto.per_degree[1] == std::pair{2, false});
  CHECK(not_onto.per_degree[2] == std::pair{4, true});

  const GradedRing so4({{"p1", 4}, {"e", 4}});
  CHECK(surjectivity_check(RingMap(so4, so3, {so3.gen(0), so3.zero()}), 40).surjective);
}

TEST_CASE("polynomial serialization round-trips") {
  const GradedRing r({{"u", 4}, {"p1", 4}, {"e", 2}});
  std::mt19937 rng(5);
  for (int trial = 0; trial < 50; ++trial) {
    const int d = 2 * static_cast<int>(rng() % 6);
    const Polynomial p = random_homogeneous(r, d, rng);
    CHECK(parse_polynomial(to_string(p, r), r) == p);
  }
  CHECK(to_string(parse_polynomial("e^2 + u", r), r) == "u + e^2");
  CHECK(to_string(parse_polynomial("-1/2*p1 + 3", r), r) == "-1/2*p1 + 3");
  CHECK(to_string(r.zero(), r) == "0");
  CHECK_THROWS_AS(parse_polynomial("q^2", r), ParseError);
  CHECK_THROWS_AS(parse_polynomial("u +", r), ParseError);
  CHECK_THROWS_AS(parse_polynomial("", r), ParseError);
}

TEST_CASE("property: slice dimension equals Hilbert coefficient") {
  const std::vector<std::vector<int>> degree_sets{{4}, {2, 4}, {4, 4, 8}, {2, 2, 6}, {4, 6, 8, 10}};
  for (const auto& degs : degree_sets) {
    std::vector<Generator> gens;
    for (std::size_t i = 0; i < degs.size(); ++i) gens.push_back({"x" + std::to_string(i), degs[i]});
    const GradedRing r(gens);
    const auto hs = hilbert_series_ring(r, 40);
    for (int d = 0; d <= 40; ++d) {
      CHECK(static_cast<std::int64_t>(r.slice_dim(d)) == hs.truncated[d]);
      CHECK(r.slice_dim(d) == count_monomials(degs, 0, d));
    }
  }
}

TEST_CASE("property: apply_map is additive and multiplicative and agrees with map_matrix") {
  const GradedRing src({{"a", 2}, {"b", 4}, {"c", 4}});
  const GradedRing dst({{"x", 2}, {"y", 4}});
  const RingMap m(src, dst,
                  {parse_polynomial("x", dst), parse_polynomial("x^2 - y", dst), parse_polynomial("2*y", dst)});
  std::mt19937 rng(13);
  for (int trial = 0; trial < 40; ++trial) {
    const int d1 = 2 * static_cast<int>(rng() % 4);
    const int d2 = 2 * static_cast<int>(rng() % 4);
    const Polynomial f = random_homogeneous(src, d1, rng);
    const Polynomial g = random_homogeneous(src, d2, rng);
    CHECK(m.apply(f * g) == m.apply(f) * m.apply(g));
    const Polynomial h = random_homogeneous(src, d1, rng);
    CHECK(m.apply(f + h) == m.apply(f) + m.apply(h));
    CHECK(m.matrix(d1) * src.coordinates(f, d1) == dst.coordinates(m.apply(f), d1));
  }
}

TEST_CASE("property: map_matrix commutes with composition") {
  const GradedRing a({{"p1", 4}, {"p2", 8}});
  const GradedRing b({{"p1", 4}, {"e", 4}});
  const GradedRing c({{"p1", 4}});
  const RingMap inner(a, b, {b.gen("p1"), b.gen("e").pow(2)});
  const RingMap outer(b, c, {c.gen("p1"), c.zero()});
  const RingMap both = compose(outer, inner);
  for (int d = 0; d <= 24; d += 2) CHECK(both.matrix(d) == outer.matrix(d) * inner.matrix(d));
}
