#include "eqc/error.hpp"
#include "eqc/mvkernel.hpp"
#include "eqc/oracle.hpp"

#include <doctest.h>

using namespace eqc;

namespace {

Polynomial P(const GradedRing& r, const char* text) { return parse_polynomial(text, r); }

// The n = 2 example written out by hand: base Q[u, p1], left Q[p1], right Q[u, e], bottom Q[e].
ModuleSetup even_setup() {
  const GradedRing base({{"u", 4}, {"p1", 4}});
  const GradedRing left({{"p1", 4}});
  const GradedRing right({{"u", 4}, {"e", 2}});
  const GradedRing bottom({{"e", 2}});
  return make_setup(RingMap(left, bottom, {P(bottom, "e^2")}),
                    RingMap(right, bottom, {bottom.zero(), P(bottom, "e")}),
                    RingMap(base, left, {left.zero(), P(left, "p1")}),
                    RingMap(base, right, {P(right, "u"), P(right, "e^2")}));
}

// n = 1: base Q[u, e], left Q[eL], right Q[u], bottom Q.
ModuleSetup odd_setup() {
  const GradedRing base({{"u", 4}, {"e", 2}});
  const GradedRing left({{"eL", 2}});
  const GradedRing right({{"u", 4}});
  const GradedRing bottom;
  return make_setup(RingMap::zero_map(left, bottom), RingMap::zero_map(right, bottom),
                    RingMap(base, left, {left.zero(), P(left, "eL")}),
                    RingMap(base, right, {P(right, "u"), right.zero()}));
}

ModuleSetup diagonal_setup() {
  const GradedRing r({{"a", 2}, {"b", 6}});
  const RingMap id = RingMap::identity(r);
  return make_setup(id, id, id, id);
}

oracle::MapData oracle_map(const RingMap& m) {
  oracle::MapData data;
  for (const auto& g : m.source().generators()) data.source_degrees.push_back(g.degree);
  for (const auto& g : m.target().generators()) data.target_degrees.push_back(g.degree);
  for (const auto& img : m.images()) data.images.push_back(img.terms());
  return data;
}

}  // namespace

TEST_CASE("oracle: brute-force kernel dimensions for the n = 2 example") {
  const ModuleSetup s = even_setup();
  const std::vector<std::size_t> expected{1, 0, 2, 1, 3};
  for (int d = 0; d <= 8; d += 2) {
    const auto slice = oracle::brute_force_kernel(oracle_map(s.pi1), oracle_map(s.pi2), d);
    CHECK(slice.basis.size() == expected[static_cast<std::size_t>(d / 2)]);
  }
}

TEST_CASE("kernel_slices examples") {
  const KernelModule even = kernel_slices(even_setup(), 8);
  const std::vector<std::size_t> expected{1, 0, 2, 1, 3};
  for (int d = 0; d <= 8; d += 2) CHECK(even.slice_dim(d) == expected[static_cast<std::size_t>(d / 2)]);
  for (int d = 1; d <= 7; d += 2) CHECK(even.slice_dim(d) == 0);
  // Echelon basis at degree 4: (p1, e^2) then (0, u).
  const auto elems = even.slice_elements(4);
  REQUIRE(elems.size() == 2);
  CHECK(to_string(elems[0], even.setup()) == "(p1, e^2)");
  CHECK(to_string(elems[1], even.setup()) == "(0, u)");

  const ModuleSetup diag = diagonal_setup();
  const KernelModule dk = kernel_slices(diag, 20);
  for (int d = 0; d <= 20; ++d) CHECK(dk.slice_dim(d) == diag.left.slice_dim(d));

  const KernelModule odd = kernel_slices(odd_setup(), 8);
  const Subspace deg2 = [&] {
    Subspace sp(odd.ambient_dim(2));
    for (const auto& v : odd.slice(2)) sp.insert(v);
    return sp;
  }();
  const KernelElement eL{2, P(odd.setup().left, "eL"), odd.setup().right.zero()};
  CHECK(deg2.contains(odd.coordinates(eL)));
}

TEST_CASE("kernel_slices rejects a non-commuting square") {
  const GradedRing base({{"u", 4}});
  const GradedRing left({{"u", 4}});
  const GradedRing right({{"u", 4}});
  const GradedRing bottom({{"u", 4}});
  const RingMap id = RingMap::identity(base);
  const RingMap zero = RingMap(base, bottom, {bottom.zero()});
  CHECK_THROWS_AS(make_setup(id, id, id, zero), IncompatibleSetup);
  CHECK_THROWS_AS(make_setup(id, RingMap::identity(GradedRing({{"v", 4}})), id, id), IncompatibleSetup);
}

TEST_CASE("property: every slice vector is annihilated by the difference map") {
  for (const ModuleSetup& s : {even_setup(), odd_setup(), diagonal_setup()}) {
    const KernelModule km = kernel_slices(s, 24);
    for (int d = 0; d <= 24; d += 2) {
      for (const auto& v : km.slice_elements(d)) {
        CHECK((s.pi1.apply(v.left) - s.pi2.apply(v.right)).is_zero());
      }
      CHECK(km.slice_dim(d) == km.ambient_dim(d) - km.difference_rank(d));
    }
  }
}

TEST_CASE("base_action examples") {
  const KernelModule even = kernel_slices(even_setup(), 12);
  const ModuleSetup& s = even.setup();
  const KernelElement one{0, s.left.one(), s.right.one()};
  CHECK(base_action(even, P(s.base, "u"), one) == KernelElement{4, s.left.zero(), P(s.right, "u")});
  CHECK(base_action(even, P(s.base, "p1"), one) == KernelElement{4, P(s.left, "p1"), P(s.right, "e^2")});
  const KernelElement ue{6, s.left.zero(), P(s.right, "u*e")};
  CHECK(base_action(even, s.base.one(), ue) == ue);
  CHECK_THROWS_AS(base_action(even, P(s.base, "u^2"), ue), DegreeOverflow);

  const KernelModule odd = kernel_slices(odd_setup(), 12);
  const KernelElement eL{2, P(odd.setup().left, "eL"), odd.setup().right.zero()};
  CHECK(base_action(odd, P(odd.setup().base, "u"), eL).is_zero());
}

TEST_CASE("module_generators examples") {
  const KernelModule even = kernel_slices(even_setup(), 40);
  const auto gens = module_generators(even);
  REQUIRE(gens.size() == 2);
  CHECK(gens[0].degree == 0);
  CHECK(to_string(gens[0], even.setup()) == "(1, 1)");
  CHECK(gens[1].degree == 6);
  CHECK(to_string(gens[1], even.setup()) == "(0, u*e)");

  const KernelModule diag = kernel_slices(diagonal_setup(), 20);
  const auto dg = module_generators(diag);
  REQUIRE(dg.size() == 1);
  CHECK(to_string(dg[0], diag.setup()) == "(1, 1)");

  // e·(1, 1) = (eL, 0), so the odd example is cyclic.
  const KernelModule odd = kernel_slices(odd_setup(), 20);
  const auto og = module_generators(odd);
  REQUIRE(og.size() == 1);
  CHECK(to_string(og[0], odd.setup()) == "(1, 1)");
}

TEST_CASE("property: generators acted on by base monomials stay inside the slices") {
  for (const ModuleSetup& s : {even_setup(), odd_setup(), diagonal_setup()}) {
    const KernelModule km = kernel_slices(s, 24);
    for (const auto& g : module_generators(km)) {
      for (int e = 0; g.degree + e <= km.max_degree(); e += 2) {
        Subspace slice(km.ambient_dim(g.degree + e));
        for (const auto& v : km.slice(g.degree + e)) slice.insert(v);
        for (const auto& mono : s.base.slice(e).monomials) {
          const KernelElement image = base_action(km, Polynomial::monomial(mono), g);
          CHECK(slice.contains(km.coordinates(image)));
        }
      }
    }
  }
}

TEST_CASE("free_basis_search examples") {
  const KernelModule even = kernel_slices(even_setup(), 40);
  const FreenessResult fe = free_basis_search(even, module_generators(even));
  CHECK(fe.verdict == FreenessVerdict::Free);
  REQUIRE(fe.basis.size() == 2);
  CHECK(fe.basis[0].degree == 0);
  CHECK(fe.basis[1].degree == 6);
  CHECK_FALSE(fe.witness);

  const KernelModule odd = kernel_slices(odd_setup(), 40);
  const FreenessResult fo = free_basis_search(odd, module_generators(odd));
  CHECK(fo.verdict == FreenessVerdict::NotFree);
  REQUIRE(fo.witness);
  CHECK(fo.basis.empty());
  CHECK(fo.witness->element == KernelElement{2, P(odd.setup().left, "eL"), odd.setup().right.zero()});
  CHECK(fo.witness->annihilator == P(odd.setup().base, "u"));
  // Re-verify by substitution, away from the linear algebra.
  const ModuleSetup& s = odd.setup();
  CHECK((s.rho_minus.apply(fo.witness->annihilator) * fo.witness->element.left).is_zero());
  CHECK((s.rho_plus.apply(fo.witness->annihilator) * fo.witness->element.right).is_zero());

  const KernelModule diag = kernel_slices(diagonal_setup(), 30);
  const FreenessResult fd = free_basis_search(diag, module_generators(diag));
  CHECK(fd.verdict == FreenessVerdict::Free);
  CHECK(fd.basis.size() == 1);
}

TEST_CASE("free_basis_search on a module glued to a point") {
  // (f, c) with f(0) = c: isomorphic to Q[x, y] itself.
  const GradedRing base({{"x", 2}, {"y", 2}});
  const GradedRing scalars;
  const RingMap to_point = RingMap::zero_map(base, scalars);
  const ModuleSetup s = make_setup(to_point, RingMap::identity(scalars), RingMap::identity(base), to_point);
  const KernelModule km = kernel_slices(s, 16);
  const FreenessResult r = free_basis_search(km, module_generators(km));
  CHECK(r.verdict == FreenessVerdict::Free);
  REQUIRE(r.basis.size() == 1);
  CHECK(r.basis[0].degree == 0);
}

TEST_CASE("regular_sequence_check examples") {
  const KernelModule even = kernel_slices(even_setup(), 40);
  const ModuleSetup& s = even.setup();
  const auto ok = regular_sequence_check(even, {P(s.base, "p1"), P(s.base, "u")});
  CHECK(ok.verified);
  CHECK(ok.length == 2);
  CHECK(ok.horizon == 32);

  const KernelModule odd = kernel_slices(odd_setup(), 40);
  const auto bad = regular_sequence_check(odd, {P(odd.setup().base, "u")});
  CHECK_FALSE(bad.verified);
  REQUIRE(bad.failure);
  CHECK(bad.failure->index == 0);
  CHECK(bad.failure->degree == 2);
  CHECK(bad.failure->element == KernelElement{2, P(odd.setup().left, "eL"), odd.setup().right.zero()});

  // u + e^2 acts as e^2 on the left and u on the right: injective.
  CHECK(regular_sequence_check(odd, {P(odd.setup().base, "u + e^2")}).verified);

  const KernelModule tiny = kernel_slices(even_setup(), 0);
  const auto vacuous = regular_sequence_check(tiny, {P(s.base, "u")});
  CHECK(vacuous.verified);

  CHECK_THROWS_AS(regular_sequence_check(even, {P(s.base, "u + p1^2")}), HsopError);
  CHECK_THROWS_AS(regular_sequence_check(even, {P(s.base, "3")}), HsopError);
  CHECK_THROWS_AS(regular_sequence_check(even, {s.base.zero()}), HsopError);
}

TEST_CASE("regular sequence detects failure on the quotient, not just injectivity") {
  // M = Q[x, y]/(xy) as (f, g) pairs: left Q[x], right Q[y], bottom Q.
  const GradedRing base({{"x", 2}, {"y", 2}});
  const GradedRing left({{"x", 2}});
  const GradedRing right({{"y", 2}});
  const GradedRing point;
  const ModuleSetup s = make_setup(RingMap::zero_map(left, point), RingMap::zero_map(right, point),
                                   RingMap(base, left, {P(left, "x"), left.zero()}),
                                   RingMap(base, right, {right.zero(), P(right, "y")}));
  const KernelModule km = kernel_slices(s, 20);
  // x + y is a nonzerodivisor; x is a zero divisor; depth is 1 so (x + y, x) fails at step 2.
  CHECK(regular_sequence_check(km, {P(base, "x + y")}).verified);
  CHECK_FALSE(regular_sequence_check(km, {P(base, "x")}).verified);
  const auto two = regular_sequence_check(km, {P(base, "x + y"), P(base, "x")});
  CHECK_FALSE(two.verified);
  REQUIRE(two.failure);
  CHECK(two.failure->index == 1);
}

TEST_CASE("hilbert_series_module examples") {
  const KernelModule even = kernel_slices(even_setup(), 40);
  const FreenessResult fe = free_basis_search(even, module_generators(even));
  const HilbertSeries he = hilbert_series_module(even, &fe);
  REQUIRE(he.closed_form);
  CHECK(format_closed_form(*he.closed_form) == "(1 + t^6) / (1-t^4)^2");
  CHECK(expand(*he.closed_form, 40) == he.truncated);
  CHECK(std::vector<std::int64_t>(he.truncated.begin(), he.truncated.begin() + 9) ==
        std::vector<std::int64_t>{1, 0, 0, 0, 2, 0, 1, 0, 3});

  const KernelModule diag = kernel_slices(diagonal_setup(), 30);
  const FreenessResult fd = free_basis_search(diag, module_generators(diag));
  const HilbertSeries hd = hilbert_series_module(diag, &fd);
  CHECK(hd.truncated == hilbert_series_ring(diag.setup().base, 30).truncated);
  CHECK(hd.closed_form == hilbert_series_ring(diag.setup().base, 30).closed_form);

  const KernelModule odd = kernel_slices(odd_setup(), 20);
  const FreenessResult fo = free_basis_search(odd, module_generators(odd));
  const HilbertSeries ho = hilbert_series_module(odd, &fo);
  CHECK_FALSE(ho.closed_form);
  CHECK(ho.truncated[2] == 1);
}

TEST_CASE("property: splitting dimension count holds wherever the difference map is onto") {
  for (const ModuleSetup& s : {even_setup(), odd_setup(), diagonal_setup()}) {
    const SplittingCheck sc = splitting_check(kernel_slices(s, 30));
    CHECK(sc.surjective);
    CHECK(sc.dimension_identity);
    for (const auto& row : sc.degrees) {
      if (row.surjective) CHECK(row.kernel == row.left + row.right - row.bottom);
    }
  }
}

TEST_CASE("property: primary kernel slices match the brute-force oracle up to degree 12") {
  for (const ModuleSetup& s : {even_setup(), odd_setup(), diagonal_setup()}) {
    const KernelModule km = kernel_slices(s, 12);
    for (int d = 0; d <= 12; ++d) {
      const auto slice = oracle::brute_force_kernel(oracle_map(s.pi1), oracle_map(s.pi2), d);
      std::vector<std::pair<oracle::Terms, oracle::Terms>> ours;
      for (const auto& e : km.slice_elements(d)) ours.emplace_back(e.left.terms(), e.right.terms());
      CHECK(slice.basis.size() == km.slice_dim(d));
      CHECK(oracle::same_span(slice, ours));
    }
  }
}
